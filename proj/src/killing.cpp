#include "sla/killing.hpp"

#include <sstream>
#include <stdexcept>

namespace sla {

RatMat AdaptedSupersymmetryAlgebra::action_on_m1(Eigen::Index algebra_index) const {
  const RatMat ad = algebra->ad_matrix(algebra_index);
  RatMat out(m1_dim(), m1_dim());
  for (Eigen::Index r = 0; r < m1_dim(); ++r)
    for (Eigen::Index c = 0; c < m1_dim(); ++c)
      out(r, c) = ad(m1_indices[static_cast<std::size_t>(r)], m1_indices[static_cast<std::size_t>(c)]);
  return out;
}

RatMat AdaptedSupersymmetryAlgebra::action_on_m0(Eigen::Index algebra_index) const {
  const RatMat ad = algebra->ad_matrix(algebra_index);
  RatMat out(m0_dim(), m0_dim());
  for (Eigen::Index r = 0; r < m0_dim(); ++r)
    for (Eigen::Index c = 0; c < m0_dim(); ++c)
      out(r, c) = ad(m0_indices[static_cast<std::size_t>(r)], m0_indices[static_cast<std::size_t>(c)]);
  return out;
}

SuperBilinearForm AdaptedSupersymmetryAlgebra::gamma_form() const {
  SuperBilinearForm f;
  std::vector<std::string> l1, l0;
  std::vector<Parity> p1, p0;
  for (Eigen::Index i : m1_indices) {
    l1.push_back(algebra->space().label(i));
    p1.push_back(algebra->space().parity(i));
  }
  for (Eigen::Index i : m0_indices) {
    l0.push_back(algebra->space().label(i));
    p0.push_back(algebra->space().parity(i));
  }
  f.left = GradedSpace(l1, p1);
  f.right = f.left;
  f.target = GradedSpace(l0, p0);
  for (Eigen::Index t = 0; t < m0_dim(); ++t)
    f.coeff.push_back(RatMat::Constant(m1_dim(), m1_dim(), Rat(0)));
  for (Eigen::Index a = 0; a < m1_dim(); ++a)
    for (Eigen::Index b = 0; b < m1_dim(); ++b) {
      const Eigen::Index i = m1_indices[static_cast<std::size_t>(a)];
      const Eigen::Index j = m1_indices[static_cast<std::size_t>(b)];
      const SparseVec& br = algebra->bracket_basis(std::min(i, j), std::max(i, j));
      for (const auto& [k, c] : br)
        for (Eigen::Index t = 0; t < m0_dim(); ++t)
          if (m0_indices[static_cast<std::size_t>(t)] == k) f.coeff[static_cast<std::size_t>(t)](a, b) = c;
    }
  return f;
}

ReductiveDecomposition AdaptedSupersymmetryAlgebra::decomposition() const {
  std::vector<Eigen::Index> m = m0_indices;
  m.insert(m.end(), m1_indices.begin(), m1_indices.end());
  return ReductiveDecomposition(*algebra, h_indices, m);
}

CheckReport check_adapted(const AdaptedSupersymmetryAlgebra& a) {
  CheckReport rep;
  const auto& sp = a.algebra->space();
  // 1) adjoint action of h on m1 equals the spin lift
  for (std::size_t k = 0; k < a.h_indices.size(); ++k) {
    RatMat lhs = a.action_on_m1(a.h_indices[k]);
    if (!is_zero(RatMat(lhs - a.ad_tilde[k]))) {
      rep.pass = false;
      rep.detail = "ad_h|m1 differs from the spin lift at " + sp.label(a.h_indices[k]);
      return rep;
    }
  }
  // 2) xi_* of the lift reproduces ad_h on m0: the Clifford commutator
  // [ad~(B), gamma(v)] equals gamma(ad_B v) for every m0 basis vector
  for (std::size_t k = 0; k < a.h_indices.size(); ++k) {
    const RatMat ad0 = a.action_on_m0(a.h_indices[k]);
    for (Eigen::Index j = 0; j < a.m0_dim(); ++j) {
      RatMat lhs = RatMat(a.ad_tilde[k] * a.basis_gammas[static_cast<std::size_t>(j)] -
                          a.basis_gammas[static_cast<std::size_t>(j)] * a.ad_tilde[k]);
      RatMat rhs = RatMat::Constant(a.rep.spin_dim, a.rep.spin_dim, Rat(0));
      for (Eigen::Index i = 0; i < a.m0_dim(); ++i)
        if (!ad0(i, j).is_zero()) rhs += ad0(i, j) * a.basis_gammas[static_cast<std::size_t>(i)];
      if (!is_zero(RatMat(lhs - rhs))) {
        rep.pass = false;
        rep.detail = "xi_* of the lift differs from ad_h|m0 at " + sp.label(a.h_indices[k]) +
                     " on " + sp.label(a.m0_indices[static_cast<std::size_t>(j)]);
        return rep;
      }
    }
  }
  auto jac = a.algebra->check_super_jacobi();
  if (!jac.pass) {
    rep.pass = false;
    rep.detail = jac.describe(sp);
  }
  return rep;
}

RatVec kosmann_bracket(const AdaptedSupersymmetryAlgebra& a, const RatVec& x_algebra,
                       const RatVec& s_m1) {
  const Eigen::Index n = a.algebra->dim();
  if (x_algebra.size() != n || s_m1.size() != a.m1_dim())
    throw std::invalid_argument("kosmann_bracket: dimension mismatch");
  for (Eigen::Index i = 0; i < n; ++i)
    if (!x_algebra(i).is_zero() && a.algebra->space().parity(i) != Parity::Even)
      throw std::invalid_argument("kosmann_bracket: x must be even");
  RatVec s_full = RatVec::Constant(n, Rat(0));
  for (Eigen::Index k = 0; k < a.m1_dim(); ++k) s_full(a.m1_indices[static_cast<std::size_t>(k)]) = s_m1(k);
  RatVec br = a.algebra->bracket(x_algebra, s_full);
  RatVec out(a.m1_dim());
  for (Eigen::Index k = 0; k < a.m1_dim(); ++k) out(k) = -br(a.m1_indices[static_cast<std::size_t>(k)]);
  return out;
}

RatVec dirac_bracket(const AdaptedSupersymmetryAlgebra& a, const RatVec& s_m1, const RatVec& t_m1) {
  SuperBilinearForm g = a.gamma_form();
  return RatVec(-g.apply(s_m1, t_m1));
}

std::vector<RatVec> killing_spinor_jet(const AdaptedSupersymmetryAlgebra& a,
                                       const RatVec& x_algebra, const RatVec& s_m1, int order) {
  const Eigen::Index n = a.algebra->dim();
  RatVec cur = RatVec::Constant(n, Rat(0));
  for (Eigen::Index k = 0; k < a.m1_dim(); ++k) cur(a.m1_indices[static_cast<std::size_t>(k)]) = s_m1(k);
  std::vector<RatVec> jets;
  Rat fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      cur = a.algebra->bracket(x_algebra, cur);
      fact *= Rat(k);
    }
    jets.push_back(RatVec(cur / ((k % 2) ? -fact : fact)));
  }
  return jets;
}

CheckReport killing_superalgebra_check(const AdaptedSupersymmetryAlgebra& a) {
  CheckReport rep = check_adapted(a);
  if (!rep.pass) return rep;
  const LieSuperalgebra& g = *a.algebra;
  const Eigen::Index n = g.dim();
  // the transported table is the negative of the original one
  LieSuperalgebra neg(g.space());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      SparseVec t = g.bracket_basis(i, j);
      for (auto& [k, c] : t) c = -c;
      neg.set_bracket(i, j, t);
    }
  auto jac = neg.check_super_jacobi();
  if (!jac.pass) {
    rep.pass = false;
    rep.detail = "negated table: " + jac.describe(g.space());
    return rep;
  }
  // Kosmann brackets match the negated even-odd table
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g.space().parity(i) != Parity::Even) continue;
    RatVec x = RatVec::Constant(n, Rat(0));
    x(i) = Rat(1);
    for (Eigen::Index b = 0; b < a.m1_dim(); ++b) {
      RatVec s = RatVec::Constant(a.m1_dim(), Rat(0));
      s(b) = Rat(1);
      RatVec kos = kosmann_bracket(a, x, s);
      RatVec full = RatVec::Constant(n, Rat(0));
      full(a.m1_indices[static_cast<std::size_t>(b)]) = Rat(1);
      RatVec expect = neg.bracket(x, full);
      for (Eigen::Index k = 0; k < a.m1_dim(); ++k)
        if (kos(k) != expect(a.m1_indices[static_cast<std::size_t>(k)])) {
          rep.pass = false;
          rep.detail = "Kosmann bracket mismatch at (" + g.space().label(i) + "," +
                       g.space().label(a.m1_indices[static_cast<std::size_t>(b)]) + ")";
          return rep;
        }
    }
  }
  // Dirac brackets match the negated odd-odd m0 projection
  for (Eigen::Index x = 0; x < a.m1_dim(); ++x)
    for (Eigen::Index y = x; y < a.m1_dim(); ++y) {
      RatVec s = RatVec::Constant(a.m1_dim(), Rat(0)), t = RatVec::Constant(a.m1_dim(), Rat(0));
      s(x) = Rat(1);
      t(y) = Rat(1);
      RatVec d = dirac_bracket(a, s, t);
      const Eigen::Index i = a.m1_indices[static_cast<std::size_t>(x)];
      const Eigen::Index j = a.m1_indices[static_cast<std::size_t>(y)];
      const SparseVec& br = neg.bracket_basis(std::min(i, j), std::max(i, j));
      RatVec expect = RatVec::Constant(a.m0_dim(), Rat(0));
      for (const auto& [k, c] : br)
        for (Eigen::Index m = 0; m < a.m0_dim(); ++m)
          if (a.m0_indices[static_cast<std::size_t>(m)] == k) expect(m) = c;
      if (!is_zero(RatMat(d - expect))) {
        rep.pass = false;
        rep.detail = "Dirac bracket mismatch at odd pair (" + std::to_string(x) + "," +
                     std::to_string(y) + ")";
        return rep;
      }
    }
  return rep;
}

SpinorCurvatureReport spinor_connection_curvature(const AdaptedSupersymmetryAlgebra& a) {
  SpinorCurvatureReport rep;
  const LieSuperalgebra& g = *a.algebra;
  // precondition: symmetric body
  for (Eigen::Index x = 0; x < a.m0_dim(); ++x)
    for (Eigen::Index y = 0; y < a.m0_dim(); ++y) {
      const Eigen::Index i = a.m0_indices[static_cast<std::size_t>(x)];
      const Eigen::Index j = a.m0_indices[static_cast<std::size_t>(y)];
      for (const auto& [k, c] : g.bracket_basis(std::min(i, j), std::max(i, j))) {
        bool in_h = false;
        for (Eigen::Index b : a.h_indices) in_h = in_h || (b == k);
        if (!in_h && !c.is_zero())
          throw std::invalid_argument("spinor_connection_curvature: body is not symmetric");
      }
    }
  std::vector<RatMat> C;
  for (Eigen::Index x = 0; x < a.m0_dim(); ++x) C.push_back(a.action_on_m1(a.m0_indices[static_cast<std::size_t>(x)]));
  rep.table.assign(static_cast<std::size_t>(a.m0_dim()),
                   std::vector<RatMat>(static_cast<std::size_t>(a.m0_dim())));
  for (Eigen::Index x = 0; x < a.m0_dim(); ++x)
    for (Eigen::Index y = 0; y < a.m0_dim(); ++y) {
      RatMat r = RatMat(C[static_cast<std::size_t>(x)] * C[static_cast<std::size_t>(y)] -
                        C[static_cast<std::size_t>(y)] * C[static_cast<std::size_t>(x)]);
      const Eigen::Index i = a.m0_indices[static_cast<std::size_t>(x)];
      const Eigen::Index j = a.m0_indices[static_cast<std::size_t>(y)];
      const SparseVec& br = g.bracket_basis(std::min(i, j), std::max(i, j));
      const int sg = (i > j) ? -1 : 1;  // both even
      for (const auto& [k, c] : br) {
        const Rat f = (sg < 0) ? -c : c;
        for (std::size_t m = 0; m < a.m0_indices.size(); ++m)
          if (a.m0_indices[m] == k) r -= f * C[m];
        for (std::size_t b = 0; b < a.h_indices.size(); ++b)
          if (a.h_indices[b] == k) r -= f * a.ad_tilde[b];
      }
      if (!is_zero(r)) {
        rep.flat = false;
        if (rep.detail.empty())
          rep.detail = "nonzero spinor curvature at (" + g.space().label(i) + "," +
                       g.space().label(j) + ")";
      }
      rep.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::move(r);
    }
  return rep;
}

std::vector<RatVec> killing_spinor_space(const AdaptedSupersymmetryAlgebra& a) {
  SpinorCurvatureReport rep = spinor_connection_curvature(a);
  const Eigen::Index N = a.m1_dim();
  std::vector<RatMat> C;
  for (Eigen::Index x = 0; x < a.m0_dim(); ++x) C.push_back(a.action_on_m1(a.m0_indices[static_cast<std::size_t>(x)]));
  auto vec_of = [N](const RatMat& m) {
    RatVec v(N * N);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) v(i * N + j) = m(i, j);
    return v;
  };
  SpanBasis span(N * N);
  std::vector<RatMat> frontier;
  for (const auto& row : rep.table)
    for (const RatMat& r : row)
      if (!is_zero(r) && span.insert(vec_of(r))) frontier.push_back(r);
  while (!frontier.empty()) {
    std::vector<RatMat> next;
    for (const RatMat& m : frontier)
      for (const RatMat& c : C) {
        RatMat br = RatMat(c * m - m * c);
        if (!is_zero(br) && span.insert(vec_of(br))) next.push_back(br);
      }
    frontier = std::move(next);
  }
  if (span.dim() == 0) {
    std::vector<RatVec> all;
    for (Eigen::Index i = 0; i < N; ++i) {
      RatVec e = RatVec::Constant(N, Rat(0));
      e(i) = Rat(1);
      all.push_back(std::move(e));
    }
    return all;
  }
  std::vector<RatMat> hol;
  for (const RatVec& v : span.vectors()) {
    RatMat m(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) m(i, j) = v(i * N + j);
    hol.push_back(std::move(m));
  }
  return joint_kernel(hol);
}

RatMat supergravity_connection_term(const AdaptedSupersymmetryAlgebra& a, const AltForm& flux,
                                    const RatVec& x_m0, int sign_wedge, int sign_contraction) {
  if (a.rep.sig.r != 1 || a.rep.sig.s != 10)
    throw std::invalid_argument("supergravity_connection_term: signature (1,10) required");
  const RatMat gram_inv = inverse(a.metric);
  AltForm five = wedge(flat(a.metric, x_m0), flux);
  RatMat term1 = CliffordRep::clifford_of(a.basis_gammas, sharp(gram_inv, five), a.rep.spin_dim);
  AltForm three = contract(x_m0, flux);
  RatMat term2 = CliffordRep::clifford_of(a.basis_gammas, sharp(gram_inv, three), a.rep.spin_dim);
  return RatMat(Rat(sign_wedge) * Rat(-1, 12) * term1 + Rat(sign_contraction) * Rat(1, 6) * term2);
}

std::string CalibrationReport::describe() const {
  std::ostringstream os;
  for (const Entry& e : entries)
    os << "flux=" << e.sign_flux << " wedge=" << e.sign_wedge
       << " contraction=" << e.sign_contraction << " residual_entries=" << e.nonzero_entries
       << "\n";
  os << (exact_matches.empty() ? "no exact convention match" : "exact convention match found");
  return os.str();
}

CalibrationReport calibrate_flux(const AdaptedSupersymmetryAlgebra& a, const AltForm& flux) {
  CalibrationReport rep;
  for (int sf : {1, -1})
    for (int sw : {1, -1})
      for (int sc : {1, -1}) {
        CalibrationReport::Entry e;
        e.sign_flux = sf;
        e.sign_wedge = sw;
        e.sign_contraction = sc;
        AltForm f = scale(flux, Rat(sf));
        for (Eigen::Index x = 0; x < a.m0_dim(); ++x) {
          RatVec xv = RatVec::Constant(a.m0_dim(), Rat(0));
          xv(x) = Rat(1);
          RatMat omega = supergravity_connection_term(a, f, xv, sw, sc);
          RatMat resid = RatMat(a.action_on_m1(a.m0_indices[static_cast<std::size_t>(x)]) - omega);
          for (Eigen::Index i = 0; i < resid.rows(); ++i)
            for (Eigen::Index j = 0; j < resid.cols(); ++j)
              if (!resid(i, j).is_zero()) ++e.nonzero_entries;
        }
        if (e.nonzero_entries == 0) rep.exact_matches.push_back(e);
        rep.entries.push_back(e);
      }
  return rep;
}

}  // namespace sla
