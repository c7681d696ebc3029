#include "sla/liesuper.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sla {

const SparseVec LieSuperalgebra::kEmpty;

RatVec densify(const SparseVec& s, Eigen::Index dim) {
  RatVec v = RatVec::Constant(dim, Rat(0));
  for (const auto& [i, c] : s) v(i) = c;
  return v;
}

SparseVec sparsify(const RatVec& v) {
  SparseVec s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) s[i] = v(i);
  return s;
}

LieSuperalgebra::LieSuperalgebra(GradedSpace space) : space_(std::move(space)) {}

void LieSuperalgebra::set_bracket(Eigen::Index i, Eigen::Index j, const SparseVec& result) {
  if (i > j) throw std::invalid_argument("set_bracket: expects i <= j");
  if (i < 0 || j >= dim()) throw std::invalid_argument("set_bracket: index out of range");
  if (i == j && space_.parity(i) == Parity::Even && !result.empty())
    throw std::invalid_argument("set_bracket: [x,x] must vanish for even x");
  const Parity expected = space_.parity(i) + space_.parity(j);
  for (const auto& [k, c] : result) {
    if (c.is_zero()) continue;
    if (space_.parity(k) != expected)
      throw std::invalid_argument("set_bracket: parity inconsistency at [" + space_.label(i) +
                                  "," + space_.label(j) + "] -> " + space_.label(k));
  }
  SparseVec clean;
  for (const auto& [k, c] : result)
    if (!c.is_zero()) clean[k] = c;
  if (clean.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(clean);
}

void LieSuperalgebra::set_bracket(const std::string& left, const std::string& right,
                                  const std::vector<std::pair<std::string, Rat>>& result) {
  const Eigen::Index i = space_.index(left), j = space_.index(right);
  if (i < 0 || j < 0) throw std::invalid_argument("set_bracket: unknown basis label");
  SparseVec s;
  for (const auto& [name, c] : result) {
    const Eigen::Index k = space_.index(name);
    if (k < 0) throw std::invalid_argument("set_bracket: unknown basis label " + name);
    s[k] += c;
  }
  if (i <= j) {
    set_bracket(i, j, s);
  } else {
    // [b_i, b_j] = -(-1)^{|i||j|} [b_j, b_i]
    const int sg = -sign_pow(space_.parity(i), space_.parity(j));
    SparseVec flipped;
    for (auto& [k, c] : s) flipped[k] = (sg < 0) ? -c : c;
    set_bracket(j, i, flipped);
  }
}

const SparseVec& LieSuperalgebra::bracket_basis(Eigen::Index i, Eigen::Index j) const {
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it == table_.end()) return kEmpty;
  return it->second;
}

RatVec LieSuperalgebra::bracket(const RatVec& x, const RatVec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("bracket: dimension mismatch");
  RatVec out = RatVec::Constant(dim(), Rat(0));
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      const SparseVec& t = bracket_basis(std::min(i, j), std::max(i, j));
      if (t.empty()) continue;
      Rat f = x(i) * y(j);
      // stored table is for (min, max); i > j picks up the antisymmetry sign
      if (i > j && -sign_pow(space_.parity(i), space_.parity(j)) < 0) f = -f;
      for (const auto& [k, c] : t) out(k) += f * c;
    }
  }
  return out;
}

RatMat LieSuperalgebra::ad_matrix(Eigen::Index i) const {
  RatMat m = RatMat::Constant(dim(), dim(), Rat(0));
  for (Eigen::Index j = 0; j < dim(); ++j) {
    const SparseVec& t = bracket_basis(std::min(i, j), std::max(i, j));
    if (t.empty()) continue;
    int sg = 1;
    if (i > j) sg = -sign_pow(space_.parity(i), space_.parity(j));
    for (const auto& [k, c] : t) m(k, j) += (sg < 0) ? -c : c;
  }
  return m;
}

void LieSuperalgebra::validate() const {
  for (const auto& [ij, t] : table_) {
    const Parity expected = space_.parity(ij.first) + space_.parity(ij.second);
    for (const auto& [k, c] : t)
      if (!c.is_zero() && space_.parity(k) != expected)
        throw std::invalid_argument("LieSuperalgebra: parity inconsistency in table");
  }
}

std::string LieSuperalgebra::JacobiReport::describe(const GradedSpace& sp) const {
  if (pass) return "super-Jacobi: pass";
  std::ostringstream os;
  os << "super-Jacobi: " << total_failures << " failing ordered triples; first at ["
     << sp.label(i) << "," << sp.label(j) << "," << sp.label(k) << "], residual:";
  for (Eigen::Index t = 0; t < residual.size(); ++t)
    if (!residual(t).is_zero()) os << " " << residual(t).str() << "*" << sp.label(t);
  return os.str();
}

LieSuperalgebra::JacobiReport LieSuperalgebra::check_super_jacobi() const {
  JacobiReport rep;
  const Eigen::Index n = dim();
  // Precompute ad matrices once; the residual for a triple is then three
  // sparse matrix-vector products.
  std::vector<RatMat> ad(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ad[static_cast<std::size_t>(i)] = ad_matrix(i);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const int sg = sign_pow(space_.parity(i), space_.parity(j));
      for (Eigen::Index k = 0; k < n; ++k) {
        const SparseVec& jk = bracket_basis(std::min(j, k), std::max(j, k));
        const SparseVec& ik = bracket_basis(std::min(i, k), std::max(i, k));
        RatVec lhs = RatVec::Constant(n, Rat(0));
        {
          int s1 = (j > k) ? -sign_pow(space_.parity(j), space_.parity(k)) : 1;
          for (const auto& [t, c] : jk) {
            Rat f = (s1 < 0) ? -c : c;
            for (Eigen::Index r = 0; r < n; ++r) {
              const Rat& a = ad[static_cast<std::size_t>(i)](r, t);
              if (!a.is_zero()) lhs(r) += f * a;
            }
          }
        }
        // [[i,j],k]
        {
          const SparseVec& ij = bracket_basis(std::min(i, j), std::max(i, j));
          int s0 = (i > j) ? -sg : 1;
          for (const auto& [t, c] : ij) {
            Rat f = (s0 < 0) ? -c : c;
            const SparseVec& tk = bracket_basis(std::min(t, k), std::max(t, k));
            int s2 = (t > k) ? -sign_pow(space_.parity(t), space_.parity(k)) : 1;
            for (const auto& [r, c2] : tk) lhs(r) -= f * ((s2 < 0) ? -c2 : c2);
          }
        }
        // (-1)^{|i||j|} [j,[i,k]]
        {
          int s3 = (i > k) ? -sign_pow(space_.parity(i), space_.parity(k)) : 1;
          for (const auto& [t, c] : ik) {
            Rat f = (s3 < 0) ? -c : c;
            if (sg < 0) f = -f;
            for (Eigen::Index r = 0; r < n; ++r) {
              const Rat& a = ad[static_cast<std::size_t>(j)](r, t);
              if (!a.is_zero()) lhs(r) -= f * a;
            }
          }
        }
        bool zero = true;
        for (Eigen::Index r = 0; r < n; ++r)
          if (!lhs(r).is_zero()) {
            zero = false;
            break;
          }
        if (!zero) {
          if (rep.pass) {
            rep.pass = false;
            rep.i = i;
            rep.j = j;
            rep.k = k;
            rep.residual = lhs;
          }
          ++rep.total_failures;
        }
      }
    }
  return rep;
}

ReductiveDecomposition::ReductiveDecomposition(const LieSuperalgebra& g, std::vector<Eigen::Index> h,
                                               std::vector<Eigen::Index> m)
    : algebra(&g), h_indices(std::move(h)), m_indices(std::move(m)) {
  std::set<Eigen::Index> seen;
  for (Eigen::Index i : h_indices) seen.insert(i);
  for (Eigen::Index i : m_indices) seen.insert(i);
  if (static_cast<Eigen::Index>(seen.size()) != h_dim() + m_dim() ||
      static_cast<Eigen::Index>(seen.size()) != g.dim())
    throw std::invalid_argument("ReductiveDecomposition: h,m must partition the basis");
}

GradedSpace ReductiveDecomposition::m_space() const {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (Eigen::Index i : m_indices) {
    labels.push_back(algebra->space().label(i));
    parities.push_back(algebra->space().parity(i));
  }
  return GradedSpace(std::move(labels), std::move(parities));
}

Eigen::Index ReductiveDecomposition::m_position(Eigen::Index algebra_index) const {
  for (std::size_t p = 0; p < m_indices.size(); ++p)
    if (m_indices[p] == algebra_index) return static_cast<Eigen::Index>(p);
  return -1;
}

Eigen::Index ReductiveDecomposition::h_position(Eigen::Index algebra_index) const {
  for (std::size_t p = 0; p < h_indices.size(); ++p)
    if (h_indices[p] == algebra_index) return static_cast<Eigen::Index>(p);
  return -1;
}

RatVec ReductiveDecomposition::project_m(const RatVec& x) const {
  RatVec out = RatVec::Constant(m_dim(), Rat(0));
  for (std::size_t p = 0; p < m_indices.size(); ++p) out(static_cast<Eigen::Index>(p)) = x(m_indices[p]);
  return out;
}

RatVec ReductiveDecomposition::project_h(const RatVec& x) const {
  RatVec out = RatVec::Constant(h_dim(), Rat(0));
  for (std::size_t p = 0; p < h_indices.size(); ++p) out(static_cast<Eigen::Index>(p)) = x(h_indices[p]);
  return out;
}

RatMat ReductiveDecomposition::ad_m_matrix(Eigen::Index algebra_index) const {
  const RatMat ad = algebra->ad_matrix(algebra_index);
  RatMat out(m_dim(), m_dim());
  for (Eigen::Index r = 0; r < m_dim(); ++r)
    for (Eigen::Index c = 0; c < m_dim(); ++c) out(r, c) = ad(m_indices[static_cast<std::size_t>(r)], m_indices[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<RatMat> ReductiveDecomposition::h_actions_on_m() const {
  std::vector<RatMat> acts;
  for (Eigen::Index b : h_indices) acts.push_back(ad_m_matrix(b));
  return acts;
}

ReductiveDecomposition::Report ReductiveDecomposition::check() const {
  Report rep;
  std::vector<bool> in_h(static_cast<std::size_t>(algebra->dim()), false);
  for (Eigen::Index i : h_indices) in_h[static_cast<std::size_t>(i)] = true;
  auto lands_in = [&](Eigen::Index i, Eigen::Index j, bool want_h, bool want_m, std::string what) {
    const SparseVec& t = algebra->bracket_basis(std::min(i, j), std::max(i, j));
    for (const auto& [k, c] : t) {
      if (c.is_zero()) continue;
      const bool kh = in_h[static_cast<std::size_t>(k)];
      if ((kh && !want_h) || (!kh && !want_m)) {
        rep.detail = "[" + algebra->space().label(i) + "," + algebra->space().label(j) +
                     "] leaves the required subspace (" + what + ")";
        return false;
      }
    }
    return true;
  };
  rep.reductive = true;
  for (Eigen::Index a : h_indices)
    for (Eigen::Index b : h_indices)
      if (!lands_in(a, b, true, false, "[h,h] in h")) {
        rep.reductive = false;
        return rep;
      }
  for (Eigen::Index a : h_indices)
    for (Eigen::Index b : m_indices)
      if (!lands_in(a, b, false, true, "[h,m] in m")) {
        rep.reductive = false;
        return rep;
      }
  rep.symmetric = true;
  for (Eigen::Index a : m_indices)
    for (Eigen::Index b : m_indices)
      if (a <= b && !lands_in(a, b, true, false, "[m,m] in h")) {
        rep.symmetric = false;
        rep.detail.clear();
        break;
      }
  return rep;
}

bool Representation::check_representation(std::string* why) const {
  const Eigen::Index n = algebra->dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      RatMat lhs = RatMat::Constant(module.dim(), module.dim(), Rat(0));
      const SparseVec& t = algebra->bracket_basis(std::min(i, j), std::max(i, j));
      int sg = (i > j) ? -sign_pow(algebra->space().parity(i), algebra->space().parity(j)) : 1;
      for (const auto& [k, c] : t) lhs += ((sg < 0) ? -c : c) * matrices[static_cast<std::size_t>(k)];
      RatMat rhs = super_commutator(matrices[static_cast<std::size_t>(i)], algebra->space().parity(i),
                                    matrices[static_cast<std::size_t>(j)], algebra->space().parity(j));
      if (!is_zero(RatMat(lhs - rhs))) {
        if (why)
          *why = "representation identity fails at [" + algebra->space().label(i) + "," +
                 algebra->space().label(j) + "]";
        return false;
      }
    }
  return true;
}

Representation adjoint_rep(const LieSuperalgebra& g) {
  auto jac = g.check_super_jacobi();
  if (!jac.pass) throw std::invalid_argument("adjoint_rep: " + jac.describe(g.space()));
  Representation rep;
  rep.algebra = &g;
  rep.module = g.space();
  for (Eigen::Index i = 0; i < g.dim(); ++i) rep.matrices.push_back(g.ad_matrix(i));
  return rep;
}

RatVec SuperBilinearForm::apply(const RatVec& l, const RatVec& r) const {
  RatVec out = RatVec::Constant(target.dim(), Rat(0));
  for (Eigen::Index t = 0; t < target.dim(); ++t) {
    Rat acc(0);
    const RatMat& m = coeff[static_cast<std::size_t>(t)];
    for (Eigen::Index i = 0; i < left.dim(); ++i) {
      if (l(i).is_zero()) continue;
      for (Eigen::Index j = 0; j < right.dim(); ++j) {
        if (r(j).is_zero() || m(i, j).is_zero()) continue;
        acc += l(i) * m(i, j) * r(j);
      }
    }
    out(t) = acc;
  }
  return out;
}

bool SuperBilinearForm::is_symmetric() const {
  for (const RatMat& m : coeff)
    if (!is_zero(RatMat(m - m.transpose()))) return false;
  return true;
}

bool SuperBilinearForm::is_skew() const {
  for (const RatMat& m : coeff)
    if (!is_zero(RatMat(m + m.transpose()))) return false;
  return true;
}

EquivarianceReport check_equivariance(const SuperBilinearForm& form,
                                      const std::vector<RatMat>& left_actions,
                                      const std::vector<RatMat>& right_actions,
                                      const std::vector<RatMat>& target_actions,
                                      const std::vector<Parity>& gen_parities) {
  EquivarianceReport rep;
  const std::size_t gens = left_actions.size();
  if (right_actions.size() != gens || target_actions.size() != gens || gen_parities.size() != gens) {
    rep.pass = false;
    rep.detail = "generator lists have different lengths";
    return rep;
  }
  for (std::size_t g = 0; g < gens; ++g) {
    for (Eigen::Index i = 0; i < form.left.dim(); ++i)
      for (Eigen::Index j = 0; j < form.right.dim(); ++j) {
        RatVec ei = RatVec::Constant(form.left.dim(), Rat(0));
        ei(i) = Rat(1);
        RatVec ej = RatVec::Constant(form.right.dim(), Rat(0));
        ej(j) = Rat(1);
        RatVec lhs = target_actions[g] * form.apply(ei, ej);
        RatVec rhs = form.apply(RatVec(left_actions[g] * ei), ej);
        RatVec second = form.apply(ei, RatVec(right_actions[g] * ej));
        if (sign_pow(gen_parities[g], form.left.parity(i)) < 0)
          rhs -= second;
        else
          rhs += second;
        if (!is_zero(RatMat(lhs - rhs))) {
          rep.pass = false;
          rep.detail = "equivariance fails for generator " + std::to_string(g) + " at pair (" +
                       form.left.label(i) + "," + form.right.label(j) + ")";
          return rep;
        }
      }
  }
  return rep;
}

std::vector<RatVec> invariants_in_tensor(const ReductiveDecomposition& d, int r, int s) {
  const GradedSpace m = d.m_space();
  const TensorSpace ts = TensorSpace::power(m, r, s);
  std::vector<RatMat> ops;
  for (Eigen::Index b : d.h_indices)
    ops.push_back(tensor_action(ts, d.ad_m_matrix(b), d.algebra->space().parity(b)));
  if (ops.empty()) {
    std::vector<RatVec> basis;
    for (Eigen::Index i = 0; i < ts.dim(); ++i) {
      RatVec v = RatVec::Constant(ts.dim(), Rat(0));
      v(i) = Rat(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return joint_kernel(ops);
}

bool is_invariant_tensor(const ReductiveDecomposition& d, int r, int s, const RatVec& tensor) {
  const GradedSpace m = d.m_space();
  const TensorSpace ts = TensorSpace::power(m, r, s);
  if (tensor.size() != ts.dim()) throw std::invalid_argument("is_invariant_tensor: dimension mismatch");
  for (Eigen::Index b : d.h_indices) {
    RatMat op = tensor_action(ts, d.ad_m_matrix(b), d.algebra->space().parity(b));
    if (!is_zero(RatMat(op * tensor))) return false;
  }
  return true;
}

}  // namespace sla
