#include "sla/clifford.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sla {

// ---------------------------------------------------------------------------
// exterior algebra helpers
// ---------------------------------------------------------------------------

void AltForm::add(std::vector<Eigen::Index> idx, Rat c) {
  if (static_cast<int>(idx.size()) != degree) throw std::invalid_argument("AltForm: arity mismatch");
  if (c.is_zero()) return;
  // insertion sort with sign; repeated indices kill the term
  int sg = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return;
      std::swap(idx[j], idx[j - 1]);
      sg = -sg;
    }
  Rat& slot = coeff[idx];
  slot += (sg < 0) ? -c : c;
  if (slot.is_zero()) coeff.erase(idx);
}

bool AltForm::is_zero() const { return coeff.empty(); }

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.n != b.n) throw std::invalid_argument("wedge: ambient mismatch");
  AltForm out;
  out.degree = a.degree + b.degree;
  out.n = a.n;
  for (const auto& [ia, ca] : a.coeff)
    for (const auto& [ib, cb] : b.coeff) {
      std::vector<Eigen::Index> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), ca * cb);
    }
  return out;
}

AltForm contract(const RatVec& x, const AltForm& w) {
  AltForm out;
  out.degree = (w.degree > 0) ? w.degree - 1 : 0;
  out.n = w.n;
  if (w.degree == 0) return out;
  for (const auto& [idx, c] : w.coeff)
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Rat& xi = x(idx[pos]);
      if (xi.is_zero()) continue;
      std::vector<Eigen::Index> rest;
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != pos) rest.push_back(idx[t]);
      Rat term = c * xi;
      if (pos % 2 == 1) term = -term;
      out.add(std::move(rest), term);
    }
  return out;
}

namespace {
void sharp_rec(const RatMat& gi, const std::vector<Eigen::Index>& src, AltForm& out,
               std::size_t slot, std::vector<Eigen::Index>& tgt, const Rat& acc) {
  if (acc.is_zero()) return;
  if (slot == src.size()) {
    out.add(tgt, acc);
    return;
  }
  for (Eigen::Index i = 0; i < gi.rows(); ++i) {
    const Rat& g = gi(i, src[slot]);
    if (g.is_zero()) continue;
    tgt.push_back(i);
    sharp_rec(gi, src, out, slot + 1, tgt, acc * g);
    tgt.pop_back();
  }
}
}  // namespace

AltForm sharp(const RatMat& gram_inverse, const AltForm& w) {
  AltForm out;
  out.degree = w.degree;
  out.n = w.n;
  for (const auto& [idx, c] : w.coeff) {
    std::vector<Eigen::Index> tgt;
    sharp_rec(gram_inverse, idx, out, 0, tgt, c);
  }
  return out;
}

AltForm flat(const RatMat& gram, const RatVec& x) {
  AltForm out;
  out.degree = 1;
  out.n = gram.rows();
  RatVec y = gram.transpose() * x;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!y(i).is_zero()) out.add({i}, y(i));
  return out;
}

AltForm scale(const AltForm& w, const Rat& c) {
  AltForm out;
  out.degree = w.degree;
  out.n = w.n;
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : w.coeff) out.coeff[idx] = v * c;
  return out;
}

std::vector<std::vector<Eigen::Index>> increasing_tuples(Eigen::Index n, int k) {
  std::vector<std::vector<Eigen::Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Eigen::Index> cur;
  struct Rec {
    Eigen::Index n;
    int k;
    std::vector<std::vector<Eigen::Index>>& out;
    void go(std::vector<Eigen::Index>& cur, Eigen::Index from) {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (Eigen::Index i = from; i < n; ++i) {
        cur.push_back(i);
        go(cur, i + 1);
        cur.pop_back();
      }
    }
  } rec{n, k, out};
  rec.go(cur, 0);
  return out;
}

// ---------------------------------------------------------------------------
// gamma matrix construction
// ---------------------------------------------------------------------------

namespace {

RatMat kron(const RatMat& a, const RatMat& b) {
  RatMat out = RatMat::Constant(a.rows() * b.rows(), a.cols() * b.cols(), Rat(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

RatMat m2(int a, int b, int c, int d) {
  RatMat m(2, 2);
  m << Rat(a), Rat(b), Rat(c), Rat(d);
  return m;
}

const RatMat kSigma3 = m2(1, 0, 0, -1);
const RatMat kSigma1 = m2(0, 1, 1, 0);
const RatMat kJ = m2(0, -1, 1, 0);

// Left multiplications by the imaginary units of H on R^4 = {1,i,j,k}.
RatMat quat_L(int unit) {
  static const int tbl[3][4][2] = {
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},   // L_i
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},   // L_j
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},   // L_k
  };
  RatMat m = RatMat::Constant(4, 4, Rat(0));
  for (int c = 0; c < 4; ++c) m(tbl[unit][c][0], c) = Rat(tbl[unit][c][1]);
  return m;
}

// Octonion left multiplications by e_1..e_7 on R^8 = {1, e_1..e_7}.
RatMat oct_L(int unit) {
  static int prod[8][8];
  static int sign[8][8];
  static bool init = false;
  if (!init) {
    static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                      {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (int b = 0; b < 8; ++b) {
      prod[0][b] = b;
      sign[0][b] = 1;
      prod[b][0] = b;
      sign[b][0] = 1;
    }
    for (int a = 1; a < 8; ++a) {
      prod[a][a] = 0;
      sign[a][a] = -1;
    }
    for (const auto& t : triples) {
      const int x = t[0], y = t[1], z = t[2];
      prod[x][y] = z;
      sign[x][y] = 1;
      prod[y][z] = x;
      sign[y][z] = 1;
      prod[z][x] = y;
      sign[z][x] = 1;
      prod[y][x] = z;
      sign[y][x] = -1;
      prod[z][y] = x;
      sign[z][y] = -1;
      prod[x][z] = y;
      sign[x][z] = -1;
    }
    init = true;
  }
  RatMat m = RatMat::Constant(8, 8, Rat(0));
  for (int c = 0; c < 8; ++c) m(prod[unit + 1][c], c) = Rat(sign[unit + 1][c]);
  return m;
}

struct GammaSet {
  std::vector<RatMat> plus;   // square +Id
  std::vector<RatMat> minus;  // square -Id
  Eigen::Index dim = 1;
};

// Clifford generators with p squares +1 and q squares -1 on a module of
// minimal real dimension. Supported pure ranges after (1,1)-reductions:
// p <= 9, q <= 7.
GammaSet build_pq(int p, int q) {
  GammaSet out;
  if (p >= 1 && q >= 1) {
    GammaSet sub = build_pq(p - 1, q - 1);
    for (const RatMat& g : sub.plus) out.plus.push_back(kron(g, kSigma3));
    for (const RatMat& g : sub.minus) out.minus.push_back(kron(g, kSigma3));
    const RatMat id = RatMat::Identity(sub.dim, sub.dim);
    out.plus.push_back(kron(id, kSigma1));
    out.minus.push_back(kron(id, kJ));
    out.dim = sub.dim * 2;
    return out;
  }
  if (q == 0) {
    switch (p) {
      case 0:
        return out;
      case 1:
        out.plus.push_back(RatMat::Identity(1, 1));
        out.dim = 1;
        return out;
      case 2:
        out.plus = {kSigma3, kSigma1};
        out.dim = 2;
        return out;
      default: {
        if (p > 9) throw std::invalid_argument("build_gamma: unsupported signature range");
        // Cl(p,0) = Cl(0,p-2) (x) Cl(2,0)
        GammaSet sub = build_pq(0, p - 2);
        const RatMat id = RatMat::Identity(sub.dim, sub.dim);
        out.plus.push_back(kron(id, kSigma3));
        out.plus.push_back(kron(id, kSigma1));
        const RatMat s31 = kSigma3 * kSigma1;
        for (const RatMat& g : sub.minus) out.plus.push_back(kron(g, s31));
        out.dim = sub.dim * 2;
        return out;
      }
    }
  }
  switch (q) {
    case 1:
      out.minus.push_back(kJ);
      out.dim = 2;
      return out;
    case 2:
    case 3:
      for (int i = 0; i < q; ++i) out.minus.push_back(quat_L(i));
      out.dim = 4;
      return out;
    case 4:
    case 5:
    case 6:
    case 7:
      for (int i = 0; i < q; ++i) out.minus.push_back(oct_L(i));
      out.dim = 8;
      return out;
    default:
      throw std::invalid_argument("build_gamma: unsupported signature range");
  }
}

}  // namespace

Eigen::Index minimal_spin_dim(const Signature& sig) {
  // classification of real Clifford algebras by (s - r) mod 8, the p-plus
  // count being p = s, q = r under our sign convention
  const int n = sig.n();
  const int type = (((sig.s - sig.r) % 8) + 8) % 8;
  switch (type) {
    case 0:
    case 2:
      return Eigen::Index(1) << (n / 2);  // M_k(R)
    case 1:
      return Eigen::Index(1) << ((n - 1) / 2);  // M_k(R) + M_k(R)
    case 3:
    case 7:
      return Eigen::Index(1) << ((n + 1) / 2);  // M_k(C)
    case 4:
    case 6:
      return Eigen::Index(1) << ((n + 2) / 2);  // M_k(H)
    default:
      return Eigen::Index(1) << ((n + 1) / 2);  // M_k(H) + M_k(H)
  }
}

RatMat CliffordRep::eta_matrix() const {
  RatMat m = RatMat::Constant(sig.n(), sig.n(), Rat(0));
  for (Eigen::Index i = 0; i < sig.n(); ++i) m(i, i) = eta(i);
  return m;
}

RatMat CliffordRep::gamma_of(const RatVec& v) const {
  RatMat out = RatMat::Constant(spin_dim, spin_dim, Rat(0));
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(gammas.size()); ++i)
    if (!v(i).is_zero()) out += v(i) * gammas[static_cast<std::size_t>(i)];
  return out;
}

RatMat CliffordRep::clifford_of(const std::vector<RatMat>& basis_gammas, const AltForm& kvector,
                                Eigen::Index spin_dim) {
  RatMat out = RatMat::Constant(spin_dim, spin_dim, Rat(0));
  const int k = kvector.degree;
  if (k == 0) {
    for (const auto& [idx, c] : kvector.coeff) out += c * RatMat::Identity(spin_dim, spin_dim);
    return out;
  }
  Rat fact(1);
  for (int i = 2; i <= k; ++i) fact *= Rat(i);
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (const auto& [idx, c] : kvector.coeff) {
    const Rat norm = c / fact;
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      RatMat prod = basis_gammas[static_cast<std::size_t>(idx[static_cast<std::size_t>(perm[0])])];
      for (int i = 1; i < k; ++i)
        prod = RatMat(prod * basis_gammas[static_cast<std::size_t>(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])])]);
      out += ((perm_sign(perm) < 0) ? -norm : norm) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

RatMat CliffordRep::clifford_of(const AltForm& kvector) const {
  return clifford_of(gammas, kvector, spin_dim);
}

void CliffordRep::check_relations() const {
  const Eigen::Index n = sig.n();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      RatMat anti = gammas[static_cast<std::size_t>(i)] * gammas[static_cast<std::size_t>(j)] +
                    gammas[static_cast<std::size_t>(j)] * gammas[static_cast<std::size_t>(i)];
      if (i == j) anti += Rat(2) * eta(i) * RatMat::Identity(spin_dim, spin_dim);
      if (!is_zero(anti))
        throw std::runtime_error("Clifford relation fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
}

Eigen::Index CliffordRep::generated_algebra_dim() const {
  const Eigen::Index n = sig.n();
  const Eigen::Index N = spin_dim;
  struct SignedPerm {
    std::vector<Eigen::Index> to;
    std::vector<int> sg;
  };
  auto of_matrix = [&](const RatMat& m) {
    SignedPerm p;
    p.to.resize(static_cast<std::size_t>(N));
    p.sg.resize(static_cast<std::size_t>(N));
    for (Eigen::Index c = 0; c < N; ++c) {
      int found = 0;
      for (Eigen::Index r = 0; r < N; ++r) {
        if (m(r, c).is_zero()) continue;
        ++found;
        if (m(r, c) != Rat(1) && m(r, c) != Rat(-1)) found = 99;
        p.to[static_cast<std::size_t>(c)] = r;
        p.sg[static_cast<std::size_t>(c)] = m(r, c).sign();
      }
      if (found != 1) throw std::runtime_error("generated_algebra_dim: not a signed permutation");
    }
    return p;
  };
  std::vector<SignedPerm> gens;
  for (const RatMat& g : gammas) gens.push_back(of_matrix(g));

  std::vector<SignedPerm> products;
  {
    SignedPerm id;
    id.to.resize(static_cast<std::size_t>(N));
    id.sg.assign(static_cast<std::size_t>(N), 1);
    for (Eigen::Index i = 0; i < N; ++i) id.to[static_cast<std::size_t>(i)] = i;
    products.push_back(std::move(id));
  }
  for (Eigen::Index g = 0; g < n; ++g) {
    const std::size_t sz = products.size();
    for (std::size_t k = 0; k < sz; ++k) {
      SignedPerm q;
      q.to.resize(static_cast<std::size_t>(N));
      q.sg.resize(static_cast<std::size_t>(N));
      for (Eigen::Index c = 0; c < N; ++c) {
        const Eigen::Index mid = products[k].to[static_cast<std::size_t>(c)];
        q.to[static_cast<std::size_t>(c)] = gens[static_cast<std::size_t>(g)].to[static_cast<std::size_t>(mid)];
        q.sg[static_cast<std::size_t>(c)] = products[k].sg[static_cast<std::size_t>(c)] *
                                            gens[static_cast<std::size_t>(g)].sg[static_cast<std::size_t>(mid)];
      }
      products.push_back(std::move(q));
    }
  }
  std::map<std::vector<Eigen::Index>, std::vector<std::vector<int>>> groups;
  for (const SignedPerm& p : products) groups[p.to].push_back(p.sg);
  Eigen::Index total = 0;
  for (auto& [perm, signs] : groups) {
    SpanBasis basis(N);
    for (const auto& sv : signs) {
      RatVec v(N);
      for (Eigen::Index i = 0; i < N; ++i) v(i) = Rat(sv[static_cast<std::size_t>(i)]);
      basis.insert(std::move(v));
    }
    total += basis.dim();
  }
  return total;
}

Eigen::Index CliffordRep::expected_simple_factor_dim() const {
  const int type = (((sig.s - sig.r) % 8) + 8) % 8;
  const Eigen::Index N = spin_dim;
  switch (type) {
    case 0:
    case 1:
    case 2:
      return N * N;  // R
    case 3:
    case 7:
      return N * N / 2;  // C
    default:
      return N * N / 4;  // H and H+H
  }
}

CliffordRep build_gamma(const Signature& sig) {
  if (sig.n() < 1) throw std::invalid_argument("build_gamma: r+s >= 1 required");
  if (sig.r < 0 || sig.s < 0) throw std::invalid_argument("build_gamma: negative signature");
  // our convention: the r "+1" directions square to -Id, the s "-1"
  // directions to +Id, i.e. the p-plus count is p = s, q = r
  GammaSet set = build_pq(sig.s, sig.r);
  CliffordRep rep;
  rep.sig = sig;
  rep.spin_dim = set.dim;
  rep.gammas.insert(rep.gammas.end(), set.minus.begin(), set.minus.end());
  rep.gammas.insert(rep.gammas.end(), set.plus.begin(), set.plus.end());
  rep.check_relations();
  if (rep.spin_dim != minimal_spin_dim(sig))
    throw std::runtime_error("build_gamma: constructed module is not minimal for " + sig.str());
  return rep;
}

SpinLieAlgebra spin_algebra(const CliffordRep& rep) {
  SpinLieAlgebra spin;
  spin.rep = rep;
  const Eigen::Index n = rep.sig.n();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      spin.pairs.emplace_back(i, j);
      spin.generators.push_back(RatMat(Rat(1, 2) * rep.gammas[static_cast<std::size_t>(i)] *
                                       rep.gammas[static_cast<std::size_t>(j)]));
      RatMat v = RatMat::Constant(n, n, Rat(0));
      v(j, i) = rep.eta(i);
      v(i, j) = -rep.eta(j);
      spin.vector_actions.push_back(std::move(v));
    }
  return spin;
}

namespace {

RatVec vectorize(const RatMat& m) {
  RatVec v(m.rows() * m.cols());
  Eigen::Index at = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(at++) = m(i, j);
  return v;
}

RatVec coords_in_span(const std::vector<RatMat>& basis, const RatMat& target,
                      const std::string& what) {
  const Eigen::Index n = target.rows() * target.cols();
  RatMat a(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = vectorize(basis[k]);
  RatVec x;
  if (!solve(a, vectorize(target), x)) throw std::invalid_argument(what + ": element outside span");
  return x;
}

}  // namespace

RatMat SpinLieAlgebra::xi_star(const RatMat& spin_element) const {
  const RatVec c = coords_in_span(generators, spin_element, "xi_star");
  RatMat out = RatMat::Constant(rep.sig.n(), rep.sig.n(), Rat(0));
  for (std::size_t k = 0; k < vector_actions.size(); ++k) out += c(static_cast<Eigen::Index>(k)) * vector_actions[k];
  return out;
}

RatMat SpinLieAlgebra::xi_star_inv(const RatMat& so_element) const {
  const RatVec c = coords_in_span(vector_actions, so_element, "xi_star_inv");
  RatMat out = RatMat::Constant(rep.spin_dim, rep.spin_dim, Rat(0));
  for (std::size_t k = 0; k < generators.size(); ++k) out += c(static_cast<Eigen::Index>(k)) * generators[k];
  return out;
}

namespace {

// Fixed points of entry-wise signed-permutation conditions x_e = sign * x_{img(e)}.
std::vector<RatVec> signed_orbit_fixed_points(
    Eigen::Index dim,
    const std::vector<std::pair<std::vector<Eigen::Index>, std::vector<int>>>& gens) {
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(dim));
  std::vector<int> rel(static_cast<std::size_t>(dim), 1);
  std::vector<bool> dead(static_cast<std::size_t>(dim), false);
  for (Eigen::Index i = 0; i < dim; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](Eigen::Index x) {
    int s = 1;
    while (parent[static_cast<std::size_t>(x)] != x) {
      s *= rel[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return std::pair<Eigen::Index, int>(x, s);
  };
  for (const auto& [img, sg] : gens) {
    for (Eigen::Index e = 0; e < dim; ++e) {
      auto [ra, sa] = find(e);
      auto [rb, sb] = find(img[static_cast<std::size_t>(e)]);
      const int s = sg[static_cast<std::size_t>(e)];
      if (ra == rb) {
        if (sa != s * sb) dead[static_cast<std::size_t>(ra)] = true;
      } else {
        parent[static_cast<std::size_t>(rb)] = ra;
        rel[static_cast<std::size_t>(rb)] = sa * s * sb;
        if (dead[static_cast<std::size_t>(rb)]) dead[static_cast<std::size_t>(ra)] = true;
      }
    }
  }
  std::map<Eigen::Index, std::vector<std::pair<Eigen::Index, int>>> orbits;
  for (Eigen::Index e = 0; e < dim; ++e) {
    auto [r, s] = find(e);
    orbits[r].emplace_back(e, s);
  }
  std::vector<RatVec> basis;
  for (const auto& [root, members] : orbits) {
    if (dead[static_cast<std::size_t>(root)]) continue;
    RatVec v = RatVec::Constant(dim, Rat(0));
    for (const auto& [e, s] : members) v(e) = Rat(s);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct SignedPermMatrix {
  std::vector<Eigen::Index> to;
  std::vector<int> sg;
};

SignedPermMatrix as_signed_perm(const RatMat& m, const Rat& scale) {
  SignedPermMatrix p;
  const Eigen::Index N = m.rows();
  p.to.resize(static_cast<std::size_t>(N));
  p.sg.resize(static_cast<std::size_t>(N));
  for (Eigen::Index c = 0; c < N; ++c) {
    int found = 0;
    for (Eigen::Index r = 0; r < N; ++r) {
      if (m(r, c).is_zero()) continue;
      ++found;
      const Rat v = m(r, c) / scale;
      if (v != Rat(1) && v != Rat(-1)) found = 99;
      p.to[static_cast<std::size_t>(c)] = r;
      p.sg[static_cast<std::size_t>(c)] = (v == Rat(1)) ? 1 : -1;
    }
    if (found != 1) throw std::runtime_error("as_signed_perm: not a signed permutation");
  }
  return p;
}

std::vector<RatMat> scalar_invariant_forms(const CliffordRep& rep) {
  const SpinLieAlgebra spin = spin_algebra(rep);
  const Eigen::Index N = rep.spin_dim;
  if (N <= 16) {
    // generic equivariant solve: rho^T B + B rho = 0 for all generators
    SpanBasis rows(N * N);
    for (const RatMat& q : spin.generators) {
      for (Eigen::Index r = 0; r < N; ++r)
        for (Eigen::Index c = 0; c < N; ++c) {
          RatVec row = RatVec::Constant(N * N, Rat(0));
          bool nz = false;
          for (Eigen::Index k = 0; k < N; ++k) {
            if (!q(k, r).is_zero()) {
              row(k * N + c) += q(k, r);
              nz = true;
            }
            if (!q(k, c).is_zero()) {
              row(r * N + k) += q(k, c);
              nz = true;
            }
          }
          if (nz) rows.insert(std::move(row));
        }
    }
    std::vector<RatMat> out;
    if (rows.vectors().empty()) {
      for (Eigen::Index e = 0; e < N * N; ++e) {
        RatMat b = RatMat::Constant(N, N, Rat(0));
        b(e / N, e % N) = Rat(1);
        out.push_back(std::move(b));
      }
      return out;
    }
    RatMat stacked(static_cast<Eigen::Index>(rows.vectors().size()), N * N);
    for (std::size_t i = 0; i < rows.vectors().size(); ++i)
      stacked.row(static_cast<Eigen::Index>(i)) = rows.vectors()[i].transpose();
    for (const RatVec& v : kernel(stacked)) {
      RatMat b(N, N);
      for (Eigen::Index r = 0; r < N; ++r)
        for (Eigen::Index c = 0; c < N; ++c) b(r, c) = v(r * N + c);
      out.push_back(std::move(b));
    }
    return out;
  }
  // Large modules: B rho + rho^T B = 0 with rho = (1/2) g, g = g_i g_j a
  // signed permutation, is equivalent to B = -g^T B g^{-1}: an entry-wise
  // signed permutation condition solved by orbit analysis.
  std::vector<std::pair<std::vector<Eigen::Index>, std::vector<int>>> entry_gens;
  for (const RatMat& q : spin.generators) {
    SignedPermMatrix g = as_signed_perm(q, Rat(1, 2));
    std::vector<Eigen::Index> ginv(static_cast<std::size_t>(N));
    std::vector<int> ginv_sg(static_cast<std::size_t>(N));
    for (Eigen::Index c = 0; c < N; ++c) {
      ginv[static_cast<std::size_t>(g.to[static_cast<std::size_t>(c)])] = c;
      ginv_sg[static_cast<std::size_t>(g.to[static_cast<std::size_t>(c)])] = g.sg[static_cast<std::size_t>(c)];
    }
    std::vector<Eigen::Index> img(static_cast<std::size_t>(N * N));
    std::vector<int> sg(static_cast<std::size_t>(N * N));
    for (Eigen::Index r = 0; r < N; ++r)
      for (Eigen::Index c = 0; c < N; ++c) {
        // (g^T B g^{-1})_{r,c} = sg(r) * sg_inv(c) * B_{g(r), ginv(c)}
        const Eigen::Index b = ginv[static_cast<std::size_t>(c)];
        img[static_cast<std::size_t>(r * N + c)] = g.to[static_cast<std::size_t>(r)] * N + b;
        sg[static_cast<std::size_t>(r * N + c)] = -g.sg[static_cast<std::size_t>(r)] * ginv_sg[static_cast<std::size_t>(c)];
      }
    entry_gens.emplace_back(std::move(img), std::move(sg));
  }
  std::vector<RatMat> out;
  for (const RatVec& v : signed_orbit_fixed_points(N * N, entry_gens)) {
    RatMat b(N, N);
    for (Eigen::Index r = 0; r < N; ++r)
      for (Eigen::Index c = 0; c < N; ++c) b(r, c) = v(r * N + c);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

GradedSpace spinor_space(const CliffordRep& rep, const std::string& prefix) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < rep.spin_dim; ++i) labels.push_back(prefix + std::to_string(i));
  return GradedSpace::even(labels);
}

GradedSpace vector_space_of(const Signature& sig, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < sig.n(); ++i) labels.push_back(prefix + std::to_string(i));
  return GradedSpace::even(labels);
}

std::vector<RatMat> schur_algebra(const CliffordRep& rep) {
  const SpinLieAlgebra spin = spin_algebra(rep);
  const Eigen::Index N = rep.spin_dim;
  std::vector<RatMat> result;
  if (N <= 16) {
    GradedSpace s = spinor_space(rep);
    auto maps = equivariant_maps(s, s, spin.generators, spin.generators, Parity::Even);
    for (const auto& g : maps) result.push_back(g.matrix);
    return result;
  }
  // [T, (1/2) g_i g_j] = 0 is equivalent to invariance under conjugation by
  // the signed permutation g_i g_j; solve entry-wise by orbits.
  std::vector<std::pair<std::vector<Eigen::Index>, std::vector<int>>> entry_gens;
  for (const RatMat& q : spin.generators) {
    SignedPermMatrix g = as_signed_perm(q, Rat(1, 2));
    std::vector<Eigen::Index> img(static_cast<std::size_t>(N * N));
    std::vector<int> sg(static_cast<std::size_t>(N * N));
    // T = g^{-1} T g: T_{r,c} = sg... entry (r,c) of g^{-1} T g picks T at
    // (g(r), g(c)) with sign sg(r)sg(c)
    for (Eigen::Index r = 0; r < N; ++r)
      for (Eigen::Index c = 0; c < N; ++c) {
        img[static_cast<std::size_t>(r * N + c)] =
            g.to[static_cast<std::size_t>(r)] * N + g.to[static_cast<std::size_t>(c)];
        sg[static_cast<std::size_t>(r * N + c)] =
            g.sg[static_cast<std::size_t>(r)] * g.sg[static_cast<std::size_t>(c)];
      }
    entry_gens.emplace_back(std::move(img), std::move(sg));
  }
  for (const RatVec& v : signed_orbit_fixed_points(N * N, entry_gens)) {
    RatMat t(N, N);
    for (Eigen::Index r = 0; r < N; ++r)
      for (Eigen::Index c = 0; c < N; ++c) t(r, c) = v(r * N + c);
    result.push_back(std::move(t));
  }
  return result;
}

std::vector<SuperBilinearForm> invariant_bilinear_forms(const CliffordRep& rep, FormTarget target,
                                                        FormSymmetry symmetry) {
  const Eigen::Index N = rep.spin_dim;
  const GradedSpace s = spinor_space(rep);
  std::vector<RatMat> scalars = scalar_invariant_forms(rep);

  std::vector<SuperBilinearForm> forms;
  if (target == FormTarget::Scalar) {
    for (const RatMat& b : scalars) {
      SuperBilinearForm f;
      f.left = s;
      f.right = s;
      f.target = GradedSpace::even({"1"});
      f.coeff = {b};
      forms.push_back(std::move(f));
    }
  } else {
    // The transfer beta -> Gamma^1_beta is an isomorphism onto the
    // equivariant vector-valued forms (both spaces have the Schur algebra's
    // dimension), so the scalar basis transfers to a basis.
    for (const RatMat& b : scalars) {
      SuperBilinearForm beta;
      beta.left = s;
      beta.right = s;
      beta.target = GradedSpace::even({"1"});
      beta.coeff = {b};
      forms.push_back(gamma_transfer(beta, 1, rep));
    }
  }
  if (symmetry == FormSymmetry::Any) return forms;

  if (forms.empty()) return forms;
  const Eigen::Index tdim = forms[0].target.dim();
  SpanBasis proj(tdim * N * N);
  for (const auto& f : forms) {
    RatVec v = RatVec::Constant(tdim * N * N, Rat(0));
    for (Eigen::Index t = 0; t < tdim; ++t) {
      const RatMat& m = f.coeff[static_cast<std::size_t>(t)];
      RatMat half = (symmetry == FormSymmetry::Symmetric) ? RatMat(Rat(1, 2) * (m + m.transpose()))
                                                          : RatMat(Rat(1, 2) * (m - m.transpose()));
      for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) v(t * N * N + i * N + j) = half(i, j);
    }
    proj.insert(std::move(v));
  }
  std::vector<SuperBilinearForm> out;
  for (const RatVec& v : proj.vectors()) {
    SuperBilinearForm f;
    f.left = s;
    f.right = s;
    f.target = forms[0].target;
    for (Eigen::Index t = 0; t < tdim; ++t) {
      RatMat m(N, N);
      for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) m(i, j) = v(t * N * N + i * N + j);
      f.coeff.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

SuperBilinearForm gamma_transfer(const SuperBilinearForm& beta, int k, const CliffordRep& rep) {
  if (k < 0 || k > rep.sig.n()) throw std::invalid_argument("gamma_transfer: k out of range");
  const Eigen::Index N = rep.spin_dim;
  const RatMat& b = beta.coeff.at(0);
  SuperBilinearForm out;
  out.left = beta.left;
  out.right = beta.right;
  if (k == 0) {
    out.target = GradedSpace::even({"1"});
    out.coeff = {b};
    return out;
  }
  const auto tuples = increasing_tuples(rep.sig.n(), k);
  if (k == 1) {
    out.target = vector_space_of(rep.sig);
  } else {
    std::vector<std::string> labels;
    for (const auto& t : tuples) {
      std::string l = "L";
      for (Eigen::Index i : t) l += "_" + std::to_string(i);
      labels.push_back(l);
    }
    out.target = GradedSpace::even(labels);
  }
  Rat fact(1);
  for (int i = 2; i <= k; ++i) fact *= Rat(i);
  for (const auto& t : tuples) {
    RatMat prod = rep.gammas[static_cast<std::size_t>(t[0])];
    Rat metric = rep.eta(t[0]);
    for (std::size_t i = 1; i < t.size(); ++i) {
      prod = RatMat(prod * rep.gammas[static_cast<std::size_t>(t[i])]);
      metric *= rep.eta(t[i]);
    }
    // <Gamma(s,u), e_I> = k! beta(gamma_I s, u); the e_I component divides by
    // the Lambda^k Gram factor
    RatMat comp = RatMat((fact / metric) * (prod.transpose() * b));
    out.coeff.push_back(std::move(comp));
  }
  return out;
}

std::vector<RatMat> exterior_vector_actions(const SpinLieAlgebra& spin, int k) {
  const Eigen::Index n = spin.rep.sig.n();
  const auto tuples = increasing_tuples(n, k);
  std::map<std::vector<Eigen::Index>, Eigen::Index> pos;
  for (std::size_t i = 0; i < tuples.size(); ++i) pos[tuples[i]] = static_cast<Eigen::Index>(i);
  std::vector<RatMat> out;
  for (const RatMat& v : spin.vector_actions) {
    RatMat act = RatMat::Constant(static_cast<Eigen::Index>(tuples.size()),
                                  static_cast<Eigen::Index>(tuples.size()), Rat(0));
    for (std::size_t c = 0; c < tuples.size(); ++c) {
      AltForm image;
      image.degree = k;
      image.n = n;
      for (std::size_t slot = 0; slot < tuples[c].size(); ++slot)
        for (Eigen::Index i = 0; i < n; ++i) {
          const Rat& a = v(i, tuples[c][slot]);
          if (a.is_zero()) continue;
          std::vector<Eigen::Index> idx = tuples[c];
          idx[slot] = i;
          image.add(std::move(idx), a);
        }
      for (const auto& [idx, val] : image.coeff) act(pos.at(idx), static_cast<Eigen::Index>(c)) = val;
    }
    out.push_back(std::move(act));
  }
  return out;
}

}  // namespace sla
