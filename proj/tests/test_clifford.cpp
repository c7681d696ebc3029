#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sla/clifford.hpp"

using namespace sla;

TEST_CASE("gamma construction: relations and minimal dimensions") {
  // spin module dimensions fixed by the worked examples: dim 2 in signature
  // (1,2), dim 4 in (1,3), dim 32 in (1,10)
  struct Row {
    int r, s;
    Eigen::Index dim;
  };
  const Row rows[] = {{1, 2, 2}, {1, 3, 4},  {1, 10, 32}, {2, 1, 4}, {3, 2, 8}, {3, 1, 8},
                      {4, 1, 8}, {4, 0, 8},  {1, 4, 8},   {2, 3, 4}, {2, 2, 4}, {0, 4, 8},
                      {2, 4, 8}, {3, 3, 8},  {0, 3, 4},   {3, 0, 4}, {0, 2, 2}, {2, 0, 4},
                      {1, 1, 2}, {0, 1, 1},  {1, 0, 2}};
  for (const Row& row : rows) {
    CAPTURE(row.r);
    CAPTURE(row.s);
    CliffordRep rep = build_gamma({row.r, row.s});
    CHECK(rep.spin_dim == row.dim);
    CHECK_NOTHROW(rep.check_relations());
  }
  // single generator squaring to -Id on R^2 (complex numbers as a real
  // algebra); under our v.v = -<v,v> convention this is signature (1,0)
  CliffordRep c = build_gamma({1, 0});
  CHECK(c.spin_dim == 2);
  CHECK(is_zero(RatMat(c.gammas[0] * c.gammas[0] + RatMat::Identity(2, 2))));
}

TEST_CASE("all signatures with r+s <= 7 satisfy relations and are irreducible") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) {
      const int s = n - r;
      if (r - s > 7 || s - r > 9) continue;
      CAPTURE(r);
      CAPTURE(s);
      CliffordRep rep = build_gamma({r, s});
      CHECK_NOTHROW(rep.check_relations());
      CHECK(rep.generated_algebra_dim() == rep.expected_simple_factor_dim());
    }
}

TEST_CASE("signature (1,10): dimension 32 and irreducibility certificate") {
  CliffordRep rep = build_gamma({1, 10});
  CHECK(rep.spin_dim == 32);
  // M_32(R) factor of M_32(R)+M_32(R)
  CHECK(rep.expected_simple_factor_dim() == 1024);
  CHECK(rep.generated_algebra_dim() == 1024);
}

TEST_CASE("xi_star: quarter commutators map to wedges and preserve brackets") {
  CliffordRep rep = build_gamma({1, 2});
  SpinLieAlgebra spin = spin_algebra(rep);

  SUBCASE("generator to wedge and back") {
    for (std::size_t k = 0; k < spin.generators.size(); ++k) {
      RatMat so = spin.xi_star(spin.generators[k]);
      CHECK(is_zero(RatMat(so - spin.vector_actions[k])));
      CHECK(is_zero(RatMat(spin.xi_star_inv(so) - spin.generators[k])));
    }
    CHECK(is_zero(spin.xi_star(RatMat(RatMat::Constant(2, 2, Rat(0))))));
  }

  SUBCASE("vector action is the Clifford commutator") {
    // xi_*(sigma) v = [sigma, gamma(v)] as Clifford elements
    for (std::size_t k = 0; k < spin.generators.size(); ++k)
      for (int v = 0; v < 3; ++v) {
        RatMat lhs = RatMat(spin.generators[k] * rep.gammas[static_cast<std::size_t>(v)] -
                            rep.gammas[static_cast<std::size_t>(v)] * spin.generators[k]);
        RatVec img = spin.vector_actions[k].col(v);
        CHECK(is_zero(RatMat(lhs - rep.gamma_of(img))));
      }
  }

  SUBCASE("bracket preservation on random generator pairs") {
    CliffordRep rep4 = build_gamma({1, 3});
    SpinLieAlgebra spin4 = spin_algebra(rep4);
    RatMat x = RatMat(Rat(2) * spin4.generators[0] - Rat(1, 3) * spin4.generators[3] +
                      spin4.generators[5]);
    RatMat y = RatMat(spin4.generators[1] + Rat(5, 7) * spin4.generators[4]);
    RatMat lhs = spin4.xi_star(RatMat(x * y - y * x));
    RatMat xs = spin4.xi_star(x), ys = spin4.xi_star(y);
    CHECK(is_zero(RatMat(lhs - (xs * ys - ys * xs))));
    CHECK_THROWS(spin4.xi_star(RatMat(RatMat::Identity(4, 4))));
  }
}

TEST_CASE("Schur algebra dimensions") {
  CHECK(schur_algebra(build_gamma({1, 2})).size() == 1);  // Spin(1,2) = SL(2,R) on R^2
  CHECK(schur_algebra(build_gamma({0, 2})).size() == 2);  // complex structure present
  CHECK(schur_algebra(build_gamma({2, 1})).size() == 4);  // D = 3 dim C with D = 12
  CliffordRep rep = build_gamma({2, 1});
  SpinLieAlgebra spin = spin_algebra(rep);
  for (const RatMat& t : schur_algebra(rep))
    for (const RatMat& q : spin.generators) CHECK(is_zero(RatMat(t * q - q * t)));
}

TEST_CASE("Schur dimension depends only on r-s mod 8") {
  CHECK(schur_algebra(build_gamma({1, 3})).size() == schur_algebra(build_gamma({2, 4})).size());
  CHECK(schur_algebra(build_gamma({2, 2})).size() == schur_algebra(build_gamma({3, 3})).size());
}

TEST_CASE("orbit path agrees with the class table on a large module") {
  // (1,10) is in the same residue class as (1,2): Schur dimension 1 for both
  CHECK(schur_algebra(build_gamma({1, 10})).size() == 1);
  CHECK(schur_algebra(build_gamma({1, 2})).size() == 1);
  // and the commutant really commutes
  CliffordRep rep = build_gamma({1, 10});
  SpinLieAlgebra spin = spin_algebra(rep);
  for (const RatMat& t : schur_algebra(rep))
    for (std::size_t k = 0; k < spin.generators.size(); k += 7)
      CHECK(is_zero(RatMat(t * spin.generators[k] - spin.generators[k] * t)));
}

TEST_CASE("invariant bilinear forms") {
  SUBCASE("(1,3) scalar: two-dimensional, both skew") {
    CliffordRep rep = build_gamma({1, 3});
    auto any = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Any);
    CHECK(any.size() == 2);
    for (const auto& f : any) CHECK(f.is_skew());
    CHECK(invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Skew).size() == 2);
    CHECK(invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Symmetric).empty());
  }

  SUBCASE("(1,2) vector-valued symmetric: a Poincare Gamma exists, dim 1") {
    CliffordRep rep = build_gamma({1, 2});
    auto sym = invariant_bilinear_forms(rep, FormTarget::Vector, FormSymmetry::Symmetric);
    REQUIRE(sym.size() == 1);
    SpinLieAlgebra spin = spin_algebra(rep);
    std::vector<Parity> par(spin.generators.size(), Parity::Even);
    CHECK(check_equivariance(sym[0], spin.generators, spin.generators, spin.vector_actions, par)
              .pass);
    SuperBilinearForm bad = sym[0];
    bad.coeff[0](0, 0) += Rat(1);
    CHECK_FALSE(check_equivariance(bad, spin.generators, spin.generators, spin.vector_actions, par)
                    .pass);
  }

  SUBCASE("transfer route agrees with the generic equivariant solver") {
    CliffordRep rep = build_gamma({1, 2});
    SpinLieAlgebra spin = spin_algebra(rep);
    GradedSpace s2 = spinor_space(rep);
    TensorSpace ss({s2, s2}, {false, false});
    std::vector<RatMat> dom, cod;
    for (std::size_t k = 0; k < spin.generators.size(); ++k) {
      dom.push_back(tensor_action(ss, spin.generators[k], Parity::Even));
      cod.push_back(spin.vector_actions[k]);
    }
    auto maps = equivariant_maps(ss.as_graded_space(), vector_space_of(rep.sig), dom, cod);
    auto any = invariant_bilinear_forms(rep, FormTarget::Vector, FormSymmetry::Any);
    CHECK(maps.size() == any.size());
  }

  SUBCASE("symmetric and skew parts partition the space") {
    CliffordRep rep = build_gamma({1, 2});
    auto sym = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Symmetric);
    auto skew = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Skew);
    auto any = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Any);
    CHECK(sym.size() + skew.size() == any.size());
  }
}

TEST_CASE("gamma transfer") {
  CliffordRep rep = build_gamma({1, 3});
  auto betas = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Any);
  REQUIRE(betas.size() == 2);

  SUBCASE("k = 0 is the identity transfer") {
    SuperBilinearForm g0 = gamma_transfer(betas[0], 0, rep);
    CHECK(is_zero(RatMat(g0.coeff[0] - betas[0].coeff[0])));
  }

  SUBCASE("linearity in beta") {
    SuperBilinearForm sum = betas[0];
    sum.coeff[0] = RatMat(betas[0].coeff[0] + betas[1].coeff[0]);
    SuperBilinearForm g_sum = gamma_transfer(sum, 2, rep);
    SuperBilinearForm g0 = gamma_transfer(betas[0], 2, rep);
    SuperBilinearForm g1 = gamma_transfer(betas[1], 2, rep);
    for (std::size_t t = 0; t < g_sum.coeff.size(); ++t)
      CHECK(is_zero(RatMat(g_sum.coeff[t] - g0.coeff[t] - g1.coeff[t])));
  }

  SUBCASE("k = 1 output is equivariant") {
    SpinLieAlgebra spin = spin_algebra(rep);
    std::vector<Parity> par(spin.generators.size(), Parity::Even);
    SuperBilinearForm g1 = gamma_transfer(betas[0], 1, rep);
    CHECK(check_equivariance(g1, spin.generators, spin.generators, spin.vector_actions, par).pass);
  }

  SUBCASE("k = 2 output is equivariant for the Lambda^2 action") {
    SpinLieAlgebra spin = spin_algebra(rep);
    std::vector<Parity> par(spin.generators.size(), Parity::Even);
    SuperBilinearForm g2 = gamma_transfer(betas[1], 2, rep);
    auto lam2 = exterior_vector_actions(spin, 2);
    CHECK(check_equivariance(g2, spin.generators, spin.generators, lam2, par).pass);
  }

  SUBCASE("k in {0,1} lands in the invariant-form span") {
    auto scalar = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Any);
    auto vector = invariant_bilinear_forms(rep, FormTarget::Vector, FormSymmetry::Any);
    const Eigen::Index N = rep.spin_dim;
    SpanBasis span(static_cast<Eigen::Index>(vector[0].coeff.size()) * N * N);
    for (const auto& f : vector) {
      RatVec v(static_cast<Eigen::Index>(f.coeff.size()) * N * N);
      Eigen::Index at = 0;
      for (const auto& m : f.coeff)
        for (Eigen::Index i = 0; i < N; ++i)
          for (Eigen::Index j = 0; j < N; ++j) v(at++) = m(i, j);
      span.insert(std::move(v));
    }
    SuperBilinearForm g1 = gamma_transfer(scalar[0], 1, rep);
    RatVec v(static_cast<Eigen::Index>(g1.coeff.size()) * N * N);
    Eigen::Index at = 0;
    for (const auto& m : g1.coeff)
      for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) v(at++) = m(i, j);
    CHECK(span.contains(v));
  }
}

TEST_CASE("clifford action distinguishes the two admissible (1,3) forms") {
  // Clifford multiplication is skew for one basis form and symmetric for the
  // other (the beta / beta_J distinction)
  CliffordRep rep = build_gamma({1, 3});
  auto betas = invariant_bilinear_forms(rep, FormTarget::Scalar, FormSymmetry::Any);
  int n_skew_type = 0, n_sym_type = 0;
  for (const auto& f : betas) {
    bool all_skew = true, all_sym = true;
    for (const RatMat& g : rep.gammas) {
      // the bilinear (s,t) -> beta(g s, t) has matrix g^T B
      RatMat m = RatMat(g.transpose() * f.coeff[0]);
      if (!is_zero(RatMat(m + m.transpose()))) all_skew = false;
      if (!is_zero(RatMat(m - m.transpose()))) all_sym = false;
    }
    if (all_skew) ++n_skew_type;
    if (all_sym) ++n_sym_type;
  }
  CHECK(n_skew_type == 1);
  CHECK(n_sym_type == 1);
}

TEST_CASE("exterior algebra utilities") {
  AltForm a;
  a.degree = 1;
  a.n = 3;
  a.add({0}, Rat(1));
  AltForm b;
  b.degree = 1;
  b.n = 3;
  b.add({1}, Rat(2));
  AltForm ab = wedge(a, b);
  CHECK(ab.coeff.at({0, 1}) == Rat(2));
  AltForm ba = wedge(b, a);
  CHECK(ba.coeff.at({0, 1}) == Rat(-2));
  RatVec x = RatVec::Constant(3, Rat(0));
  x(1) = Rat(1);
  AltForm c = contract(x, ab);
  CHECK(c.coeff.at({0}) == Rat(-2));
  // sharp with a Witt-type metric: <e0,e1> = 1
  RatMat g(2, 2);
  g << Rat(0), Rat(1), Rat(1), Rat(0);
  AltForm w;
  w.degree = 1;
  w.n = 2;
  w.add({0}, Rat(3));
  AltForm ws = sharp(inverse(g), w);
  CHECK(ws.coeff.at({1}) == Rat(3));
}
