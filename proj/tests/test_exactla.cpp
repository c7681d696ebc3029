#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sla/liesuper.hpp"
#include "sla/matrix.hpp"
#include "sla/tensor.hpp"

using namespace sla;

namespace {

RatMat mat2(int a, int b, int c, int d) {
  RatMat m(2, 2);
  m << Rat(a), Rat(b), Rat(c), Rat(d);
  return m;
}

const RatMat kRot = mat2(0, -1, 1, 0);  // so(2) generator J

}  // namespace

TEST_CASE("rational arithmetic is canonical") {
  Rat a(2, 4);
  CHECK(a == Rat(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
  CHECK((Rat(-4, 6)).str() == "-2/3");
  CHECK(Rat::parse("-7/21") == Rat(-1, 3));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK_THROWS(Rat::parse("1/0x"));
  CHECK_THROWS(Rat(1) / Rat(0));
  // big values stay exact
  Rat big(1);
  for (int i = 0; i < 40; ++i) big *= Rat(10);
  CHECK((big / big) == Rat(1));
}

TEST_CASE("kernel: identity, zero, hand-reduced rank-1 map") {
  // identity on Q^2: injective, empty kernel
  CHECK(kernel(RatMat(RatMat::Identity(2, 2))).empty());
  // zero map on Q^3: full kernel
  CHECK(kernel(RatMat(RatMat::Constant(3, 3, Rat(0)))).size() == 3);
  // [[1,2],[2,4]]: row reduction by hand gives x = -2y, kernel = span{(2,-1)}
  RatMat m = mat2(1, 2, 2, 4);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(RatMat(m * k[0])));
  // proportional to (2,-1)
  CHECK(k[0](0) * Rat(-1) == k[0](1) * Rat(2));
}

TEST_CASE("kernel invariant: exact annihilation and rank-nullity") {
  RatMat m(3, 4);
  m << Rat(1), Rat(2), Rat(0), Rat(1), Rat(0), Rat(1), Rat(1, 2), Rat(-1), Rat(2), Rat(5), Rat(1),
      Rat(1);
  auto k = kernel(m);
  for (const auto& v : k) CHECK(is_zero(RatMat(m * v)));
  CHECK(rank(m) + static_cast<Eigen::Index>(k.size()) == m.cols());
}

TEST_CASE("solve and inverse are exact") {
  RatMat a = mat2(1, 2, 3, 5);
  RatVec b(2);
  b << Rat(1), Rat(0);
  RatVec x;
  REQUIRE(solve(a, b, x));
  CHECK(is_zero(RatMat(a * x - b)));
  RatMat inv = inverse(a);
  CHECK(is_zero(RatMat(a * inv - RatMat::Identity(2, 2))));
  CHECK_THROWS(inverse(mat2(1, 2, 2, 4)));
}

TEST_CASE("graded map validates parity block structure") {
  GradedSpace v({"a", "b"}, {Parity::Even, Parity::Odd});
  // even map may not mix parities
  CHECK_THROWS(GradedMap(v, v, mat2(0, 1, 0, 0), Parity::Even));
  CHECK_NOTHROW(GradedMap(v, v, mat2(1, 0, 0, 2), Parity::Even));
  CHECK_NOTHROW(GradedMap(v, v, mat2(0, 1, 1, 0), Parity::Odd));
  CHECK_THROWS(GradedMap(v, v, mat2(1, 0, 0, 1), Parity::Odd));
}

TEST_CASE("equivariant maps: trivial, so(2) commutant, sl(2) invariant vectors") {
  GradedSpace q2 = GradedSpace::even({"x", "y"});

  SUBCASE("trivial actions impose no constraint") {
    std::vector<RatMat> zero{RatMat::Constant(2, 2, Rat(0))};
    auto basis = equivariant_maps(q2, q2, zero, zero);
    CHECK(basis.size() == 4);
  }

  SUBCASE("commutant of a rotation is spanned by identity and J") {
    // Hand solution of the 4x4 system TJ = JT: T = aI + bJ.
    std::vector<RatMat> acts{kRot};
    auto basis = equivariant_maps(q2, q2, acts, acts);
    REQUIRE(basis.size() == 2);
    SpanBasis span(4);
    for (const auto& g : basis) {
      RatVec v(4);
      v << g.matrix(0, 0), g.matrix(0, 1), g.matrix(1, 0), g.matrix(1, 1);
      span.insert(v);
    }
    RatVec id(4), jj(4);
    id << Rat(1), Rat(0), Rat(0), Rat(1);
    jj << Rat(0), Rat(-1), Rat(1), Rat(0);
    CHECK(span.contains(id));
    CHECK(span.contains(jj));
  }

  SUBCASE("sl(2,R) standard module has no invariant vectors") {
    GradedSpace triv = GradedSpace::even({"1"});
    std::vector<RatMat> dom{mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
    std::vector<RatMat> cod(3, RatMat::Constant(1, 1, Rat(0)));
    auto basis = equivariant_maps(triv, q2, cod, dom);
    CHECK(basis.empty());
  }

  SUBCASE("dimension mismatch is an error") {
    std::vector<RatMat> bad{RatMat::Constant(3, 3, Rat(0))};
    std::vector<RatMat> ok{RatMat::Constant(2, 2, Rat(0))};
    CHECK_THROWS(equivariant_maps(q2, q2, bad, ok));
  }
}

TEST_CASE("equivariant subspace is stable under generator recombination") {
  // so(3) acting on R^3; commutant must be unchanged when the generators are
  // replaced by (deterministically seeded) rational linear combinations.
  GradedSpace r3 = GradedSpace::even({"e1", "e2", "e3"});
  auto so3 = [&](int i, int j) {
    RatMat m = RatMat::Constant(3, 3, Rat(0));
    m(j, i) = Rat(1);
    m(i, j) = Rat(-1);
    return m;
  };
  std::vector<RatMat> gens{so3(0, 1), so3(0, 2), so3(1, 2)};
  auto basis = equivariant_maps(r3, r3, gens, gens);
  REQUIRE(basis.size() == 1);  // scalars only

  std::uint64_t seed = 12345;
  auto next = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((seed >> 33) % 7) - 3;
  };
  std::vector<RatMat> mixed;
  for (int t = 0; t < 3; ++t) {
    RatMat m = RatMat::Constant(3, 3, Rat(0));
    for (int g = 0; g < 3; ++g) m += Rat(next(), 1 + (t + g) % 3) * gens[static_cast<std::size_t>(g)];
    mixed.push_back(m);
  }
  // ensure the combinations still span so(3)
  SpanBasis span(9);
  for (const auto& m : mixed) {
    RatVec v(9);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) v(3 * i + j) = m(i, j);
    span.insert(v);
  }
  REQUIRE(span.dim() == 3);
  auto basis2 = equivariant_maps(r3, r3, mixed, mixed);
  CHECK(basis2.size() == basis.size());
}

TEST_CASE("tensor actions") {
  GradedSpace v = GradedSpace::even({"x", "y"});

  SUBCASE("single factor is a passthrough") {
    TensorSpace ts({v}, {false});
    RatMat a = mat2(1, 2, 3, 4);
    CHECK(is_zero(RatMat(tensor_action(ts, a, Parity::Even) - a)));
  }

  SUBCASE("Leibniz rule on V (x) V") {
    TensorSpace ts({v, v}, {false, false});
    RatMat a = mat2(1, 2, 3, 4);
    RatMat got = tensor_action(ts, a, Parity::Even);
    RatMat expect = RatMat::Constant(4, 4, Rat(0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          expect(2 * i + k, 2 * j + k) += a(i, j);
          expect(2 * k + i, 2 * k + j) += a(i, j);
        }
    CHECK(is_zero(RatMat(got - expect)));
  }

  SUBCASE("dual action preserves the pairing") {
    // the pairing sum_i e_i (x) e^i-style invariant: as a map V (x) V* -> R,
    // the identity tensor must be annihilated.
    TensorSpace ts({v, v}, {false, true});
    RatMat a = mat2(1, 2, 3, 4);
    RatMat act = tensor_action(ts, a, Parity::Even);
    RatVec pairing = RatVec::Constant(4, Rat(0));
    pairing(ts.linear_index({0, 0})) = Rat(1);
    pairing(ts.linear_index({1, 1})) = Rat(1);
    CHECK(is_zero(RatMat(act * pairing)));
    // and on V* alone the action is -A^T
    TensorSpace dual({v}, {true});
    CHECK(is_zero(RatMat(tensor_action(dual, a, Parity::Even) + a.transpose())));
  }

  SUBCASE("Koszul sign when an odd generator passes an odd factor") {
    GradedSpace w({"b", "f"}, {Parity::Even, Parity::Odd});
    RatMat odd = mat2(0, 1, 1, 0);  // odd generator swapping b and f
    TensorSpace ts({w, w}, {false, false});
    RatMat act = tensor_action(ts, odd, Parity::Odd);
    // x.(f (x) b) = (x.f) (x) b - f (x) (x.b): second factor picks up -1
    const Eigen::Index col = ts.linear_index({1, 0});
    CHECK(act(ts.linear_index({0, 0}), col) == Rat(1));
    CHECK(act(ts.linear_index({1, 1}), col) == Rat(-1));
  }
}

TEST_CASE("span basis incremental echelon") {
  SpanBasis b(3);
  RatVec v1(3), v2(3), v3(3);
  v1 << Rat(1), Rat(2), Rat(3);
  v2 << Rat(2), Rat(4), Rat(6);
  v3 << Rat(0), Rat(1), Rat(0);
  CHECK(b.insert(v1));
  CHECK_FALSE(b.insert(v2));
  CHECK(b.insert(v3));
  CHECK(b.dim() == 2);
  CHECK(b.contains(v2));
  RatVec out(3);
  out << Rat(0), Rat(0), Rat(1);
  CHECK_FALSE(b.contains(out));
}
