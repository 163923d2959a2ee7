#include <gtest/gtest.h>

#include <random>

#include "ehrtri/lattice.hpp"
#include "oracles.hpp"

using namespace ehrtri;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_lower_hermite(const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i + 1; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (h(i, j) < 0 || h(i, j) >= h(i, i)) return false;
  }
  return true;
}

}  // namespace

TEST(Hermite, IdentityIsFixed) {
  auto hf = hermite_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(hf.H, IntMatrix::identity(3));
  EXPECT_EQ(hf.U, IntMatrix::identity(3));
}

TEST(Hermite, DiagonalIsFixed) {
  IntMatrix m{{2, 0}, {0, 3}};
  auto hf = hermite_normal_form(m);
  EXPECT_EQ(hf.H, m);
  EXPECT_EQ(hf.U, IntMatrix::identity(2));
}

TEST(Hermite, TwoByTwoMatchesExhaustiveSearch) {
  IntMatrix m{{2, 4}, {1, 3}};
  auto hf = hermite_normal_form(m);
  EXPECT_EQ(hf.H, (IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(hf.H, oracle::brute_hermite(m));
  EXPECT_EQ(abs(determinant(hf.H)), 2);
}

TEST(Hermite, RandomMatricesSatisfyDefinition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMatrix m = random_matrix(rng, r, c, 5);
    auto hf = hermite_normal_form(m);
    EXPECT_EQ(hf.H, m * hf.U);
    EXPECT_EQ(abs(determinant(hf.U)), 1);
  }
}

TEST(Hermite, SmallNonsingularAgreesWithBruteForce) {
  std::mt19937 rng(12);
  int checked = 0;
  while (checked < 40) {
    std::size_t n = 2 + checked % 2;
    IntMatrix m = random_matrix(rng, n, n, 3);
    Integer d = abs(determinant(m));
    if (d == 0 || d > 12) continue;
    auto hf = hermite_normal_form(m);
    EXPECT_TRUE(is_lower_hermite(hf.H)) << to_string(hf.H);
    EXPECT_EQ(hf.H, oracle::brute_hermite(m)) << to_string(m);
    ++checked;
  }
}

TEST(Smith, IdentityIsFixed) {
  auto sf = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(sf.S, IntMatrix::identity(3));
}

TEST(Smith, DivisibleDiagonalIsFixed) {
  auto sf = smith_normal_form(IntMatrix{{2, 0}, {0, 4}});
  EXPECT_EQ(sf.S, (IntMatrix{{2, 0}, {0, 4}}));
}

TEST(Smith, CoprimeEntriesGiveUnitFirstFactor) {
  IntMatrix m{{2, 1}, {1, 2}};
  auto sf = smith_normal_form(m);
  EXPECT_EQ(sf.S, (IntMatrix{{1, 0}, {0, 3}}));
  EXPECT_EQ(sf.invariant_factors(), oracle::determinantal_invariants(m));
}

TEST(Smith, RandomMatricesMatchDeterminantalDivisors) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    auto sf = smith_normal_form(m);
    EXPECT_EQ(sf.S, sf.U * m * sf.V);
    EXPECT_EQ(abs(determinant(sf.U)), 1);
    EXPECT_EQ(abs(determinant(sf.V)), 1);
    auto f = sf.invariant_factors();
    EXPECT_EQ(f, oracle::determinantal_invariants(m)) << to_string(m);
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] != 0) EXPECT_TRUE(f[i + 1] % f[i] == 0);
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : f) prod *= x;
      EXPECT_EQ(prod, abs(oracle::det(m)));
    }
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(m), oracle::det(m));
  }
}

TEST(CoordinateMapTest, StandardLatticeIsIdentity) {
  auto map = CoordinateMap::standard(2);
  EXPECT_EQ(map.embed({3, 5}), (LatticePoint{3, 5}));
}

TEST(CoordinateMapTest, HalfIntegralLattice) {
  CoordinateMap map(2, IntMatrix{{2, 0, 1}, {0, 2, 1}});
  EXPECT_EQ(map.basis(), (IntMatrix{{1, 0}, {1, 2}}));
  EXPECT_EQ(map.embed({Rational(1, 2), Rational(1, 2)}), (LatticePoint{1, 0}));
  EXPECT_FALSE(map.try_embed({Rational(1, 2), 0}).has_value());
}

TEST(CoordinateMapTest, NonIntegralPointIsRejected) {
  auto map = CoordinateMap::standard(2);
  try {
    map.embed({Rational(1, 2), 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInLattice);
  }
}

TEST(CoordinateMapTest, RoundTripOnRandomPoints) {
  std::mt19937 rng(15);
  CoordinateMap map(7, IntMatrix{{7, 0, 0, 1}, {0, 7, 0, 2}, {0, 0, 7, 2}});
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePoint p{dist(rng), dist(rng), dist(rng)};
    EXPECT_EQ(map.embed(map.to_ambient(p)), p);
    EXPECT_EQ(map.embed_scaled(map.to_scaled_ambient(p)), p);
  }
}

TEST(Primitive, DividesByContent) {
  auto map = CoordinateMap::standard(3);
  EXPECT_EQ(primitive_generator({2, 4, 6}, map), (LatticePoint{1, 2, 3}));
  EXPECT_EQ(primitive_generator({0, 0, 3}, map), (LatticePoint{0, 0, 1}));
}

TEST(Primitive, HalfIntegralRayIsItsOwnGenerator) {
  CoordinateMap map(2, IntMatrix{{2, 0, 1}, {0, 2, 1}});
  EXPECT_EQ(primitive_generator({Rational(1, 2), Rational(1, 2)}, map),
            (LatticePoint{1, 0}));
}

TEST(Primitive, InvariantUnderScaling) {
  auto map = CoordinateMap::standard(3);
  std::mt19937 rng(16);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    RatVector v{dist(rng), dist(rng), dist(rng)};
    if (v == RatVector{0, 0, 0}) continue;
    auto base = primitive_generator(v, map);
    for (int k = 2; k <= 5; ++k) {
      RatVector w = v;
      for (auto& x : w) x *= k;
      EXPECT_EQ(primitive_generator(w, map), base);
    }
  }
}

TEST(Primitive, ZeroVectorIsRejected) {
  try {
    primitive_generator({0, 0}, CoordinateMap::standard(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(ConeIndex, CoordinatePlaneIsUnimodular) {
  std::vector<LatticePoint> g{{1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(cone_index(g), 1);
}

TEST(ConeIndex, SquareConeHasIndexTwo) {
  std::vector<LatticePoint> g{{1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  EXPECT_EQ(cone_index(g), 2);
}

TEST(ConeIndex, DependentGeneratorsAreRejected) {
  std::vector<LatticePoint> g{{1, 0}, {2, 0}};
  try {
    cone_index(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentGenerators);
  }
}

TEST(ConeIndex, EqualsCellCount) {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 60) {
    std::size_t n = 2 + checked % 2;
    IntMatrix m = random_matrix(rng, n, n, 3);
    if (determinant(m) == 0) continue;
    std::vector<LatticePoint> g;
    for (std::size_t j = 0; j < n; ++j) g.push_back(m.column(j));
    EXPECT_EQ(cone_index(g), abs(oracle::det(m)));
    EXPECT_EQ(Integer(oracle::brute_cell(g).size()), cone_index(g));
    ++checked;
  }
}

TEST(ConeIndex, LowerRankConeUsesSaturation) {
  // Span of (2,0,0),(0,2,2): saturated lattice has basis e1, (0,1,1).
  std::vector<LatticePoint> g{{2, 0, 0}, {0, 2, 2}};
  EXPECT_EQ(cone_index(g), 4);
}

TEST(LinearAlgebra, SolveExactAndInconsistency) {
  IntMatrix a{{1, 0}, {0, 2}, {1, 1}};
  auto x = solve_exact(a, {1, 1, Rational(3, 2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], Rational(1, 2));
  EXPECT_FALSE(solve_exact(a, {1, 1, 5}).has_value());
}

TEST(LinearAlgebra, NonnegativeFeasibility) {
  std::vector<RatVector> a{{1, 1, 0}, {0, 1, 1}};
  EXPECT_TRUE(nonnegative_solution_exists(a, {1, 1}));
  EXPECT_FALSE(nonnegative_solution_exists(a, {-1, 1}));
}
