#include <gtest/gtest.h>

#include <cstdlib>

#include "ehrtri/boxpoints.hpp"
#include "ehrtri/ehrhart.hpp"
#include "ehrtri/reflexive.hpp"
#include "ehrtri/reproduce.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ehrtri;

namespace {

bool lifted_unimodular(const Polytope& p, const Triangulation& t) {
  auto delta = lift_triangulation(p, t).subdivision;
  for (const auto& c : delta.maximal_cones)
    if (cone_index(delta.generators(c)) != 1) return false;
  return true;
}

HStarVector hstar_of(const WeightedSimplexSpec& spec,
                     HStarMethod method = HStarMethod::Both) {
  auto lp = weighted_simplex(spec);
  HStarOptions opt;
  opt.method = method;
  return hstar(lp.polytope, boundary_join(lp.polytope), opt);
}

// Independent count from the scan oracle in the test support library.
Integer scan_count(const Polytope& p, const Triangulation& t, long m) {
  std::set<LatticePoint> pts;
  for (const auto& f : t.maximal_faces) {
    std::vector<LatticePoint> verts;
    for (auto i : f) verts.push_back(p.points[i]);
    auto found = oracle::brute_dilate_points(verts, m);
    pts.insert(found.begin(), found.end());
  }
  return pts.size();
}

}  // namespace

TEST(HPolynomial, WholeSimplexIsOne) {
  for (std::size_t d = 1; d <= 5; ++d)
    EXPECT_EQ(h_polynomial(fixtures::whole(d)), UniPoly{1});
}

TEST(HPolynomial, BoundaryJoinOfSimplex) {
  for (std::size_t d = 1; d <= 5; ++d) {
    auto lp = weighted_simplex({std::vector<Integer>(d, 1), 1});
    EXPECT_EQ(h_polynomial(boundary_join(lp.polytope)), UniPoly::geometric(d));
  }
}

TEST(HPolynomial, LinkOfFaceThroughOriginIsSimplexBoundary) {
  auto lp = weighted_simplex(seven_dim_spec());
  auto t = boundary_join(lp.polytope);
  // {0, e1, -f} has dimension 2 inside a 7-dimensional join: r = 5.
  EXPECT_EQ(link_h_polynomial(t.maximal_faces, {0, 1, 8}),
            UniPoly::geometric(5));
  EXPECT_EQ(link_h_polynomial(t.maximal_faces, {0, 1, 2, 3, 8}),
            UniPoly::geometric(3));
  EXPECT_EQ(link_h_polynomial(t.maximal_faces, {0}), UniPoly::geometric(7));
}

TEST(HPolynomial, LinkOfMissingFaceIsRejected) {
  try {
    link_h_polynomial(std::vector<Face>{{0, 1}}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FaceNotInComplex);
  }
}

TEST(HStar, SevenDimSimplex) {
  EXPECT_EQ(hstar_of(seven_dim_spec()), make_hstar({1, 2, 6, 5, 5, 6, 2, 1}));
}

TEST(HStar, ElevenDimSimplex) {
  EXPECT_EQ(hstar_of(eleven_dim_spec()),
            make_hstar({1, 1, 4, 6, 4, 6, 6, 4, 6, 4, 1, 1}));
}

TEST(HStar, UnitSimplexIsUnimodular) {
  for (std::size_t d = 1; d <= 5; ++d) {
    auto h = hstar(fixtures::standard_simplex(d), fixtures::whole(d));
    std::vector<Integer> expected(d + 1);
    expected[0] = 1;
    EXPECT_EQ(h.coeffs, expected);
    EXPECT_EQ(h.dim, d);
  }
}

TEST(HStar, SixDimFamilyMember) {
  EXPECT_EQ(hstar_of(family_spec(3, 2, 0)), make_hstar({1, 1, 2, 1, 2, 1, 1}));
}

TEST(HStar, MethodsAgreeSeparately) {
  for (auto spec : {seven_dim_spec(), family_spec(2, 2, 1)}) {
    EXPECT_EQ(hstar_of(spec, HStarMethod::BetkeMcMullen),
              hstar_of(spec, HStarMethod::SpecialSimplex));
  }
}

TEST(HStar, NonSpecialFaceIsRejected) {
  auto lp = weighted_simplex(seven_dim_spec());
  HStarOptions opt;
  opt.method = HStarMethod::SpecialSimplex;
  opt.special = Face{1};
  try {
    hstar(lp.polytope, boundary_join(lp.polytope), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSpecial);
  }
}

TEST(HStar, InvalidTriangulationIsRejected) {
  auto p = fixtures::cross_polytope();
  Triangulation t{{{0, 1, 3}, {0, 2, 3}}, std::nullopt, false};  // half only
  try {
    hstar(p, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTriangulation);
  }
}

TEST(Counting, SmallPolytopes) {
  EXPECT_EQ(count_lattice_points(fixtures::standard_simplex(2),
                                 fixtures::whole(2), 2),
            6);
  auto cross = fixtures::cross_polytope();
  EXPECT_EQ(count_lattice_points(cross, boundary_join(cross), 1), 5);
  auto lp = weighted_simplex(family_spec(2, 2, 0));
  EXPECT_EQ(count_lattice_points(lp.polytope, boundary_join(lp.polytope), 1),
            6);
}

TEST(Counting, AgreesWithScanOracle) {
  for (const auto& e : oracle::corpus(60))
    for (long m = 0; m <= 3; ++m)
      EXPECT_EQ(count_lattice_points(e.polytope, e.triangulation, m),
                scan_count(e.polytope, e.triangulation, m));
}

TEST(Oracle, SmallPolytopes) {
  EXPECT_EQ(hstar_oracle(fixtures::standard_simplex(3), fixtures::whole(3)),
            make_hstar({1, 0, 0, 0}));
  auto cross = fixtures::cross_polytope();
  EXPECT_EQ(hstar_oracle(cross, boundary_join(cross)), make_hstar({1, 2, 1}));
  auto lp = weighted_simplex(family_spec(2, 2, 0));
  EXPECT_EQ(hstar_oracle(lp.polytope, boundary_join(lp.polytope)),
            make_hstar({1, 1, 2, 1, 1}));
}

TEST(Oracle, SevenDimSimplexSlow) {
  if (!std::getenv("EHRTRI_SLOW")) GTEST_SKIP() << "set EHRTRI_SLOW=1";
  auto lp = weighted_simplex(seven_dim_spec());
  EXPECT_EQ(hstar_oracle(lp.polytope, boundary_join(lp.polytope)),
            make_hstar({1, 2, 6, 5, 5, 6, 2, 1}));
}

TEST(Coefficients, Examples) {
  for (std::size_t m = 0; m <= 6; ++m)
    EXPECT_EQ(ehrhart_coefficient(make_hstar({1, 0, 0}), m),
              binomial(static_cast<long>(m) + 2, 2));
  EXPECT_EQ(ehrhart_coefficient(make_hstar({1, 2, 1}), 2), 13);
  EXPECT_EQ(ehrhart_coefficient(make_hstar({1, 2, 6, 5, 5, 6, 2, 1}), 1), 10);
  auto lp = weighted_simplex(seven_dim_spec());
  EXPECT_EQ(count_lattice_points(lp.polytope, boundary_join(lp.polytope), 1),
            10);
}

TEST(Coefficients, BinomialConventions) {
  EXPECT_EQ(binomial(-1, 3), 0);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(10, 3), 120);
}

TEST(EhrhartProperties, MethodsAgreeWithOracleOnCorpus) {
  for (const auto& e : oracle::corpus(100)) {
    auto h = hstar(e.polytope, e.triangulation);
    EXPECT_EQ(h, hstar_oracle(e.polytope, e.triangulation)) << "seed " << e.seed;
    auto lifted = lift_triangulation(e.polytope, e.triangulation);
    for (const auto& lam : special_faces(lifted.subdivision)) {
      if (lam.empty()) continue;
      EXPECT_EQ(hstar_special(e.polytope, e.triangulation,
                              lifted.to_points(lam)),
                h.polynomial());
    }
  }
}

TEST(EhrhartProperties, ThreeDimCorpusAgreesWithOracle) {
  for (std::uint64_t seed = 5000; seed < 5030; ++seed) {
    auto e = oracle::random_triangulation(seed, 3, 6, 3);
    EXPECT_EQ(hstar(e.polytope, e.triangulation),
              hstar_oracle(e.polytope, e.triangulation))
        << "seed " << seed;
  }
}

TEST(EhrhartProperties, BetkeMcMullenBound) {
  int unimodular = 0, singular = 0;
  for (const auto& e : oracle::corpus(100)) {
    auto h = hstar(e.polytope, e.triangulation);
    auto ht = h_polynomial(e.triangulation);
    bool equal = true;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
      EXPECT_GE(h.coeffs[i], ht.coeff(i));
      if (h.coeffs[i] != ht.coeff(i)) equal = false;
    }
    bool uni = lifted_unimodular(e.polytope, e.triangulation);
    EXPECT_EQ(equal, uni) << "seed " << e.seed;
    (uni ? unimodular : singular)++;
  }
  EXPECT_GT(unimodular, 0);
  EXPECT_GT(singular, 0);
}

TEST(EhrhartProperties, NonnegativeAndVolume) {
  for (const auto& e : oracle::corpus(100)) {
    auto h = hstar(e.polytope, e.triangulation);
    for (const auto& c : h.coeffs) EXPECT_GE(c, 0);
    auto delta = lift_triangulation(e.polytope, e.triangulation).subdivision;
    Integer volume = 0;
    for (const auto& c : delta.maximal_cones)
      volume += cone_index(delta.generators(c));
    EXPECT_EQ(h.polynomial().at_one(), volume);
  }
}

TEST(EhrhartProperties, CoefficientsMatchCounts) {
  for (const auto& e : oracle::corpus(100)) {
    auto h = hstar(e.polytope, e.triangulation);
    for (std::size_t m = 0; m <= e.polytope.dim + 2; ++m)
      EXPECT_EQ(ehrhart_coefficient(h, m),
                count_lattice_points(e.polytope, e.triangulation, m));
  }
}
