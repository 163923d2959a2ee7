#include <gtest/gtest.h>

#include <algorithm>

#include "ehrtri/fan.hpp"
#include "ehrtri/reflexive.hpp"
#include "ehrtri/reproduce.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ehrtri;

namespace {

bool has_face(const std::vector<Face>& faces, const Face& f) {
  return std::find(faces.begin(), faces.end(), f) != faces.end();
}

}  // namespace

TEST(Faces, SquareConeHasTwelveFaces) {
  auto faces = enumerate_faces(fixtures::square_cone());
  EXPECT_EQ(faces.size(), 12u);
  for (Face f : std::vector<Face>{{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2},
                                  {1, 2}, {1, 3}, {2, 3}, {0, 1, 2}, {1, 2, 3}})
    EXPECT_TRUE(has_face(faces, f)) << to_string(f);
}

TEST(Faces, IsolatedConeHasAllSubsets) {
  for (std::size_t r = 1; r <= 5; ++r) {
    std::vector<LatticePoint> rays;
    Face all;
    for (std::size_t i = 0; i < r; ++i) {
      LatticePoint e(r);
      e[i] = 1;
      rays.push_back(e);
      all.push_back(i);
    }
    auto faces = enumerate_faces(make_subdivision(rays, {all}));
    EXPECT_EQ(faces.size(), std::size_t{1} << r);
  }
}

TEST(Faces, FaceCountsMatchEnumeration) {
  for (const auto& e : oracle::corpus(40)) {
    const auto& maximal = e.triangulation.maximal_faces;
    auto faces = faces_of(maximal);
    auto counts = face_counts(maximal);
    std::vector<Integer> expected(counts.size());
    for (const auto& f : faces) expected[f.size()] += 1;
    EXPECT_EQ(counts, expected) << "seed " << e.seed;
  }
}

TEST(Link, SquareConeDiagonal) {
  auto lk = link(fixtures::square_cone(), Face{1, 2});
  auto faces = lk.faces;
  std::sort(faces.begin(), faces.end());
  EXPECT_EQ(faces, (std::vector<Face>{{}, {0}, {3}}));
}

TEST(Link, OfZeroIsWholeComplex) {
  auto delta = fixtures::square_cone();
  auto lk = link(delta, Face{});
  auto faces = lk.faces;
  auto all = enumerate_faces(delta);
  std::sort(faces.begin(), faces.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(faces, all);
}

TEST(Link, OfMaximalConeIsZero) {
  auto lk = link(fixtures::square_cone(), Face{0, 1, 2});
  EXPECT_EQ(lk.faces, (std::vector<Face>{{}}));
}

TEST(Link, DefinitionHoldsOnCorpus) {
  for (const auto& e : oracle::corpus(30)) {
    const auto& maximal = e.triangulation.maximal_faces;
    auto faces = faces_of(maximal);
    for (const auto& tau : faces) {
      for (const auto& gamma : link(maximal, tau).faces) {
        EXPECT_TRUE(face_intersection(gamma, tau).empty());
        EXPECT_TRUE(has_face(faces, face_union(gamma, tau)));
      }
    }
  }
}

TEST(Star, SquareCone) {
  auto delta = fixtures::square_cone();
  EXPECT_EQ(star_rays(delta, {1, 2}), (Face{0, 1, 2, 3}));
  EXPECT_EQ(star_rays(delta, {0, 1, 2}), (Face{0, 1, 2}));
  EXPECT_EQ(star_rays(delta, {}), (Face{0, 1, 2, 3}));
}

TEST(Special, SquareConeDiagonalAndSubfaces) {
  auto sp = special_faces(fixtures::square_cone());
  std::sort(sp.begin(), sp.end());
  EXPECT_EQ(sp, (std::vector<Face>{{}, {1}, {1, 2}, {2}}));
}

TEST(Special, ConesMeetingAtZero) {
  auto delta = make_subdivision({{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                                {{0, 1}, {2, 3}});
  EXPECT_EQ(special_faces(delta), (std::vector<Face>{{}}));
}

TEST(Special, ClosedUnderSubfaces) {
  for (const auto& e : oracle::corpus(30)) {
    auto lifted = lift_triangulation(e.polytope, e.triangulation);
    auto sp = special_faces(lifted.subdivision);
    EXPECT_TRUE(has_face(sp, Face{}));
    for (const auto& f : sp)
      for (const auto& g : oracle::subsets(f)) EXPECT_TRUE(has_face(sp, g));
  }
}

TEST(BoundaryJoin, SimplexGivesOneFacePerFacet) {
  auto lp = weighted_simplex({{1, 1, 1}, 1});
  auto t = boundary_join(lp.polytope);
  EXPECT_EQ(t.maximal_faces.size(), 4u);
  for (const auto& f : t.maximal_faces) {
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.front(), 0u);
  }
  EXPECT_EQ(t.special_face, (Face{0}));
}

TEST(BoundaryJoin, SevenDimSimplexFaces) {
  auto lp = weighted_simplex(seven_dim_spec());
  auto t = boundary_join(lp.polytope);
  EXPECT_EQ(t.maximal_faces.size(), 8u);
  auto faces = faces_of(t.maximal_faces);
  EXPECT_TRUE(has_face(faces, Face{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(has_face(faces, Face{0, 1, 2, 3, 8}));
  EXPECT_TRUE(has_face(faces, Face{0, 1, 8}));
}

TEST(BoundaryJoin, CrossPolytopeGivesFourTriangles) {
  auto t = boundary_join(fixtures::cross_polytope());
  EXPECT_EQ(t.maximal_faces.size(), 4u);
  for (const auto& f : t.maximal_faces) EXPECT_EQ(f.front(), 0u);
}

TEST(BoundaryJoin, LiftsToValidSubdivision) {
  for (const auto& spec : {seven_dim_spec(), eleven_dim_spec(),
                           family_spec(3, 2, 1)}) {
    auto lp = weighted_simplex(spec);
    Triangulation t = boundary_join(lp.polytope);
    t.prevalidated = false;
    EXPECT_TRUE(validate_triangulation(lp.polytope, t).ok);
    auto lifted = lift_triangulation(lp.polytope, t);
    auto report = validate_subdivision(lifted.subdivision);
    EXPECT_TRUE(report.ok) << report.condition << " " << report.detail;
    EXPECT_TRUE(has_face(special_faces(lifted.subdivision), lifted.to_rays({0})));
  }
}

TEST(BoundaryJoin, RejectsOffCenterSimplex) {
  try {
    boundary_join(fixtures::standard_simplex(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OriginNotInterior);
  }
}

TEST(Lift, UnitSegment) {
  Polytope p;
  p.dim = 1;
  p.points = {{0}, {1}};
  p.vertex_indices = {0, 1};
  auto lifted = lift_triangulation(p, fixtures::whole(1));
  EXPECT_EQ(lifted.subdivision.rays, (std::vector<LatticePoint>{{0, 1}, {1, 1}}));
  EXPECT_EQ(lifted.grading.functional, (IntVector{0, 1}));
}

TEST(Lift, SevenDimSimplexHasNineRaysAtHeightOne) {
  auto lp = weighted_simplex(seven_dim_spec());
  auto lifted = lift_triangulation(lp.polytope, boundary_join(lp.polytope));
  EXPECT_EQ(lifted.subdivision.rays.size(), 9u);
  for (const auto& r : lifted.subdivision.rays)
    EXPECT_EQ(lifted.grading(r), 1);
}

TEST(Lift, RaysAreUsedPointsAtHeightOne) {
  for (const auto& e : oracle::corpus(50)) {
    auto lifted = lift_triangulation(e.polytope, e.triangulation);
    Face used;
    for (const auto& f : e.triangulation.maximal_faces)
      used = face_union(used, f);
    EXPECT_EQ(lifted.subdivision.rays.size(), used.size());
    for (const auto& r : lifted.subdivision.rays)
      EXPECT_EQ(lifted.grading(r), 1);
  }
}

TEST(Validate, SquareConePasses) {
  EXPECT_TRUE(validate_subdivision(fixtures::square_cone()).ok);
}

TEST(Validate, UnimodularConePasses) {
  EXPECT_TRUE(
      validate_subdivision(make_subdivision({{1, 0}, {0, 1}}, {{0, 1}})).ok);
}

TEST(Validate, OverlappingInteriorsFail) {
  auto delta = make_subdivision({{1, 0}, {1, 2}, {1, 1}, {0, 1}},
                                {{0, 1}, {2, 3}});
  auto report = validate_subdivision(delta);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.condition, "intersection");
}

TEST(Validate, NonPrimitiveRayFails) {
  auto report =
      validate_subdivision(make_subdivision({{2, 0}, {0, 1}}, {{0, 1}}));
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.condition, "primitive");
}

TEST(Validate, MixedDimensionIsRejected) {
  try {
    make_subdivision({{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Validate, CorpusTriangulationsPass) {
  for (const auto& e : oracle::corpus(40)) {
    EXPECT_TRUE(validate_triangulation(e.polytope, e.triangulation).ok)
        << "seed " << e.seed;
  }
}
