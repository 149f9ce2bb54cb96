#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "nk/normal.hpp"
#include "nk/reconstruct.hpp"

using namespace nk;

namespace {
NormalCoords unit(const Triangulation& T, size_t idx) {
  NormalCoords v = zeroCoords(T);
  v[idx] = 1;
  return v;
}
}  // namespace

TEST_CASE("matching_system row counts") {
  auto T1 = fixtures::singleTet();
  Skeleton s1(T1);
  CHECK(MatchingSystem(s1).rows().empty());

  auto T2 = fixtures::figureEight();
  Skeleton s2(T2);
  MatchingSystem M2(s2);
  CHECK(M2.rows().size() == 12);  // 4 internal face classes x 3 arc types
}

TEST_CASE("vertex-link vectors lie in the kernel") {
  for (auto T : {fixtures::figureEight(), fixtures::lst123()}) {
    Skeleton skel(T);
    MatchingSystem M(skel);
    for (int v = 0; v < skel.vertexCount(); ++v) {
      auto link = vertexLinkCoords(T, skel, v);
      CHECK(isAdmissible(M, link));
    }
  }
}

TEST_CASE("is_admissible") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  MatchingSystem M(skel);
  CHECK(isAdmissible(M, zeroCoords(T)));
  CHECK(isAdmissible(M, unit(T, quadIndex(0, 1))));
  NormalCoords bad = unit(T, quadIndex(0, 1));
  bad[quadIndex(0, 2)] = 1;
  CHECK_FALSE(isAdmissible(M, bad));
  NormalCoords neg = zeroCoords(T);
  neg[0] = -1;
  CHECK_FALSE(isAdmissible(M, neg));
}

TEST_CASE("reconstruct: single corner triangle is a disk") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  ReconstructedSurface S(T, skel, unit(T, triIndex(0, 0)));
  REQUIRE(S.components().size() == 1);
  const auto& c = S.components()[0];
  CHECK(c.eulerCharacteristic == 1);
  CHECK_FALSE(c.closed);
  CHECK(c.boundaryCurveCount == 1);
  CHECK(c.isDisk());
  CHECK(c.diskCount == 1);
}

TEST_CASE("reconstruct: figure-eight all-triangles vector is a torus") {
  auto T = fixtures::figureEight();
  Skeleton skel(T);
  auto link = vertexLinkCoords(T, skel, 0);
  CHECK(weight(link) == 8);
  ReconstructedSurface S(T, skel, link);
  REQUIRE(S.components().size() == 1);
  const auto& c = S.components()[0];
  CHECK(c.closed);
  CHECK(c.eulerCharacteristic == 0);
  CHECK(c.orientable);
  CHECK(c.genus() == 1);
  CHECK(c.boundaryCurveCount == 0);
}

TEST_CASE("reconstruct: disjoint link sum has two components") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  NormalCoords v = zeroCoords(T);
  v[triIndex(0, 0)] = 1;
  v[triIndex(0, 1)] = 1;
  ReconstructedSurface S(T, skel, v);
  CHECK(S.components().size() == 2);

  // Doubled link of the figure-eight: two parallel tori.
  auto T8 = fixtures::figureEight();
  Skeleton s8(T8);
  auto link = vertexLinkCoords(T8, s8, 0);
  NormalCoords twice = hakenSum(link, link);
  ReconstructedSurface S2(T8, s8, twice);
  REQUIRE(S2.components().size() == 2);
  for (const auto& c : S2.components()) {
    CHECK(c.closed);
    CHECK(c.eulerCharacteristic == 0);
  }
}

TEST_CASE("haken_sum") {
  auto T = fixtures::figureEight();
  Skeleton skel(T);
  auto link = vertexLinkCoords(T, skel, 0);
  auto z = zeroCoords(T);
  CHECK(hakenSum(link, z) == link);

  auto T1 = fixtures::singleTet();
  NormalCoords q1 = zeroCoords(T1), q2 = zeroCoords(T1);
  q1[quadIndex(0, 1)] = 1;
  q2[quadIndex(0, 2)] = 1;
  try {
    hakenSum(q1, q2);
    FAIL("expected IncompatibleQuads");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleQuads);
  }
}

TEST_CASE("haken_sum: chi additivity on disjoint-support pairs") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  NormalCoords a = zeroCoords(T), b = zeroCoords(T);
  a[triIndex(0, 0)] = 1;
  b[triIndex(0, 2)] = 1;
  ReconstructedSurface SA(T, skel, a), SB(T, skel, b), SAB(T, skel, hakenSum(a, b));
  long chi = 0;
  for (const auto& c : SAB.components()) chi += c.eulerCharacteristic;
  CHECK(chi == SA.components()[0].eulerCharacteristic + SB.components()[0].eulerCharacteristic);
}

TEST_CASE("edge_linkable on the layered solid torus") {
  auto T = fixtures::lst123();
  Skeleton skel(T);
  REQUIRE(skel.edgeCount() == 3);
  int linkable = 0;
  for (int e = 0; e < 3; ++e)
    if (edgeLinkable(skel, e)) ++linkable;
  CHECK(linkable == 2);
  for (int e = 0; e < 3; ++e) {
    if (skel.edgeIndex(e) == 3) CHECK_FALSE(edgeLinkable(skel, e));
    if (skel.edgeIndex(e) == 1) CHECK(edgeLinkable(skel, e));
  }
}

TEST_CASE("thin_edge_linking_coords: boundary edges of the LST") {
  auto T = fixtures::lst123();
  Skeleton skel(T);
  MatchingSystem M(skel);
  for (int e = 0; e < skel.edgeCount(); ++e) {
    if (!edgeLinkable(skel, e)) {
      CHECK_THROWS_AS(thinEdgeLinkingCoords(T, skel, e), Error);
      continue;
    }
    auto v = thinEdgeLinkingCoords(T, skel, e);
    CHECK(isAdmissible(M, v));
    ReconstructedSurface S(T, skel, v);
    REQUIRE(S.components().size() == 1);
    const auto& c = S.components()[0];
    CHECK(c.eulerCharacteristic == 0);
    CHECK(c.isAnnulus());
    CHECK(c.boundaryCurveCount == 2);

    // Exchange-count oracle: triangles meeting e swapped one-for-one pairwise
    // into quads, one quad per edge instance.
    auto base = vertexLinkCoords(T, skel, 0);
    Integer removedTris = 0, addedQuads = 0;
    for (int t = 0; t < T.size(); ++t) {
      for (int cn = 0; cn < 4; ++cn) removedTris += base[triIndex(t, cn)] - v[triIndex(t, cn)];
      for (int j = 1; j <= 3; ++j) addedQuads += v[quadIndex(t, j)];
    }
    CHECK(removedTris == 2 * addedQuads);
    CHECK(addedQuads == Integer(skel.edgeIndex(e)));
  }
}

TEST_CASE("quad_support_dominates") {
  auto T = fixtures::figureEight();
  Skeleton skel(T);
  auto link = vertexLinkCoords(T, skel, 0);
  CHECK(quadSupportDominates(zeroCoords(T), link));
  CHECK(quadSupportDominates(link, link));
  MatchingSystem M(skel);
  auto S = hakenSum(link, link);
  CHECK(quadSupportDominates(S, link));
  NormalCoords diff(S.size());
  for (size_t i = 0; i < S.size(); ++i) diff[i] = S[i] - link[i];
  CHECK(isAdmissible(M, diff));
}
