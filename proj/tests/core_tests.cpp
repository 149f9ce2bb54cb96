#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "nk/boundary.hpp"
#include "nk/io.hpp"
#include "nk/isomorphism.hpp"
#include "nk/links.hpp"
#include "nk/skeleton.hpp"

using namespace nk;

TEST_CASE("Perm4 basics") {
  Perm4 p = Perm4::fromString("1302");
  CHECK(p.str() == "1302");
  CHECK(p[0] == 1);
  CHECK((p * p.inverse()).isIdentity());
  CHECK(Perm4::swap(0, 1).sign() == -1);
  CHECK(Perm4(1, 2, 0, 3).sign() == 1);
  CHECK_THROWS_AS(Perm4::fromString("1102"), std::invalid_argument);
}

TEST_CASE("parse_triangulation: single tetrahedron, no gluings") {
  auto T = parseTriangulation(R"({"label":"b3","tets":1,"gluings":[]})");
  CHECK(T.size() == 1);
  CHECK(T.boundaryFaceCount() == 4);
}

TEST_CASE("parse_triangulation: involution violation") {
  // Both directions listed but inconsistent.
  std::string text = R"({"tets":2,"gluings":[[0,0,1,1,"1302"],[1,1,0,0,"3012"]]})";
  try {
    parseTriangulation(text);
    FAIL("expected InvolutionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvolutionViolation);
  }
}

TEST_CASE("parse_triangulation: orientation violation") {
  std::string text = R"({"tets":2,"gluings":[[0,0,1,0,"0231"]]})";  // even permutation
  try {
    parseTriangulation(text);
    FAIL("expected OrientationViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrientationViolation);
  }
}

TEST_CASE("parse_triangulation: malformed JSON") {
  CHECK_THROWS_AS(parseTriangulation("not json"), Error);
}

TEST_CASE("figure-eight fixture: skeleton oracle") {
  auto T = fixtures::figureEight();
  CHECK(T.boundaryFaceCount() == 0);
  Skeleton skel(T);
  CHECK(skel.vertexCount() == 1);
  REQUIRE(skel.edgeCount() == 2);
  CHECK(skel.edgeIndex(0) == 6);
  CHECK(skel.edgeIndex(1) == 6);
  CHECK(skel.faceCount() == 4);
  CHECK(skel.internalFaceCount() == 4);
}

TEST_CASE("build_skeleton: single unglued tetrahedron") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  CHECK(skel.vertexCount() == 4);
  CHECK(skel.edgeCount() == 6);
  for (int e = 0; e < 6; ++e) {
    CHECK(skel.edgeIndex(e) == 1);
    CHECK(skel.isBoundaryEdgeClass(e));
  }
}

TEST_CASE("build_skeleton: edge index partition identity") {
  for (auto T : {fixtures::figureEight(), fixtures::lst123(), fixtures::singleTet()}) {
    Skeleton skel(T);
    int sum = 0;
    for (int e = 0; e < skel.edgeCount(); ++e) sum += skel.edgeIndex(e);
    CHECK(sum == 6 * T.size());
  }
}

TEST_CASE("lst fixture: skeleton oracle") {
  auto T = fixtures::lst123();
  Skeleton skel(T);
  CHECK(skel.vertexCount() == 1);
  REQUIRE(skel.edgeCount() == 3);
  std::multiset<int> idx;
  for (int e = 0; e < 3; ++e) idx.insert(skel.edgeIndex(e));
  CHECK(idx == std::multiset<int>{1, 2, 3});
  CHECK(T.boundaryFaceCount() == 2);
}

TEST_CASE("vertex_links: single unglued tetrahedron gives four disk links") {
  auto T = fixtures::singleTet();
  Skeleton skel(T);
  auto links = vertexLinks(skel);
  REQUIRE(links.size() == 4);
  for (const auto& l : links) {
    CHECK(l.isDisk);
    CHECK(l.triangles.size() == 1);
    CHECK(l.eulerCharacteristic == 1);
  }
  CHECK(classifyTriangulation(links) == TriangulationKind::Material);
}

TEST_CASE("vertex_links: figure-eight link is a torus (Euler oracle)") {
  auto T = fixtures::figureEight();
  Skeleton skel(T);
  auto links = vertexLinks(skel);
  REQUIRE(links.size() == 1);
  const auto& l = links[0];
  CHECK(l.triangles.size() == 8);
  CHECK(l.closed);
  CHECK(l.orientable);
  // Independent Euler count: V - E + F from the assembled complex.
  int V = l.linkVertexCount;
  int E = (int)l.arcs.size();
  int F = (int)l.triangles.size();
  CHECK(V - E + F == 0);
  CHECK(l.genus == 1);
  CHECK(classifyTriangulation(links) == TriangulationKind::Ideal);
}

TEST_CASE("vertex_links: folded face is rejected as non-manifold") {
  auto T = fixtures::foldedFace();
  Skeleton skel(T);
  try {
    vertexLinks(skel);
    FAIL("expected NonManifoldVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonManifoldVertex);
  }
}

TEST_CASE("classify_triangulation: mixed fixture (ideal plus disjoint ball)") {
  auto T = fixtures::figureEight();
  int extra = T.newTetrahedron();
  (void)extra;
  Skeleton skel(T);
  auto links = vertexLinks(skel);
  CHECK(links.size() == 5);
  CHECK(classifyTriangulation(links) == TriangulationKind::Mixed);
}

TEST_CASE("lst fixture: material, one-vertex, disk link") {
  auto T = fixtures::lst123();
  Skeleton skel(T);
  auto links = vertexLinks(skel);
  REQUIRE(links.size() == 1);
  CHECK(links[0].isDisk);
  CHECK(classifyTriangulation(links) == TriangulationKind::Material);
}

TEST_CASE("boundary complex: lst boundary is a one-vertex torus") {
  auto T = fixtures::lst123();
  Skeleton skel(T);
  BoundaryComplex bc(T, skel);
  REQUIRE(bc.componentCount() == 1);
  CHECK(bc.faceCount() == 2);
  CHECK(bc.componentEuler(0) == 0);
  CHECK(bc.componentGenus(0) == 1);
  CHECK(bc.componentVertexClasses(0).size() == 1);
}

TEST_CASE("is_minimal_vertex") {
  SECTION("single tetrahedron: false, four vertices on one sphere") {
    auto T = fixtures::singleTet();
    Skeleton skel(T);
    auto links = vertexLinks(skel);
    auto rep = isMinimalVertex(T, skel, links);
    CHECK_FALSE(rep.minimal);
  }
  SECTION("lst: true") {
    auto T = fixtures::lst123();
    Skeleton skel(T);
    auto links = vertexLinks(skel);
    auto rep = isMinimalVertex(T, skel, links);
    CHECK(rep.minimal);
  }
  SECTION("ideal input: NotMaterial") {
    auto T = fixtures::figureEight();
    Skeleton skel(T);
    auto links = vertexLinks(skel);
    CHECK_THROWS_AS(isMinimalVertex(T, skel, links), Error);
  }
}

TEST_CASE("isomorphic: identity and relabeling") {
  auto T = fixtures::figureEight();
  auto iso = findIsomorphism(T, T);
  REQUIRE(iso.has_value());

  std::vector<int> tetPerm{1, 0};
  std::vector<Perm4> cornerPerms{Perm4(2, 0, 1, 3), Perm4(0, 1, 2, 3)};
  auto T2 = T.relabeled(tetPerm, cornerPerms);
  auto iso2 = findIsomorphism(T, T2);
  REQUIRE(iso2.has_value());
  // Witness is invertible: the image assignment is a bijection.
  std::set<int> imgs(iso2->tetImage.begin(), iso2->tetImage.end());
  CHECK(imgs.size() == 2);

  CHECK_FALSE(findIsomorphism(fixtures::singleTet(), T).has_value());
  CHECK_FALSE(findIsomorphism(T, fixtures::lst123()).has_value());
}

TEST_CASE("triangulation JSON round trip") {
  auto T = fixtures::figureEight();
  auto j = triangulationToJson(T);
  auto T2 = triangulationFromJson(j);
  CHECK(T == T2);
}
