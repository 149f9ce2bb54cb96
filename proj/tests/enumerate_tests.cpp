#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "nk/enumerate.hpp"

using namespace nk;

namespace {

struct Env {
  Triangulation T;
  Skeleton skel;
  MatchingSystem M;
  explicit Env(Triangulation t) : T(std::move(t)), skel(T), M(skel) {}
};

bool isMultiple(const NormalCoords& a, const NormalCoords& b) {
  NormalCoords na = a, nb = b;
  normalizePrimitive(na);
  normalizePrimitive(nb);
  return na == nb;
}

// Test-side oracle: can v be written as a nonnegative integer combination of
// basis elements?
bool decomposes(const NormalCoords& v, const std::vector<NormalCoords>& basis, size_t from = 0) {
  bool zero = true;
  for (const auto& x : v)
    if (x != 0) zero = false;
  if (zero) return true;
  for (size_t i = from; i < basis.size(); ++i) {
    const auto& b = basis[i];
    bool le = true;
    for (size_t k = 0; k < v.size() && le; ++k)
      if (b[k] > v[k]) le = false;
    if (!le) continue;
    NormalCoords rest(v.size());
    for (size_t k = 0; k < v.size(); ++k) rest[k] = v[k] - b[k];
    if (decomposes(rest, basis, i)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("vertex_surfaces: single unglued tetrahedron has the 7 unit rays") {
  Env e(fixtures::singleTet());
  auto vs = vertexSurfaces(e.T, e.skel, e.M);
  REQUIRE(vs.vectors.size() == 7);
  for (const auto& v : vs.vectors) {
    CHECK(weight(v) == 1);
    CHECK(isAdmissible(e.M, v));
  }
}

TEST_CASE("vertex_surfaces: figure-eight contains the vertex-linking torus ray") {
  Env e(fixtures::figureEight());
  auto vs = vertexSurfaces(e.T, e.skel, e.M);
  auto link = vertexLinkCoords(e.T, e.skel, 0);
  normalizePrimitive(link);
  bool found = false;
  for (const auto& v : vs.vectors)
    if (v == link) found = true;
  CHECK(found);

  for (size_t i = 0; i < vs.vectors.size(); ++i) {
    CHECK(isAdmissible(e.M, vs.vectors[i]));
    for (size_t j = i + 1; j < vs.vectors.size(); ++j)
      CHECK_FALSE(isMultiple(vs.vectors[i], vs.vectors[j]));
  }

  // Extremality oracle at small weight: no decomposition into two distinct
  // admissible directions drawn from the brute-force pool.
  auto pool = bruteForceAdmissible(e.T, e.skel, e.M, 10).vectors;
  for (const auto& v : vs.vectors) {
    if (weight(v) > 10) continue;
    for (const auto& a : pool) {
      if (weight(a) == 0 || isMultiple(a, v)) continue;
      bool le = true;
      for (size_t k = 0; k < v.size() && le; ++k)
        if (a[k] > v[k]) le = false;
      if (!le) continue;
      NormalCoords b(v.size());
      for (size_t k = 0; k < v.size(); ++k) b[k] = v[k] - a[k];
      if (weight(b) == 0) continue;
      CHECK_FALSE(isAdmissible(e.M, b));
    }
  }
}

TEST_CASE("brute_force_admissible basics") {
  Env e(fixtures::singleTet());
  auto b0 = bruteForceAdmissible(e.T, e.skel, e.M, 0);
  REQUIRE(b0.vectors.size() == 1);
  CHECK(weight(b0.vectors[0]) == 0);

  auto b1 = bruteForceAdmissible(e.T, e.skel, e.M, 1);
  CHECK(b1.vectors.size() == 8);  // zero + 7 units

  Env f(fixtures::figureEight());
  auto s4 = bruteForceAdmissible(f.T, f.skel, f.M, 4).vectors;
  auto s6 = bruteForceAdmissible(f.T, f.skel, f.M, 6).vectors;
  for (const auto& v : s4) {
    CHECK(std::binary_search(s6.begin(), s6.end(), v));
    CHECK(isAdmissible(f.M, v));
  }
}

TEST_CASE("fundamental_surfaces: single tetrahedron gives the 7 unit vectors") {
  Env e(fixtures::singleTet());
  auto fs = fundamentalSurfaces(e.T, e.skel, e.M);
  CHECK(fs.vectors.size() == 7);
  for (const auto& v : fs.vectors) CHECK(weight(v) == 1);
}

TEST_CASE("fundamental_surfaces agrees with brute-force irreducibles") {
  for (auto fix : {fixtures::figureEight(), fixtures::lst123()}) {
    Env e(std::move(fix));
    const long B = 10;
    auto fs = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
    auto pool = bruteForceAdmissible(e.T, e.skel, e.M, B).vectors;
    std::vector<NormalCoords> bruteIrred;
    for (const auto& v : pool) {
      if (weight(v) == 0) continue;
      bool reducible = false;
      for (const auto& a : pool) {
        if (weight(a) == 0 || a == v) continue;
        bool le = true;
        for (size_t k = 0; k < v.size() && le; ++k)
          if (a[k] > v[k]) le = false;
        if (!le) continue;
        NormalCoords b(v.size());
        for (size_t k = 0; k < v.size(); ++k) b[k] = v[k] - a[k];
        if (weight(b) > 0 && isAdmissible(e.M, b)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) bruteIrred.push_back(v);
    }
    std::vector<NormalCoords> fsSmall;
    for (const auto& v : fs)
      if (weight(v) <= B) fsSmall.push_back(v);
    CHECK(fsSmall == bruteIrred);
  }
}

TEST_CASE("every vertex surface is fundamental") {
  for (auto fix : {fixtures::figureEight(), fixtures::lst123(), fixtures::singleTet()}) {
    Env e(std::move(fix));
    auto vs = vertexSurfaces(e.T, e.skel, e.M).vectors;
    auto fs = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
    for (const auto& v : vs) CHECK(std::binary_search(fs.begin(), fs.end(), v));
  }
}

TEST_CASE("admissible vectors decompose over the fundamental set") {
  Env e(fixtures::figureEight());
  auto fs = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
  auto pool = bruteForceAdmissible(e.T, e.skel, e.M, 8).vectors;
  for (const auto& v : pool) CHECK(decomposes(v, fs));
}

TEST_CASE("enumeration is deterministic") {
  Env e(fixtures::figureEight());
  auto a = vertexSurfaces(e.T, e.skel, e.M).vectors;
  auto b = vertexSurfaces(e.T, e.skel, e.M).vectors;
  CHECK(a == b);
  auto fa = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
  auto fb = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
  CHECK(fa == fb);
}

TEST_CASE("layered solid torus: no closed normal surfaces") {
  Env e(fixtures::lst123());
  auto fs = fundamentalSurfaces(e.T, e.skel, e.M).vectors;
  CHECK_FALSE(fs.empty());
  for (const auto& v : fs) {
    ReconstructedSurface S(e.T, e.skel, v);
    for (const auto& c : S.components()) CHECK_FALSE(c.closed);
  }
  auto pool = bruteForceAdmissible(e.T, e.skel, e.M, 20).vectors;
  int closedCount = 0;
  for (const auto& v : pool) {
    if (weight(v) == 0) continue;
    ReconstructedSurface S(e.T, e.skel, v);
    for (const auto& c : S.components())
      if (c.closed) ++closedCount;
  }
  CHECK(closedCount == 0);
}
