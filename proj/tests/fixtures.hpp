#pragma once

#include "nk/io.hpp"
#include "nk/triangulation.hpp"

// Shared fixture triangulations.  Every nontrivial fixture is validated by
// skeleton/link oracles in core_tests before other suites rely on it.

namespace fixtures {

inline nk::Triangulation singleTet() { return nk::Triangulation(1, "single-tet"); }

// Two ideal tetrahedra forming the figure-eight knot complement:
// one ideal vertex, two edges of index 6, torus link.
inline nk::Triangulation figureEight() {
  nk::Triangulation T(2, "figure-eight");
  T.glue(0, 0, 1, 1, nk::Perm4(1, 3, 0, 2));
  T.glue(0, 1, 1, 0, nk::Perm4(2, 0, 3, 1));
  T.glue(0, 2, 1, 2, nk::Perm4(0, 3, 2, 1));
  T.glue(0, 3, 1, 3, nk::Perm4(2, 1, 0, 3));
  T.validate();
  return T;
}

// One-tetrahedron layered solid torus: one vertex, boundary a one-vertex
// torus made of faces 2 and 3.
inline nk::Triangulation lst123() {
  nk::Triangulation T(1, "lst-1-2-3");
  T.glue(0, 0, 0, 1, nk::Perm4(1, 2, 3, 0));
  T.validate();
  return T;
}

// A face glued to itself by a transposition; folds a link arc onto itself.
inline nk::Triangulation foldedFace() {
  nk::Triangulation T(1, "folded-face");
  T.glue(0, 3, 0, 3, nk::Perm4(1, 0, 2, 3));
  T.validate();
  return T;
}

}  // namespace fixtures
