#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nk/triangulation.hpp"

namespace nk {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_((size_t)n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[(size_t)x] != x) {
      parent_[(size_t)x] = parent_[(size_t)parent_[(size_t)x]];
      x = parent_[(size_t)x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[(size_t)std::max(a, b)] = std::min(a, b);
  }

  int size() const { return (int)parent_.size(); }

 private:
  mutable std::vector<int> parent_;
};

// Quotient classes of corners, edges, faces and edge-ends of a triangulation.
// Class ids are dense, ordered by smallest member.
class Skeleton {
 public:
  explicit Skeleton(const Triangulation& tri) : tri_(&tri) { build(); }

  const Triangulation& triangulation() const { return *tri_; }

  // --- raw slot encodings ---
  int cornerSlot(int t, int c) const { return 4 * t + c; }
  int edgeSlot(int t, int e) const { return 6 * t + e; }
  int faceSlot(int t, int f) const { return 4 * t + f; }
  // An edge-end is (t, e, end) with end in {0,1} naming kEdgeEnds[e][end].
  int endSlot(int t, int e, int end) const { return 12 * t + 2 * e + end; }

  // --- class lookups ---
  int vertexClassOf(int t, int c) const { return cornerClassId_[(size_t)cornerSlot(t, c)]; }
  int edgeClassOf(int t, int e) const { return edgeClassId_[(size_t)edgeSlot(t, e)]; }
  int faceClassOf(int t, int f) const { return faceClassId_[(size_t)faceSlot(t, f)]; }
  int endClassOf(int t, int e, int end) const { return endClassId_[(size_t)endSlot(t, e, end)]; }

  int vertexCount() const { return (int)vertexMembers_.size(); }
  int edgeCount() const { return (int)edgeMembers_.size(); }
  int faceCount() const { return (int)faceMembers_.size(); }
  int endCount() const { return (int)endMembers_.size(); }

  // Members as slot encodings.
  const std::vector<int>& vertexMembers(int cls) const { return vertexMembers_[(size_t)cls]; }
  const std::vector<int>& edgeMembers(int cls) const { return edgeMembers_[(size_t)cls]; }
  const std::vector<int>& faceMembers(int cls) const { return faceMembers_[(size_t)cls]; }
  const std::vector<int>& endMembers(int cls) const { return endMembers_[(size_t)cls]; }

  int edgeIndex(int cls) const { return (int)edgeMembers_[(size_t)cls].size(); }

  bool isBoundaryFaceClass(int cls) const { return faceBoundary_[(size_t)cls]; }
  bool isBoundaryEdgeClass(int cls) const { return edgeBoundary_[(size_t)cls]; }
  bool isBoundaryVertexClass(int cls) const { return vertexBoundary_[(size_t)cls]; }

  int internalFaceCount() const {
    int n = 0;
    for (int i = 0; i < faceCount(); ++i)
      if (!faceBoundary_[(size_t)i]) ++n;
    return n;
  }

 private:
  void build() {
    const Triangulation& T = *tri_;
    const int n = T.size();
    UnionFind corners(4 * n), edges(6 * n), faces(4 * n), ends(12 * n);

    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = T.gluing(t, f);
        if (!g) continue;
        faces.unite(faceSlot(t, f), faceSlot(g->tet, g->face));
        for (int c = 0; c < 4; ++c) {
          if (c == f) continue;
          corners.unite(cornerSlot(t, c), cornerSlot(g->tet, g->perm[c]));
        }
        // The three edges of face f map to edges of the partner face.
        for (int e = 0; e < 6; ++e) {
          int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
          if (a == f || b == f) continue;
          int a2 = g->perm[a], b2 = g->perm[b];
          int e2 = edgeIndexOf(a2, b2);
          edges.unite(edgeSlot(t, e), edgeSlot(g->tet, e2));
          int end0 = (kEdgeEnds[e2][0] == a2) ? 0 : 1;
          ends.unite(endSlot(t, e, 0), endSlot(g->tet, e2, end0));
          ends.unite(endSlot(t, e, 1), endSlot(g->tet, e2, 1 - end0));
        }
      }

    cornerClassId_ = denseIds(corners, vertexMembers_);
    edgeClassId_ = denseIds(edges, edgeMembers_);
    faceClassId_ = denseIds(faces, faceMembers_);
    endClassId_ = denseIds(ends, endMembers_);

    faceBoundary_.assign((size_t)faceCount(), false);
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f)
        if (T.isBoundaryFace(t, f)) faceBoundary_[(size_t)faceClassOf(t, f)] = true;

    edgeBoundary_.assign((size_t)edgeCount(), false);
    vertexBoundary_.assign((size_t)vertexCount(), false);
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        if (!T.isBoundaryFace(t, f)) continue;
        for (int e = 0; e < 6; ++e)
          if (kEdgeEnds[e][0] != f && kEdgeEnds[e][1] != f)
            edgeBoundary_[(size_t)edgeClassOf(t, e)] = true;
        for (int c = 0; c < 4; ++c)
          if (c != f) vertexBoundary_[(size_t)vertexClassOf(t, c)] = true;
      }
  }

  static std::vector<int> denseIds(const UnionFind& uf, std::vector<std::vector<int>>& members) {
    std::vector<int> repToId((size_t)uf.size(), -1);
    std::vector<int> ids((size_t)uf.size(), -1);
    members.clear();
    for (int x = 0; x < uf.size(); ++x) {
      int r = uf.find(x);
      if (repToId[(size_t)r] < 0) {
        repToId[(size_t)r] = (int)members.size();
        members.emplace_back();
      }
      ids[(size_t)x] = repToId[(size_t)r];
      members[(size_t)repToId[(size_t)r]].push_back(x);
    }
    return ids;
  }

  const Triangulation* tri_;
  std::vector<int> cornerClassId_, edgeClassId_, faceClassId_, endClassId_;
  std::vector<std::vector<int>> vertexMembers_, edgeMembers_, faceMembers_, endMembers_;
  std::vector<bool> faceBoundary_, edgeBoundary_, vertexBoundary_;
};

}  // namespace nk
