#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "nk/links.hpp"
#include "nk/skeleton.hpp"

namespace nk {

using Integer = boost::multiprecision::cpp_int;

// Normal coordinates: 7 per tetrahedron, laid out as
//   [tri0, tri1, tri2, tri3, q1, q2, q3]
// where tri_i cuts off corner i and q_j separates {0,j} from the other two
// corners.
using NormalCoords = std::vector<Integer>;

inline size_t triIndex(int tet, int corner) { return (size_t)(7 * tet + corner); }
inline size_t quadIndex(int tet, int type) { return (size_t)(7 * tet + 3 + type); }  // type in 1..3

// The two corner pairs separated by quad type j: {0,j} | rest.
inline std::array<int, 2> quadPairA(int type) { return {0, type}; }
inline std::array<int, 2> quadPairB(int type) {
  std::array<int, 2> out{};
  int k = 0;
  for (int c = 1; c < 4; ++c)
    if (c != type) out[(size_t)k++] = c;
  return out;
}

// Corner of face f cut by the arcs of quad type j (f = 0..3, j = 1..3).
inline int quadCutCorner(int type, int face) {
  if (face == 0) return type;
  if (face == type) return 0;
  auto b = quadPairB(type);
  return (b[0] == face) ? b[1] : b[0];
}

// The quad type whose arcs on face f cut corner c (c a corner of f).
inline int quadTypeCutting(int face, int corner) {
  for (int j = 1; j <= 3; ++j)
    if (quadCutCorner(j, face) == corner) return j;
  throw Error(ErrorCode::Internal, "no quad type cuts this corner");
}

// Does quad type j cross edge {a,b}?  (Exactly one endpoint in {0,j}.)
inline bool quadCrossesEdge(int type, int edge) {
  int a = kEdgeEnds[edge][0], b = kEdgeEnds[edge][1];
  bool aIn = (a == 0 || a == type);
  bool bIn = (b == 0 || b == type);
  return aIn != bIn;
}

// Number of normal arcs of v cutting corner c on face f of tet t.
inline Integer arcCount(const NormalCoords& v, int t, int f, int c) {
  Integer n = v[triIndex(t, c)];
  n += v[quadIndex(t, quadTypeCutting(f, c))];
  return n;
}

struct MatchingRow {
  int faceClass;
  int corner;  // corner of the representative instance cut by the arc type
  std::vector<Integer> coeffs;
};

// One equation per (internal face class, arc type): the arc counts on the two
// sides of the gluing agree.
class MatchingSystem {
 public:
  explicit MatchingSystem(const Skeleton& skel) : skel_(&skel) { build(); }

  const std::vector<MatchingRow>& rows() const { return rows_; }
  int columns() const { return 7 * skel_->triangulation().size(); }

  bool inKernel(const NormalCoords& v) const {
    for (const auto& row : rows_) {
      Integer s = 0;
      for (size_t i = 0; i < row.coeffs.size(); ++i) s += row.coeffs[i] * v[i];
      if (s != 0) return false;
    }
    return true;
  }

 private:
  void build() {
    const Triangulation& T = skel_->triangulation();
    std::vector<bool> done((size_t)skel_->faceCount(), false);
    for (int t = 0; t < T.size(); ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = T.gluing(t, f);
        if (!g) continue;
        int cls = skel_->faceClassOf(t, f);
        if (done[(size_t)cls]) continue;
        done[(size_t)cls] = true;
        for (int c = 0; c < 4; ++c) {
          if (c == f) continue;
          MatchingRow row;
          row.faceClass = cls;
          row.corner = c;
          row.coeffs.assign((size_t)columns(), 0);
          row.coeffs[triIndex(t, c)] += 1;
          row.coeffs[quadIndex(t, quadTypeCutting(f, c))] += 1;
          row.coeffs[triIndex(g->tet, g->perm[c])] -= 1;
          row.coeffs[quadIndex(g->tet, quadTypeCutting(g->face, g->perm[c]))] -= 1;
          rows_.push_back(std::move(row));
        }
      }
  }

  const Skeleton* skel_;
  std::vector<MatchingRow> rows_;
};

inline bool quadCompatible(const NormalCoords& v, int tets) {
  for (int t = 0; t < tets; ++t) {
    int types = 0;
    for (int j = 1; j <= 3; ++j)
      if (v[quadIndex(t, j)] > 0) ++types;
    if (types > 1) return false;
  }
  return true;
}

inline bool isAdmissible(const MatchingSystem& M, const NormalCoords& v) {
  if ((int)v.size() != M.columns()) return false;
  for (const auto& x : v)
    if (x < 0) return false;
  if (!quadCompatible(v, M.columns() / 7)) return false;
  return M.inKernel(v);
}

// Union of quad supports has at most one type per tetrahedron.
inline bool quadSupportsCompatible(const NormalCoords& a, const NormalCoords& b) {
  int tets = (int)a.size() / 7;
  for (int t = 0; t < tets; ++t) {
    int types = 0;
    for (int j = 1; j <= 3; ++j)
      if (a[quadIndex(t, j)] > 0 || b[quadIndex(t, j)] > 0) ++types;
    if (types > 1) return false;
  }
  return true;
}

inline NormalCoords hakenSum(const NormalCoords& a, const NormalCoords& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Internal, "size mismatch in sum");
  if (!quadSupportsCompatible(a, b))
    throw Error(ErrorCode::IncompatibleQuads, "quad supports are incompatible");
  NormalCoords out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Every nonzero quad type of b is nonzero in a.
inline bool quadSupportDominates(const NormalCoords& a, const NormalCoords& b) {
  int tets = (int)a.size() / 7;
  for (int t = 0; t < tets; ++t)
    for (int j = 1; j <= 3; ++j)
      if (b[quadIndex(t, j)] > 0 && a[quadIndex(t, j)] == 0) return false;
  return true;
}

inline Integer weight(const NormalCoords& v) {
  Integer w = 0;
  for (const auto& x : v) w += x;
  return w;
}

inline NormalCoords zeroCoords(const Triangulation& T) {
  return NormalCoords((size_t)(7 * T.size()), Integer(0));
}

// One triangle per corner in the vertex class, no quads.
inline NormalCoords vertexLinkCoords(const Triangulation& T, const Skeleton& skel, int vertexClass) {
  NormalCoords v = zeroCoords(T);
  for (int slot : skel.vertexMembers(vertexClass)) v[triIndex(slot / 4, slot % 4)] += 1;
  return v;
}

// True iff no face class has two or more of its three edges in class e.
inline bool edgeLinkable(const Skeleton& skel, int edgeClass) {
  const Triangulation& T = skel.triangulation();
  for (int t = 0; t < T.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      int hits = 0;
      for (int e = 0; e < 6; ++e) {
        if (kEdgeEnds[e][0] == f || kEdgeEnds[e][1] == f) continue;
        if (skel.edgeClassOf(t, e) == edgeClass) ++hits;
      }
      if (hits >= 2) return false;
    }
  return true;
}

// Thin edge-linking annulus coordinates: the vertex-link vector(s) of the
// endpoint class(es) with every triangle meeting e exchanged for the quad
// type disjoint from e.
inline NormalCoords thinEdgeLinkingCoords(const Triangulation& T, const Skeleton& skel,
                                          int edgeClass) {
  if (!edgeLinkable(skel, edgeClass))
    throw Error(ErrorCode::NotLinkable, "a face has two edges identified to this edge class");

  // Endpoint vertex classes.
  int member0 = skel.edgeMembers(edgeClass)[0];
  int t0 = member0 / 6, e0 = member0 % 6;
  int vA = skel.vertexClassOf(t0, kEdgeEnds[e0][0]);
  int vB = skel.vertexClassOf(t0, kEdgeEnds[e0][1]);

  NormalCoords v = vertexLinkCoords(T, skel, vA);
  if (vB != vA) {
    NormalCoords w = vertexLinkCoords(T, skel, vB);
    for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  }

  for (int slot : skel.edgeMembers(edgeClass)) {
    int t = slot / 6, e = slot % 6;
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    v[triIndex(t, a)] -= 1;
    v[triIndex(t, b)] -= 1;
    if (v[triIndex(t, a)] < 0 || v[triIndex(t, b)] < 0)
      throw Error(ErrorCode::DegenerateResult, "triangle removal went negative");
    // Quad type disjoint from {a,b}: separates the other two corners from
    // {a,b}; as a type j it is the one with pair {0,j} equal to {a,b} or to
    // its complement.
    int type = b;
    if (a != 0) {
      // 0 is in the complementary pair {0,z}; the type is z.
      for (int c = 1; c < 4; ++c)
        if (c != a && c != b) type = c;
    }
    v[quadIndex(t, type)] += 1;
  }
  return v;
}

}  // namespace nk
