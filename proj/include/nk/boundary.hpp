#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nk/links.hpp"
#include "nk/skeleton.hpp"

namespace nk {

// The boundary surface: unglued face instances stitched along boundary edges
// via the page walk around each edge.

struct BoundaryEdgeCrossing {
  int face = -1;      // partner boundary face index
  int edge = -1;      // partner's tet-level edge id (0..5)
  int imgA = -1;      // image corners of this edge's endpoints (kEdgeEnds order)
  int imgB = -1;
};

class BoundaryComplex {
 public:
  BoundaryComplex(const Triangulation& T, const Skeleton& skel) : T_(T), skel_(skel) { build(); }

  int faceCount() const { return (int)faces_.size(); }
  const std::vector<std::pair<int, int>>& faces() const { return faces_; }
  int faceIndexOf(int t, int f) const { return faceIdx_.at({t, f}); }

  // Adjacency across edge e (tet-level id, e subset of face) of face i.
  const BoundaryEdgeCrossing& across(int faceIdx, int e) const {
    return adj_.at({faceIdx, e});
  }

  int componentOf(int faceIdx) const { return compOfFace_[(size_t)faceIdx]; }
  int componentCount() const { return compCount_; }
  int componentEuler(int comp) const { return compChi_[(size_t)comp]; }
  int componentGenus(int comp) const { return (2 - compChi_[(size_t)comp]) / 2; }
  const std::set<int>& componentVertexClasses(int comp) const { return compVerts_[(size_t)comp]; }
  const std::set<int>& componentEdgeClasses(int comp) const { return compEdges_[(size_t)comp]; }

  // Boundary component of a boundary vertex class (-1 if not boundary).
  int componentOfVertexClass(int vcls) const {
    auto it = compOfVertexCls_.find(vcls);
    return it == compOfVertexCls_.end() ? -1 : it->second;
  }

  int componentOfEdgeClass(int ecls) const {
    auto it = compOfEdgeCls_.find(ecls);
    return it == compOfEdgeCls_.end() ? -1 : it->second;
  }

  // Page walk: from boundary face (t,f) across edge e, returns the partner
  // boundary face instance and the endpoint correspondence.
  static BoundaryEdgeCrossing pageWalk(const Triangulation& T, int t, int f, int e) {
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    int curT = t, curEdge = e, curA = a, curB = b;
    // Exit through the other face of curT containing curEdge.
    int exitF = otherFaceAtEdge(curEdge, f);
    while (true) {
      const auto& g = T.gluing(curT, exitF);
      if (!g) {
        BoundaryEdgeCrossing out;
        out.face = -1;  // caller resolves instance index
        out.edge = curEdge;
        out.imgA = curA;
        out.imgB = curB;
        // encode the face instance via curT/exitF in imgs? return separately
        out.face = 4 * curT + exitF;
        return out;
      }
      int t2 = g->tet;
      int inF = g->face;
      int a2 = g->perm[curA], b2 = g->perm[curB];
      int e2 = edgeIndexOf(a2, b2);
      curT = t2;
      curEdge = e2;
      curA = a2;
      curB = b2;
      exitF = otherFaceAtEdge(curEdge, inF);
    }
  }

 private:
  static int otherFaceAtEdge(int e, int f) {
    auto fs = facesContainingEdge(e);
    return (fs[0] == f) ? fs[1] : fs[0];
  }

  void build() {
    for (int t = 0; t < T_.size(); ++t)
      for (int f = 0; f < 4; ++f)
        if (T_.isBoundaryFace(t, f)) {
          faceIdx_[{t, f}] = (int)faces_.size();
          faces_.push_back({t, f});
        }

    for (int i = 0; i < (int)faces_.size(); ++i) {
      auto [t, f] = faces_[(size_t)i];
      for (int e = 0; e < 6; ++e) {
        if (kEdgeEnds[e][0] == f || kEdgeEnds[e][1] == f) continue;
        auto cr = pageWalk(T_, t, f, e);
        int pt = cr.face / 4, pf = cr.face % 4;
        cr.face = faceIdx_.at({pt, pf});
        adj_[{i, e}] = cr;
      }
    }

    // Components.
    UnionFind uf((int)faces_.size());
    for (const auto& [key, cr] : adj_) uf.unite(key.first, cr.face);
    std::map<int, int> repToComp;
    compOfFace_.assign(faces_.size(), -1);
    for (int i = 0; i < (int)faces_.size(); ++i) {
      int r = uf.find(i);
      if (!repToComp.count(r)) repToComp[r] = (int)repToComp.size();
      compOfFace_[(size_t)i] = repToComp[r];
    }
    compCount_ = (int)repToComp.size();

    // Component invariants: V - E + F with E = 3F/2 instance pairs and V the
    // distinct boundary "surface corners" (edge-end classes at boundary
    // corners match the 3-manifold vertex classes only componentwise; for chi
    // use surface-level corner classes).
    // Surface corners: (face instance, corner of face) identified across edge
    // adjacencies.  Build union-find over 3 corners per face.
    std::map<std::pair<int, int>, int> cornerSlot;  // (faceIdx, corner) -> slot
    int nslots = 0;
    for (int i = 0; i < (int)faces_.size(); ++i) {
      auto [t, f] = faces_[(size_t)i];
      for (int c = 0; c < 4; ++c)
        if (c != f) cornerSlot[{i, c}] = nslots++;
    }
    UnionFind cuf(nslots);
    for (const auto& [key, cr] : adj_) {
      auto [i, e] = key;
      int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
      cuf.unite(cornerSlot.at({i, a}), cornerSlot.at({cr.face, cr.imgA}));
      cuf.unite(cornerSlot.at({i, b}), cornerSlot.at({cr.face, cr.imgB}));
    }

    compChi_.assign((size_t)compCount_, 0);
    compVerts_.assign((size_t)compCount_, {});
    compEdges_.assign((size_t)compCount_, {});
    std::vector<std::set<int>> compCorners((size_t)compCount_);
    std::vector<std::set<std::pair<int, int>>> compEdgePairs((size_t)compCount_);
    for (int i = 0; i < (int)faces_.size(); ++i) {
      int comp = compOfFace_[(size_t)i];
      auto [t, f] = faces_[(size_t)i];
      compChi_[(size_t)comp] += 1;  // F
      for (int c = 0; c < 4; ++c)
        if (c != f) {
          compCorners[(size_t)comp].insert(cuf.find(cornerSlot.at({i, c})));
          compVerts_[(size_t)comp].insert(skel_.vertexClassOf(t, c));
        }
      for (int e = 0; e < 6; ++e) {
        if (kEdgeEnds[e][0] == f || kEdgeEnds[e][1] == f) continue;
        compEdges_[(size_t)comp].insert(skel_.edgeClassOf(t, e));
        const auto& cr = adj_.at({i, e});
        std::pair<int, int> p1{i, e}, p2{cr.face, cr.edge};
        if (p2 < p1) std::swap(p1, p2);
        compEdgePairs[(size_t)comp].insert({p1.first * 6 + p1.second, p2.first * 6 + p2.second});
      }
    }
    for (int comp = 0; comp < compCount_; ++comp)
      compChi_[(size_t)comp] += (int)compCorners[(size_t)comp].size() -
                                (int)compEdgePairs[(size_t)comp].size();

    for (int comp = 0; comp < compCount_; ++comp) {
      for (int v : compVerts_[(size_t)comp]) compOfVertexCls_[v] = comp;
      for (int e : compEdges_[(size_t)comp]) compOfEdgeCls_[e] = comp;
    }
  }

  const Triangulation& T_;
  const Skeleton& skel_;
  std::vector<std::pair<int, int>> faces_;
  std::map<std::pair<int, int>, int> faceIdx_;
  std::map<std::pair<int, int>, BoundaryEdgeCrossing> adj_;
  std::vector<int> compOfFace_;
  int compCount_ = 0;
  std::vector<int> compChi_;
  std::vector<std::set<int>> compVerts_, compEdges_;
  std::map<int, int> compOfVertexCls_, compOfEdgeCls_;
};

struct MinimalVertexReport {
  bool minimal = false;
  std::vector<std::string> violations;
};

// Material triangulation with nonempty boundary is minimal-vertex iff all
// vertex classes lie in the boundary and each boundary component contains
// exactly one vertex class.
inline MinimalVertexReport isMinimalVertex(const Triangulation& T, const Skeleton& skel,
                                           const std::vector<VertexLink>& links) {
  if (classifyTriangulation(links) != TriangulationKind::Material)
    throw Error(ErrorCode::NotMaterial, "minimal-vertex check requires a material triangulation");
  MinimalVertexReport rep;
  if (!T.hasBoundary()) {
    rep.minimal = false;
    rep.violations.push_back("no boundary");
    return rep;
  }
  BoundaryComplex bc(T, skel);
  rep.minimal = true;
  for (int v = 0; v < skel.vertexCount(); ++v)
    if (!skel.isBoundaryVertexClass(v)) {
      rep.minimal = false;
      rep.violations.push_back("interior vertex class " + std::to_string(v));
    }
  for (int comp = 0; comp < bc.componentCount(); ++comp) {
    int nv = (int)bc.componentVertexClasses(comp).size();
    if (nv != 1) {
      rep.minimal = false;
      rep.violations.push_back("boundary component " + std::to_string(comp) + " has " +
                               std::to_string(nv) + " vertex classes");
    }
  }
  return rep;
}

}  // namespace nk
