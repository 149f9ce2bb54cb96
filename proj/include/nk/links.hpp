#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "nk/skeleton.hpp"

namespace nk {

// Oriented corner cycle of face f per the boundary convention of a standard
// positively-oriented tetrahedron 0123.
inline const std::array<int, 3>& faceCycle(int f) {
  static const std::array<std::array<int, 3>, 4> cycles = {
      std::array<int, 3>{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  return cycles[(size_t)f];
}

// The vertex-linking surface of a vertex class, assembled from one corner
// triangle per corner in the class.  Sides of corner triangles are the normal
// arcs (t,c,f) with c a corner of face f; a face gluing identifies
// (t,c,f) ~ (t', perm(c), f').  All structure is kept at the tetrahedron
// level: quotient link vertices may repeat within one triangle.

struct LinkArcInstance {
  int tet = -1, corner = -1, face = -1;
};

struct LinkArc {
  std::vector<LinkArcInstance> instances;  // one (boundary) or two
  bool boundary = false;
  int endVertex[2] = {-1, -1};  // link-vertex ids at the two ends (by edge order)
};

struct VertexLink {
  int vertexClass = -1;
  std::vector<std::pair<int, int>> triangles;  // (tet, corner)
  std::vector<LinkArc> arcs;
  std::map<int, int> arcIdOfSide;  // (16t+4c+f) -> arc id
  int linkVertexCount = 0;         // dense ids for end classes in this link
  std::map<int, int> linkVertexOfEnd;  // skeleton end class -> dense id
  std::vector<int> endClassOfLinkVertex;
  std::vector<std::vector<int>> arcsAroundVertex;  // rotation order per link vertex
  std::vector<bool> vertexOnBoundary;
  int eulerCharacteristic = 0;
  bool closed = false;
  bool orientable = true;
  bool connected = true;
  int boundaryCurves = 0;
  int genus = 0;  // for closed orientable links
  bool isDisk = false;
};

namespace detail {

inline int sideKey(int t, int c, int f) { return 16 * t + 4 * c + f; }

// Direction of the side of link triangle (t,c) lying in face f, traversed
// from the end on edge {c,a} to the end on edge {c,b}: +1 if b follows a in
// the canonical corner cycle of the triangle, else -1.
inline int sideDirection(int c, int a, int b) {
  const auto& cyc = faceCycle(c);
  for (int i = 0; i < 3; ++i)
    if (cyc[(size_t)i] == a) return cyc[(size_t)((i + 1) % 3)] == b ? +1 : -1;
  return +1;  // unreachable for valid input
}

struct LinkAssembler {
  const Triangulation& T;
  const Skeleton& skel;

  explicit LinkAssembler(const Skeleton& s) : T(s.triangulation()), skel(s) {}

  std::vector<VertexLink> build() {
    const int n = T.size();
    std::vector<VertexLink> links((size_t)skel.vertexCount());
    for (int v = 0; v < skel.vertexCount(); ++v) links[(size_t)v].vertexClass = v;

    for (int t = 0; t < n; ++t)
      for (int c = 0; c < 4; ++c)
        links[(size_t)skel.vertexClassOf(t, c)].triangles.push_back({t, c});

    for (auto& link : links) {
      buildArcs(link);
      analyze(link);
    }
    return links;
  }

 private:
  std::optional<LinkArcInstance> partnerSide(int t, int c, int f) const {
    const auto& g = T.gluing(t, f);
    if (!g) return std::nullopt;
    return LinkArcInstance{g->tet, g->perm[c], g->face};
  }

  void buildArcs(VertexLink& link) const {
    for (auto [t, c] : link.triangles) {
      for (int f = 0; f < 4; ++f) {
        if (f == c) continue;
        int key = sideKey(t, c, f);
        if (link.arcIdOfSide.count(key)) continue;
        LinkArc arc;
        arc.instances.push_back({t, c, f});
        auto p = partnerSide(t, c, f);
        if (!p) {
          arc.boundary = true;
        } else {
          int pkey = sideKey(p->tet, p->corner, p->face);
          if (pkey == key)
            throw Error(ErrorCode::NonManifoldVertex,
                        "normal arc identified with itself (folded vertex link)");
          arc.instances.push_back(*p);
          link.arcIdOfSide[pkey] = (int)link.arcs.size();
        }
        link.arcIdOfSide[key] = (int)link.arcs.size();
        link.arcs.push_back(arc);
      }
    }
  }

  // Dense link-vertex id for the end of edge {c,x} at c in tetrahedron t.
  int linkVertex(VertexLink& link, int t, int c, int x) const {
    int e = edgeIndexOf(c, x);
    int end = (kEdgeEnds[e][0] == c) ? 0 : 1;
    int cls = skel.endClassOf(t, e, end);
    auto it = link.linkVertexOfEnd.find(cls);
    if (it != link.linkVertexOfEnd.end()) return it->second;
    int id = (int)link.linkVertexOfEnd.size();
    link.linkVertexOfEnd[cls] = id;
    link.endClassOfLinkVertex.push_back(cls);
    return id;
  }

  void analyze(VertexLink& link) const {
    // Record arc endpoints (dense link-vertex ids).
    for (auto& arc : link.arcs) {
      const auto& inst = arc.instances[0];
      int a = -1, b = -1;
      for (int x = 0; x < 4; ++x)
        if (x != inst.face && x != inst.corner) (a < 0 ? a : b) = x;
      arc.endVertex[0] = linkVertex(link, inst.tet, inst.corner, a);
      arc.endVertex[1] = linkVertex(link, inst.tet, inst.corner, b);
    }
    link.linkVertexCount = (int)link.linkVertexOfEnd.size();

    const int F = (int)link.triangles.size();
    const int E = (int)link.arcs.size();
    const int V = link.linkVertexCount;
    link.eulerCharacteristic = V - E + F;
    link.closed = std::none_of(link.arcs.begin(), link.arcs.end(),
                               [](const LinkArc& a) { return a.boundary; });

    analyzeStars(link);
    link.orientable = computeOrientable(link);
    link.connected = connectedTriangles(link);
    link.boundaryCurves = countBoundaryCurves(link);

    if (link.closed) {
      if (!link.connected)
        throw Error(ErrorCode::Internal, "vertex link split across one vertex class");
      if (!link.orientable)
        throw Error(ErrorCode::NonManifoldVertex, "closed non-orientable vertex link");
      link.genus = (2 - link.eulerCharacteristic) / 2;
    } else {
      link.isDisk = link.connected && link.eulerCharacteristic == 1 && link.orientable;
      if (!link.isDisk)
        throw Error(ErrorCode::NonManifoldVertex,
                    "bounded vertex link is not a disk (chi=" +
                        std::to_string(link.eulerCharacteristic) + ")");
    }
  }

  // A side-end is ((t,c,f), x): the end of side (t,c,f) on edge {c,x}.
  // Wedge adjacency joins the two side-ends of a triangle corner; arc
  // adjacency joins identified side-ends across a face gluing.  Around every
  // link vertex these must form a single path or cycle.
  void analyzeStars(VertexLink& link) const {
    struct End {
      int t, c, f, x;
    };
    std::map<std::array<int, 4>, int> endId;
    std::vector<End> ends;
    auto idOf = [&](int t, int c, int f, int x) {
      std::array<int, 4> k{t, c, f, x};
      auto it = endId.find(k);
      if (it != endId.end()) return it->second;
      endId[k] = (int)ends.size();
      ends.push_back({t, c, f, x});
      return (int)ends.size() - 1;
    };

    for (auto [t, c] : link.triangles)
      for (int f = 0; f < 4; ++f) {
        if (f == c) continue;
        for (int x = 0; x < 4; ++x)
          if (x != c && x != f) idOf(t, c, f, x);
      }

    std::vector<int> wedgeNbr(ends.size(), -1), arcNbr(ends.size(), -1);
    for (int i = 0; i < (int)ends.size(); ++i) {
      const auto& e = ends[(size_t)i];
      // Wedge partner: same (t,c,x), the other face containing both c and x.
      for (int f2 = 0; f2 < 4; ++f2) {
        if (f2 == e.c || f2 == e.x || f2 == e.f) continue;
        wedgeNbr[(size_t)i] = idOf(e.t, e.c, f2, e.x);
      }
      auto p = partnerSide(e.t, e.c, e.f);
      if (p) {
        const auto& g = T.gluing(e.t, e.f);
        arcNbr[(size_t)i] = idOf(p->tet, p->corner, p->face, g->perm[e.x]);
      }
    }

    // Group ends by link vertex.
    std::map<int, std::vector<int>> endsAtVertex;
    for (int i = 0; i < (int)ends.size(); ++i) {
      const auto& e = ends[(size_t)i];
      endsAtVertex[linkVertex(link, e.t, e.c, e.x)].push_back(i);
    }

    link.vertexOnBoundary.assign((size_t)link.linkVertexCount, false);
    link.arcsAroundVertex.assign((size_t)link.linkVertexCount, {});

    for (auto& [v, list] : endsAtVertex) {
      int start = list[0];
      for (int i : list)
        if (arcNbr[(size_t)i] < 0) {
          start = i;
          link.vertexOnBoundary[(size_t)v] = true;
        }
      // Walk alternating wedge / arc steps; consecutive ends joined by an arc
      // step share their arc class, so the rotation records an arc at the
      // start and after each wedge step.
      std::set<int> seen;
      int cur = start;
      bool nextIsWedge = true;
      bool recordArc = true;
      while (seen.insert(cur).second) {
        const auto& e = ends[(size_t)cur];
        if (recordArc)
          link.arcsAroundVertex[(size_t)v].push_back(link.arcIdOfSide.at(sideKey(e.t, e.c, e.f)));
        int next = nextIsWedge ? wedgeNbr[(size_t)cur] : arcNbr[(size_t)cur];
        if (next < 0) break;
        recordArc = nextIsWedge;
        cur = next;
        nextIsWedge = !nextIsWedge;
      }
      if ((int)seen.size() != (int)list.size())
        throw Error(ErrorCode::NonManifoldVertex, "pinched vertex link (star is not a disk)");
    }
  }

  bool computeOrientable(VertexLink& link) const {
    const int F = (int)link.triangles.size();
    std::map<std::pair<int, int>, int> triIdx;
    for (int i = 0; i < F; ++i) triIdx[link.triangles[(size_t)i]] = i;

    std::vector<int> parent(F), parity(F, 0), rnk(F, 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      int p = 0;
      int r = x;
      while (parent[(size_t)r] != r) {
        p ^= parity[(size_t)r];
        r = parent[(size_t)r];
      }
      return std::pair<int, int>{r, p};
    };
    auto unite = [&](int a, int b, int rel) {
      auto [ra, pa] = find(a);
      auto [rb, pb] = find(b);
      if (ra == rb) return (pa ^ pb) == rel;
      if (rnk[(size_t)ra] < rnk[(size_t)rb]) {
        std::swap(ra, rb);
        std::swap(pa, pb);
      }
      parent[(size_t)rb] = ra;
      parity[(size_t)rb] = pa ^ pb ^ rel;
      if (rnk[(size_t)ra] == rnk[(size_t)rb]) ++rnk[(size_t)ra];
      return true;
    };

    for (const auto& arc : link.arcs) {
      if ((int)arc.instances.size() != 2) continue;
      const auto& i1 = arc.instances[0];
      const auto& i2 = arc.instances[1];
      const auto& g = T.gluing(i1.tet, i1.face);
      int a = -1, b = -1;
      for (int x = 0; x < 4; ++x)
        if (x != i1.face && x != i1.corner) (a < 0 ? a : b) = x;
      int d1 = sideDirection(i1.corner, a, b);
      int d2 = sideDirection(i2.corner, g->perm[a], g->perm[b]);
      // Compatible orientations traverse the shared arc in opposite
      // directions; the endpoint correspondence is a -> perm(a).
      int rel = (d1 * d2 == -1) ? 0 : 1;
      if (!unite(triIdx[{i1.tet, i1.corner}], triIdx[{i2.tet, i2.corner}], rel)) return false;
    }
    return true;
  }

  static bool connectedTriangles(const VertexLink& link) {
    if (link.triangles.empty()) return true;
    std::map<std::pair<int, int>, int> triIdx;
    for (int i = 0; i < (int)link.triangles.size(); ++i) triIdx[link.triangles[(size_t)i]] = i;
    std::vector<std::vector<int>> adj(link.triangles.size());
    for (const auto& arc : link.arcs)
      if ((int)arc.instances.size() == 2) {
        int i1 = triIdx.at({arc.instances[0].tet, arc.instances[0].corner});
        int i2 = triIdx.at({arc.instances[1].tet, arc.instances[1].corner});
        adj[(size_t)i1].push_back(i2);
        adj[(size_t)i2].push_back(i1);
      }
    std::vector<bool> vis(link.triangles.size(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int seen = 0;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      ++seen;
      for (int nb : adj[(size_t)cur])
        if (!vis[(size_t)nb]) {
          vis[(size_t)nb] = true;
          stack.push_back(nb);
        }
    }
    return seen == (int)link.triangles.size();
  }

  static int countBoundaryCurves(const VertexLink& link) {
    std::vector<int> freeArcs;
    for (int a = 0; a < (int)link.arcs.size(); ++a)
      if (link.arcs[(size_t)a].boundary) freeArcs.push_back(a);
    if (freeArcs.empty()) return 0;
    std::map<int, std::vector<int>> atVertex;
    for (int a : freeArcs)
      for (int v : {link.arcs[(size_t)a].endVertex[0], link.arcs[(size_t)a].endVertex[1]})
        atVertex[v].push_back(a);
    std::map<int, int> comp;
    int ncomp = 0;
    for (int a : freeArcs) {
      if (comp.count(a)) continue;
      ++ncomp;
      std::vector<int> stack{a};
      comp[a] = ncomp;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int v : {link.arcs[(size_t)cur].endVertex[0], link.arcs[(size_t)cur].endVertex[1]})
          for (int nb : atVertex[v])
            if (!comp.count(nb)) {
              comp[nb] = ncomp;
              stack.push_back(nb);
            }
      }
    }
    return ncomp;
  }
};

}  // namespace detail

inline std::vector<VertexLink> vertexLinks(const Skeleton& skel) {
  return detail::LinkAssembler(skel).build();
}

enum class TriangulationKind { Material, Ideal, Mixed };

inline const char* kindName(TriangulationKind k) {
  switch (k) {
    case TriangulationKind::Material: return "material";
    case TriangulationKind::Ideal: return "ideal";
    case TriangulationKind::Mixed: return "mixed";
  }
  return "?";
}

// material: every link a disk or sphere; ideal: every link closed of genus
// >= 1; mixed otherwise.
inline TriangulationKind classifyTriangulation(const std::vector<VertexLink>& links) {
  bool allMaterial = true, allIdeal = true;
  for (const auto& l : links) {
    bool material = l.isDisk || (l.closed && l.genus == 0);
    bool ideal = l.closed && l.genus >= 1;
    allMaterial = allMaterial && material;
    allIdeal = allIdeal && ideal;
  }
  if (allMaterial) return TriangulationKind::Material;
  if (allIdeal) return TriangulationKind::Ideal;
  return TriangulationKind::Mixed;
}

}  // namespace nk
