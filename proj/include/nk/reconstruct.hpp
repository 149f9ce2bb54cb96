#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "nk/normal.hpp"

namespace nk {

// A single normal disk of a reconstructed surface.
struct NormalDisk {
  int tet = -1;
  bool isQuad = false;
  int cornerOrType = -1;  // corner (triangles) or quad type 1..3
  int pos = 1;            // 1-based position in its stack
};

struct SurfaceComponent {
  int diskCount = 0;
  long eulerCharacteristic = 0;
  bool orientable = true;
  bool closed = false;
  int boundaryCurveCount = 0;
  NormalCoords coords;

  bool isDisk() const { return !closed && eulerCharacteristic == 1 && boundaryCurveCount == 1; }
  bool isSphere() const { return closed && eulerCharacteristic == 2; }
  bool isAnnulus() const {
    return !closed && eulerCharacteristic == 0 && orientable && boundaryCurveCount == 2;
  }
  // For closed orientable components.
  int genus() const { return (int)((2 - eulerCharacteristic) / 2); }
};

// An arc instance of a disk on a face: cuts corner `corner` of face `face` at
// `depth` arcs from the corner.
struct ArcInstance {
  int disk = -1;
  int tet = -1, face = -1, corner = -1;
  long depth = 0;
};

struct FreeArcRecord {
  int arc = -1;  // index into arc instance list
  int cornerClsA = -1, cornerClsB = -1;
  int curve = -1;  // boundary curve id
};

class ReconstructedSurface {
 public:
  ReconstructedSurface(const Triangulation& T, const Skeleton& skel, const NormalCoords& coords)
      : T_(&T), skel_(&skel), coords_(&coords) {
    build();
  }

  const std::vector<NormalDisk>& disks() const { return disks_; }
  const std::vector<SurfaceComponent>& components() const { return components_; }
  int componentOfDisk(int disk) const { return diskComp_[(size_t)disk]; }
  bool closed() const {
    for (const auto& c : components_)
      if (!c.closed) return false;
    return true;
  }
  Integer totalWeight() const {
    Integer w = 0;
    for (const auto& c : components_)
      for (const auto& x : c.coords) w += x;
    return w;
  }
  const std::vector<ArcInstance>& arcInstances() const { return arcs_; }
  const std::vector<FreeArcRecord>& freeArcs() const { return freeArcs_; }
  int boundaryCurveCount() const { return curveCount_; }
  int diskIndexOf(int tet, bool isQuad, int cornerOrType, long pos) const {
    auto it = diskIdx_.find(encodeDisk(tet, isQuad, cornerOrType, pos));
    return it == diskIdx_.end() ? -1 : it->second;
  }
  // Corner class id of a point where a disk crosses an edge (canonical
  // position from the lower-numbered end).
  int cornerClassAt(int tet, int edge, long posFromLow) const {
    auto it = cornerCls_.find(cornerKey(tet, edge, posFromLow));
    return it == cornerCls_.end() ? -1 : it->second;
  }

 private:
  static long long encodeDisk(int tet, bool isQuad, int cornerOrType, long pos) {
    return (((long long)tet * 8 + (isQuad ? 4 + cornerOrType - 1 : cornerOrType)) << 32) | (long long)pos;
  }
  static long long cornerKey(int tet, int edge, long posFromLow) {
    return (((long long)tet * 6 + edge) << 32) | (long long)posFromLow;
  }

  long coordAt(size_t idx) const {
    const Integer& x = (*coords_)[idx];
    if (x > 1000000) throw Error(ErrorCode::ResourceLimit, "coordinate too large to reconstruct");
    return (long)x;
  }

  long triCount(int t, int c) const { return coordAt(triIndex(t, c)); }
  long quadCount(int t) const {
    long q = 0;
    for (int j = 1; j <= 3; ++j) q += coordAt(quadIndex(t, j));
    return q;
  }
  int quadType(int t) const {
    for (int j = 1; j <= 3; ++j)
      if ((*coords_)[quadIndex(t, j)] > 0) return j;
    return 0;
  }

  // Crossings of edge e of tet t, and positions.
  long edgeCrossings(int t, int e) const {
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    long n = triCount(t, a) + triCount(t, b);
    int j = quadType(t);
    if (j > 0 && quadCrossesEdge(j, e)) n += coordAt(quadIndex(t, j));
    return n;
  }

  // Position (1-based from the lower end) at which a given disk crosses edge e.
  long diskPosOnEdge(const NormalDisk& d, int e) const {
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    long N = edgeCrossings(d.tet, e);
    if (!d.isQuad) {
      if (d.cornerOrType == a) return d.pos;
      if (d.cornerOrType == b) return N - d.pos + 1;
      throw Error(ErrorCode::Internal, "triangle does not cross edge");
    }
    int j = d.cornerOrType;
    long q = coordAt(quadIndex(d.tet, j));
    bool aInPair = (a == 0 || a == j);
    // Quad k=1 lies nearest the {0,j} edge.
    long fromPairEnd = triCount(d.tet, aInPair ? a : b) + d.pos;
    return aInPair ? fromPairEnd : N - fromPairEnd + 1;
    (void)q;
  }

  void build() {
    const Triangulation& T = *T_;
    if ((int)coords_->size() != 7 * T.size())
      throw Error(ErrorCode::Internal, "coordinate length mismatch");

    // Materialize disks.
    for (int t = 0; t < T.size(); ++t) {
      for (int c = 0; c < 4; ++c)
        for (long i = 1; i <= triCount(t, c); ++i) {
          diskIdx_[encodeDisk(t, false, c, i)] = (int)disks_.size();
          disks_.push_back({t, false, c, (int)i});
        }
      for (int j = 1; j <= 3; ++j)
        for (long k = 1; k <= coordAt(quadIndex(t, j)); ++k) {
          diskIdx_[encodeDisk(t, true, j, k)] = (int)disks_.size();
          disks_.push_back({t, true, j, (int)k});
        }
    }

    // Arc instances per disk, with arc depth.
    // Triangle (t,c,i): arcs on the three faces containing c at depth i.
    // Quad (t,j,k): arc on face f at depth tri_cut + (k or q-k+1).
    std::map<std::array<long, 4>, int> arcId;  // (t,f,corner,depth) -> arc idx
    auto addArc = [&](int disk, int t, int f, int c, long depth) {
      arcs_.push_back({disk, t, f, c, depth});
      arcId[{t, f, c, depth}] = (int)arcs_.size() - 1;
    };
    for (int di = 0; di < (int)disks_.size(); ++di) {
      const auto& d = disks_[(size_t)di];
      if (!d.isQuad) {
        for (int f = 0; f < 4; ++f)
          if (f != d.cornerOrType) addArc(di, d.tet, f, d.cornerOrType, d.pos);
      } else {
        int j = d.cornerOrType;
        long q = coordAt(quadIndex(d.tet, j));
        for (int f = 0; f < 4; ++f) {
          int c = quadCutCorner(j, f);
          bool facePairA = (f == 0 || f == j);
          // On faces whose cut corner lies in pair B ({x,y} side) the k=1 quad
          // is deepest; on pair-A-cut faces it is shallowest.
          long depth = facePairA ? (triCount(d.tet, c) + d.pos)
                                 : (triCount(d.tet, c) + (q - d.pos + 1));
          // facePairA: faces 0 and j have cut corners j and 0 (pair A).
          addArc(di, d.tet, f, c, depth);
        }
      }
    }

    // Identify arcs across gluings; free arcs on boundary faces.
    std::vector<int> arcPartner(arcs_.size(), -1);
    for (int ai = 0; ai < (int)arcs_.size(); ++ai) {
      const auto& a = arcs_[(size_t)ai];
      const auto& g = T.gluing(a.tet, a.face);
      if (!g) continue;
      auto it = arcId.find({g->tet, g->face, g->perm[a.corner], a.depth});
      if (it == arcId.end())
        throw Error(ErrorCode::Internal, "arc matching failed (vector not in kernel?)");
      arcPartner[(size_t)ai] = it->second;
    }

    // Corner classes: endpoints of arcs on edges, identified per arc pairing.
    UnionFind cornerUF(2 * (int)arcs_.size());
    // Map arc endpoint -> canonical corner key; two arcs within the same tet
    // share endpoints when they cross the same edge at the same position.
    std::map<long long, int> cornerSlotOfKey;
    auto endpointSlot = [&](int ai, int which) { return 2 * ai + which; };
    auto arcEndpointKey = [&](const ArcInstance& a, int which) {
      // Endpoints on the two edges of face a.face at a.corner, ordered by
      // edge id.
      int xs[2], k = 0;
      for (int x = 0; x < 4; ++x)
        if (x != a.face && x != a.corner) xs[k++] = x;
      int e0 = edgeIndexOf(a.corner, xs[0]);
      int e1 = edgeIndexOf(a.corner, xs[1]);
      if (e0 > e1) std::swap(e0, e1);
      int e = (which == 0) ? e0 : e1;
      long N = edgeCrossings(a.tet, e);
      int low = kEdgeEnds[e][0];
      long pos = (a.corner == low) ? a.depth : N - a.depth + 1;
      return cornerKey(a.tet, e, pos);
    };
    for (int ai = 0; ai < (int)arcs_.size(); ++ai)
      for (int w = 0; w < 2; ++w) {
        long long key = arcEndpointKey(arcs_[(size_t)ai], w);
        auto it = cornerSlotOfKey.find(key);
        if (it == cornerSlotOfKey.end())
          cornerSlotOfKey[key] = endpointSlot(ai, w);
        else
          cornerUF.unite(it->second, endpointSlot(ai, w));
      }
    // Across gluings: endpoint correspondence.
    for (int ai = 0; ai < (int)arcs_.size(); ++ai) {
      int bi = arcPartner[(size_t)ai];
      if (bi < 0) continue;
      const auto& a = arcs_[(size_t)ai];
      const auto& g = T.gluing(a.tet, a.face);
      // Which endpoint of the partner corresponds to endpoint w of a?
      int xs[2], k = 0;
      for (int x = 0; x < 4; ++x)
        if (x != a.face && x != a.corner) xs[k++] = x;
      int e0 = edgeIndexOf(a.corner, xs[0]);
      int e1 = edgeIndexOf(a.corner, xs[1]);
      int lowX = (e0 <= e1) ? xs[0] : xs[1];
      int highX = (e0 <= e1) ? xs[1] : xs[0];
      // Endpoint 0 of a sits on edge {corner, lowX}; its image sits on edge
      // {perm(corner), perm(lowX)}.
      const auto& b = arcs_[(size_t)bi];
      int imgLow = g->perm[lowX], imgHigh = g->perm[highX];
      int be0 = edgeIndexOf(b.corner, imgLow);
      int be1 = edgeIndexOf(b.corner, imgHigh);
      int w0 = (be0 <= be1) ? 0 : 1;  // endpoint index of b matching a's endpoint 0
      cornerUF.unite(endpointSlot(ai, 0), endpointSlot(bi, w0));
      cornerUF.unite(endpointSlot(ai, 1), endpointSlot(bi, 1 - w0));
    }

    // Disk components via shared arcs.
    UnionFind diskUF((int)disks_.size());
    for (int ai = 0; ai < (int)arcs_.size(); ++ai)
      if (arcPartner[(size_t)ai] >= 0)
        diskUF.unite(arcs_[(size_t)ai].disk, arcs_[(size_t)arcPartner[(size_t)ai]].disk);

    std::map<int, int> repToComp;
    diskComp_.assign(disks_.size(), -1);
    for (int di = 0; di < (int)disks_.size(); ++di) {
      int r = diskUF.find(di);
      if (!repToComp.count(r)) repToComp[r] = (int)repToComp.size();
      diskComp_[(size_t)di] = repToComp[r];
    }
    components_.assign(repToComp.size(), {});

    // Per-component counts.
    std::vector<std::set<int>> compArcs(components_.size());
    std::vector<std::set<int>> compCorners(components_.size());
    for (int ai = 0; ai < (int)arcs_.size(); ++ai) {
      int comp = diskComp_[(size_t)arcs_[(size_t)ai].disk];
      int canonical = std::min(ai, arcPartner[(size_t)ai] < 0 ? ai : arcPartner[(size_t)ai]);
      compArcs[(size_t)comp].insert(canonical);
      for (int w = 0; w < 2; ++w)
        compCorners[(size_t)comp].insert(cornerUF.find(endpointSlot(ai, w)));
    }
    for (int di = 0; di < (int)disks_.size(); ++di) {
      auto& comp = components_[(size_t)diskComp_[(size_t)di]];
      comp.diskCount += 1;
    }
    for (size_t c = 0; c < components_.size(); ++c) {
      auto& comp = components_[c];
      comp.eulerCharacteristic =
          (long)compCorners[c].size() - (long)compArcs[c].size() + comp.diskCount;
      comp.coords = zeroCoords(T);
    }
    for (int di = 0; di < (int)disks_.size(); ++di) {
      const auto& d = disks_[(size_t)di];
      auto& comp = components_[(size_t)diskComp_[(size_t)di]];
      if (d.isQuad)
        comp.coords[quadIndex(d.tet, d.cornerOrType)] += 1;
      else
        comp.coords[triIndex(d.tet, d.cornerOrType)] += 1;
    }

    computeOrientability(arcPartner);
    traceBoundaryCurves(arcPartner, cornerUF, endpointSlot);

    for (auto& comp : components_) comp.closed = true;
    for (const auto& fa : freeArcs_) {
      components_[(size_t)diskComp_[(size_t)arcs_[(size_t)fa.arc].disk]].closed = false;
    }
    std::vector<std::set<int>> compCurves(components_.size());
    for (const auto& fa : freeArcs_)
      compCurves[(size_t)diskComp_[(size_t)arcs_[(size_t)fa.arc].disk]].insert(fa.curve);
    for (size_t c = 0; c < components_.size(); ++c)
      components_[c].boundaryCurveCount = (int)compCurves[c].size();

    // Keep corner class map for external queries.
    for (auto& [key, slot] : cornerSlotOfKey) cornerCls_[key] = cornerUF.find(slot);
  }

  // Direction of arc a within its disk's canonical boundary cycle, measured
  // from its lower-edge endpoint to its higher-edge endpoint.
  int arcDirection(const ArcInstance& a) const {
    const auto& d = disks_[(size_t)a.disk];
    int xs[2], k = 0;
    for (int x = 0; x < 4; ++x)
      if (x != a.face && x != a.corner) xs[k++] = x;
    int e0 = edgeIndexOf(a.corner, xs[0]);
    int e1 = edgeIndexOf(a.corner, xs[1]);
    int lowX = (e0 <= e1) ? xs[0] : xs[1];
    int highX = (e0 <= e1) ? xs[1] : xs[0];
    if (!d.isQuad) {
      // Cycle visits corners-on-edges {c,u} in faceCycle(c) order.
      const auto& cyc = faceCycle(d.cornerOrType);
      for (int i = 0; i < 3; ++i)
        if (cyc[(size_t)i] == lowX) return (cyc[(size_t)((i + 1) % 3)] == highX) ? +1 : -1;
      return +1;
    }
    // Quad cycle: K(0x) -> K(0y) -> K(jy) -> K(jx) with x<y the pair-B corners.
    int j = d.cornerOrType;
    auto b = quadPairB(j);
    int x = b[0], y = b[1];
    std::array<std::pair<int, int>, 4> cyc = {
        std::pair<int, int>{0, x}, {0, y}, {j, y}, {j, x}};
    // The arc's endpoints as (pairA corner, pairB corner) normalized pairs:
    auto normPair = [&](int c1, int c2) {
      bool c1A = (c1 == 0 || c1 == j);
      return c1A ? std::pair<int, int>{c1, c2} : std::pair<int, int>{c2, c1};
    };
    auto pLow = normPair(a.corner, lowX);
    auto pHigh = normPair(a.corner, highX);
    for (int i = 0; i < 4; ++i)
      if (cyc[(size_t)i] == pLow)
        return (cyc[(size_t)((i + 1) % 4)] == pHigh) ? +1 : -1;
    return +1;
  }

  void computeOrientability(const std::vector<int>& arcPartner) {
    const int F = (int)disks_.size();
    std::vector<int> parent(F), parity(F, 0), rnk(F, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int v) -> std::pair<int, int> {
      int p = 0;
      while (parent[(size_t)v] != v) {
        p ^= parity[(size_t)v];
        v = parent[(size_t)v];
      }
      return {v, p};
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

    std::vector<bool> compBad(components_.size(), false);
    for (int ai = 0; ai < (int)arcs_.size(); ++ai) {
      int bi = arcPartner[(size_t)ai];
      if (bi < 0 || bi < ai) continue;
      const auto& a = arcs_[(size_t)ai];
      const auto& b = arcs_[(size_t)bi];
      const auto& g = T_->gluing(a.tet, a.face);
      int xs[2], k = 0;
      for (int x = 0; x < 4; ++x)
        if (x != a.face && x != a.corner) xs[k++] = x;
      int e0 = edgeIndexOf(a.corner, xs[0]);
      int e1 = edgeIndexOf(a.corner, xs[1]);
      int lowX = (e0 <= e1) ? xs[0] : xs[1];
      int highX = (e0 <= e1) ? xs[1] : xs[0];
      int imgLow = g->perm[lowX], imgHigh = g->perm[highX];
      bool sameOrder = edgeIndexOf(b.corner, imgLow) <= edgeIndexOf(b.corner, imgHigh);
      int d1 = arcDirection(a);
      int d2 = arcDirection(b);
      int prod = d1 * d2 * (sameOrder ? 1 : -1);
      int rel = (prod == -1) ? 0 : 1;
      if (!unite(a.disk, b.disk, rel)) compBad[(size_t)diskComp_[(size_t)a.disk]] = true;
    }
    for (size_t c = 0; c < components_.size(); ++c) components_[c].orientable = !compBad[c];
  }

  template <typename EndpointSlotFn>
  void traceBoundaryCurves(const std::vector<int>& arcPartner, const UnionFind& cornerUF,
                           EndpointSlotFn endpointSlot) {
    std::map<int, std::vector<int>> freeAtCorner;  // corner class -> free arc list idx
    for (int ai = 0; ai < (int)arcs_.size(); ++ai) {
      if (arcPartner[(size_t)ai] >= 0) continue;
      FreeArcRecord rec;
      rec.arc = ai;
      rec.cornerClsA = cornerUF.find(endpointSlot(ai, 0));
      rec.cornerClsB = cornerUF.find(endpointSlot(ai, 1));
      freeArcs_.push_back(rec);
    }
    for (int i = 0; i < (int)freeArcs_.size(); ++i) {
      freeAtCorner[freeArcs_[(size_t)i].cornerClsA].push_back(i);
      freeAtCorner[freeArcs_[(size_t)i].cornerClsB].push_back(i);
    }
    int curve = 0;
    for (int i = 0; i < (int)freeArcs_.size(); ++i) {
      if (freeArcs_[(size_t)i].curve >= 0) continue;
      std::vector<int> stack{i};
      freeArcs_[(size_t)i].curve = curve;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int cc : {freeArcs_[(size_t)cur].cornerClsA, freeArcs_[(size_t)cur].cornerClsB})
          for (int nb : freeAtCorner[cc])
            if (freeArcs_[(size_t)nb].curve < 0) {
              freeArcs_[(size_t)nb].curve = curve;
              stack.push_back(nb);
            }
      }
      ++curve;
    }
    curveCount_ = curve;
  }

  const Triangulation* T_;
  const Skeleton* skel_;
  const NormalCoords* coords_;
  std::vector<NormalDisk> disks_;
  std::vector<ArcInstance> arcs_;
  std::vector<int> diskComp_;
  std::vector<SurfaceComponent> components_;
  std::vector<FreeArcRecord> freeArcs_;
  std::map<long long, int> diskIdx_;
  std::map<long long, int> cornerCls_;
  int curveCount_ = 0;
};

}  // namespace nk
