#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "nk/linalg.hpp"
#include "nk/normal.hpp"
#include "nk/reconstruct.hpp"

namespace nk {

using Rational = boost::multiprecision::cpp_rational;

// Shared resource guard.  The default node budget can be overridden with the
// NK_RESOURCE_LIMIT environment variable or per call.
class ResourceGuard {
 public:
  explicit ResourceGuard(long long cap = defaultCap()) : cap_(cap) {}

  void tick(long long n = 1) {
    used_ += n;
    if (used_ > cap_) throw Error(ErrorCode::ResourceLimit, "enumeration node budget exhausted");
  }

  static long long defaultCap() {
    if (const char* env = std::getenv("NK_RESOURCE_LIMIT")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 1000000;
  }

 private:
  long long used_ = 0;
  long long cap_;
};

enum class SurfaceTag { Vertex, Fundamental, Brute };

struct SurfaceSet {
  std::vector<NormalCoords> vectors;  // pairwise distinct, lexicographically sorted
  SurfaceTag tag = SurfaceTag::Brute;
};

namespace detail {

inline void sortDedup(std::vector<NormalCoords>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// dim ker(M restricted to the support of r) == 1: the support determines the
// ray, i.e. r spans an extreme ray of its own admissible subcone.
inline bool supportDeterminesRay(const MatchingSystem& M, const NormalCoords& r) {
  std::vector<int> supp;
  for (int i = 0; i < (int)r.size(); ++i)
    if (r[(size_t)i] != 0) supp.push_back(i);
  if (supp.empty()) return false;
  IMat A;
  for (const auto& row : M.rows()) {
    IVec v(supp.size());
    for (size_t k = 0; k < supp.size(); ++k) v[k] = row.coeffs[(size_t)supp[k]];
    A.push_back(std::move(v));
  }
  int rk = A.empty() ? 0 : rank(A);
  return (int)supp.size() - rk == 1;
}

// Double description on {x >= 0, Mx = 0} with per-step deletion of rays
// carrying two quad types in one tetrahedron.  Produces every admissible
// extreme ray of every quad-pattern subcone.
inline std::vector<NormalCoords> filteredDoubleDescription(const MatchingSystem& M, int tets,
                                                           ResourceGuard& guard) {
  const int n = M.columns();
  struct Ray {
    IVec v;
    std::vector<bool> zero;  // coordinate zero-set
  };
  auto mkRay = [&](IVec v) {
    normalizePrimitive(v);
    Ray r;
    r.zero.assign((size_t)n, false);
    for (int i = 0; i < n; ++i) r.zero[(size_t)i] = (v[(size_t)i] == 0);
    r.v = std::move(v);
    return r;
  };
  auto admissibleRay = [&](const IVec& v) {
    for (int t = 0; t < tets; ++t) {
      int types = 0;
      for (int j = 1; j <= 3; ++j)
        if (v[quadIndex(t, j)] != 0) ++types;
      if (types > 1) return false;
    }
    return true;
  };

  std::vector<Ray> rays;
  for (int i = 0; i < n; ++i) {
    IVec v((size_t)n, 0);
    v[(size_t)i] = 1;
    rays.push_back(mkRay(std::move(v)));
  }

  for (const auto& row : M.rows()) {
    std::vector<Ray> zero, pos, neg;
    std::vector<Integer> posVal, negVal;
    for (auto& r : rays) {
      Integer s = 0;
      for (int i = 0; i < n; ++i)
        if (!r.zero[(size_t)i]) s += row.coeffs[(size_t)i] * r.v[(size_t)i];
      if (s == 0)
        zero.push_back(std::move(r));
      else if (s > 0) {
        pos.push_back(std::move(r));
        posVal.push_back(s);
      } else {
        neg.push_back(std::move(r));
        negVal.push_back(-s);
      }
    }
    // Adjacency: r+ and r- are adjacent iff no third ray's zero set contains
    // the intersection of theirs.
    auto adjacent = [&](const Ray& a, const Ray& b) {
      std::vector<bool> common((size_t)n);
      for (int i = 0; i < n; ++i) common[(size_t)i] = a.zero[(size_t)i] && b.zero[(size_t)i];
      auto contains = [&](const Ray& c) {
        if (&c == &a || &c == &b) return false;
        for (int i = 0; i < n; ++i)
          if (common[(size_t)i] && !c.zero[(size_t)i]) return false;
        return true;
      };
      for (const auto& c : zero)
        if (contains(c)) return false;
      for (const auto& c : pos)
        if (contains(c)) return false;
      for (const auto& c : neg)
        if (contains(c)) return false;
      return true;
    };

    std::vector<Ray> next = std::move(zero);
    for (size_t p = 0; p < pos.size(); ++p)
      for (size_t q = 0; q < neg.size(); ++q) {
        guard.tick();
        if (!adjacent(pos[p], neg[q])) continue;
        IVec v((size_t)n);
        for (int i = 0; i < n; ++i)
          v[(size_t)i] = negVal[q] * pos[p].v[(size_t)i] + posVal[p] * neg[q].v[(size_t)i];
        if (!admissibleRay(v)) continue;
        next.push_back(mkRay(std::move(v)));
      }
    rays = std::move(next);
  }

  std::vector<NormalCoords> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  sortDedup(out);
  return out;
}

// Quad pattern of a vector: per tet, 0 (none) or the quad type 1..3.
inline std::vector<int> quadPattern(const NormalCoords& v, int tets) {
  std::vector<int> p((size_t)tets, 0);
  for (int t = 0; t < tets; ++t)
    for (int j = 1; j <= 3; ++j)
      if (v[quadIndex(t, j)] != 0) p[(size_t)t] = j;
  return p;
}

inline bool patternsCompatible(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0 && a[i] != b[i]) return false;
  return true;
}

// Maximal cliques of the ray compatibility graph (Bron-Kerbosch).
inline std::vector<std::vector<int>> maximalCliques(const std::vector<std::vector<bool>>& adj) {
  const int n = (int)adj.size();
  std::vector<std::vector<int>> cliques;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
          cliques.push_back(R);
          return;
        }
        // pivot: vertex of P u X with most neighbours in P
        int pivot = -1, best = -1;
        for (int u : P) {
          int d = 0;
          for (int w : P)
            if (adj[(size_t)u][(size_t)w]) ++d;
          if (d > best) {
            best = d;
            pivot = u;
          }
        }
        for (int u : X) {
          int d = 0;
          for (int w : P)
            if (adj[(size_t)u][(size_t)w]) ++d;
          if (d > best) {
            best = d;
            pivot = u;
          }
        }
        std::vector<int> cand;
        for (int u : P)
          if (pivot < 0 || !adj[(size_t)pivot][(size_t)u]) cand.push_back(u);
        for (int u : cand) {
          std::vector<int> P2, X2;
          for (int w : P)
            if (adj[(size_t)u][(size_t)w]) P2.push_back(w);
          for (int w : X)
            if (adj[(size_t)u][(size_t)w]) X2.push_back(w);
          R.push_back(u);
          bk(R, P2, X2);
          R.pop_back();
          P.erase(std::find(P.begin(), P.end(), u));
          X.push_back(u);
        }
      };
  std::vector<int> R, P((size_t)n), X;
  for (int i = 0; i < n; ++i) P[(size_t)i] = i;
  if (n > 0) bk(R, P, X);
  return cliques;
}

// Triangulation of cone(rays) by pulling from the first ray, recursing into
// coordinate facets.  Rays are indices into `rays`; returns simplices as
// index sets of size dim.
inline void triangulateCone(const std::vector<const NormalCoords*>& rays,
                            const std::vector<int>& subset, int dim,
                            std::set<std::vector<int>>& out, ResourceGuard& guard) {
  guard.tick();
  if ((int)subset.size() == dim) {
    out.insert(subset);
    return;
  }
  int r0 = subset[0];
  const int n = (int)rays[(size_t)r0]->size();
  std::set<std::vector<int>> facets;
  for (int j = 0; j < n; ++j) {
    if ((*rays[(size_t)r0])[(size_t)j] == 0) continue;
    std::vector<int> sub;
    for (int r : subset)
      if ((*rays[(size_t)r])[(size_t)j] == 0) sub.push_back(r);
    if (sub.empty()) continue;
    IMat A;
    for (int r : sub) {
      IVec v(rays[(size_t)r]->begin(), rays[(size_t)r]->end());
      A.push_back(std::move(v));
    }
    if (rank(A) != dim - 1) continue;
    facets.insert(sub);
  }
  for (const auto& f : facets) {
    std::set<std::vector<int>> sub;
    triangulateCone(rays, f, dim - 1, sub, guard);
    for (auto s : sub) {
      s.push_back(r0);
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
    }
  }
}

inline std::vector<Rational> rationalSolve(const std::vector<const NormalCoords*>& cols,
                                           const IVec& rhs) {
  // Solve sum_j lambda_j cols[j] = rhs; cols independent.
  const int d = (int)cols.size();
  const int n = (int)rhs.size();
  std::vector<std::vector<Rational>> A((size_t)n, std::vector<Rational>((size_t)(d + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) A[(size_t)i][(size_t)j] = Rational((*cols[(size_t)j])[(size_t)i]);
    A[(size_t)i][(size_t)d] = Rational(rhs[(size_t)i]);
  }
  int r = 0;
  std::vector<int> pivotCol((size_t)d, -1);
  for (int j = 0; j < d && r < n; ++j) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (A[(size_t)i][(size_t)j] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[(size_t)r], A[(size_t)p]);
    Rational inv = A[(size_t)r][(size_t)j];
    for (int k = j; k <= d; ++k) A[(size_t)r][(size_t)k] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || A[(size_t)i][(size_t)j] == 0) continue;
      Rational f = A[(size_t)i][(size_t)j];
      for (int k = j; k <= d; ++k) A[(size_t)i][(size_t)k] -= f * A[(size_t)r][(size_t)k];
    }
    pivotCol[(size_t)j] = r;
    ++r;
  }
  std::vector<Rational> lambda((size_t)d, Rational(0));
  for (int j = 0; j < d; ++j)
    if (pivotCol[(size_t)j] >= 0) lambda[(size_t)j] = A[(size_t)pivotCol[(size_t)j]][(size_t)d];
  return lambda;
}

inline Integer rationalFloor(const Rational& q) {
  Integer num = numerator(q), den = denominator(q);
  Integer d = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) d -= 1;
  return d;
}

// Lattice points of the half-open parallelepiped spanned by the simplex rays.
inline std::vector<NormalCoords> parallelepipedPoints(const std::vector<const NormalCoords*>& rays,
                                                      ResourceGuard& guard) {
  const int d = (int)rays.size();
  const int n = (int)rays[0]->size();
  IMat S((size_t)n, IVec((size_t)d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) S[(size_t)i][(size_t)j] = (*rays[(size_t)j])[(size_t)i];
  auto snf = smithNormalForm(S);
  if ((int)snf.diag.size() != d)
    throw Error(ErrorCode::Internal, "simplex rays are not independent");
  Integer order = 1;
  for (const auto& x : snf.diag) order *= x;
  if (order > 200000) throw Error(ErrorCode::ResourceLimit, "parallelepiped index too large");

  std::vector<NormalCoords> out;
  std::vector<Integer> g((size_t)d, 0);
  long long total = (long long)order;
  for (long long it = 0; it < total; ++it) {
    guard.tick();
    // decode it into the mixed-radix digits g
    long long rem = it;
    for (int j = 0; j < d; ++j) {
      long long dj = (long long)snf.diag[(size_t)j];
      g[(size_t)j] = Integer(rem % dj);
      rem /= dj;
    }
    // x = Uinv[:, :d] * g
    NormalCoords x((size_t)n, Integer(0));
    bool allZero = true;
    for (int i = 0; i < n; ++i) {
      Integer s = 0;
      for (int j = 0; j < d; ++j) s += snf.Uinv[(size_t)i][(size_t)j] * g[(size_t)j];
      x[(size_t)i] = s;
      if (s != 0) allZero = false;
    }
    if (allZero) continue;
    // Reduce into the half-open parallelepiped: x -= S * floor(lambda).
    auto lambda = rationalSolve(rays, x);
    for (int j = 0; j < d; ++j) {
      Integer fl = rationalFloor(lambda[(size_t)j]);
      if (fl == 0) continue;
      for (int i = 0; i < n; ++i) x[(size_t)i] -= fl * (*rays[(size_t)j])[(size_t)i];
    }
    bool zero = true, nonneg = true;
    for (int i = 0; i < n; ++i) {
      if (x[(size_t)i] != 0) zero = false;
      if (x[(size_t)i] < 0) nonneg = false;
    }
    if (!zero && nonneg) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

// Minimal integer representatives of the extreme rays of the admissible cone.
inline SurfaceSet vertexSurfaces(const Triangulation& T, const Skeleton& skel,
                                 const MatchingSystem& M, ResourceGuard* guardPtr = nullptr) {
  ResourceGuard local;
  ResourceGuard& guard = guardPtr ? *guardPtr : local;
  auto rays = detail::filteredDoubleDescription(M, T.size(), guard);
  std::vector<NormalCoords> out;
  for (auto& r : rays)
    if (detail::supportDeterminesRay(M, r)) out.push_back(std::move(r));
  detail::sortDedup(out);
  return {std::move(out), SurfaceTag::Vertex};
}

// Hilbert basis of the admissible cone: all admissible integer points that do
// not split as a sum of two nonzero admissible points.
inline SurfaceSet fundamentalSurfaces(const Triangulation& T, const Skeleton& skel,
                                      const MatchingSystem& M, ResourceGuard* guardPtr = nullptr) {
  ResourceGuard local;
  ResourceGuard& guard = guardPtr ? *guardPtr : local;
  auto vs = vertexSurfaces(T, skel, M, &guard);
  const auto& rays = vs.vectors;
  const int m = (int)rays.size();
  if (m == 0) return {{}, SurfaceTag::Fundamental};

  std::vector<std::vector<bool>> adj((size_t)m, std::vector<bool>((size_t)m, false));
  std::vector<std::vector<int>> pats;
  for (const auto& r : rays) pats.push_back(detail::quadPattern(r, T.size()));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      adj[(size_t)i][(size_t)j] = adj[(size_t)j][(size_t)i] =
          detail::patternsCompatible(pats[(size_t)i], pats[(size_t)j]);

  auto cliques = detail::maximalCliques(adj);

  std::vector<NormalCoords> candidates;
  for (const auto& r : rays) candidates.push_back(r);
  for (const auto& clique : cliques) {
    std::vector<const NormalCoords*> cr;
    for (int i : clique) cr.push_back(&rays[(size_t)i]);
    IMat A;
    for (auto* r : cr) A.push_back(IVec(r->begin(), r->end()));
    int dim = rank(A);
    std::set<std::vector<int>> simplices;
    std::vector<int> all(clique.begin(), clique.end());
    std::sort(all.begin(), all.end());
    std::vector<const NormalCoords*> allRays;
    for (const auto& r : rays) allRays.push_back(&r);
    detail::triangulateCone(allRays, all, dim, simplices, guard);
    for (const auto& s : simplices) {
      std::vector<const NormalCoords*> sr;
      for (int i : s) sr.push_back(&rays[(size_t)i]);
      auto pts = detail::parallelepipedPoints(sr, guard);
      for (auto& p : pts) candidates.push_back(std::move(p));
    }
  }
  detail::sortDedup(candidates);

  // Weight-greedy reduction: x is fundamental iff no kept y <= x, y != x.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const NormalCoords& a, const NormalCoords& b) {
                     Integer wa = weight(a), wb = weight(b);
                     if (wa != wb) return wa < wb;
                     return a < b;
                   });
  std::vector<NormalCoords> kept;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : kept) {
      bool le = true, eq = true;
      for (size_t i = 0; i < x.size() && le; ++i) {
        if (y[i] > x[i]) le = false;
        if (y[i] != x[i]) eq = false;
      }
      if (le && !eq) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(x);
  }
  detail::sortDedup(kept);
  return {std::move(kept), SurfaceTag::Fundamental};
}

// Exhaustive enumeration of admissible vectors with total weight <= bound.
// Independent of the double-description path: tetrahedron-ordered search with
// arc-count propagation.
inline SurfaceSet bruteForceAdmissible(const Triangulation& T, const Skeleton& skel,
                                       const MatchingSystem& M, long bound,
                                       ResourceGuard* guardPtr = nullptr) {
  ResourceGuard local;
  ResourceGuard& guard = guardPtr ? *guardPtr : local;
  const int n = T.size();
  std::vector<NormalCoords> out;
  if (n == 0 || bound < 0) {
    if (bound >= 0) out.push_back({});
    return {std::move(out), SurfaceTag::Brute};
  }

  // Order tetrahedra so each non-root follows a glued neighbour.
  std::vector<int> order;
  std::vector<bool> seen((size_t)n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[(size_t)root]) continue;
    std::vector<int> queue{root};
    seen[(size_t)root] = true;
    while (!queue.empty()) {
      int t = queue.front();
      queue.erase(queue.begin());
      order.push_back(t);
      for (int f = 0; f < 4; ++f) {
        const auto& g = T.gluing(t, f);
        if (g && !seen[(size_t)g->tet]) {
          seen[(size_t)g->tet] = true;
          queue.push_back(g->tet);
        }
      }
    }
  }
  std::vector<int> pos((size_t)n);
  for (int i = 0; i < n; ++i) pos[(size_t)order[(size_t)i]] = i;

  NormalCoords cur((size_t)(7 * n), Integer(0));
  Integer used = 0;

  // Check all matching equations between tet t and already-assigned tets
  // (including self-gluings).
  auto consistent = [&](int t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = T.gluing(t, f);
      if (!g) continue;
      if (pos[(size_t)g->tet] > pos[(size_t)t]) continue;
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        if (arcCount(cur, t, f, c) != arcCount(cur, g->tet, g->face, g->perm[c])) return false;
      }
    }
    return true;
  };

  std::function<void(int)> rec = [&](int k) {
    guard.tick();
    if (k == n) {
      out.push_back(cur);
      return;
    }
    int t = order[(size_t)k];
    long rem = bound - (long)used;

    // Anchor face: a face glued to an earlier tetrahedron forces the three
    // incident triangle counts once the quad choice is fixed.
    int anchor = -1;
    for (int f = 0; f < 4; ++f) {
      const auto& g = T.gluing(t, f);
      if (g && pos[(size_t)g->tet] < pos[(size_t)t]) anchor = f;
    }

    auto tryAssign = [&](int qt, long q) {
      Integer add = q;
      for (int c = 0; c < 4; ++c) add += cur[triIndex(t, c)];
      if (Integer(rem) < add) return;
      if (consistent(t)) {
        used += add;
        rec(k + 1);
        used -= add;
      }
      (void)qt;
    };

    for (int qt = 0; qt <= 3; ++qt) {
      long qmax = (qt == 0) ? 0 : rem;
      for (long q = (qt == 0 ? 0 : 1); q <= qmax; ++q) {
        if (qt != 0) cur[quadIndex(t, qt)] = q;
        long remq = rem - (qt == 0 ? 0 : q);
        if (anchor >= 0) {
          const auto& g = T.gluing(t, anchor);
          bool feasible = true;
          long forcedSum = 0;
          for (int c = 0; c < 4 && feasible; ++c) {
            if (c == anchor) continue;
            Integer target = arcCount(cur, g->tet, g->face, g->perm[c]);
            Integer quadPart = (qt != 0 && quadTypeCutting(anchor, c) == qt) ? Integer(q) : 0;
            Integer tri = target - quadPart;
            if (tri < 0 || tri > remq) {
              feasible = false;
              break;
            }
            cur[triIndex(t, c)] = tri;
            forcedSum += (long)tri;
          }
          if (feasible && forcedSum <= remq) {
            for (long a = 0; a + forcedSum <= remq; ++a) {
              cur[triIndex(t, anchor)] = a;
              tryAssign(qt, q);
            }
            cur[triIndex(t, anchor)] = 0;
          }
          for (int c = 0; c < 4; ++c)
            if (c != anchor) cur[triIndex(t, c)] = 0;
        } else {
          for (long a0 = 0; a0 <= remq; ++a0) {
            cur[triIndex(t, 0)] = a0;
            for (long a1 = 0; a1 + a0 <= remq; ++a1) {
              cur[triIndex(t, 1)] = a1;
              for (long a2 = 0; a2 + a1 + a0 <= remq; ++a2) {
                cur[triIndex(t, 2)] = a2;
                for (long a3 = 0; a3 + a2 + a1 + a0 <= remq; ++a3) {
                  cur[triIndex(t, 3)] = a3;
                  tryAssign(qt, q);
                }
                cur[triIndex(t, 3)] = 0;
              }
              cur[triIndex(t, 2)] = 0;
            }
            cur[triIndex(t, 1)] = 0;
          }
          cur[triIndex(t, 0)] = 0;
        }
        if (qt != 0) cur[quadIndex(t, qt)] = 0;
      }
    }
  };
  rec(0);
  detail::sortDedup(out);
  return {std::move(out), SurfaceTag::Brute};
}

}  // namespace nk
