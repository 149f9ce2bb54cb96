#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nk/triangulation.hpp"

namespace nk {

// A combinatorial isomorphism T1 -> T2: a tetrahedron bijection plus a corner
// relabeling per tetrahedron carrying the gluing table of T1 to that of T2.
struct Isomorphism {
  std::vector<int> tetImage;
  std::vector<Perm4> cornerMap;
};

namespace detail {

inline bool extendIsomorphism(const Triangulation& A, const Triangulation& B,
                              std::vector<int>& tetImage, std::vector<Perm4>& cornerMap,
                              std::vector<bool>& used, std::vector<int>& assignedOrder) {
  // Propagate constraints from assigned tetrahedra; assign neighbours.
  for (size_t k = 0; k < assignedOrder.size(); ++k) {
    int t = assignedOrder[k];
    for (int f = 0; f < 4; ++f) {
      const auto& g = A.gluing(t, f);
      int ft = tetImage[(size_t)t];
      int ff = cornerMap[(size_t)t][f];
      const auto& h = B.gluing(ft, ff);
      if (!g) {
        if (h) return false;
        continue;
      }
      if (!h) return false;
      Perm4 req = h->perm * cornerMap[(size_t)t] * g->perm.inverse();
      if (tetImage[(size_t)g->tet] < 0) {
        if (used[(size_t)h->tet]) return false;
        tetImage[(size_t)g->tet] = h->tet;
        used[(size_t)h->tet] = true;
        cornerMap[(size_t)g->tet] = req;
        assignedOrder.push_back(g->tet);
      } else {
        if (tetImage[(size_t)g->tet] != h->tet) return false;
        if (!(cornerMap[(size_t)g->tet] == req)) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Exhaustive backtracking search seeded at every (tet, labeling) of T2 for
// tetrahedron 0 of T1 (then component-wise propagation).  Deterministic:
// returns the first isomorphism in seed order.
inline std::optional<Isomorphism> findIsomorphism(const Triangulation& A, const Triangulation& B) {
  if (A.size() != B.size()) return std::nullopt;
  if (A.size() == 0) return Isomorphism{};
  const int n = A.size();

  for (int seedTet = 0; seedTet < n; ++seedTet)
    for (const Perm4& seedPerm : Perm4::all()) {
      std::vector<int> tetImage((size_t)n, -1);
      std::vector<Perm4> cornerMap((size_t)n);
      std::vector<bool> used((size_t)n, false);
      std::vector<int> order;
      tetImage[0] = seedTet;
      used[(size_t)seedTet] = true;
      cornerMap[0] = seedPerm;
      order.push_back(0);
      bool ok = detail::extendIsomorphism(A, B, tetImage, cornerMap, used, order);
      if (!ok) continue;
      // Handle disconnected triangulations: greedily seed remaining tets.
      bool complete = true;
      std::function<bool(int)> seedRest = [&](int from) -> bool {
        for (int t = from; t < n; ++t) {
          if (tetImage[(size_t)t] >= 0) continue;
          for (int bt = 0; bt < n; ++bt) {
            if (used[(size_t)bt]) continue;
            for (const Perm4& p : Perm4::all()) {
              auto ti = tetImage;
              auto cm = cornerMap;
              auto us = used;
              auto od = order;
              ti[(size_t)t] = bt;
              us[(size_t)bt] = true;
              cm[(size_t)t] = p;
              od.push_back(t);
              std::vector<int> fresh{t};
              if (detail::extendIsomorphism(A, B, ti, cm, us, fresh)) {
                tetImage = ti;
                cornerMap = cm;
                used = us;
                order = od;
                if (seedRest(t + 1)) return true;
              }
            }
          }
          return false;
        }
        return true;
      };
      complete = seedRest(0);
      if (!complete) continue;
      // Final verification.
      bool valid = true;
      for (int t = 0; t < n && valid; ++t)
        for (int f = 0; f < 4 && valid; ++f) {
          const auto& g = A.gluing(t, f);
          const auto& h = B.gluing(tetImage[(size_t)t], cornerMap[(size_t)t][f]);
          if (!g != !h) valid = false;
          if (g && h) {
            if (h->tet != tetImage[(size_t)g->tet]) valid = false;
            else if (!(h->perm == cornerMap[(size_t)g->tet] * g->perm * cornerMap[(size_t)t].inverse()))
              valid = false;
          }
        }
      if (valid) return Isomorphism{tetImage, cornerMap};
    }
  return std::nullopt;
}

inline bool isomorphic(const Triangulation& A, const Triangulation& B) {
  return findIsomorphism(A, B).has_value();
}

}  // namespace nk
