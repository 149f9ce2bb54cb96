#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nk/error.hpp"

namespace nk {

using Integer = boost::multiprecision::cpp_int;
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;  // row-major

inline Integer igcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void normalizePrimitive(IVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = igcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Rank by fraction-free (Bareiss) elimination.
inline int rank(IMat A) {
  if (A.empty()) return 0;
  int m = (int)A.size(), n = (int)A[0].size();
  int r = 0;
  Integer prev = 1;
  for (int col = 0; col < n && r < m; ++col) {
    int pivot = -1;
    for (int i = r; i < m; ++i)
      if (A[(size_t)i][(size_t)col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(A[(size_t)r], A[(size_t)pivot]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = col + 1; j < n; ++j) {
        A[(size_t)i][(size_t)j] =
            (A[(size_t)r][(size_t)col] * A[(size_t)i][(size_t)j] -
             A[(size_t)i][(size_t)col] * A[(size_t)r][(size_t)j]) /
            prev;
      }
      A[(size_t)i][(size_t)col] = 0;
    }
    prev = A[(size_t)r][(size_t)col];
    ++r;
  }
  return r;
}

// Basis of the integer kernel lattice {x in Z^n : A x = 0}, returned as a
// list of n-vectors.  Column-style HNF reduction of A with a unimodular
// column tracker.
inline std::vector<IVec> integerKernelBasis(const IMat& A, int n) {
  int m = (int)A.size();
  // work = A columns; tracker = identity (n x n), columns track combinations.
  IMat work((size_t)m, IVec((size_t)n, 0));
  for (int i = 0; i < m; ++i) work[(size_t)i] = A[(size_t)i];
  IMat tracker((size_t)n, IVec((size_t)n, 0));
  for (int i = 0; i < n; ++i) tracker[(size_t)i][(size_t)i] = 1;

  auto colSwap = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(work[(size_t)i][(size_t)a], work[(size_t)i][(size_t)b]);
    for (int i = 0; i < n; ++i)
      std::swap(tracker[(size_t)i][(size_t)a], tracker[(size_t)i][(size_t)b]);
  };
  auto colAddMul = [&](int dst, int src, const Integer& c) {
    for (int i = 0; i < m; ++i)
      work[(size_t)i][(size_t)dst] += c * work[(size_t)i][(size_t)src];
    for (int i = 0; i < n; ++i)
      tracker[(size_t)i][(size_t)dst] += c * tracker[(size_t)i][(size_t)src];
  };

  int lead = 0;
  for (int row = 0; row < m && lead < n; ++row) {
    // Reduce columns lead..n-1 on this row until at most one nonzero remains.
    while (true) {
      int nz = -1, cnt = 0;
      Integer best = 0;
      for (int j = lead; j < n; ++j) {
        const Integer& x = work[(size_t)row][(size_t)j];
        if (x != 0) {
          ++cnt;
          Integer ax = x < 0 ? -x : x;
          if (nz < 0 || ax < best) {
            nz = j;
            best = ax;
          }
        }
      }
      if (cnt == 0) break;
      if (cnt == 1) {
        colSwap(lead, nz);
        ++lead;
        break;
      }
      // Reduce all other columns by the minimal one.
      for (int j = lead; j < n; ++j) {
        if (j == nz || work[(size_t)row][(size_t)j] == 0) continue;
        Integer q = work[(size_t)row][(size_t)j] / work[(size_t)row][(size_t)nz];
        if (q != 0) colAddMul(j, nz, -q);
      }
    }
  }
  std::vector<IVec> basis;
  for (int j = lead; j < n; ++j) {
    IVec col((size_t)n);
    for (int i = 0; i < n; ++i) col[(size_t)i] = tracker[(size_t)i][(size_t)j];
    basis.push_back(std::move(col));
  }
  return basis;
}

// Smith normal form of an m x n matrix: returns diag entries d and Uinv such
// that A = Uinv * D * Vinv for unimodular U, V (only Uinv is tracked; it is
// what the parallelepiped enumeration needs).
struct SmithResult {
  std::vector<Integer> diag;  // nonzero diagonal entries d_1 | d_2 | ...
  IMat Uinv;                  // m x m
};

inline SmithResult smithNormalForm(IMat A) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  IMat Uinv((size_t)m, IVec((size_t)m, 0));
  for (int i = 0; i < m; ++i) Uinv[(size_t)i][(size_t)i] = 1;

  auto rowSwap = [&](int a, int b) {
    std::swap(A[(size_t)a], A[(size_t)b]);
    // row swap on A is left-mult by E (swap); Uinv := Uinv * E^{-1} = column swap
    for (int i = 0; i < m; ++i)
      std::swap(Uinv[(size_t)i][(size_t)a], Uinv[(size_t)i][(size_t)b]);
  };
  auto rowAddMul = [&](int dst, int src, const Integer& c) {
    // A_dst += c A_src  (left mult); inverse subtracts: Uinv col_src -= c col_dst
    for (int j = 0; j < n; ++j)
      A[(size_t)dst][(size_t)j] += c * A[(size_t)src][(size_t)j];
    for (int i = 0; i < m; ++i)
      Uinv[(size_t)i][(size_t)src] -= c * Uinv[(size_t)i][(size_t)dst];
  };
  auto colSwapA = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(A[(size_t)i][(size_t)a], A[(size_t)i][(size_t)b]);
  };
  auto colAddMulA = [&](int dst, int src, const Integer& c) {
    for (int i = 0; i < m; ++i)
      A[(size_t)i][(size_t)dst] += c * A[(size_t)i][(size_t)src];
  };

  int t = 0;
  std::vector<Integer> diag;
  while (t < m && t < n) {
    // Find a nonzero pivot.
    int pi = -1, pj = -1;
    Integer best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (A[(size_t)i][(size_t)j] != 0) {
          Integer ax = A[(size_t)i][(size_t)j] < 0 ? -A[(size_t)i][(size_t)j] : A[(size_t)i][(size_t)j];
          if (pi < 0 || ax < best) {
            pi = i;
            pj = j;
            best = ax;
          }
        }
    if (pi < 0) break;
    rowSwap(t, pi);
    colSwapA(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i)
        if (A[(size_t)i][(size_t)t] != 0) {
          Integer q = A[(size_t)i][(size_t)t] / A[(size_t)t][(size_t)t];
          rowAddMul(i, t, -q);
          if (A[(size_t)i][(size_t)t] != 0) {
            rowSwap(t, i);
            clean = false;
          }
        }
      for (int j = t + 1; j < n; ++j)
        if (A[(size_t)t][(size_t)j] != 0) {
          Integer q = A[(size_t)t][(size_t)j] / A[(size_t)t][(size_t)t];
          colAddMulA(j, t, -q);
          if (A[(size_t)t][(size_t)j] != 0) {
            colSwapA(t, j);
            clean = false;
          }
        }
    }
    if (A[(size_t)t][(size_t)t] < 0) {
      for (int j = t; j < n; ++j) A[(size_t)t][(size_t)j] = -A[(size_t)t][(size_t)j];
      for (int i = 0; i < m; ++i) Uinv[(size_t)i][(size_t)t] = -Uinv[(size_t)i][(size_t)t];
    }
    diag.push_back(A[(size_t)t][(size_t)t]);
    ++t;
  }
  // Divisibility chain is not needed by the parallelepiped enumeration; the
  // group order and coset representatives only use the diagonal.
  return {diag, Uinv};
}

}  // namespace nk
