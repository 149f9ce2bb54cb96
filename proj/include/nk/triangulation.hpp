#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nk/error.hpp"
#include "nk/perm.hpp"

namespace nk {

// Face f of a tetrahedron is the face opposite corner f; its corners are
// {0,1,2,3} \ {f}.  A gluing (t,f) -> (t',f',p) stores the full corner map p
// with p(f) = f'.  Gluings are orientation-reversing: with every tetrahedron
// carrying the standard orientation of its corners 0123, this means p is odd.

struct Gluing {
  int tet = -1;
  int face = -1;
  Perm4 perm;

  bool operator==(const Gluing& o) const { return tet == o.tet && face == o.face && perm == o.perm; }
};

// Canonical edge numbering within a tetrahedron: edges 0..5 are
// {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
inline constexpr int kEdgeEnds[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline int edgeIndexOf(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int table[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

// The two faces of a tetrahedron containing edge e (i.e. the faces opposite
// the two corners not on e).
inline std::array<int, 2> facesContainingEdge(int e) {
  bool onEdge[4] = {false, false, false, false};
  onEdge[kEdgeEnds[e][0]] = onEdge[kEdgeEnds[e][1]] = true;
  std::array<int, 2> out{-1, -1};
  int k = 0;
  for (int c = 0; c < 4; ++c)
    if (!onEdge[c]) out[(size_t)k++] = c;
  return out;
}

class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(int tets, std::string label = "")
      : label_(std::move(label)), gluings_((size_t)tets) {}

  int size() const { return (int)gluings_.size(); }
  const std::string& label() const { return label_; }
  void setLabel(std::string s) { label_ = std::move(s); }

  const std::optional<Gluing>& gluing(int tet, int face) const {
    return gluings_[(size_t)tet][(size_t)face];
  }

  bool isBoundaryFace(int tet, int face) const { return !gluing(tet, face).has_value(); }

  int boundaryFaceCount() const {
    int n = 0;
    for (int t = 0; t < size(); ++t)
      for (int f = 0; f < 4; ++f)
        if (isBoundaryFace(t, f)) ++n;
    return n;
  }

  bool hasBoundary() const { return boundaryFaceCount() > 0; }

  int newTetrahedron() {
    gluings_.emplace_back();
    return size() - 1;
  }

  // Records the gluing (t,f) -> (t2,f2,p) together with its involution
  // partner.  Throws if either slot is occupied with a conflicting record or
  // the gluing violates a type invariant.
  void glue(int t, int f, int t2, int f2, const Perm4& p) {
    checkFaceRef(t, f);
    checkFaceRef(t2, f2);
    if (p[f] != f2)
      throw Error(ErrorCode::MalformedFile, "permutation does not carry face " + std::to_string(f) +
                                                " to face " + std::to_string(f2));
    if (t == t2 && f == f2 && p.isIdentity())
      throw Error(ErrorCode::InvolutionViolation, "face glued to itself with the identity");
    if (p.sign() != -1)
      throw Error(ErrorCode::OrientationViolation,
                  "gluing permutation " + p.str() + " is orientation-preserving");
    Gluing fwd{t2, f2, p};
    Gluing bwd{t, f, p.inverse()};
    setSlot(t, f, fwd);
    if (!(t == t2 && f == f2)) setSlot(t2, f2, bwd);
    else if (!(fwd == bwd))
      throw Error(ErrorCode::InvolutionViolation, "self-gluing permutation is not an involution");
  }

  void unglue(int t, int f) {
    auto g = gluing(t, f);
    if (!g) return;
    gluings_[(size_t)t][(size_t)f].reset();
    if (!(g->tet == t && g->face == f)) gluings_[(size_t)g->tet][(size_t)g->face].reset();
  }

  // Checks the full involution/orientation invariants over the stored table.
  void validate() const {
    for (int t = 0; t < size(); ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = gluing(t, f);
        if (!g) continue;
        if (g->tet < 0 || g->tet >= size() || g->face < 0 || g->face > 3)
          throw Error(ErrorCode::MalformedFile, "gluing target out of range");
        if (g->perm[f] != g->face)
          throw Error(ErrorCode::MalformedFile, "permutation/face mismatch in gluing table");
        const auto& back = gluing(g->tet, g->face);
        if (!back || back->tet != t || back->face != f || !(back->perm == g->perm.inverse()))
          throw Error(ErrorCode::InvolutionViolation,
                      "gluing of (" + std::to_string(t) + "," + std::to_string(f) +
                          ") has no consistent inverse entry");
        if (g->tet == t && g->face == f && g->perm.isIdentity())
          throw Error(ErrorCode::InvolutionViolation, "face glued to itself with the identity");
        if (g->perm.sign() != -1)
          throw Error(ErrorCode::OrientationViolation, "gluing permutation is orientation-preserving");
      }
  }

  // Relabels tetrahedra by tet -> tetPerm[tet] and corners of each tet t by
  // cornerPerms[t]; used by isomorphism tests and fixture construction.
  Triangulation relabeled(const std::vector<int>& tetPerm, const std::vector<Perm4>& cornerPerms) const {
    Triangulation out(size(), label_);
    for (int t = 0; t < size(); ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = gluing(t, f);
        if (!g) continue;
        int nt = tetPerm[(size_t)t];
        int nf = cornerPerms[(size_t)t][f];
        Gluing ng;
        ng.tet = tetPerm[(size_t)g->tet];
        ng.face = cornerPerms[(size_t)g->tet][g->face];
        ng.perm = cornerPerms[(size_t)g->tet] * g->perm * cornerPerms[(size_t)t].inverse();
        out.gluings_[(size_t)nt][(size_t)nf] = ng;
      }
    out.validate();
    return out;
  }

  bool operator==(const Triangulation& o) const { return gluings_ == o.gluings_; }

 private:
  void checkFaceRef(int t, int f) const {
    if (t < 0 || t >= size() || f < 0 || f > 3)
      throw Error(ErrorCode::MalformedFile, "tetrahedron/face reference out of range");
  }

  void setSlot(int t, int f, const Gluing& g) {
    auto& slot = gluings_[(size_t)t][(size_t)f];
    if (slot) {
      if (*slot == g) return;
      throw Error(ErrorCode::InvolutionViolation,
                  "conflicting gluings for (" + std::to_string(t) + "," + std::to_string(f) + ")");
    }
    slot = g;
  }

  std::string label_;
  std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
};

}  // namespace nk
