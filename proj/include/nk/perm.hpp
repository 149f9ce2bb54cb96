#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nk {

// Permutation of {0,1,2,3}, used for corner maps of face gluings.
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d) : img_{(uint8_t)a, (uint8_t)b, (uint8_t)c, (uint8_t)d} {}

  static Perm4 identity() { return Perm4(); }

  // Transposition (a b).
  static Perm4 swap(int a, int b) {
    Perm4 p;
    p.img_[a] = (uint8_t)b;
    p.img_[b] = (uint8_t)a;
    return p;
  }

  // Parses "p0p1p2p3", the images of corners 0123.
  static Perm4 fromString(const std::string& s) {
    if (s.size() != 4) throw std::invalid_argument("permutation string must have 4 digits");
    Perm4 p;
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 4; ++i) {
      char ch = s[(size_t)i];
      if (ch < '0' || ch > '3') throw std::invalid_argument("permutation digit out of range");
      int v = ch - '0';
      if (seen[v]) throw std::invalid_argument("permutation digit repeated");
      seen[v] = true;
      p.img_[i] = (uint8_t)v;
    }
    return p;
  }

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[(size_t)i] = (char)('0' + img_[i]);
    return s;
  }

  int operator[](int i) const { return img_[(size_t)i]; }

  Perm4 inverse() const {
    Perm4 p;
    for (int i = 0; i < 4; ++i) p.img_[(size_t)img_[(size_t)i]] = (uint8_t)i;
    return p;
  }

  // Composition: (a * b)[i] = a[b[i]].
  friend Perm4 operator*(const Perm4& a, const Perm4& b) {
    Perm4 p;
    for (int i = 0; i < 4; ++i) p.img_[(size_t)i] = (uint8_t)a[b[i]];
    return p;
  }

  // +1 for even permutations, -1 for odd.
  int sign() const {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (img_[(size_t)i] > img_[(size_t)j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
  }

  bool isIdentity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

  friend bool operator==(const Perm4& a, const Perm4& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm4& a, const Perm4& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm4& a, const Perm4& b) { return a.img_ < b.img_; }

  // All 24 permutations in lexicographic order of their image strings.
  static const std::array<Perm4, 24>& all() {
    static const std::array<Perm4, 24> table = [] {
      std::array<Perm4, 24> t{};
      int idx = 0;
      int v[4] = {0, 1, 2, 3};
      do {
        t[(size_t)idx++] = Perm4(v[0], v[1], v[2], v[3]);
      } while (std::next_permutation(v, v + 4));
      return t;
    }();
    return table;
  }

 private:
  std::array<uint8_t, 4> img_;
};

}  // namespace nk
