#pragma once

// Permutations in one-line notation (p[a] = image of position a, 0-based)
// plus the fixed reduced-word convention: every permutation is represented by
// its lexicographically smallest reduced word in the generators s_1 < s_2 <
// ..., built greedily from minimal left descents.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klr {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

/// (a after b): r(x) = a(b(x)).
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

inline int perm_length(const Perm& p) {
  int inv = 0;
  for (size_t x = 0; x < p.size(); ++x)
    for (size_t y = x + 1; y < p.size(); ++y)
      if (p[x] > p[y]) ++inv;
  return inv;
}

/// Compose with the transposition s_a on the left: swaps the values a, a+1.
inline Perm perm_left_mul_s(int a, const Perm& p) {
  Perm r(p);
  for (auto& v : r) {
    if (v == a)
      v = a + 1;
    else if (v == a + 1)
      v = a;
  }
  return r;
}

/// True iff length(s_a p) < length(p).
inline bool perm_left_descent(const Perm& p, int a) {
  int pos_a = -1, pos_a1 = -1;
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] == a) pos_a = static_cast<int>(x);
    if (p[x] == a + 1) pos_a1 = static_cast<int>(x);
  }
  return pos_a > pos_a1;
}

/// Fixed reduced word, in product order (first letter = leftmost factor):
/// the lexicographically smallest reduced word, via minimal left descents.
inline std::vector<int> canonical_word(Perm p) {
  std::vector<int> word;
  const int n = static_cast<int>(p.size());
  for (;;) {
    int c = -1;
    for (int a = 0; a + 1 < n; ++a)
      if (perm_left_descent(p, a)) {
        c = a;
        break;
      }
    if (c < 0) break;
    word.push_back(c);
    p = perm_left_mul_s(c, p);
  }
  return word;
}

/// Permutation of a word in product order: s_{w0} s_{w1} ... as functions.
inline Perm perm_of_word(const std::vector<int>& word, int n) {
  Perm p = perm_identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = perm_left_mul_s(*it, p);
  return p;
}

/// Packed key; supports n <= 12.
inline std::uint64_t perm_key(const Perm& p) {
  if (p.size() > 12) throw std::invalid_argument("perm_key: rank too large");
  std::uint64_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) k |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return k | (static_cast<std::uint64_t>(p.size()) << 60);
}

inline Perm perm_unkey(std::uint64_t key) {
  int n = static_cast<int>(key >> 60);
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<int>((key >> (4 * i)) & 0xF);
  return p;
}

template <typename T>
inline void swap_adjacent(std::vector<T>& v, int a) {
  std::swap(v[a], v[a + 1]);
}

}  // namespace klr
