#pragma once

// Normal-form basis words and their linear combinations. A basis word is
// x_1^{r_1}...x_n^{r_n} . tau_omega . 1_i with the dots recorded at the
// target sequence and omega represented by its fixed reduced word (the
// lexicographically smallest one, recomputed on demand from the packed
// permutation).

#include <cstdint>
#include <map>
#include <vector>

#include "rat.hpp"

namespace klr {

struct Word {
  int src = 0;             // interned source sequence id
  std::uint64_t perm = 0;  // packed permutation (see perm_key)
  std::vector<int> exps;   // dot exponents, indexed by target strand

  bool operator<(const Word& o) const {
    if (src != o.src) return src < o.src;
    if (perm != o.perm) return perm < o.perm;
    return exps < o.exps;
  }
  bool operator==(const Word& o) const {
    return src == o.src && perm == o.perm && exps == o.exps;
  }
};

using Element = std::map<Word, Rat>;

inline void add_term(Element& e, const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) e.erase(it);
}

inline void add_scaled(Element& e, const Element& f, const Rat& c) {
  if (c == 0) return;
  for (const auto& [w, v] : f) add_term(e, w, v * c);
}

inline Element scaled(const Element& e, const Rat& c) {
  Element r;
  add_scaled(r, e, c);
  return r;
}

inline Element sum(const Element& a, const Element& b) {
  Element r(a);
  add_scaled(r, b, Rat(1));
  return r;
}

inline Element difference(const Element& a, const Element& b) {
  Element r(a);
  add_scaled(r, b, Rat(-1));
  return r;
}

}  // namespace klr
