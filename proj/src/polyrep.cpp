#include "polyrep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klr {

void pv_add(PolyVector& v, const Seq& s, const MPoly& f) {
  if (f.is_zero()) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) v.erase(it);
}

bool pv_equal(const PolyVector& a, const PolyVector& b) {
  return a == b;
}

PolyVector PolyRep::act_unit(const Seq& s, const PolyVector& v) const {
  PolyVector out;
  auto it = v.find(s);
  if (it != v.end()) out.emplace(*it);
  return out;
}

PolyVector PolyRep::act_dot(int k, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [s, f] : v) {
    if (k < 0 || k >= static_cast<int>(s.size()))
      throw std::invalid_argument("dot index out of range");
    pv_add(out, s, f * MPoly::var(static_cast<int>(s.size()), k));
  }
  return out;
}

PolyVector PolyRep::act_crossing(int k, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [s, f] : v) {
    const int n = static_cast<int>(s.size());
    if (k < 0 || k + 1 >= n) throw std::invalid_argument("crossing index out of range");
    const int i = s[k], j = s[k + 1];
    if (i == j && c_.positive(i)) {
      pv_add(out, s, f.divided_difference(k));
    } else if (i == j) {
      // multiply by (x_k - x_{k+1})^{-a_ii/2} after the swap
      MPoly g = f.swapped(k);
      MPoly base = MPoly::var(n, k) - MPoly::var(n, k + 1);
      for (int t = 0; t < -c_.a(i, i) / 2; ++t) g = g * base;
      pv_add(out, s, g);
    } else {
      Seq s2(s);
      std::swap(s2[k], s2[k + 1]);
      MPoly g = f.swapped(k);
      MPoly base = MPoly::var(n, k) - MPoly::var(n, k + 1);
      for (int t = 0; t < q_.arrows(i, j); ++t) g = g * base;
      pv_add(out, s2, g);
    }
  }
  return out;
}

PolyVector PolyRep::act_raw(const Algebra& alg, const Algebra::RawTerm& t,
                            const PolyVector& v) const {
  PolyVector cur = act_unit(alg.seq(t.src), v);
  for (size_t idx = t.toks.size(); idx-- > 0;) {
    const Algebra::Tok& tok = t.toks[idx];
    cur = tok.is_x ? act_dot(tok.idx, cur) : act_crossing(tok.idx, cur);
  }
  PolyVector out;
  for (auto& [s, f] : cur) pv_add(out, s, f.scaled(t.coeff));
  return out;
}

PolyVector PolyRep::act_element(const Algebra& alg, const Element& e,
                                const PolyVector& v) const {
  PolyVector out;
  for (const auto& [w, c] : e) {
    Algebra::RawTerm t = alg.word_tokens(w, c);
    PolyVector img = act_raw(alg, t, v);
    for (const auto& [s, f] : img) pv_add(out, s, f);
  }
  return out;
}

PolyVector PolyRep::random_vector(const Weight& nu, int max_exp, std::mt19937_64& rng) const {
  PolyVector v;
  for (const Seq& s : sequences_of(nu)) {
    const int n = static_cast<int>(s.size());
    MPoly f(n);
    for (int t = 0; t < 2; ++t) {
      std::vector<int> mono(n);
      for (int k = 0; k < n; ++k) mono[k] = static_cast<int>(rng() % (max_exp + 1));
      long coef = static_cast<long>(rng() % 9) - 4;
      f.add_term(mono, Rat(coef));
    }
    if (!f.is_zero()) v.emplace(s, f);
  }
  return v;
}

namespace {

// Probe exponent bound: 2 * crossing-count * (largest relation exponent among
// the vertices actually present) + largest dot exponent + slack.
int probe_bound(const Algebra& alg, const Element& a, const Element& b) {
  int crossings = 0, dots = 0, rel = 0;
  const Cartan& c = alg.cartan();
  std::set<int> vertices;
  auto scan = [&](const Element& e) {
    for (const auto& [w, coef] : e) {
      (void)coef;
      crossings = std::max(crossings, perm_length(perm_unkey(w.perm)));
      for (int r : w.exps) dots = std::max(dots, r);
      for (int v : alg.seq(w.src)) vertices.insert(v);
    }
  };
  scan(a);
  scan(b);
  for (int i : vertices) {
    rel = std::max(rel, -c.a(i, i));
    for (int j : vertices)
      if (i != j) rel = std::max(rel, -c.a(i, j));
  }
  return 2 * crossings * rel + dots + 4;
}

}  // namespace

bool elements_equal(Algebra& alg, const Element& a, const Element& b) {
  if (!a.empty() && !b.empty() &&
      weight_of_seq(alg.seq(a.begin()->first.src)) !=
          weight_of_seq(alg.seq(b.begin()->first.src)))
    throw std::invalid_argument("elements_equal: weight mismatch");

  const bool primary = (a == b);

  // redundant oracle route: act on every monomial probe with entries <= bound
  PolyRep rep(alg.quiver());
  const int bound = probe_bound(alg, a, b);
  bool oracle = true;
  std::set<int> srcs;
  for (const auto& [w, c] : a) {
    (void)c;
    srcs.insert(w.src);
  }
  for (const auto& [w, c] : b) {
    (void)c;
    srcs.insert(w.src);
  }
  for (int sid : srcs) {
    const Seq& s = alg.seq(sid);
    const int n = static_cast<int>(s.size());
    std::vector<int> mono(n, 0);
    auto rec = [&](auto&& self, int pos) -> bool {
      if (pos == n) {
        PolyVector v;
        MPoly f(n);
        f.add_term(mono, Rat(1));
        v.emplace(s, f);
        return pv_equal(rep.act_element(alg, a, v), rep.act_element(alg, b, v));
      }
      for (int e = 0; e <= bound; ++e) {
        mono[pos] = e;
        if (!self(self, pos + 1)) return false;
      }
      return true;
    };
    if (!rec(rec, 0)) {
      oracle = false;
      break;
    }
  }
  if (primary != oracle)
    throw std::logic_error("elements_equal: normal-form and probe routes disagree");
  return primary;
}

}  // namespace klr
