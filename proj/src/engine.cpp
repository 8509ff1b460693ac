#include "engine.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

namespace {

long binom_long(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

Algebra::Algebra(Quiver q) : q_(std::move(q)), c_(q_) {}

int Algebra::seq_id(const Seq& s) {
  for (int v : s)
    if (v < 0 || v >= q_.vertex_count())
      throw std::invalid_argument("sequence refers to a vertex outside the quiver");
  auto it = seq_ids_.find(s);
  if (it != seq_ids_.end()) return it->second;
  int id = static_cast<int>(seqs_.size());
  seqs_.push_back(s);
  seq_ids_.emplace(s, id);
  return id;
}

Seq Algebra::target_seq(const Word& w) const {
  const Seq& s = seq(w.src);
  Perm p = perm_unkey(w.perm);
  Seq out(s.size());
  for (size_t x = 0; x < s.size(); ++x) out[static_cast<size_t>(p[x])] = s[x];
  return out;
}

Algebra::RawTerm Algebra::word_tokens(const Word& w, const Rat& coeff) const {
  RawTerm t{coeff, w.src, {}};
  for (size_t k = 0; k < w.exps.size(); ++k)
    for (int c = 0; c < w.exps[k]; ++c) t.toks.push_back(Tok{true, static_cast<int>(k)});
  for (int a : canonical_word(perm_unkey(w.perm))) t.toks.push_back(Tok{false, a});
  return t;
}

Seq Algebra::seq_after(int src, const std::vector<int>& letters, size_t from) const {
  Seq cur = seq(src);
  for (size_t idx = letters.size(); idx-- > from;) swap_adjacent(cur, letters[idx]);
  return cur;
}

Seq Algebra::seq_below_tok(const RawTerm& t, size_t p) const {
  Seq cur = seq(t.src);
  for (size_t idx = t.toks.size(); idx-- > p + 1;)
    if (!t.toks[idx].is_x) swap_adjacent(cur, t.toks[idx].idx);
  return cur;
}

// --- relation polynomial expansions ---------------------------------------

std::vector<std::pair<Rat, std::pair<int, int>>> Algebra::double_crossing_monomials(
    int ci, int cj) const {
  std::vector<std::pair<Rat, std::pair<int, int>>> out;
  int sign, M;
  if (ci == cj) {
    if (c_.positive(ci)) return out;  // tau_k^2 = 0 in the nil-Hecke case
    int half = -c_.a(ci, ci) / 2;
    sign = (half % 2 == 0) ? 1 : -1;  // (-1)^{a_ii/2}
    M = -c_.a(ci, ci);
  } else {
    sign = (q_.arrows(ci, cj) % 2 == 0) ? 1 : -1;  // (-1)^{h_ij}
    M = -c_.a(ci, cj);
  }
  for (int t = 0; t <= M; ++t) {
    Rat coeff = Rat(sign * (t % 2 == 0 ? 1 : -1)) * Rat(binom_long(M, t));
    out.emplace_back(coeff, std::make_pair(M - t, t));
  }
  return out;
}

std::vector<std::pair<Rat, std::array<int, 3>>> Algebra::braid_corr_monomials(int ci,
                                                                              int cj) const {
  // (-1)^{h_ij} sum_e (x_k - x_{k+1})^e (x_{k+2} - x_{k+1})^{M-1-e}, M = -a_ij
  std::vector<std::pair<Rat, std::array<int, 3>>> out;
  int M = -c_.a(ci, cj);
  if (M <= 0) return out;
  int sign = (q_.arrows(ci, cj) % 2 == 0) ? 1 : -1;
  for (int e = 0; e <= M - 1; ++e)
    for (int s = 0; s <= e; ++s)
      for (int t = 0; t <= M - 1 - e; ++t) {
        long c = binom_long(e, s) * binom_long(M - 1 - e, t);
        Rat coeff = Rat(sign * ((s + t) % 2 == 0 ? 1 : -1)) * Rat(c);
        out.emplace_back(coeff, std::array<int, 3>{e - s, s + t, M - 1 - e - t});
      }
  return out;
}

// --- the rewriting core ----------------------------------------------------

Algebra::PullResult Algebra::pull_to_front(int src, const std::vector<int>& letters, int c) {
  // precondition: letters is a reduced word and c is a left descent of its
  // permutation; braid and commutation moves only, corrections spill out
  if (letters.empty() || letters[0] == c) return {letters, {}};
  const int b = letters[0];
  std::vector<int> v(letters.begin() + 1, letters.end());
  PullResult r1 = pull_to_front(src, v, c);
  PullResult out;
  if (std::abs(b - c) >= 2) {
    out.main.assign({c, b});
    out.main.insert(out.main.end(), r1.main.begin() + 1, r1.main.end());
    for (auto& [coef, toks] : r1.corrs) {
      toks.insert(toks.begin(), Tok{false, b});
      out.corrs.emplace_back(std::move(coef), std::move(toks));
    }
    return out;
  }
  // adjacent letters: bring the pattern [b, c, b] to the top, then braid
  std::vector<int> v1p(r1.main.begin() + 1, r1.main.end());
  PullResult r2 = pull_to_front(src, v1p, b);
  std::vector<int> v2p(r2.main.begin() + 1, r2.main.end());
  out.main.assign({c, b, c});
  out.main.insert(out.main.end(), v2p.begin(), v2p.end());
  for (auto& [coef, toks] : r1.corrs) {
    toks.insert(toks.begin(), Tok{false, b});
    out.corrs.emplace_back(std::move(coef), std::move(toks));
  }
  for (auto& [coef, toks] : r2.corrs) {
    toks.insert(toks.begin(), Tok{false, c});
    toks.insert(toks.begin(), Tok{false, b});
    out.corrs.emplace_back(std::move(coef), std::move(toks));
  }
  const int k = std::min(b, c);
  Seq m = seq_after(src, v2p, 0);
  if (m[k] == m[k + 2] && c_.positive(m[k]) && m[k + 1] != m[k]) {
    Rat sign = (b == k) ? Rat(1) : Rat(-1);
    for (const auto& [coef, trip] : braid_corr_monomials(m[k], m[k + 1])) {
      std::vector<Tok> toks;
      for (int copies = 0; copies < trip[0]; ++copies) toks.push_back(Tok{true, k});
      for (int copies = 0; copies < trip[1]; ++copies) toks.push_back(Tok{true, k + 1});
      for (int copies = 0; copies < trip[2]; ++copies) toks.push_back(Tok{true, k + 2});
      for (int a : v2p) toks.push_back(Tok{false, a});
      out.corrs.emplace_back(sign * coef, std::move(toks));
    }
  }
  return out;
}

const Element& Algebra::reduce_tword(int src, const std::vector<int>& letters) {
  auto key = std::make_pair(src, letters);
  auto hit = tword_cache_.find(key);
  if (hit != tword_cache_.end()) return hit->second;

  const int n = static_cast<int>(seq(src).size());
  Element result;
  std::vector<RawTerm> spill;

  // scan bottom-up for the first non-reduced step
  Perm suf = perm_identity(n);
  int found = -1;
  for (int idx = static_cast<int>(letters.size()) - 1; idx >= 0; --idx) {
    int a = letters[idx];
    if (perm_left_descent(suf, a)) {
      found = idx;
      break;
    }
    suf = perm_left_mul_s(a, suf);
  }

  if (found >= 0) {
    // pull the duplicate letter up and resolve the double crossing
    std::vector<int> below(letters.begin() + found + 1, letters.end());
    const int a = letters[found];
    PullResult pr = pull_to_front(src, below, a);
    std::vector<int> rest(pr.main.begin() + 1, pr.main.end());
    Seq m = seq_after(src, rest, 0);
    std::vector<Tok> prefix;
    for (int t = 0; t < found; ++t) prefix.push_back(Tok{false, letters[t]});
    // the double crossing consumes both letters[found] and pr.main[0]
    for (const auto& [coef, mono] : double_crossing_monomials(m[a], m[a + 1])) {
      RawTerm t{coef, src, prefix};
      for (int copies = 0; copies < mono.first; ++copies) t.toks.push_back(Tok{true, a});
      for (int copies = 0; copies < mono.second; ++copies) t.toks.push_back(Tok{true, a + 1});
      for (int letter : rest) t.toks.push_back(Tok{false, letter});
      spill.push_back(std::move(t));
    }
    // pull corrections replaced only the part below letters[found]
    for (auto& [coef, toks] : pr.corrs) {
      RawTerm t{coef, src, prefix};
      t.toks.push_back(Tok{false, a});
      t.toks.insert(t.toks.end(), toks.begin(), toks.end());
      spill.push_back(std::move(t));
    }
  } else {
    // reduced: braid toward the canonical word, spilling corrections
    const Perm total = suf;
    const std::vector<int> canonw = canonical_word(total);
    std::vector<int> cur(letters);
    while (cur != canonw) {
      size_t k = 0;
      while (cur[k] == canonw[k]) ++k;
      std::vector<int> tail(cur.begin() + k, cur.end());
      PullResult pr = pull_to_front(src, tail, canonw[k]);
      for (auto& [coef, toks] : pr.corrs) {
        RawTerm t{coef, src, {}};
        for (size_t p = 0; p < k; ++p) t.toks.push_back(Tok{false, cur[p]});
        t.toks.insert(t.toks.end(), toks.begin(), toks.end());
        spill.push_back(std::move(t));
      }
      cur.resize(k);
      cur.insert(cur.end(), pr.main.begin(), pr.main.end());
    }
    Word w{src, perm_key(total), std::vector<int>(n, 0)};
    add_term(result, w, Rat(1));
  }

  for (auto& t : spill) add_scaled(result, reduce(std::move(t)), Rat(1));
  return tword_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Element Algebra::reduce(RawTerm t0) {
  Element out;
  std::vector<RawTerm> work;
  work.push_back(std::move(t0));
  while (!work.empty()) {
    RawTerm cur = std::move(work.back());
    work.pop_back();
    if (cur.coeff == 0) continue;
    const int n = static_cast<int>(seq(cur.src).size());
    for (const Tok& tok : cur.toks) {
      int limit = tok.is_x ? n : n - 1;
      if (tok.idx < 0 || tok.idx >= limit)
        throw std::invalid_argument("word token index out of range for the weight");
    }

    // move any dot sitting directly under a crossing
    bool rewritten = false;
    for (size_t p = 0; p + 1 < cur.toks.size(); ++p) {
      if (cur.toks[p].is_x || !cur.toks[p + 1].is_x) continue;
      const int a = cur.toks[p].idx;
      const int m = cur.toks[p + 1].idx;
      Seq s = seq_below_tok(cur, p);
      RawTerm main = cur;
      main.toks[p] = Tok{true, m == a ? a + 1 : (m == a + 1 ? a : m)};
      main.toks[p + 1] = Tok{false, a};
      if ((m == a || m == a + 1) && s[a] == s[a + 1] && c_.positive(s[a])) {
        RawTerm corr = cur;
        corr.toks.erase(corr.toks.begin() + p, corr.toks.begin() + p + 2);
        corr.coeff = (m == a) ? cur.coeff : -cur.coeff;
        work.push_back(std::move(corr));
      }
      work.push_back(std::move(main));
      rewritten = true;
      break;
    }
    if (rewritten) continue;

    // dots are all on top now; split off the crossing word
    std::vector<int> exps(n, 0);
    std::vector<int> letters;
    for (const Tok& tok : cur.toks) {
      if (tok.is_x)
        ++exps[tok.idx];
      else
        letters.push_back(tok.idx);
    }
    const Element& e = reduce_tword(cur.src, letters);
    for (const auto& [w, c] : e) {
      Word w2 = w;
      for (int k = 0; k < n; ++k) w2.exps[k] += exps[k];
      add_term(out, w2, c * cur.coeff);
    }
  }
  return out;
}

// --- dots through a crossing word (bulk) -----------------------------------

std::vector<Algebra::DotBranch> Algebra::slide_dots(const std::vector<int>& letters,
                                                    const Seq& bottom,
                                                    const std::vector<int>& exps) const {
  std::vector<DotBranch> branches{DotBranch{Rat(1), exps, {}}};
  Seq cur = bottom;
  for (size_t idx = letters.size(); idx-- > 0;) {
    const int a = letters[idx];
    const bool nil_pair = (cur[a] == cur[a + 1]) && c_.positive(cur[a]);
    std::vector<DotBranch> next;
    for (DotBranch& br : branches) {
      if (nil_pair && br.exps[a] != br.exps[a + 1]) {
        const int p = br.exps[a], q = br.exps[a + 1];
        if (p > q) {
          for (int e = 0; e <= p - q - 1; ++e) {
            DotBranch d{br.coeff, br.exps, br.kept};
            d.exps[a] = q + e;
            d.exps[a + 1] = p - 1 - e;
            next.push_back(std::move(d));
          }
        } else {
          for (int e = 0; e <= q - p - 1; ++e) {
            DotBranch d{-br.coeff, br.exps, br.kept};
            d.exps[a] = p + e;
            d.exps[a + 1] = q - 1 - e;
            next.push_back(std::move(d));
          }
        }
      }
      std::swap(br.exps[a], br.exps[a + 1]);
      br.kept.insert(br.kept.begin(), a);
      next.push_back(std::move(br));
    }
    branches = std::move(next);
    swap_adjacent(cur, a);
  }
  return branches;
}

// --- public algebra operations ---------------------------------------------

Element Algebra::mul_words(const Word& a, const Word& b) {
  Element out;
  if (target_seq(b) != seq(a.src)) return out;
  const int n = static_cast<int>(seq(a.src).size());
  const std::vector<int> letters1 = canonical_word(perm_unkey(a.perm));
  const std::vector<int> letters2 = canonical_word(perm_unkey(b.perm));
  for (const DotBranch& br : slide_dots(letters1, seq(a.src), b.exps)) {
    std::vector<int> combined(br.kept);
    combined.insert(combined.end(), letters2.begin(), letters2.end());
    const Element& e = reduce_tword(b.src, combined);
    for (const auto& [w, c] : e) {
      Word w2 = w;
      for (int k = 0; k < n; ++k) w2.exps[k] += br.exps[k] + a.exps[k];
      add_term(out, w2, c * br.coeff);
    }
  }
  return out;
}

Element Algebra::mul(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) add_scaled(out, mul_words(wa, wb), ca * cb);
  return out;
}

Element Algebra::psi(const Element& e) {
  Element out;
  for (const auto& [w, c] : e) {
    RawTerm t = word_tokens(w, c);
    std::reverse(t.toks.begin(), t.toks.end());
    t.src = seq_id(target_seq(w));
    add_scaled(out, reduce(std::move(t)), Rat(1));
  }
  return out;
}

Element Algebra::tensor(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      const Seq& sa = seq(wa.src);
      const Seq& sb = seq(wb.src);
      const int n1 = static_cast<int>(sa.size());
      Seq s(sa);
      s.insert(s.end(), sb.begin(), sb.end());
      Perm pa = perm_unkey(wa.perm), pb = perm_unkey(wb.perm);
      Perm p(s.size());
      for (int i = 0; i < n1; ++i) p[i] = pa[i];
      for (size_t j = 0; j < sb.size(); ++j) p[n1 + j] = n1 + pb[j];
      Word w{seq_id(s), perm_key(p), wa.exps};
      w.exps.insert(w.exps.end(), wb.exps.begin(), wb.exps.end());
      add_term(out, w, ca * cb);
    }
  return out;
}

Element Algebra::unit(const Seq& s) {
  Element e;
  Word w{seq_id(s), perm_key(perm_identity(static_cast<int>(s.size()))),
         std::vector<int>(s.size(), 0)};
  add_term(e, w, Rat(1));
  return e;
}

Element Algebra::weight_unit(const Weight& nu) {
  Element e;
  for (const Seq& s : sequences_of(nu)) add_scaled(e, unit(s), Rat(1));
  return e;
}

Element Algebra::dot(const Seq& s, int k, int power) {
  Element e;
  Word w{seq_id(s), perm_key(perm_identity(static_cast<int>(s.size()))),
         std::vector<int>(s.size(), 0)};
  w.exps.at(static_cast<size_t>(k)) = power;
  add_term(e, w, Rat(1));
  return e;
}

Element Algebra::crossing(const Seq& s, int k) {
  if (k < 0 || k + 1 >= static_cast<int>(s.size()))
    throw std::invalid_argument("crossing index out of range");
  Perm p = perm_identity(static_cast<int>(s.size()));
  std::swap(p[k], p[k + 1]);
  Element e;
  Word w{seq_id(s), perm_key(p), std::vector<int>(s.size(), 0)};
  add_term(e, w, Rat(1));
  return e;
}

MPoly Algebra::h_poly(int vertex) const {
  if (c_.positive(vertex))
    throw std::invalid_argument("H_i is defined only for vertices with a_ii <= 0");
  int M = -c_.a(vertex, vertex);
  int half = M / 2;
  MPoly base = MPoly::var(2, 0) - MPoly::var(2, 1);
  MPoly out(2, Rat(half % 2 == 0 ? 1 : -1));
  for (int t = 0; t < M; ++t) out = out * base;
  return out;
}

MPoly Algebra::q_poly(int i, int j) const {
  if (i == j) throw std::invalid_argument("Q_ij requires distinct vertices");
  int M = -c_.a(i, j);
  MPoly base = MPoly::var(2, 0) - MPoly::var(2, 1);
  MPoly out(2, Rat(q_.arrows(i, j) % 2 == 0 ? 1 : -1));
  for (int t = 0; t < M; ++t) out = out * base;
  return out;
}

Element Algebra::symmetrizer(int vertex, int n) {
  if (c_.klass(vertex) != VertexClass::Zero)
    throw std::invalid_argument("symmetrizer requires a vertex with a_ii = 0");
  if (n < 1) throw std::invalid_argument("symmetrizer: n must be >= 1");
  Seq s(static_cast<size_t>(n), vertex);
  int id = seq_id(s);
  Element e;
  Perm p = perm_identity(n);
  std::sort(p.begin(), p.end());
  Rat coeff = Rat(1) / Rat(factorial(static_cast<unsigned>(n)));
  do {
    add_term(e, Word{id, perm_key(p), std::vector<int>(s.size(), 0)}, coeff);
  } while (std::next_permutation(p.begin(), p.end()));
  return e;
}

Element Algebra::divided_power_idempotent(int vertex, int m) {
  if (!c_.positive(vertex))
    throw std::invalid_argument("divided-power idempotent requires a_ii = 2");
  if (m < 1) throw std::invalid_argument("divided power: m must be >= 1");
  Seq s(static_cast<size_t>(m), vertex);
  Perm w0(m);
  for (int i = 0; i < m; ++i) w0[i] = m - 1 - i;
  std::vector<int> exps(s.size(), 0);
  for (int k = 0; k < m; ++k) exps[k] = m - 1 - k;
  Element e;
  add_term(e, Word{seq_id(s), perm_key(w0), exps}, Rat(1));
  return e;
}

int Algebra::crossing_degree(const Seq& at, int k) const {
  return -c_.a(at[k], at[k + 1]);
}

int Algebra::tau_degree(int src, const Perm& p) const {
  Seq cur = seq(src);
  int deg = 0;
  std::vector<int> w = canonical_word(p);
  for (size_t idx = w.size(); idx-- > 0;) {
    deg += crossing_degree(cur, w[idx]);
    swap_adjacent(cur, w[idx]);
  }
  return deg;
}

int Algebra::word_degree(const Word& w) const {
  int deg = tau_degree(w.src, perm_unkey(w.perm));
  for (int r : w.exps) deg += 2 * r;
  return deg;
}

int Algebra::element_degree(const Element& e) const {
  if (e.empty()) return 0;
  int deg = word_degree(e.begin()->first);
  for (const auto& [w, c] : e) {
    (void)c;
    if (word_degree(w) != deg) throw std::domain_error("element is not homogeneous");
  }
  return deg;
}

namespace {
void fill_exps(int pos, int n, int remaining, std::vector<int>& exps,
               const std::function<void(const std::vector<int>&)>& emit) {
  if (pos == n - 1) {
    exps[pos] = remaining;
    emit(exps);
    return;
  }
  for (int r = 0; r <= remaining; ++r) {
    exps[pos] = r;
    fill_exps(pos + 1, n, remaining - r, exps, emit);
  }
}
}  // namespace

std::vector<Word> Algebra::graded_component(const Seq& tgt, const Seq& src, int d) {
  if (weight_of_seq(tgt) != weight_of_seq(src))
    throw std::invalid_argument("graded_component: sequences have different weights");
  const int n = static_cast<int>(src.size());
  std::vector<Word> out;
  const int sid = seq_id(src);
  if (n == 0) {
    if (d == 0) out.push_back(Word{sid, perm_key(Perm{}), {}});
    return out;
  }
  Perm p = perm_identity(n);
  std::sort(p.begin(), p.end());
  do {
    Seq image(n);
    for (int x = 0; x < n; ++x) image[static_cast<size_t>(p[x])] = src[x];
    if (image != tgt) continue;
    int dt = tau_degree(sid, p);
    int residual = d - dt;
    if (residual < 0 || residual % 2 != 0) continue;
    std::vector<int> exps(n, 0);
    fill_exps(0, n, residual / 2, exps, [&](const std::vector<int>& r) {
      out.push_back(Word{sid, perm_key(p), r});
    });
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool Algebra::is_idempotent(const Element& e) {
  return mul(e, e) == e;
}

std::string Algebra::word_str(const Word& w) const {
  std::ostringstream os;
  for (size_t k = 0; k < w.exps.size(); ++k)
    if (w.exps[k] > 0) {
      os << "x" << (k + 1);
      if (w.exps[k] > 1) os << "^" << w.exps[k];
      os << " ";
    }
  std::vector<int> cw = canonical_word(perm_unkey(w.perm));
  if (!cw.empty()) {
    os << "t[";
    for (size_t i = 0; i < cw.size(); ++i) {
      if (i) os << ",";
      os << cw[i] + 1;
    }
    os << "] ";
  }
  os << "e(" << seq_str(q_, seq(w.src)) << ")";
  return os.str();
}

std::string Algebra::element_str(const Element& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1) os << a.get_str() << " ";
    os << word_str(w);
    first = false;
  }
  return os.str();
}

}  // namespace klr
