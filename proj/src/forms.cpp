#include "forms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linalg.hpp"
#include "polyrep.hpp"

namespace klr {

namespace {

// stable small integer ids for basis words within one rank computation
struct WordIndex {
  std::map<Word, std::uint64_t> ids;
  std::uint64_t id(const Word& w) {
    auto it = ids.find(w);
    if (it != ids.end()) return it->second;
    std::uint64_t v = ids.size();
    ids.emplace(w, v);
    return v;
  }
};

std::string element_fingerprint(const Element& e, WordIndex& idx) {
  std::ostringstream os;
  for (const auto& [w, c] : e) os << idx.id(w) << ":" << c.get_str() << ";";
  return os.str();
}

std::set<int> element_src_seqs(const Element& e) {
  std::set<int> out;
  for (const auto& [w, c] : e) {
    (void)c;
    out.insert(w.src);
  }
  return out;
}

std::set<Seq> element_target_seqs(Algebra& alg, const Element& e) {
  std::set<Seq> out;
  for (const auto& [w, c] : e) {
    (void)c;
    out.insert(alg.target_seq(w));
  }
  return out;
}

int rank_of_cut(Algebra& alg, const Element& e_left, const Element& e_right,
                const std::vector<Seq>& seqs, const std::set<Seq>& srcs_allowed,
                const std::set<Seq>& tgts_allowed, int d) {
  // spanning set e_L . w . e_R over basis words w of degree d, deduplicated
  // in two stages (after the right product, then after the full product)
  WordIndex idx;
  std::set<std::string> seen_right;
  std::vector<Element> rights;
  for (const Seq& src : seqs) {
    if (!srcs_allowed.count(src)) continue;
    for (const Seq& tgt : seqs) {
      if (!tgts_allowed.count(tgt)) continue;
      for (const Word& w : alg.graded_component(tgt, src, d)) {
        Element t;
        for (const auto& [wr, cr] : e_right) add_scaled(t, alg.mul_words(w, wr), cr);
        if (t.empty()) continue;
        if (seen_right.insert(element_fingerprint(t, idx)).second) rights.push_back(std::move(t));
      }
    }
  }
  RowSpace space;
  std::set<std::string> seen_full;
  for (const Element& t : rights) {
    Element v = alg.mul(e_left, t);
    if (v.empty()) continue;
    if (!seen_full.insert(element_fingerprint(v, idx)).second) continue;
    SparseVec row;
    for (const auto& [w, c] : v) row[idx.id(w)] = c;
    space.insert(std::move(row));
  }
  return space.rank();
}

}  // namespace

int min_word_degree(Algebra& alg, const Weight& nu) {
  const auto seqs = sequences_of(nu);
  int best = 0;
  for (const Seq& s : seqs) {
    const int n = static_cast<int>(s.size());
    Perm p = perm_identity(n);
    std::sort(p.begin(), p.end());
    int sid = alg.seq_id(s);
    do {
      best = std::min(best, alg.tau_degree(sid, p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return best;
}

TruncatedSeries truncated_dim(Algebra& alg, const Element& e_left,
                              const Element& e_right, const Weight& nu, int bound) {
  if (!elements_equal(alg, alg.mul(e_left, e_left), e_left))
    throw std::invalid_argument("truncated_dim: left element is not idempotent");
  if (!elements_equal(alg, alg.mul(e_right, e_right), e_right))
    throw std::invalid_argument("truncated_dim: right element is not idempotent");

  const auto seqs = sequences_of(nu);
  const int dmin = min_word_degree(alg, nu);
  TruncatedSeries out(dmin, bound);
  // w . e_R needs src(w) among the targets of e_R; e_L . w needs tgt(w)
  // among the sources of e_L
  std::set<Seq> srcs_allowed = element_target_seqs(alg, e_right);
  std::set<Seq> tgts_allowed;
  for (int sid : element_src_seqs(e_left)) tgts_allowed.insert(alg.seq(sid));
  for (int d = dmin; d <= bound; ++d) {
    int r = rank_of_cut(alg, e_left, e_right, seqs, srcs_allowed, tgts_allowed, d);
    if (r != 0) out.set_coeff(d, Rat(r));
  }
  return out;
}

TruncatedSeries truncated_dim_seq_cut(Algebra& alg, const Seq& tgt,
                                      const Element& e_right, const Weight& nu,
                                      int bound) {
  const auto seqs = sequences_of(nu);
  const int dmin = min_word_degree(alg, nu);
  TruncatedSeries out(dmin, bound);
  std::set<Seq> srcs_allowed = element_target_seqs(alg, e_right);
  std::set<Seq> tgts_allowed{tgt};
  Element left = alg.unit(tgt);
  for (int d = dmin; d <= bound; ++d) {
    int r = rank_of_cut(alg, left, e_right, seqs, srcs_allowed, tgts_allowed, d);
    if (r != 0) out.set_coeff(d, Rat(r));
  }
  return out;
}

TruncatedSeries algebra_dim(Algebra& alg, const Weight& nu, int bound) {
  const auto seqs = sequences_of(nu);
  const int dmin = min_word_degree(alg, nu);
  TruncatedSeries out(dmin, bound);
  for (int d = dmin; d <= bound; ++d) {
    long count = 0;
    for (const Seq& src : seqs)
      for (const Seq& tgt : seqs) count += static_cast<long>(alg.graded_component(tgt, src, d).size());
    if (count != 0) out.set_coeff(d, Rat(count));
  }
  return out;
}

}  // namespace klr
