#pragma once

// Exact computation in R(nu): normal-form rewriting for words in the
// generators 1_i, x_k, tau_k under the defining local relations, products of
// normal forms, the flip anti-involution, idempotents, and graded-component
// enumeration. One Algebra instance carries the quiver data and the rewrite
// caches; instances are not synchronized, use one per thread.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "mpoly.hpp"
#include "perm.hpp"
#include "quiver.hpp"

namespace klr {

class Algebra {
 public:
  explicit Algebra(Quiver q);

  const Quiver& quiver() const { return q_; }
  const Cartan& cartan() const { return c_; }

  // -- sequence interning --
  int seq_id(const Seq& s);
  const Seq& seq(int id) const { return seqs_.at(static_cast<size_t>(id)); }
  Seq target_seq(const Word& w) const;
  int strands(const Word& w) const { return static_cast<int>(seq(w.src).size()); }

  // -- raw words ----------------------------------------------------------
  // toks are stored in product order: toks[0] is the top of the diagram,
  // toks.back() sits directly above the source idempotent.
  struct Tok {
    bool is_x;
    int idx;
  };
  struct RawTerm {
    Rat coeff;
    int src;
    std::vector<Tok> toks;
  };

  /// Normal form of a raw word.
  Element reduce(RawTerm t);

  /// Token spelling of a basis word (canonical reduced word + top dots).
  RawTerm word_tokens(const Word& w, const Rat& coeff) const;

  // -- basic elements -----------------------------------------------------
  Element unit(const Seq& s);
  Element weight_unit(const Weight& nu);  // sum of 1_i over Seq(nu)
  Element dot(const Seq& s, int k, int power = 1);
  Element crossing(const Seq& s, int k);

  /// H_i(u, v) for i imaginary and Q_{ij}(u, v) for i != j, as bivariate
  /// polynomials (variable 0 = u, variable 1 = v).
  MPoly h_poly(int vertex) const;
  MPoly q_poly(int i, int j) const;

  // -- products and involution --------------------------------------------
  Element mul(const Element& a, const Element& b);
  Element mul_words(const Word& a, const Word& b);
  Element psi(const Element& e);

  /// e1 on strands [0, n1), e2 shifted onto [n1, n1+n2).
  Element tensor(const Element& a, const Element& b);

  // -- distinguished idempotents -------------------------------------------
  /// Full symmetrizer (1/n!) sum of tau_w for a vertex with a_ii = 0.
  Element symmetrizer(int vertex, int n);
  /// Nil-Hecke divided-power idempotent x_1^{m-1}...x_{m-1} tau_{w0}, i in I+.
  Element divided_power_idempotent(int vertex, int m);

  // -- degrees and components ----------------------------------------------
  int crossing_degree(const Seq& at, int k) const;  // deg of tau_k entering 'at'
  int tau_degree(int src, const Perm& p) const;     // deg of the crossing part
  int word_degree(const Word& w) const;
  /// Degree of a homogeneous element; throws for mixed degrees.
  int element_degree(const Element& e) const;

  /// Basis words of 1_tgt R(nu) 1_src in degree exactly d.
  std::vector<Word> graded_component(const Seq& tgt, const Seq& src, int d);

  bool is_idempotent(const Element& e);

  std::string word_str(const Word& w) const;
  std::string element_str(const Element& e) const;

  // monomial expansions of the relation polynomials, exposed for matrix-level
  // relation checking on modules: tau_k^2 1 = sum c x_k^{e1} x_{k+1}^{e2} at
  // bottom colors (ci, cj), and the braid correction triple-exponents
  std::vector<std::pair<Rat, std::pair<int, int>>> double_crossing_monomials(int ci, int cj) const;
  std::vector<std::pair<Rat, std::array<int, 3>>> braid_corr_monomials(int ci, int cj) const;

 private:
  struct PullResult {
    std::vector<int> main;  // same length, first letter = requested
    std::vector<std::pair<Rat, std::vector<Tok>>> corrs;
  };

  const Element& reduce_tword(int src, const std::vector<int>& letters);
  PullResult pull_to_front(int src, const std::vector<int>& letters, int c);
  Seq seq_after(int src, const std::vector<int>& letters, size_t from) const;
  Seq seq_below_tok(const RawTerm& t, size_t p) const;

  struct DotBranch {
    Rat coeff;
    std::vector<int> exps;
    std::vector<int> kept;  // product order
  };
  std::vector<DotBranch> slide_dots(const std::vector<int>& letters, const Seq& bottom,
                                    const std::vector<int>& exps) const;

  Quiver q_;
  Cartan c_;
  std::vector<Seq> seqs_;
  std::map<Seq, int> seq_ids_;
  std::map<std::pair<int, std::vector<int>>, Element> tword_cache_;
};

}  // namespace klr
