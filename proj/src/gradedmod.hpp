#pragma once

// Finite-dimensional graded modules over R(nu) presented by exact matrices,
// with the defining relations verified at construction. Includes the
// Specht-based modules of the a_ii = 0 case (dots acting by zero), the
// nil-Hecke coinvariant module, characters over underlined sequences, and
// the idempotent-cut restriction functor.

#include <map>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "linalg.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "specht.hpp"

namespace klr {

class KLRModule {
 public:
  KLRModule(Algebra& alg, Weight nu, std::vector<Seq> basis_seq, std::vector<int> degrees,
            std::vector<RatMatrix> dots, std::vector<RatMatrix> crossings);

  Algebra& algebra() const { return *alg_; }
  const Weight& weight() const { return nu_; }
  int dim() const { return static_cast<int>(degrees_.size()); }
  int strands() const { return static_cast<int>(dots_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Seq>& basis_seqs() const { return basis_seq_; }
  const RatMatrix& dot(int k) const { return dots_.at(static_cast<size_t>(k)); }
  const RatMatrix& crossing(int k) const { return crossings_.at(static_cast<size_t>(k)); }

  /// 0/1 diagonal projector onto the components with the given sequence.
  RatMatrix projector(const Seq& s) const;

  KLRModule shifted(int m) const;
  static KLRModule direct_sum(const KLRModule& a, const KLRModule& b);

  /// Checks every defining relation as a matrix identity plus degree
  /// compatibility of all generator matrices; throws on violation.
  void validate() const;

 private:
  Algebra* alg_;
  Weight nu_;
  std::vector<Seq> basis_seq_;
  std::vector<int> degrees_;
  std::vector<RatMatrix> dots_;
  std::vector<RatMatrix> crossings_;
};

/// Specht module of the symmetric group made into an R(ni)-module for a
/// vertex with a_ii = 0: crossings act by the Coxeter matrices, dots by zero.
KLRModule specht_klr_module(Algebra& alg, int vertex, const Partition& lambda);

/// Permutation module on the sequences of a multiplicity-free (or loop-only)
/// weight: dots act by zero, crossings shuffle components.
KLRModule seq_permutation_module(Algebra& alg, const Weight& nu);

/// The nil-Hecke module V(i^n) realized on the coinvariant quotient of the
/// polynomial representation, centered so Dim = [n]!.
KLRModule nilhecke_irreducible_module(Algebra& alg, int vertex, int n);

/// Underlined sequence: blocks (vertex, mult) with mult > 1 only at a_ii = 0.
using UnderlinedSeq = std::vector<std::pair<int, int>>;
using CharacterVector = std::map<UnderlinedSeq, LaurentPoly>;

std::vector<UnderlinedSeq> underlined_sequences(const Cartan& c, const Weight& nu);

/// Ch M = sum over underlined sequences of Dim(1_u M).
CharacterVector character(const KLRModule& m);

CharacterVector character_sum(const CharacterVector& a, const CharacterVector& b);
CharacterVector character_shift(const CharacterVector& a, int m);

/// The idempotent cut (1_{nu - ni} x 1_{ni}) M with the generator actions
/// that survive on the cut (dots, and crossings away from the split).
struct RestrictedModule {
  std::vector<Seq> basis_seq;
  std::vector<int> degrees;
  std::vector<RatMatrix> dots;
  std::vector<RatMatrix> crossings_left;   // indices < split - 1
  std::vector<RatMatrix> crossings_right;  // indices >= split
  int dim() const { return static_cast<int>(degrees.size()); }
};

RestrictedModule delta_restrict(const KLRModule& m, int vertex, int n);

/// Largest n with the cut nonzero.
int epsilon(const KLRModule& m, int vertex);

}  // namespace klr
