#pragma once

// Degree-truncated graded dimensions of idempotent-cut pieces of R(nu),
// computed by exact rank: for each degree, the spanning set
// { e_L . w . e_R : w basis word } is deduplicated and row-reduced.

#include "element.hpp"
#include "engine.hpp"
#include "qseries.hpp"

namespace klr {

/// Smallest degree any basis word of R(nu) can have (crossing part only).
int min_word_degree(Algebra& alg, const Weight& nu);

/// Dim(e_L . R(nu) . e_R) through the given degree bound.
/// Both idempotents are verified (normal-form and probe routes) first.
TruncatedSeries truncated_dim(Algebra& alg, const Element& e_left,
                              const Element& e_right, const Weight& nu, int bound);

/// Per-degree dimensions of 1_tgt . R(nu) . e_right (no idempotency check on
/// the left; used for per-sequence cuts of projective modules).
TruncatedSeries truncated_dim_seq_cut(Algebra& alg, const Seq& tgt,
                                      const Element& e_right, const Weight& nu,
                                      int bound);

/// Graded dimension of all of R(nu) (basis count per degree).
TruncatedSeries algebra_dim(Algebra& alg, const Weight& nu, int bound);

}  // namespace klr
