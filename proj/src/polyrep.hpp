#pragma once

// The faithful polynomial representation of R(nu): vectors of multivariate
// polynomials indexed by sequences, with the generator action given by
// projections, multiplications, divided differences and twisted swaps.
// This module is the independent correctness oracle for the rewriting
// engine: it never calls normal_form to act.

#include <map>
#include <random>
#include <vector>

#include "engine.hpp"
#include "mpoly.hpp"
#include "quiver.hpp"

namespace klr {

/// Finitely many components seq -> polynomial; degrees graded with x of
/// degree 2.
using PolyVector = std::map<Seq, MPoly>;

void pv_add(PolyVector& v, const Seq& s, const MPoly& f);
bool pv_equal(const PolyVector& a, const PolyVector& b);

class PolyRep {
 public:
  explicit PolyRep(const Quiver& q) : q_(q), c_(q) {}

  /// Action of a single generator token (projection, dot, crossing).
  PolyVector act_unit(const Seq& s, const PolyVector& v) const;
  PolyVector act_dot(int k, const PolyVector& v) const;
  PolyVector act_crossing(int k, const PolyVector& v) const;

  /// Action of a raw word (tokens applied from the bottom up, i.e. from the
  /// back of the token list), including the source projection.
  PolyVector act_raw(const Algebra& alg, const Algebra::RawTerm& t,
                     const PolyVector& v) const;

  /// Linear extension of the action to a normal-form element.
  PolyVector act_element(const Algebra& alg, const Element& e, const PolyVector& v) const;

  /// Random polynomial vector supported on sequences of the given weight.
  PolyVector random_vector(const Weight& nu, int max_exp, std::mt19937_64& rng) const;

 private:
  const Quiver& q_;
  Cartan c_;
};

/// Compares both routes: coefficientwise equality of normal forms (primary)
/// and agreement of the actions on the monomial probe family (oracle).
/// Throws std::logic_error if the two routes ever disagree.
bool elements_equal(Algebra& alg, const Element& a, const Element& b);

}  // namespace klr
