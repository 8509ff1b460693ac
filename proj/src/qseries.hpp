#pragma once

// Exact arithmetic in one variable q: Laurent polynomials, reduced rational
// functions, truncated power series, and the q-combinatorial quantities
// (balanced q-integers, Gaussian binomials, Pochhammer products, the
// beta/alpha coefficient families) used throughout the library.

#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace klr {

class TruncatedSeries;

/// Laurent polynomial over the rationals, stored sparsely.
/// Invariant: no zero coefficients are kept, so equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& constant);
  explicit LaurentPoly(long constant);

  static LaurentPoly monomial(const Rat& c, int exp);
  static LaurentPoly q(int exp = 1);

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Rat>& coeffs() const { return c_; }
  Rat coeff(int exp) const;
  int low_deg() const;   // requires nonzero
  int high_deg() const;  // requires nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly scaled(const Rat& s) const;
  LaurentPoly shifted(int m) const;       // multiply by q^m
  LaurentPoly bar() const;                // q -> q^{-1}
  LaurentPoly subst_q_power(int k) const; // q -> q^k, k >= 1

  /// Exact division; throws if the division leaves a remainder.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  bool has_integer_coeffs() const;
  bool has_nonneg_integer_coeffs() const;

  std::string str(const std::string& var = "q") const;

 private:
  void set(int exp, const Rat& v);
  std::map<int, Rat> c_;
};

/// Quotient of Laurent polynomials kept in a canonical reduced form:
/// gcd removed, denominator with integer coprime coefficients whose
/// lowest-degree nonzero coefficient is positive, valuations normalized.
class RationalFunction {
 public:
  RationalFunction();  // zero
  RationalFunction(LaurentPoly num, LaurentPoly den);
  explicit RationalFunction(const LaurentPoly& p);
  explicit RationalFunction(const Rat& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction bar() const;

  /// Laurent expansion through degree bound D. Requires the denominator to
  /// have a well-defined lowest term (always true in reduced form).
  TruncatedSeries expand(int bound) const;

  /// True iff the denominator is the constant 1.
  bool is_polynomial() const;

  std::string str() const;

 private:
  void reduce();
  LaurentPoly num_, den_;
};

/// Laurent series known exactly for exponents <= bound.
/// `low` is a guaranteed lower bound for the support; operations propagate
/// both conservatively.
class TruncatedSeries {
 public:
  TruncatedSeries(int low, int bound);
  static TruncatedSeries from_poly(const LaurentPoly& p, int bound);

  int bound() const { return bound_; }
  int low() const { return low_; }
  Rat coeff(int exp) const;
  const std::map<int, Rat>& coeffs() const { return c_; }
  void set_coeff(int exp, const Rat& v);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries shifted(int m) const;  // multiply by q^m

  /// Re-truncate to a (weaker or equal) bound.
  TruncatedSeries truncated(int bound) const;

  /// Equality of all coefficients up to min(bound, o.bound).
  bool agrees_with(const TruncatedSeries& o) const;

  bool operator==(const TruncatedSeries& o) const;

  std::string str() const;

 private:
  std::map<int, Rat> c_;
  int low_, bound_;
};

// --- q-combinatorics ---------------------------------------------------

/// Balanced q-integer [n] = (q^n - q^{-n})/(q - q^{-1}), n >= 1.
LaurentPoly qint(int n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
LaurentPoly qfactorial(int n);

/// One-variable Gaussian binomial (non-balanced convention),
/// [n m] = (1-q^n)...(1-q^{n-m+1}) / ((1-q)...(1-q^m)), requires 0 <= m <= n.
/// Computed via the Pascal-type recursion; always a polynomial in q.
LaurentPoly gauss_binom(int n, int m);

/// (q^a; q)_n = (1-q^a)(1-q^{a+1})...(1-q^{a+n-1}).
LaurentPoly pochhammer(int a, int n);

/// nu_k = 1/((1-q^2)(1-q^4)...(1-q^{2k})).
RationalFunction nu(int k);

/// beta_p = (1-q^{2a})(1-q^{2(a+1)})...(1-q^{2(a+p-1)}) /
///          ((1-q^2)(1-q^4)...(1-q^{2p})), a polynomial; p, a >= 1.
LaurentPoly beta_poly(int p, int a);

/// alpha_p computed by the recursion
/// alpha_p = nu_p (q^{-pa} - q^{pa}) - sum_{k=1}^{p-1} nu_k q^{ka} alpha_{p-k}.
RationalFunction alpha_rf(int p, int a);

/// Checks (1 - q^{pa}) = sum_{k=0}^{p-1} q^{ka} [p k] (q^a; q)_{p-k} exactly.
bool gauss_identity_check(int p, int a);

}  // namespace klr
