#pragma once

// Multivariate polynomials over the rationals with a fixed variable count.
// Grading convention: every variable has degree 2.

#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace klr {

class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const Rat& constant);

  static MPoly var(int nvars, int k, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return c_; }
  Rat coeff(const std::vector<int>& mono) const;
  void add_term(const std::vector<int>& mono, const Rat& v);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rat& s) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && c_ == o.c_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Swap variables k and k+1.
  MPoly swapped(int k) const;

  /// Divided difference (f - s_k f)/(x_k - x_{k+1}); always a polynomial.
  MPoly divided_difference(int k) const;

  /// Graded degree of the highest term (2 per variable power); 0 for 0.
  int degree() const;

  std::string str() const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rat> c_;
};

}  // namespace klr
