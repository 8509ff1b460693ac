#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries.hpp"

using namespace klr;

namespace {

LaurentPoly Q(int e) { return LaurentPoly::q(e); }
LaurentPoly C(long c) { return LaurentPoly(c); }

// Brute-force oracle: number of partitions of m into parts of size <= n.
long partitions_bounded(int m, int n) {
  if (m == 0) return 1;
  if (n == 0) return 0;
  long total = 0;
  for (int first = std::min(m, n); first >= 1; --first)
    total += partitions_bounded(m - first, first);
  return total;
}

}  // namespace

TEST_CASE("qint small values") {
  CHECK(qint(1) == C(1));
  CHECK(qint(2) == Q(1) + Q(-1));
  CHECK(qint(3) == Q(2) + C(1) + Q(-2));
  CHECK_THROWS_AS(qint(0), std::invalid_argument);
  CHECK_THROWS_AS(qint(-3), std::invalid_argument);
}

TEST_CASE("qint is bar-symmetric") {
  for (int n = 1; n <= 12; ++n) CHECK(qint(n) == qint(n).bar());
}

TEST_CASE("qfactorial") {
  CHECK(qfactorial(0) == C(1));
  CHECK(qfactorial(2) == qint(2));
  CHECK(qfactorial(3) == Q(3) + Q(1).scaled(2) + Q(-1).scaled(2) + Q(-3));
}

TEST_CASE("gauss_binom values and domain") {
  for (int n = 0; n <= 8; ++n) CHECK(gauss_binom(n, 0) == C(1));
  CHECK(gauss_binom(2, 1) == C(1) + Q(1));
  CHECK(gauss_binom(4, 2) == C(1) + Q(1) + Q(2).scaled(2) + Q(3) + Q(4));
  CHECK_THROWS_AS(gauss_binom(2, 3), std::invalid_argument);
}

TEST_CASE("gauss_binom matches the product formula") {
  // Independent route: cross-multiplied product form, no division involved.
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= n; ++m) {
      LaurentPoly lhs = gauss_binom(n, m);
      for (int k = 1; k <= m; ++k) lhs *= C(1) - Q(k);
      LaurentPoly rhs(1L);
      for (int k = n - m + 1; k <= n; ++k) rhs *= C(1) - Q(k);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("gauss_binom Pascal identity") {
  for (int n = 0; n <= 12; ++n)
    for (int m = 1; m <= n; ++m) {
      LaurentPoly expect = gauss_binom(n, m).shifted(m);
      expect += gauss_binom(n, m - 1);
      CHECK(gauss_binom(n + 1, m) == expect);
    }
}

TEST_CASE("gauss_binom coefficients are nonnegative integers") {
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= n; ++m) CHECK(gauss_binom(n, m).has_nonneg_integer_coeffs());
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3, 0) == C(1));
  CHECK(pochhammer(1, 1) == C(1) - Q(1));
  CHECK(pochhammer(2, 2) == C(1) - Q(2) - Q(3) + Q(5));
}

TEST_CASE("pochhammer quotient identity") {
  // (q^a q^m; q)_{n-m} * (q^a; q)_m = (q^a; q)_n
  for (int a = 1; a <= 4; ++a)
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(pochhammer(a + m, n - m) * pochhammer(a, m) == pochhammer(a, n));
}

TEST_CASE("beta values") {
  for (int p = 1; p <= 5; ++p) CHECK(beta_poly(p, 1) == C(1));
  CHECK(beta_poly(1, 2) == C(1) + Q(2));
  CHECK(beta_poly(2, 2) == C(1) + Q(2) + Q(4));
}

TEST_CASE("beta equals gauss_binom at q^2") {
  for (int p = 1; p <= 6; ++p)
    for (int a = 1; a <= 5; ++a)
      CHECK(beta_poly(p, a) == gauss_binom(a + p - 1, p).subst_q_power(2));
}

TEST_CASE("alpha base cases") {
  // alpha_1 = (q^{-a} - q^a)/(1 - q^2)
  for (int a = 1; a <= 4; ++a) {
    RationalFunction expect(Q(-a) - Q(a), C(1) - Q(2));
    CHECK(alpha_rf(1, a) == expect);
  }
  // a = 1: alpha_p = q^{-p}
  for (int p = 1; p <= 5; ++p)
    CHECK(alpha_rf(p, 1) == RationalFunction(Q(-p)));
  CHECK(alpha_rf(2, 2) == RationalFunction((C(1) + Q(2) + Q(4)).shifted(-4)));
}

TEST_CASE("alpha recursion equals q^{-pa} beta (closed form)") {
  for (int p = 1; p <= 6; ++p)
    for (int a = 1; a <= 4; ++a) {
      RationalFunction lhs = alpha_rf(p, a) * RationalFunction(Q(p * a));
      CHECK(lhs == RationalFunction(beta_poly(p, a)));
    }
}

TEST_CASE("gauss identity") {
  CHECK(gauss_identity_check(2, 1));
  CHECK(gauss_identity_check(4, 3));
  for (int p = 1; p <= 6; ++p)
    for (int a = 1; a <= 4; ++a) CHECK(gauss_identity_check(p, a));
}

TEST_CASE("rational function normalization gives canonical equality") {
  RationalFunction f(Q(1) - Q(3), C(1) - Q(2));            // q(1-q^2)/(1-q^2) = q
  CHECK(f == RationalFunction(Q(1)));
  RationalFunction g((C(1) - Q(2)).scaled(Rat(1, 3)), (C(1) - Q(1)).scaled(Rat(1, 6)));
  CHECK(g == RationalFunction(C(1) + Q(1)).operator*(RationalFunction(Rat(2))));
  // Denominator canonical form: integer coprime coefficients, positive low term.
  RationalFunction h(C(1), (Q(2) - C(1)).scaled(Rat(-7, 2)));
  CHECK(h.den().coeff(0) == 1);
  CHECK(h.den().coeff(2) == -1);
}

TEST_CASE("series expansion of 1/prod(1-q^{2k}) counts bounded partitions") {
  for (int n = 1; n <= 4; ++n) {
    LaurentPoly den(1L);
    for (int k = 1; k <= n; ++k) den *= C(1) - Q(2 * k);
    TruncatedSeries s = RationalFunction(C(1), den).expand(40);
    for (int m = 0; 2 * m <= 40; ++m)
      CHECK(s.coeff(2 * m) == Rat(partitions_bounded(m, n)));
    for (int e = 1; e <= 39; e += 2) CHECK(s.coeff(e) == 0);
  }
}

TEST_CASE("series re-truncation is idempotent") {
  RationalFunction f(C(1), C(1) - Q(2));
  TruncatedSeries s = f.expand(20);
  CHECK(s.truncated(20) == s);
  CHECK(s.truncated(12) == f.expand(12));
}

TEST_CASE("series product tracks the valid bound conservatively") {
  RationalFunction f(C(1), C(1) - Q(1));
  TruncatedSeries a = f.expand(10);
  TruncatedSeries b = TruncatedSeries::from_poly(Q(3), 25);
  TruncatedSeries p = a * b;
  CHECK(p.bound() == 13);  // min(10 + 3, 25 + 0)
  for (int e = 3; e <= 13; ++e) CHECK(p.coeff(e) == 1);
}

TEST_CASE("bar involution on rational functions") {
  RationalFunction f(C(1), C(1) - Q(2));
  RationalFunction g = f.bar();
  // bar(1/(1-q^2)) = 1/(1-q^{-2}) = -q^2/(1-q^2)
  CHECK(g == RationalFunction(-Q(2), C(1) - Q(2)));
  CHECK(g.bar() == f);
}
