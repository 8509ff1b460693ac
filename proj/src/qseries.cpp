#include "qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klr {

// --- LaurentPoly ---------------------------------------------------------

LaurentPoly::LaurentPoly(const Rat& constant) {
  if (constant != 0) c_[0] = constant;
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) c_[0] = Rat(constant);
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

LaurentPoly LaurentPoly::q(int exp) { return monomial(Rat(1), exp); }

Rat LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rat(0) : it->second;
}

int LaurentPoly::low_deg() const {
  if (c_.empty()) throw std::logic_error("low_deg of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::high_deg() const {
  if (c_.empty()) throw std::logic_error("high_deg of zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::set(int exp, const Rat& v) {
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) set(e, coeff(e) + v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) set(e, coeff(e) - v);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

LaurentPoly LaurentPoly::shifted(int m) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + m] = v;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

LaurentPoly LaurentPoly::subst_q_power(int k) const {
  if (k < 1) throw std::invalid_argument("subst_q_power: k must be >= 1");
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e * k] = v;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials, then do long division from the top.
  LaurentPoly num = shifted(-low_deg());
  LaurentPoly den = d.shifted(-d.low_deg());
  int shift = low_deg() - d.low_deg();
  LaurentPoly quot;
  const int dd = den.high_deg();
  const Rat lead = den.coeff(dd);
  while (!num.is_zero()) {
    int nd = num.high_deg();
    if (nd < dd) throw std::domain_error("exact_div: nonzero remainder");
    Rat c = num.coeff(nd) / lead;
    LaurentPoly t = monomial(c, nd - dd);
    quot += t;
    num -= t * den;
  }
  return quot.shifted(shift);
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [e, v] : c_) {
    (void)e;
    if (!is_integer(v)) return false;
  }
  return true;
}

bool LaurentPoly::has_nonneg_integer_coeffs() const {
  for (const auto& [e, v] : c_) {
    (void)e;
    if (!is_integer(v) || v < 0) return false;
  }
  return true;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads like hand-written polynomials.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat v = it->second;
    int e = it->first;
    if (!first) os << (v > 0 ? " + " : " - ");
    if (first && v < 0) os << "-";
    Rat a = abs(v);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// --- RationalFunction ----------------------------------------------------

namespace {

// gcd of two nonzero ordinary polynomials (valuation 0 assumed not required).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  a = a.shifted(-a.low_deg());
  b = b.shifted(-b.low_deg());
  while (!b.is_zero()) {
    // remainder of a by b
    const int db = b.high_deg();
    const Rat lead = b.coeff(db);
    LaurentPoly r = a;
    while (!r.is_zero() && r.high_deg() >= db) {
      Rat c = r.coeff(r.high_deg()) / lead;
      r -= LaurentPoly::monomial(c, r.high_deg() - db) * b;
    }
    a = b;
    b = r.is_zero() ? r : r.shifted(-r.low_deg());
  }
  // normalize monic
  return a.scaled(Rat(1) / a.coeff(a.high_deg()));
}

}  // namespace

RationalFunction::RationalFunction() : num_(), den_(LaurentPoly(1L)) {}

RationalFunction::RationalFunction(const LaurentPoly& p)
    : num_(p), den_(LaurentPoly(1L)) {}

RationalFunction::RationalFunction(const Rat& c)
    : num_(LaurentPoly(c)), den_(LaurentPoly(1L)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  num_ = num_.exact_div(g);
  den_ = den_.exact_div(g);
  // Pull the denominator's valuation into the numerator: canonical form
  // keeps the denominator an ordinary polynomial with nonzero constant term.
  int v = den_.low_deg();
  if (v != 0) {
    den_ = den_.shifted(-v);
    num_ = num_.shifted(-v);
  }
  // Scale so the denominator has integer coprime coefficients with positive
  // lowest-degree coefficient.
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : den_.coeffs()) {
    (void)e;
    Int l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  LaurentPoly scaled_den = den_.scaled(Rat(den_lcm));
  for (const auto& [e, c] : scaled_den.coeffs()) {
    (void)e;
    Int g2;
    mpz_gcd(g2.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g2;
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (scaled_den.coeff(scaled_den.low_deg()) < 0) scale = -scale;
  den_ = den_.scaled(scale);
  num_ = num_.scaled(scale);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::bar() const {
  return RationalFunction(num_.bar(), den_.bar());
}

bool RationalFunction::is_polynomial() const {
  return den_ == LaurentPoly(1L);
}

TruncatedSeries RationalFunction::expand(int bound) const {
  // den has nonzero constant term by the reduction invariant.
  if (num_.is_zero()) return TruncatedSeries(0, bound);
  const Rat c0 = den_.coeff(0);
  int low = num_.low_deg();
  TruncatedSeries out(low, bound);
  // Recursive series division: out = num/den term by term from the bottom.
  LaurentPoly rem = num_;
  for (int e = low; e <= bound; ++e) {
    Rat c = rem.coeff(e) / c0;
    if (c != 0) {
      out.set_coeff(e, c);
      rem -= den_.scaled(c).shifted(e);
    }
  }
  return out;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// --- TruncatedSeries -----------------------------------------------------

TruncatedSeries::TruncatedSeries(int low, int bound) : low_(low), bound_(bound) {}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, int bound) {
  TruncatedSeries s(p.is_zero() ? 0 : p.low_deg(), bound);
  for (const auto& [e, v] : p.coeffs())
    if (e <= bound) s.c_[e] = v;
  return s;
}

Rat TruncatedSeries::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::set_coeff(int exp, const Rat& v) {
  if (exp > bound_) return;
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(low_, o.low_), std::min(bound_, o.bound_));
  for (const auto& [e, v] : c_)
    if (e <= r.bound_) r.c_[e] = v;
  for (const auto& [e, v] : o.c_)
    if (e <= r.bound_) r.set_coeff(e, r.coeff(e) + v);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(low_, o.low_), std::min(bound_, o.bound_));
  for (const auto& [e, v] : c_)
    if (e <= r.bound_) r.c_[e] = v;
  for (const auto& [e, v] : o.c_)
    if (e <= r.bound_) r.set_coeff(e, r.coeff(e) - v);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  // The product is exact wherever every contributing pair is known.
  TruncatedSeries r(low_ + o.low_, std::min(bound_ + o.low_, o.bound_ + low_));
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_)
      if (e1 + e2 <= r.bound_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int m) const {
  TruncatedSeries r(low_ + m, bound_ + m);
  for (const auto& [e, v] : c_) r.c_[e + m] = v;
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int bound) const {
  TruncatedSeries r(low_, std::min(bound, bound_));
  for (const auto& [e, v] : c_)
    if (e <= r.bound_) r.c_[e] = v;
  return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const {
  int b = std::min(bound_, o.bound_);
  for (const auto& [e, v] : c_)
    if (e <= b && v != o.coeff(e)) return false;
  for (const auto& [e, v] : o.c_)
    if (e <= b && v != coeff(e)) return false;
  return true;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return bound_ == o.bound_ && c_ == o.c_;
}

std::string TruncatedSeries::str() const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p += LaurentPoly::monomial(v, e);
  return p.str() + " + O(q^" + std::to_string(bound_ + 1) + ")";
}

// --- q-combinatorics -----------------------------------------------------

LaurentPoly qint(int n) {
  if (n < 1) throw std::invalid_argument("qint: n must be >= 1");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r += LaurentPoly::q(n - 1 - 2 * k);
  return r;
}

LaurentPoly qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial: n must be >= 0");
  LaurentPoly r(1L);
  for (int k = 1; k <= n; ++k) r *= qint(k);
  return r;
}

LaurentPoly gauss_binom(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("gauss_binom: negative input");
  if (m > n) throw std::invalid_argument("gauss_binom: m > n");
  // Pascal-type recursion [n+1, m] = q^m [n, m] + [n, m-1]; entries with
  // m > n stay zero, which makes the boundary cases come out right.
  std::vector<LaurentPoly> row(static_cast<size_t>(m) + 1);
  row[0] = LaurentPoly(1L);
  for (int nn = 1; nn <= n; ++nn)
    for (int mm = std::min(nn, m); mm >= 1; --mm)
      row[mm] = row[mm].shifted(mm) + row[mm - 1];
  return row[m];
}

LaurentPoly pochhammer(int a, int n) {
  if (a < 0 || n < 0) throw std::invalid_argument("pochhammer: negative input");
  LaurentPoly r(1L);
  for (int k = 0; k < n; ++k) r *= LaurentPoly(1L) - LaurentPoly::q(a + k);
  return r;
}

RationalFunction nu(int k) {
  if (k < 0) throw std::invalid_argument("nu: k must be >= 0");
  LaurentPoly den(1L);
  for (int c = 1; c <= k; ++c) den *= LaurentPoly(1L) - LaurentPoly::q(2 * c);
  return RationalFunction(LaurentPoly(1L), den);
}

LaurentPoly beta_poly(int p, int a) {
  if (p < 1 || a < 1) throw std::invalid_argument("beta: p, a must be >= 1");
  LaurentPoly num(1L), den(1L);
  for (int k = 0; k < p; ++k) num *= LaurentPoly(1L) - LaurentPoly::q(2 * (a + k));
  for (int k = 1; k <= p; ++k) den *= LaurentPoly(1L) - LaurentPoly::q(2 * k);
  return num.exact_div(den);
}

RationalFunction alpha_rf(int p, int a) {
  if (p < 1 || a < 1) throw std::invalid_argument("alpha: p, a must be >= 1");
  std::vector<RationalFunction> alpha(static_cast<size_t>(p) + 1);
  for (int pp = 1; pp <= p; ++pp) {
    RationalFunction acc =
        nu(pp) * RationalFunction(LaurentPoly::q(-pp * a) - LaurentPoly::q(pp * a));
    for (int k = 1; k <= pp - 1; ++k)
      acc = acc - nu(k) * RationalFunction(LaurentPoly::q(k * a)) * alpha[pp - k];
    alpha[pp] = acc;
  }
  return alpha[p];
}

bool gauss_identity_check(int p, int a) {
  if (p < 1 || a < 1)
    throw std::invalid_argument("gauss_identity_check: p, a must be >= 1");
  LaurentPoly lhs = LaurentPoly(1L) - LaurentPoly::q(p * a);
  LaurentPoly rhs;
  for (int k = 0; k <= p - 1; ++k)
    rhs += (gauss_binom(p, k) * pochhammer(a, p - k)).shifted(k * a);
  return lhs == rhs;
}

}  // namespace klr
