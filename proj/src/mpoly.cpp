#include "mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

MPoly::MPoly(int nvars, const Rat& constant) : nvars_(nvars) {
  if (constant != 0) c_[std::vector<int>(nvars, 0)] = constant;
}

MPoly MPoly::var(int nvars, int k, int power) {
  if (k < 0 || k >= nvars) throw std::invalid_argument("MPoly::var: index out of range");
  MPoly p(nvars);
  std::vector<int> mono(nvars, 0);
  mono[k] = power;
  p.c_[mono] = 1;
  return p;
}

Rat MPoly::coeff(const std::vector<int>& mono) const {
  auto it = c_.find(mono);
  return it == c_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const std::vector<int>& mono, const Rat& v) {
  auto it = c_.find(mono);
  Rat nv = (it == c_.end() ? Rat(0) : it->second) + v;
  if (nv == 0) {
    if (it != c_.end()) c_.erase(it);
  } else {
    c_[mono] = nv;
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(*this);
  for (const auto& [m, v] : o.c_) r.add_term(m, v);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r(*this);
  for (const auto& [m, v] : o.c_) r.add_term(m, -v);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  std::vector<int> mono(nvars_);
  for (const auto& [m1, v1] : c_)
    for (const auto& [m2, v2] : o.c_) {
      for (int i = 0; i < nvars_; ++i) mono[i] = m1[i] + m2[i];
      r.add_term(mono, v1 * v2);
    }
  return r;
}

MPoly MPoly::scaled(const Rat& s) const {
  MPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [m, v] : c_) r.c_[m] = v * s;
  return r;
}

MPoly MPoly::swapped(int k) const {
  MPoly r(nvars_);
  for (const auto& [m, v] : c_) {
    std::vector<int> mono(m);
    std::swap(mono[k], mono[k + 1]);
    r.add_term(mono, v);
  }
  return r;
}

MPoly MPoly::divided_difference(int k) const {
  // term by term: d(x^a y^b) = sum_{e} x^{b+e} y^{a-1-e} (sign by a vs b)
  MPoly r(nvars_);
  std::vector<int> mono(nvars_);
  for (const auto& [m, v] : c_) {
    int a = m[k], b = m[k + 1];
    if (a == b) continue;
    mono = m;
    if (a > b) {
      for (int e = 0; e <= a - b - 1; ++e) {
        mono[k] = b + e;
        mono[k + 1] = a - 1 - e;
        r.add_term(mono, v);
      }
    } else {
      for (int e = 0; e <= b - a - 1; ++e) {
        mono[k] = a + e;
        mono[k + 1] = b - 1 - e;
        r.add_term(mono, -v);
      }
    }
  }
  return r;
}

int MPoly::degree() const {
  int d = 0;
  for (const auto& [m, v] : c_) {
    (void)v;
    d = std::max(d, 2 * std::accumulate(m.begin(), m.end(), 0));
  }
  return d;
}

std::string MPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : c_) {
    if (!first) os << (v > 0 ? " + " : " - ");
    if (first && v < 0) os << "-";
    Rat a = abs(v);
    bool printed = false;
    if (a != 1) {
      os << a.get_str();
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) {
        if (printed) os << "*";
        os << "x" << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
        printed = true;
      }
    if (!printed) os << "1";
    first = false;
  }
  return os.str();
}

}  // namespace klr
