#include "linalg.hpp"

#include <stdexcept>

namespace klr {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

int RatMatrix::rank() const {
  RatMatrix m(*this);
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rat lead = m.at(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col) / lead;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

void RowSpace::reduce(SparseVec& v) const {
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) return;
    const Rat f = lead->second;  // pivot rows are normalized to lead 1
    for (const auto& [k, c] : it->second) {
      auto ve = v.find(k);
      Rat nv = (ve == v.end() ? Rat(0) : ve->second) - f * c;
      if (nv == 0) {
        if (ve != v.end()) v.erase(ve);
      } else {
        v[k] = nv;
      }
    }
  }
}

bool RowSpace::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  const Rat lead = v.begin()->second;
  if (lead != 1)
    for (auto& [k, c] : v) {
      (void)k;
      c /= lead;
    }
  std::uint64_t key = v.begin()->first;
  pivots_.emplace(key, std::move(v));
  return true;
}

bool RowSpace::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

SparseVec RowSpace::normal_form(SparseVec v) const {
  // pivot rows have their smallest key in front, so eliminating the smallest
  // remaining pivot key only introduces larger keys: one ascending sweep
  SparseVec out;
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) {
      out.emplace(lead->first, lead->second);
      v.erase(lead);
      continue;
    }
    const Rat f = lead->second;
    for (const auto& [k, c] : it->second) {
      auto ve = v.find(k);
      Rat nv = (ve == v.end() ? Rat(0) : ve->second) - f * c;
      if (nv == 0) {
        if (ve != v.end()) v.erase(ve);
      } else {
        v[k] = nv;
      }
    }
  }
  return out;
}

}  // namespace klr
