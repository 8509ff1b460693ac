#pragma once

// Exact rational linear algebra: small dense matrices and an incremental
// sparse row space for rank computations. Gaussian elimination over Rat,
// no pivot-size heuristics needed at the scales this library works at.

#include <cstdint>
#include <map>
#include <vector>

#include "rat.hpp"

namespace klr {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& s) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  int rank() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Sparse vector keyed by an arbitrary 64-bit index.
using SparseVec = std::map<std::uint64_t, Rat>;

/// Incremental row space: insert sparse vectors, query the rank so far.
/// Rows are kept in echelon form keyed by their leading index.
class RowSpace {
 public:
  /// Reduces v against the pivots; if a nonzero remainder survives it is
  /// added as a new pivot row. Returns true when the rank grew.
  bool insert(SparseVec v);

  /// Reduce without inserting; true iff v lies in the current span.
  bool contains(SparseVec v) const;

  /// Fully reduced representative of v modulo the pivot rows: the result is
  /// supported away from every pivot key.
  SparseVec normal_form(SparseVec v) const;

  bool is_pivot(std::uint64_t key) const { return pivots_.count(key) != 0; }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  void reduce(SparseVec& v) const;
  std::map<std::uint64_t, SparseVec> pivots_;
};

}  // namespace klr
