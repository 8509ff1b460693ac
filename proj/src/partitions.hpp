#pragma once

// Partitions, skew shapes and their combinatorics: enumeration, transpose,
// lexicographic order, Kostka numbers via semistandard tableaux, standard
// tableau counts, and skew characters via border-strip (Murnaghan-Nakayama)
// recursion. The character route serves as an independent oracle for the
// horizontal-strip tests used elsewhere.

#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace klr {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                    // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int r) const;               // 0 for rows beyond the last

  Partition transpose() const;
  bool contains(const Partition& inner) const;

  /// Lexicographic comparison of part sequences, padding with zeros.
  static bool lex_less(const Partition& a, const Partition& b);

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All compositions of n (ordered tuples of positive parts).
std::vector<std::vector<int>> compositions_of(int n);

/// The partition obtained by sorting a composition.
Partition partition_of_composition(const std::vector<int>& c);

struct Cell {
  int row, col;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

/// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  std::vector<Cell> cells() const;

  /// True iff no column of the diagram contains two cells.
  bool is_horizontal_strip() const;

  std::string str() const;

 private:
  Partition outer_, inner_;
};

/// Number of standard Young tableaux of straight shape (hook lengths).
Int syt_count(const Partition& p);

/// Number of standard Young tableaux of skew shape (removal recursion).
Int skew_syt_count(const SkewShape& s);

/// Kostka number: semistandard tableaux of shape lambda and content c.
/// Entries of c must be positive and sum to |lambda|.
Int kostka(const Partition& lambda, const std::vector<int>& content);

/// All chains mu_1 < mu_2 < ... < mu_l = lambda with |mu_j/mu_{j-1}| = b_j,
/// returned as the tuples of skew layers (mu_1/empty, mu_2/mu_1, ...).
std::vector<std::vector<SkewShape>> skew_branching(const Partition& lambda,
                                                   const std::vector<int>& b);

/// Skew character value at a cycle type, by border-strip recursion.
Rat skew_character(const SkewShape& shape, const Partition& cycle_type);

/// Multiplicity of the trivial representation in the skew module,
/// computed from character values averaged over conjugacy classes.
Int skew_trivial_multiplicity_oracle(const SkewShape& shape);

/// Combinatorial trivial-multiplicity test: 1 iff horizontal strip.
int skew_trivial_multiplicity(const SkewShape& shape);

/// Relabel an expansion indexed by partitions along the transpose.
std::map<Partition, Int> transpose_involution(const std::map<Partition, Int>& e);

}  // namespace klr
