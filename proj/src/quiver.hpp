#pragma once

// Quivers with loops, the derived symmetric Borcherds-Cartan matrix with its
// vertex classification, weights, and vertex sequences.

#include <map>
#include <string>
#include <vector>

namespace klr {

/// Quiver with loops. Vertices keep their file order; arrows are stored as
/// multiplicities per ordered pair.
class Quiver {
 public:
  Quiver(std::vector<std::string> names, std::vector<int> loops,
         std::vector<std::vector<int>> arrows);

  /// Parse the JSON quiver document (fields: vertices, loops, arrows).
  /// Errors name the offending field.
  static Quiver parse(const std::string& text);
  static Quiver load(const std::string& path);

  /// Canonical serialization; parse(dump()) round-trips bit-exactly.
  std::string dump() const;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int vertex_index(const std::string& name) const;  // throws for unknown names
  int loops(int i) const { return loops_.at(i); }
  int arrows(int i, int j) const { return arrows_.at(i).at(j); }

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> arrows_;
};

enum class VertexClass { Positive, Zero, Negative };  // a_ii = 2 / 0 / < 0

/// Symmetric Borcherds-Cartan matrix a_ii = 2 - 2 h_i, a_ij = -h_ij - h_ji.
class Cartan {
 public:
  explicit Cartan(const Quiver& q);

  int size() const { return static_cast<int>(a_.size()); }
  int a(int i, int j) const { return a_.at(i).at(j); }
  VertexClass klass(int i) const;
  bool positive(int i) const { return klass(i) == VertexClass::Positive; }
  bool imaginary(int i) const { return klass(i) != VertexClass::Positive; }

 private:
  std::vector<std::vector<int>> a_;
};

/// Vertex sequence (by vertex index).
using Seq = std::vector<int>;

/// Finitely supported weight: vertex index -> multiplicity.
using Weight = std::map<int, int>;

Weight weight_of_seq(const Seq& s);
int height(const Weight& w);

/// All sequences of the given weight, lexicographically ordered.
std::vector<Seq> sequences_of(const Weight& w);

std::string seq_str(const Quiver& q, const Seq& s);

}  // namespace klr
