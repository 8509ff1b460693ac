#pragma once

// Explicit Specht modules over the rationals (Young's seminormal form),
// Young-subgroup symmetrizers acting on them, and the resulting idempotent
// ranks. The Coxeter relations are verified at construction time, so any
// module handed out is an honest S_n-representation.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "partitions.hpp"

namespace klr {

/// Standard tableau: pos[k] is the cell holding entry k+1.
struct Tableau {
  std::vector<Cell> pos;
};

std::vector<Tableau> standard_tableaux(const Partition& p);

/// Finite-dimensional graded module described by one exact matrix per
/// generator label and a degree per basis vector. Symmetric-group modules are
/// concentrated in degree 0.
struct OperatorModule {
  std::vector<int> degrees;
  std::map<std::string, RatMatrix> gens;
  int dim() const { return static_cast<int>(degrees.size()); }
  const RatMatrix& gen(const std::string& name) const;
};

/// Throws unless s_k^2 = 1 plus the braid and commutation relations hold for
/// the generators labelled "s1".."s{n-1}".
void validate_coxeter(const OperatorModule& m, int n);

/// The Specht module S^lambda with adjacent-transposition matrices; validated.
OperatorModule specht_module(const Partition& lambda);

/// Matrix of an arbitrary word in the generators s1..s{n-1} (applied left to
/// right as function composition).
RatMatrix word_matrix(const OperatorModule& m, const std::vector<int>& word);

/// Young-subgroup averages on a fixed module, with per-block caching.
class YoungSymmetrizer {
 public:
  YoungSymmetrizer(const OperatorModule& m, int n) : m_(m), n_(n) {}

  /// Average of S_{size} acting on strands [offset, offset+size).
  const RatMatrix& block_average(int offset, int size);

  /// Average of S_{c_1} x S_{c_2} x ... (product of block averages).
  RatMatrix composition_average(const std::vector<int>& c);

 private:
  const OperatorModule& m_;
  int n_;
  std::map<std::pair<int, int>, RatMatrix> cache_;
};

/// rank(e_c . S^lambda) where e_c is the Young-subgroup average; the
/// independent combinatorial value is kostka(lambda, c).
Int idempotent_rank(const Partition& lambda, const std::vector<int>& c);

}  // namespace klr
