#include "partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int r) const {
  return (r >= 0 && r < rows()) ? parts_[r] : 0;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.resize(parts_[0]);
    for (int c = 0; c < parts_[0]; ++c)
      for (int r = 0; r < rows(); ++r)
        if (parts_[r] > c) ++t[c];
  }
  return Partition(t);
}

bool Partition::contains(const Partition& inner) const {
  for (int r = 0; r < inner.rows(); ++r)
    if (inner.part(r) > part(r)) return false;
  return true;
}

bool Partition::lex_less(const Partition& a, const Partition& b) {
  int n = std::max(a.rows(), b.rows());
  for (int r = 0; r < n; ++r) {
    if (a.part(r) != b.part(r)) return a.part(r) < b.part(r);
  }
  return false;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void enumerate_parts(int remaining, int max_part, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_parts(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_parts(n, n == 0 ? 1 : n, cur, out);
  return out;  // recursion emits decreasing lexicographic order directly
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (auto& rest : compositions_of(n - first)) {
      std::vector<int> c{first};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  return out;
}

Partition partition_of_composition(const std::vector<int>& c) {
  std::vector<int> s(c);
  std::sort(s.rbegin(), s.rend());
  return Partition(s);
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("SkewShape: inner not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> cs;
  for (int r = 0; r < outer_.rows(); ++r)
    for (int c = inner_.part(r); c < outer_.part(r); ++c) cs.push_back({r, c});
  return cs;
}

bool SkewShape::is_horizontal_strip() const {
  std::set<int> seen;
  for (const Cell& c : cells())
    if (!seen.insert(c.col).second) return false;
  return true;
}

std::string SkewShape::str() const {
  return outer_.str() + "/" + inner_.str();
}

Int syt_count(const Partition& p) {
  // hook length formula
  Int num = factorial(static_cast<unsigned>(p.size()));
  Int den(1);
  Partition t = p.transpose();
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.part(r); ++c) {
      int hook = (p.part(r) - c) + (t.part(c) - r) - 1;
      den *= hook;
    }
  return num / den;
}

Int skew_syt_count(const SkewShape& s) {
  if (s.size() == 0) return Int(1);
  // remove a maximal cell (no cell to its right in the row, none below in
  // the column) in every possible way
  Int total(0);
  const Partition& out = s.outer();
  for (int r = 0; r < out.rows(); ++r) {
    int c = out.part(r) - 1;
    if (c < s.inner().part(r)) continue;         // row empty in the skew
    if (out.part(r + 1) > c) continue;           // cell below exists
    std::vector<int> smaller(out.parts());
    if (--smaller[r] == 0) smaller.erase(smaller.begin() + r);
    total += skew_syt_count(SkewShape(Partition(smaller), s.inner()));
  }
  return total;
}

namespace {

// Count semistandard fillings row by row: the cells holding entries <= k form
// a partition chain with horizontal-strip steps.
Int kostka_rec(const Partition& lambda, const std::vector<int>& content, size_t k,
               const Partition& filled) {
  if (k == content.size()) return filled == lambda ? Int(1) : Int(0);
  Int total(0);
  // enumerate partitions mu with filled <= mu <= lambda, |mu/filled| =
  // content[k], mu/filled a horizontal strip
  std::vector<int> mu(std::max(filled.rows(), lambda.rows()), 0);
  for (int r = 0; r < static_cast<int>(mu.size()); ++r) mu[r] = filled.part(r);

  // recursive row chooser
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == static_cast<int>(mu.size())) {
      if (remaining == 0) {
        std::vector<int> trimmed(mu);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += kostka_rec(lambda, content, k + 1, Partition(trimmed));
      }
      return;
    }
    int lo = filled.part(row);
    // horizontal strip: new row length can't pass the previous row's old length
    int hi = std::min(lambda.part(row), row == 0 ? lambda.part(0) : filled.part(row - 1));
    for (int len = lo; len <= hi && len - lo <= remaining; ++len) {
      if (row > 0 && len > mu[row - 1]) break;  // keep mu a partition
      mu[row] = len;
      self(self, row + 1, remaining - (len - lo));
      mu[row] = filled.part(row);
    }
  };
  rec(rec, 0, content[k]);
  return total;
}

}  // namespace

Int kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c <= 0) throw std::invalid_argument("kostka: content entries must be positive");
    total += c;
  }
  if (total != lambda.size())
    throw std::invalid_argument("kostka: content does not sum to |lambda|");
  return kostka_rec(lambda, content, 0, Partition());
}

namespace {

void chains_rec(const Partition& top, const std::vector<int>& b, size_t j,
                std::vector<Partition>& chain, std::vector<std::vector<SkewShape>>& out) {
  if (j == 0) {
    // chain = [mu_l = lambda, mu_{l-1}, ..., mu_1, mu_0 = empty]; emit the
    // layers mu_1/mu_0, mu_2/mu_1, ..., lambda/mu_{l-1} in that order
    std::vector<SkewShape> layers;
    for (size_t idx = chain.size() - 1; idx-- > 0;)
      layers.emplace_back(chain[idx], chain[idx + 1]);
    out.push_back(std::move(layers));
    return;
  }
  // enumerate mu <= top with |top| - |mu| = b[j-1]
  int target = top.size() - b[j - 1];
  if (target < 0) return;
  for (const Partition& mu : partitions_of(target))
    if (top.contains(mu)) {
      chain.push_back(mu);
      chains_rec(mu, b, j - 1, chain, out);
      chain.pop_back();
    }
}

}  // namespace

std::vector<std::vector<SkewShape>> skew_branching(const Partition& lambda,
                                                   const std::vector<int>& b) {
  int total = 0;
  for (int x : b) {
    if (x <= 0) throw std::invalid_argument("skew_branching: parts must be positive");
    total += x;
  }
  if (total != lambda.size())
    throw std::invalid_argument("skew_branching: composition does not sum to |lambda|");
  std::vector<std::vector<SkewShape>> out;
  std::vector<Partition> chain{lambda};
  chains_rec(lambda, b, b.size(), chain, out);
  // layers currently come out as (mu_1/empty, ..., lambda/mu_{l-1}); keep it so
  return out;
}

namespace {

// Border strips of size k that can be removed from the top of outer while
// staying above inner: results are partitions nu with inner <= nu <= outer,
// |outer/nu| = k, outer/nu connected with no 2x2 square.
bool is_border_strip(const SkewShape& s) {
  auto cs = s.cells();
  if (cs.empty()) return false;
  // no 2x2 square
  std::set<Cell> set(cs.begin(), cs.end());
  for (const Cell& c : cs)
    if (set.count({c.row + 1, c.col}) && set.count({c.row, c.col + 1}) &&
        set.count({c.row + 1, c.col + 1}))
      return false;
  // connectivity (edge adjacency)
  std::vector<Cell> stack{cs[0]};
  std::set<Cell> seen{cs[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell d : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                   Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
      if (set.count(d) && seen.insert(d).second) stack.push_back(d);
  }
  return seen.size() == set.size();
}

int strip_height(const SkewShape& s) {
  std::set<int> rows;
  for (const Cell& c : s.cells()) rows.insert(c.row);
  return static_cast<int>(rows.size()) - 1;
}

Rat skew_char_rec(const Partition& outer, const Partition& inner,
                  std::vector<int> cycles) {
  if (cycles.empty()) return outer == inner ? Rat(1) : Rat(0);
  int k = cycles.back();  // peeling order does not matter
  cycles.pop_back();
  Rat total(0);
  int target = outer.size() - k;
  if (target < inner.size()) return total;
  for (const Partition& nu : partitions_of(target)) {
    if (!outer.contains(nu) || !nu.contains(inner)) continue;
    SkewShape strip(outer, nu);
    if (!is_border_strip(strip)) continue;
    Rat sign = (strip_height(strip) % 2 == 0) ? Rat(1) : Rat(-1);
    total += sign * skew_char_rec(nu, inner, cycles);
  }
  return total;
}

}  // namespace

Rat skew_character(const SkewShape& shape, const Partition& cycle_type) {
  if (cycle_type.size() != shape.size())
    throw std::invalid_argument("skew_character: cycle type has wrong size");
  return skew_char_rec(shape.outer(), shape.inner(), cycle_type.parts());
}

Int skew_trivial_multiplicity_oracle(const SkewShape& shape) {
  int k = shape.size();
  if (k == 0) return Int(1);
  // <chi, 1> = (1/k!) sum over classes |class| * chi(class)
  Rat total(0);
  Int kfact = factorial(static_cast<unsigned>(k));
  for (const Partition& rho : partitions_of(k)) {
    // z_rho = prod i^{m_i} m_i!
    Int z(1);
    std::map<int, int> mult;
    for (int part : rho.parts()) ++mult[part];
    for (const auto& [part, m] : mult) {
      for (int t = 0; t < m; ++t) z *= part;
      z *= factorial(static_cast<unsigned>(m));
    }
    Rat class_size = Rat(kfact) / Rat(z);
    total += class_size * skew_character(shape, rho);
  }
  total /= Rat(kfact);
  if (!is_integer(total)) throw std::logic_error("trivial multiplicity not integral");
  return total.get_num();
}

int skew_trivial_multiplicity(const SkewShape& shape) {
  return shape.is_horizontal_strip() ? 1 : 0;
}

std::map<Partition, Int> transpose_involution(const std::map<Partition, Int>& e) {
  std::map<Partition, Int> out;
  for (const auto& [p, c] : e) out[p.transpose()] += c;
  return out;
}

}  // namespace klr
