#include "specht.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace klr {

const RatMatrix& OperatorModule::gen(const std::string& name) const {
  auto it = gens.find(name);
  if (it == gens.end()) throw std::invalid_argument("module has no generator " + name);
  return it->second;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  int n = p.size();
  std::vector<int> fill(p.rows(), 0);
  Tableau t;
  t.pos.resize(n);
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry == n) {
      out.push_back(t);
      return;
    }
    for (int r = 0; r < p.rows(); ++r) {
      if (fill[r] >= p.part(r)) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      t.pos[entry] = {r, fill[r]};
      ++fill[r];
      self(self, entry + 1);
      --fill[r];
    }
  };
  rec(rec, 0);
  return out;
}

void validate_coxeter(const OperatorModule& m, int n) {
  const RatMatrix id = RatMatrix::identity(m.dim());
  auto S = [&](int k) -> const RatMatrix& { return m.gen("s" + std::to_string(k)); };
  for (int k = 1; k < n; ++k)
    if (!(S(k) * S(k) == id)) throw std::logic_error("involution relation fails");
  for (int k = 1; k < n; ++k)
    for (int j = k + 2; j < n; ++j)
      if (!(S(k) * S(j) == S(j) * S(k)))
        throw std::logic_error("commutation relation fails");
  for (int k = 1; k + 1 < n; ++k)
    if (!(S(k) * S(k + 1) * S(k) == S(k + 1) * S(k) * S(k + 1)))
      throw std::logic_error("braid relation fails");
}

OperatorModule specht_module(const Partition& lambda) {
  int n = lambda.size();
  if (n < 1) throw std::invalid_argument("specht_module: |lambda| must be >= 1");
  std::vector<Tableau> tabs = standard_tableaux(lambda);
  const int dim = static_cast<int>(tabs.size());

  std::map<std::vector<std::pair<int, int>>, int> index;
  auto key_of = [](const Tableau& t) {
    std::vector<std::pair<int, int>> k;
    for (const Cell& c : t.pos) k.emplace_back(c.row, c.col);
    return k;
  };
  for (int i = 0; i < dim; ++i) index[key_of(tabs[i])] = i;

  OperatorModule mod;
  mod.degrees.assign(dim, 0);
  for (int k = 1; k < n; ++k) {
    RatMatrix M(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const Cell a = tabs[i].pos[k - 1];  // entry k
      const Cell b = tabs[i].pos[k];      // entry k+1
      if (a.row == b.row) {
        M.at(i, i) = 1;
        continue;
      }
      if (a.col == b.col) {
        M.at(i, i) = -1;
        continue;
      }
      // axial distance; |d| >= 2 here
      int d = (b.col - b.row) - (a.col - a.row);
      Tableau swapped = tabs[i];
      std::swap(swapped.pos[k - 1], swapped.pos[k]);
      int j = index.at(key_of(swapped));
      M.at(i, i) = rat_frac(1, d);
      M.at(j, i) = (d > 0) ? Rat(1) - rat_frac(1, d) * rat_frac(1, d) : Rat(1);
    }
    mod.gens["s" + std::to_string(k)] = std::move(M);
  }
  validate_coxeter(mod, n);
  return mod;
}

RatMatrix word_matrix(const OperatorModule& m, const std::vector<int>& word) {
  RatMatrix r = RatMatrix::identity(m.dim());
  for (int k : word) r = r * m.gen("s" + std::to_string(k));
  return r;
}

const RatMatrix& YoungSymmetrizer::block_average(int offset, int size) {
  auto key = std::make_pair(offset, size);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (offset < 0 || size < 1 || offset + size > n_)
    throw std::invalid_argument("block_average: block out of range");

  // Sum rho(w) over the block's symmetric group by BFS over the Cayley graph,
  // extending each element by one generator (one matrix product per element).
  const int dim = m_.dim();
  RatMatrix sum(dim, dim);
  std::vector<int> start(size);
  for (int i = 0; i < size; ++i) start[i] = i;
  std::map<std::vector<int>, RatMatrix> frontier;
  std::set<std::vector<int>> seen;
  frontier.emplace(start, RatMatrix::identity(dim));
  seen.insert(start);
  Int count(0);
  while (!frontier.empty()) {
    std::map<std::vector<int>, RatMatrix> next;
    for (const auto& [perm, mat] : frontier) {
      sum = sum + mat;
      ++count;
      for (int j = 0; j + 1 < size; ++j) {
        if (perm[j] < perm[j + 1]) {  // extend by a right ascent only
          std::vector<int> p2(perm);
          std::swap(p2[j], p2[j + 1]);
          if (seen.insert(p2).second)
            next.emplace(std::move(p2), mat * m_.gen("s" + std::to_string(offset + j + 1)));
        }
      }
    }
    frontier = std::move(next);
  }
  RatMatrix avg = sum.scaled(Rat(1) / Rat(count));
  return cache_.emplace(key, std::move(avg)).first->second;
}

RatMatrix YoungSymmetrizer::composition_average(const std::vector<int>& c) {
  int total = 0;
  RatMatrix r = RatMatrix::identity(m_.dim());
  for (int part : c) {
    if (part < 1) throw std::invalid_argument("composition parts must be positive");
    r = r * block_average(total, part);
    total += part;
  }
  if (total != n_) throw std::invalid_argument("composition does not sum to n");
  return r;
}

Int idempotent_rank(const Partition& lambda, const std::vector<int>& c) {
  OperatorModule mod = specht_module(lambda);
  YoungSymmetrizer ys(mod, lambda.size());
  return Int(ys.composition_average(c).rank());
}

}  // namespace klr
