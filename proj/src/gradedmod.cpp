#include "gradedmod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klr {

KLRModule::KLRModule(Algebra& alg, Weight nu, std::vector<Seq> basis_seq,
                     std::vector<int> degrees, std::vector<RatMatrix> dots,
                     std::vector<RatMatrix> crossings)
    : alg_(&alg),
      nu_(std::move(nu)),
      basis_seq_(std::move(basis_seq)),
      degrees_(std::move(degrees)),
      dots_(std::move(dots)),
      crossings_(std::move(crossings)) {
  validate();
}

RatMatrix KLRModule::projector(const Seq& s) const {
  RatMatrix p(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (basis_seq_[static_cast<size_t>(i)] == s) p.at(i, i) = 1;
  return p;
}

KLRModule KLRModule::shifted(int m) const {
  KLRModule r(*this);
  for (int& d : r.degrees_) d += m;
  return r;
}

KLRModule KLRModule::direct_sum(const KLRModule& a, const KLRModule& b) {
  if (a.alg_ != b.alg_ || a.nu_ != b.nu_)
    throw std::invalid_argument("direct_sum: modules over different algebras");
  const int da = a.dim(), db = b.dim();
  std::vector<Seq> seqs(a.basis_seq_);
  seqs.insert(seqs.end(), b.basis_seq_.begin(), b.basis_seq_.end());
  std::vector<int> degs(a.degrees_);
  degs.insert(degs.end(), b.degrees_.begin(), b.degrees_.end());
  auto block = [&](const RatMatrix& x, const RatMatrix& y) {
    RatMatrix m(da + db, da + db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) m.at(i, j) = x.at(i, j);
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j) m.at(da + i, da + j) = y.at(i, j);
    return m;
  };
  std::vector<RatMatrix> dots, crossings;
  for (size_t k = 0; k < a.dots_.size(); ++k) dots.push_back(block(a.dots_[k], b.dots_[k]));
  for (size_t k = 0; k < a.crossings_.size(); ++k)
    crossings.push_back(block(a.crossings_[k], b.crossings_[k]));
  return KLRModule(*a.alg_, a.nu_, std::move(seqs), std::move(degs), std::move(dots),
                   std::move(crossings));
}

void KLRModule::validate() const {
  const int d = dim();
  const int n = height(nu_);
  if (static_cast<int>(basis_seq_.size()) != d) throw std::logic_error("module: bad sequences");
  if (static_cast<int>(dots_.size()) != n || static_cast<int>(crossings_.size()) != std::max(0, n - 1))
    throw std::logic_error("module: generator count mismatch");
  for (const Seq& s : basis_seq_)
    if (weight_of_seq(s) != nu_) throw std::logic_error("module: component of wrong weight");

  const Cartan& c = alg_->cartan();
  auto check_blockprop = [&](const RatMatrix& m, bool crossing, int k) {
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < d; ++col) {
        if (m.at(row, col) == 0) continue;
        const Seq& sc = basis_seq_[static_cast<size_t>(col)];
        Seq expect(sc);
        int gdeg = 2;
        if (crossing) {
          gdeg = -c.a(sc[k], sc[k + 1]);
          std::swap(expect[k], expect[k + 1]);
        }
        if (basis_seq_[static_cast<size_t>(row)] != expect)
          throw std::logic_error("module: generator leaves the expected component");
        if (degrees_[static_cast<size_t>(row)] != degrees_[static_cast<size_t>(col)] + gdeg)
          throw std::logic_error("module: generator violates the grading");
      }
  };
  for (int k = 0; k < n; ++k) check_blockprop(dots_[static_cast<size_t>(k)], false, k);
  for (int k = 0; k + 1 < n; ++k) check_blockprop(crossings_[static_cast<size_t>(k)], true, k);

  // dots commute
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(dots_[a] * dots_[b] == dots_[b] * dots_[a]))
        throw std::logic_error("module: dots do not commute");

  // distant generators commute
  for (int a = 0; a + 1 < n; ++a) {
    for (int b = a + 2; b + 1 < n; ++b)
      if (!(crossings_[a] * crossings_[b] == crossings_[b] * crossings_[a]))
        throw std::logic_error("module: distant crossings do not commute");
    for (int m = 0; m < n; ++m)
      if (m != a && m != a + 1)
        if (!(crossings_[a] * dots_[m] == dots_[m] * crossings_[a]))
          throw std::logic_error("module: crossing and distant dot do not commute");
  }

  // per-component relations
  std::set<Seq> comps(basis_seq_.begin(), basis_seq_.end());
  for (const Seq& s : comps) {
    RatMatrix P = projector(s);
    for (int k = 0; k + 1 < n; ++k) {
      const RatMatrix& T = crossings_[static_cast<size_t>(k)];
      const RatMatrix& Xk = dots_[static_cast<size_t>(k)];
      const RatMatrix& Xk1 = dots_[static_cast<size_t>(k + 1)];
      const bool nil_pair = (s[k] == s[k + 1]) && c.positive(s[k]);

      // dot-crossing exchange
      RatMatrix lhs = T * Xk * P - Xk1 * T * P;
      RatMatrix rhs = nil_pair ? P : RatMatrix(d, d);
      if (!(lhs == rhs)) throw std::logic_error("module: dot-slide relation fails");
      lhs = T * Xk1 * P - Xk * T * P;
      rhs = nil_pair ? P.scaled(Rat(-1)) : RatMatrix(d, d);
      if (!(lhs == rhs)) throw std::logic_error("module: dot-slide relation fails");

      // double crossing
      RatMatrix dc = T * T * P;
      RatMatrix expect(d, d);
      for (const auto& [coef, mono] : alg_->double_crossing_monomials(s[k], s[k + 1])) {
        RatMatrix term = P;
        for (int t = 0; t < mono.first; ++t) term = Xk * term;
        for (int t = 0; t < mono.second; ++t) term = Xk1 * term;
        expect = expect + term.scaled(coef);
      }
      if (!(dc == expect)) throw std::logic_error("module: double-crossing relation fails");
    }
    for (int k = 0; k + 2 < n; ++k) {
      const RatMatrix& T1 = crossings_[static_cast<size_t>(k)];
      const RatMatrix& T2 = crossings_[static_cast<size_t>(k + 1)];
      RatMatrix diff = (T1 * T2 * T1 - T2 * T1 * T2) * P;
      RatMatrix expect(d, d);
      if (s[k] == s[k + 2] && c.positive(s[k]) && s[k + 1] != s[k]) {
        for (const auto& [coef, trip] : alg_->braid_corr_monomials(s[k], s[k + 1])) {
          RatMatrix term = P;
          for (int t = 0; t < trip[0]; ++t) term = dots_[static_cast<size_t>(k)] * term;
          for (int t = 0; t < trip[1]; ++t) term = dots_[static_cast<size_t>(k + 1)] * term;
          for (int t = 0; t < trip[2]; ++t) term = dots_[static_cast<size_t>(k + 2)] * term;
          expect = expect + term.scaled(coef);
        }
      }
      if (!(diff == expect)) throw std::logic_error("module: braid relation fails");
    }
  }
}

KLRModule specht_klr_module(Algebra& alg, int vertex, const Partition& lambda) {
  if (alg.cartan().klass(vertex) != VertexClass::Zero)
    throw std::invalid_argument("specht_klr_module requires a vertex with a_ii = 0");
  const int n = lambda.size();
  OperatorModule sp = specht_module(lambda);
  const int d = sp.dim();
  Weight nu{{vertex, n}};
  Seq s(static_cast<size_t>(n), vertex);
  std::vector<RatMatrix> dots(static_cast<size_t>(n), RatMatrix(d, d));
  std::vector<RatMatrix> crossings;
  for (int k = 1; k < n; ++k) crossings.push_back(sp.gen("s" + std::to_string(k)));
  return KLRModule(alg, nu, std::vector<Seq>(static_cast<size_t>(d), s),
                   std::vector<int>(static_cast<size_t>(d), 0), std::move(dots),
                   std::move(crossings));
}

KLRModule seq_permutation_module(Algebra& alg, const Weight& nu) {
  const Cartan& c = alg.cartan();
  auto seqs = sequences_of(nu);
  const int d = static_cast<int>(seqs.size());
  const int n = height(nu);
  std::map<Seq, int> index;
  for (int i = 0; i < d; ++i) index[seqs[static_cast<size_t>(i)]] = i;
  std::vector<RatMatrix> dots(static_cast<size_t>(n), RatMatrix(d, d));
  std::vector<RatMatrix> crossings;
  for (int k = 0; k + 1 < n; ++k) {
    RatMatrix T(d, d);
    for (int col = 0; col < d; ++col) {
      const Seq& s = seqs[static_cast<size_t>(col)];
      const int i = s[k], j = s[k + 1];
      if (i == j) {
        if (c.klass(i) == VertexClass::Zero) T.at(col, col) = 1;
        // positive: divided difference of a constant = 0
        // negative: multiplication by a positive power of dots = 0
      } else if (alg.quiver().arrows(i, j) == 0) {
        Seq t(s);
        std::swap(t[k], t[k + 1]);
        T.at(index.at(t), col) = 1;
      }
    }
    crossings.push_back(std::move(T));
  }
  return KLRModule(alg, nu, seqs, std::vector<int>(static_cast<size_t>(d), 0),
                   std::move(dots), std::move(crossings));
}

KLRModule nilhecke_irreducible_module(Algebra& alg, int vertex, int n) {
  if (!alg.cartan().positive(vertex))
    throw std::invalid_argument("nilhecke module requires a_ii = 2");
  // coinvariant quotient of the polynomial representation
  const int topdeg = n * (n - 1) / 2;

  auto monomials_of = [&](int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> mono(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
      if (pos == n - 1) {
        mono[static_cast<size_t>(pos)] = rem;
        out.push_back(mono);
        return;
      }
      for (int r = 0; r <= rem; ++r) {
        mono[static_cast<size_t>(pos)] = r;
        self(self, pos + 1, rem - r);
      }
    };
    if (n == 0) {
      if (total == 0) out.push_back({});
      return out;
    }
    rec(rec, 0, total);
    return out;
  };

  auto mono_key = [&](const std::vector<int>& m) {
    std::uint64_t k = 0;
    for (size_t i = 0; i < m.size(); ++i) k |= static_cast<std::uint64_t>(m[i]) << (6 * i);
    return k;
  };

  // elementary symmetric polynomials
  std::vector<MPoly> elem;
  for (int t = 1; t <= n; ++t) {
    MPoly e(n);
    std::vector<int> pick(static_cast<size_t>(t));
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == t) {
        std::vector<int> mono(static_cast<size_t>(n), 0);
        for (int p : pick) mono[static_cast<size_t>(p)] = 1;
        e.add_term(mono, Rat(1));
        return;
      }
      for (int v = start; v < n; ++v) {
        pick[static_cast<size_t>(depth)] = v;
        self(self, v + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    elem.push_back(std::move(e));
  }

  // echelonized ideal spans and quotient bases, per x-degree
  std::vector<RowSpace> ideal(static_cast<size_t>(topdeg) + 2);
  std::vector<std::vector<std::vector<int>>> basis(static_cast<size_t>(topdeg) + 2);
  std::map<std::uint64_t, int> global_index;  // mono key -> basis column
  std::vector<int> degrees;
  std::vector<std::vector<int>> all_basis;
  for (int m = 0; m <= topdeg + 1; ++m) {
    for (int t = 1; t <= n && t <= m; ++t)
      for (const auto& mono : monomials_of(m - t)) {
        MPoly p(n);
        p.add_term(mono, Rat(1));
        p = p * elem[static_cast<size_t>(t - 1)];
        SparseVec row;
        for (const auto& [mm, cc] : p.terms()) row[mono_key(mm)] = cc;
        ideal[static_cast<size_t>(m)].insert(std::move(row));
      }
    if (m > topdeg) continue;
    for (const auto& mono : monomials_of(m))
      if (!ideal[static_cast<size_t>(m)].is_pivot(mono_key(mono)))
        basis[static_cast<size_t>(m)].push_back(mono);
  }
  for (int m = 0; m <= topdeg; ++m)
    for (const auto& mono : basis[static_cast<size_t>(m)]) {
      global_index[mono_key(mono)] = static_cast<int>(all_basis.size());
      all_basis.push_back(mono);
      degrees.push_back(2 * m - topdeg);
    }

  const int d = static_cast<int>(all_basis.size());
  auto reduce_into = [&](const MPoly& p, int xdeg, RatMatrix& matrix, int col) {
    SparseVec row;
    for (const auto& [mm, cc] : p.terms()) row[mono_key(mm)] = cc;
    if (xdeg < 0) {
      if (!p.is_zero()) throw std::logic_error("negative degree with nonzero value");
      return;
    }
    SparseVec nf = ideal[static_cast<size_t>(xdeg)].normal_form(std::move(row));
    for (const auto& [key, cc] : nf) matrix.at(global_index.at(key), col) += cc;
  };

  std::vector<RatMatrix> dots(static_cast<size_t>(n), RatMatrix(d, d));
  std::vector<RatMatrix> crossings(static_cast<size_t>(std::max(0, n - 1)), RatMatrix(d, d));
  for (int col = 0; col < d; ++col) {
    const auto& mono = all_basis[static_cast<size_t>(col)];
    int m = 0;
    for (int r : mono) m += r;
    MPoly p(n);
    p.add_term(mono, Rat(1));
    for (int k = 0; k < n; ++k)
      reduce_into(p * MPoly::var(n, k), m + 1, dots[static_cast<size_t>(k)], col);
    for (int k = 0; k + 1 < n; ++k)
      reduce_into(p.divided_difference(k), m - 1, crossings[static_cast<size_t>(k)], col);
  }

  Weight nu{{vertex, n}};
  Seq s(static_cast<size_t>(n), vertex);
  return KLRModule(alg, nu, std::vector<Seq>(static_cast<size_t>(d), s), std::move(degrees),
                   std::move(dots), std::move(crossings));
}

std::vector<UnderlinedSeq> underlined_sequences(const Cartan& c, const Weight& nu) {
  std::vector<UnderlinedSeq> out;
  UnderlinedSeq cur;
  auto rec = [&](auto&& self, Weight rem) -> void {
    if (height(rem) == 0) {
      out.push_back(cur);
      return;
    }
    for (auto& [v, mult] : rem) {
      if (mult == 0) continue;
      int maxblock = (c.klass(v) == VertexClass::Zero) ? mult : 1;
      for (int m = 1; m <= maxblock; ++m) {
        Weight next(rem);
        next[v] -= m;
        if (next[v] == 0) next.erase(v);
        cur.emplace_back(v, m);
        self(self, std::move(next));
        cur.pop_back();
      }
    }
  };
  rec(rec, nu);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Seq expand_underlined(const UnderlinedSeq& u) {
  Seq s;
  for (const auto& [v, m] : u) s.insert(s.end(), static_cast<size_t>(m), v);
  return s;
}

// average of the crossing-word matrices over the block's symmetric group
RatMatrix block_average_matrix(const KLRModule& mod, int offset, int size) {
  const int d = mod.dim();
  RatMatrix sum(d, d);
  std::vector<int> start(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) start[static_cast<size_t>(i)] = i;
  std::map<std::vector<int>, RatMatrix> frontier;
  std::set<std::vector<int>> seen{start};
  frontier.emplace(start, RatMatrix::identity(d));
  Int count(0);
  while (!frontier.empty()) {
    std::map<std::vector<int>, RatMatrix> next;
    for (const auto& [perm, mat] : frontier) {
      sum = sum + mat;
      ++count;
      for (int j = 0; j + 1 < size; ++j)
        if (perm[static_cast<size_t>(j)] < perm[static_cast<size_t>(j + 1)]) {
          std::vector<int> p2(perm);
          std::swap(p2[static_cast<size_t>(j)], p2[static_cast<size_t>(j + 1)]);
          if (seen.insert(p2).second)
            next.emplace(std::move(p2), mat * mod.crossing(offset + j));
        }
    }
    frontier = std::move(next);
  }
  return sum.scaled(Rat(1) / Rat(count));
}

LaurentPoly graded_rank(const KLRModule& mod, const RatMatrix& m) {
  LaurentPoly out;
  std::set<int> degs(mod.degrees().begin(), mod.degrees().end());
  for (int dval : degs) {
    std::vector<int> idx;
    for (int i = 0; i < mod.dim(); ++i)
      if (mod.degrees()[static_cast<size_t>(i)] == dval) idx.push_back(i);
    RatMatrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) sub.at(static_cast<int>(r), static_cast<int>(c)) = m.at(idx[r], idx[c]);
    int rank = sub.rank();
    if (rank != 0) out += LaurentPoly::monomial(Rat(rank), dval);
  }
  return out;
}

}  // namespace

CharacterVector character(const KLRModule& m) {
  CharacterVector ch;
  for (const UnderlinedSeq& u : underlined_sequences(m.algebra().cartan(), m.weight())) {
    RatMatrix idem = m.projector(expand_underlined(u));
    int offset = 0;
    for (const auto& [v, mult] : u) {
      (void)v;
      if (mult > 1) idem = block_average_matrix(m, offset, mult) * idem;
      offset += mult;
    }
    LaurentPoly dim = graded_rank(m, idem);
    if (!dim.is_zero()) ch[u] = dim;
  }
  return ch;
}

CharacterVector character_sum(const CharacterVector& a, const CharacterVector& b) {
  CharacterVector out(a);
  for (const auto& [u, p] : b) {
    out[u] += p;
    if (out[u].is_zero()) out.erase(u);
  }
  return out;
}

CharacterVector character_shift(const CharacterVector& a, int m) {
  CharacterVector out;
  for (const auto& [u, p] : a) out[u] = p.shifted(m);
  return out;
}

RestrictedModule delta_restrict(const KLRModule& m, int vertex, int n) {
  const int ht = height(m.weight());
  auto it = m.weight().find(vertex);
  const int avail = (it == m.weight().end()) ? 0 : it->second;
  if (n < 0 || n > avail)
    throw std::invalid_argument("delta_restrict: multiplicity out of range");
  const int split = ht - n;
  std::vector<int> keep;
  for (int i = 0; i < m.dim(); ++i) {
    const Seq& s = m.basis_seqs()[static_cast<size_t>(i)];
    bool tail = true;
    for (int p = split; p < ht; ++p) tail = tail && (s[static_cast<size_t>(p)] == vertex);
    if (tail) keep.push_back(i);
  }
  RestrictedModule out;
  auto sub = [&](const RatMatrix& big) {
    RatMatrix r(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t b = 0; b < keep.size(); ++b) r.at(static_cast<int>(a), static_cast<int>(b)) = big.at(keep[a], keep[b]);
    return r;
  };
  for (int i : keep) {
    out.basis_seq.push_back(m.basis_seqs()[static_cast<size_t>(i)]);
    out.degrees.push_back(m.degrees()[static_cast<size_t>(i)]);
  }
  for (int k = 0; k < ht; ++k) out.dots.push_back(sub(m.dot(k)));
  for (int k = 0; k + 1 < split; ++k) out.crossings_left.push_back(sub(m.crossing(k)));
  for (int k = split; k + 1 < ht; ++k) out.crossings_right.push_back(sub(m.crossing(k)));
  return out;
}

int epsilon(const KLRModule& m, int vertex) {
  auto it = m.weight().find(vertex);
  const int avail = (it == m.weight().end()) ? 0 : it->second;
  for (int n = avail; n >= 1; --n)
    if (delta_restrict(m, vertex, n).dim() > 0) return n;
  return 0;
}

}  // namespace klr
