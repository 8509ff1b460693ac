#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engine.hpp"
#include "polyrep.hpp"

using namespace klr;

namespace {

const char* kA1 = R"({"vertices":["i"],"loops":{},"arrows":[]})";
const char* kA2 = R"({"vertices":["i","j"],"loops":{},"arrows":[["i","j"]]})";
const char* kJordan = R"({"vertices":["i"],"loops":{"i":1},"arrows":[]})";
const char* kTwoLoop = R"({"vertices":["i"],"loops":{"i":2},"arrows":[]})";
const char* kJordanArrow = R"({"vertices":["z","p"],"loops":{"z":1},"arrows":[["z","p"]]})";

std::vector<const char*> test_quivers() {
  return {kA1, kA2, kJordan, kTwoLoop, kJordanArrow};
}

// random composable generator word of the given weight
Algebra::RawTerm random_word(Algebra& alg, const Weight& nu, std::mt19937_64& rng) {
  auto seqs = sequences_of(nu);
  const Seq& src = seqs[rng() % seqs.size()];
  const int n = static_cast<int>(src.size());
  Algebra::RawTerm t{Rat(1), alg.seq_id(src), {}};
  int len = 1 + static_cast<int>(rng() % 8);
  for (int s = 0; s < len; ++s) {
    bool dot = (n < 2) || (rng() % 2 == 0);
    if (dot)
      t.toks.push_back(Algebra::Tok{true, static_cast<int>(rng() % n)});
    else
      t.toks.push_back(Algebra::Tok{false, static_cast<int>(rng() % (n - 1))});
  }
  return t;
}

Weight random_weight(const Quiver& q, std::mt19937_64& rng, int max_ht) {
  Weight nu;
  int ht = 1 + static_cast<int>(rng() % max_ht);
  for (int s = 0; s < ht; ++s) ++nu[static_cast<int>(rng() % q.vertex_count())];
  return nu;
}

}  // namespace

TEST_CASE("cartan matrices and vertex classes") {
  Cartan a1(Quiver::parse(kA1));
  CHECK(a1.a(0, 0) == 2);
  CHECK(a1.klass(0) == VertexClass::Positive);

  Cartan jordan(Quiver::parse(kJordan));
  CHECK(jordan.a(0, 0) == 0);
  CHECK(jordan.klass(0) == VertexClass::Zero);

  Cartan two(Quiver::parse(kTwoLoop));
  CHECK(two.a(0, 0) == -2);
  CHECK(two.klass(0) == VertexClass::Negative);

  Cartan mixed(Quiver::parse(kJordanArrow));
  CHECK(mixed.a(0, 0) == 0);
  CHECK(mixed.a(1, 1) == 2);
  CHECK(mixed.a(0, 1) == -1);
  CHECK(mixed.a(0, 1) == mixed.a(1, 0));
}

TEST_CASE("quiver file round-trip is bit-exact") {
  for (const char* text : test_quivers()) {
    Quiver q = Quiver::parse(text);
    std::string d = q.dump();
    Quiver q2 = Quiver::parse(d);
    CHECK(q2 == q);
    CHECK(q2.dump() == d);
  }
  CHECK_THROWS_WITH_AS(Quiver::parse(R"({"vertices":["i"],"loops":{"k":1}})"),
                       doctest::Contains("loops"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Quiver::parse(R"({"loops":{}})"), doctest::Contains("vertices"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Quiver::parse(R"({"vertices":["i"],"arrows":[["i","w"]]})"),
                       doctest::Contains("arrows"), std::invalid_argument);
}

TEST_CASE("H and Q polynomials") {
  Algebra jordan(Quiver::parse(kJordan));
  CHECK(jordan.h_poly(0) == MPoly(2, Rat(1)));

  Algebra two(Quiver::parse(kTwoLoop));
  MPoly u = MPoly::var(2, 0), v = MPoly::var(2, 1);
  CHECK(two.h_poly(0) == (u - v) * (u - v) * MPoly(2, Rat(-1)));

  Algebra a2(Quiver::parse(kA2));
  CHECK(a2.q_poly(0, 1) == (u - v).scaled(Rat(-1)));
  CHECK(a2.q_poly(1, 0) == (u - v));
  CHECK_THROWS_AS(a2.h_poly(0), std::invalid_argument);

  // Q_ij(u, v) = Q_ji(v, u) for every pair present in the test set
  Algebra ja(Quiver::parse(kJordanArrow));
  MPoly lhs = ja.q_poly(0, 1);
  MPoly rhs = ja.q_poly(1, 0).swapped(0);
  CHECK(lhs == rhs);
}

TEST_CASE("polynomial action: divided difference identities") {
  std::mt19937_64 rng(7);
  Algebra alg(Quiver::parse(kA1));
  PolyRep rep(alg.quiver());
  Weight nu{{0, 3}};
  for (int trial = 0; trial < 20; ++trial) {
    PolyVector v = rep.random_vector(nu, 4, rng);
    for (int k = 0; k + 1 < 3; ++k) {
      // d_k^2 = 0
      CHECK(rep.act_crossing(k, rep.act_crossing(k, v)).empty());
      // d_k x_k - x_{k+1} d_k = id
      PolyVector lhs = rep.act_crossing(k, rep.act_dot(k, v));
      PolyVector rhs = rep.act_dot(k + 1, rep.act_crossing(k, v));
      for (auto& [s, f] : rhs) pv_add(lhs, s, f.scaled(Rat(-1)));
      CHECK(pv_equal(lhs, v));
    }
  }
}

TEST_CASE("normal form: double crossings match the local relations") {
  // nil-Hecke: tau^2 = 0
  {
    Algebra alg(Quiver::parse(kA1));
    Seq s{0, 0};
    Element t = alg.crossing(s, 0);
    CHECK(alg.mul(t, t).empty());
  }
  // Jordan: tau^2 = 1
  {
    Algebra alg(Quiver::parse(kJordan));
    Seq s{0, 0};
    Element t = alg.crossing(s, 0);
    CHECK(alg.mul(t, t) == alg.unit(s));
  }
  // two loops: tau^2 = -(x1 - x2)^2
  {
    Algebra alg(Quiver::parse(kTwoLoop));
    Seq s{0, 0};
    Element t = alg.crossing(s, 0);
    Element expect;
    add_scaled(expect, alg.dot(s, 0, 2), Rat(-1));
    add_scaled(expect, alg.mul(alg.dot(s, 0), alg.dot(s, 1)), Rat(2));
    add_scaled(expect, alg.dot(s, 1, 2), Rat(-1));
    CHECK(alg.mul(t, t) == expect);
  }
  // distinct colors: tau^2 = Q_ij(x1, x2) on the (i, j) bottom
  {
    Algebra alg(Quiver::parse(kA2));
    Seq ij{0, 1}, ji{1, 0};
    Element down = alg.crossing(ij, 0);  // (i,j) -> (j,i)
    Element up = alg.crossing(ji, 0);    // (j,i) -> (i,j)
    Element prod = alg.mul(up, down);    // lands back on (i,j)
    Element expect;
    add_scaled(expect, alg.dot(ij, 0), Rat(-1));
    add_scaled(expect, alg.dot(ij, 1), Rat(1));
    CHECK(prod == expect);
  }
}

TEST_CASE("normal form: dot-crossing exchange (nil-Hecke)") {
  Algebra alg(Quiver::parse(kA1));
  Seq s{0, 0};
  Element t = alg.crossing(s, 0);
  Element x1 = alg.dot(s, 0), x2 = alg.dot(s, 1);
  // tau x1 = x2 tau + 1 (orientation fixed by the polynomial representation)
  CHECK(alg.mul(t, x1) == sum(alg.mul(x2, t), alg.unit(s)));
  // tau x2 = x1 tau - 1
  CHECK(alg.mul(t, x2) == difference(alg.mul(x1, t), alg.unit(s)));
  // x1 tau = tau x2 + 1
  CHECK(alg.mul(x1, t) == sum(alg.mul(t, x2), alg.unit(s)));
}

TEST_CASE("relation soundness: normal forms act like the raw words") {
  std::mt19937_64 rng(20260810);
  for (const char* text : test_quivers()) {
    Algebra alg(Quiver::parse(text));
    PolyRep rep(alg.quiver());
    for (int trial = 0; trial < 60; ++trial) {
      Weight nu = random_weight(alg.quiver(), rng, 4);
      Algebra::RawTerm w = random_word(alg, nu, rng);
      Element nf = alg.reduce(w);
      for (int probe = 0; probe < 4; ++probe) {
        PolyVector v = rep.random_vector(nu, 3, rng);
        CHECK(pv_equal(rep.act_raw(alg, w, v), rep.act_element(alg, nf, v)));
      }
    }
  }
}

TEST_CASE("normal form is idempotent on its own output") {
  std::mt19937_64 rng(99);
  for (const char* text : test_quivers()) {
    Algebra alg(Quiver::parse(text));
    for (int trial = 0; trial < 20; ++trial) {
      Weight nu = random_weight(alg.quiver(), rng, 3);
      Element nf = alg.reduce(random_word(alg, nu, rng));
      Element twice;
      for (const auto& [w, c] : nf) add_scaled(twice, alg.reduce(alg.word_tokens(w, c)), Rat(1));
      CHECK(twice == nf);
    }
  }
}

TEST_CASE("word products agree with raw token concatenation") {
  std::mt19937_64 rng(631);
  for (const char* text : test_quivers()) {
    Algebra alg(Quiver::parse(text));
    for (int trial = 0; trial < 40; ++trial) {
      Weight nu = random_weight(alg.quiver(), rng, 4);
      Element a = alg.reduce(random_word(alg, nu, rng));
      Element b = alg.reduce(random_word(alg, nu, rng));
      Element ref;
      for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
          if (alg.target_seq(wb) != alg.seq(wa.src)) continue;
          Algebra::RawTerm t = alg.word_tokens(wa, ca * cb);
          Algebra::RawTerm t2 = alg.word_tokens(wb, Rat(1));
          t.toks.insert(t.toks.end(), t2.toks.begin(), t2.toks.end());
          t.src = wb.src;
          add_scaled(ref, alg.reduce(std::move(t)), Rat(1));
        }
      CHECK(alg.mul(a, b) == ref);
    }
  }
}

TEST_CASE("product is associative and degree-additive") {
  std::mt19937_64 rng(4242);
  for (const char* text : test_quivers()) {
    Algebra alg(Quiver::parse(text));
    for (int trial = 0; trial < 25; ++trial) {
      Weight nu = random_weight(alg.quiver(), rng, 4);
      Element a = alg.reduce(random_word(alg, nu, rng));
      Element b = alg.reduce(random_word(alg, nu, rng));
      Element c = alg.reduce(random_word(alg, nu, rng));
      CHECK(alg.mul(a, alg.mul(b, c)) == alg.mul(alg.mul(a, b), c));
      if (!a.empty() && !b.empty()) {
        Element ab = alg.mul(a, b);
        if (!ab.empty()) {
          int da = alg.element_degree(a), db = alg.element_degree(b);
          CHECK(alg.element_degree(ab) == da + db);
        }
      }
    }
  }
}

TEST_CASE("psi is a degree-preserving anti-involution") {
  std::mt19937_64 rng(512);
  for (const char* text : test_quivers()) {
    Algebra alg(Quiver::parse(text));
    // fixed points
    Seq s{0};
    CHECK(alg.psi(alg.unit(s)) == alg.unit(s));
    CHECK(alg.psi(alg.dot(s, 0)) == alg.dot(s, 0));
    for (int trial = 0; trial < 20; ++trial) {
      Weight nu = random_weight(alg.quiver(), rng, 4);
      Element a = alg.reduce(random_word(alg, nu, rng));
      Element b = alg.reduce(random_word(alg, nu, rng));
      CHECK(alg.psi(alg.psi(a)) == a);
      CHECK(alg.psi(alg.mul(a, b)) == alg.mul(alg.psi(b), alg.psi(a)));
      if (!a.empty()) CHECK(alg.element_degree(alg.psi(a)) == alg.element_degree(a));
    }
  }
}

TEST_CASE("psi reverses crossing words") {
  Algebra alg(Quiver::parse(kA2));
  Seq s{0, 0, 1};
  Element t1t2 = alg.mul(alg.crossing(alg.target_seq(alg.crossing(s, 1).begin()->first), 0),
                         alg.crossing(s, 1));
  Seq tgt = alg.target_seq(t1t2.begin()->first);
  Element rev = alg.mul(alg.crossing(alg.target_seq(alg.crossing(tgt, 0).begin()->first), 1),
                        alg.crossing(tgt, 0));
  CHECK(alg.psi(t1t2) == rev);
}

TEST_CASE("braid relation with correction term (positive vertex, a_ij < 0)") {
  Algebra alg(Quiver::parse(kA2));
  Seq iji{0, 1, 0};
  // both braid words land on the same sequence; their difference is the
  // divided-difference quotient of Q_ij, here the constant -1
  auto braid = [&](std::initializer_list<int> ks) {
    Element e = alg.unit(iji);
    for (int k : ks) {
      Seq at = alg.target_seq(e.begin()->first);
      (void)at;
      e = alg.mul(alg.crossing(alg.target_seq(e.begin()->first), k), e);
    }
    return e;
  };
  Element lhs = braid({0, 1, 0});
  Element rhs = braid({1, 0, 1});
  Element diff = difference(lhs, rhs);
  CHECK(diff == scaled(alg.unit(iji), Rat(-1)));
}

TEST_CASE("symmetrizer and divided-power idempotents") {
  Algebra jordan(Quiver::parse(kJordan));
  for (int n = 1; n <= 3; ++n) {
    Element e = jordan.symmetrizer(0, n);
    CHECK(elements_equal(jordan, jordan.mul(e, e), e));
    Seq s(static_cast<size_t>(n), 0);
    for (int k = 0; k + 1 < n; ++k) {
      CHECK(jordan.mul(jordan.crossing(s, k), e) == e);
      CHECK(jordan.mul(e, jordan.crossing(s, k)) == e);
    }
  }
  CHECK_THROWS_AS(jordan.divided_power_idempotent(0, 2), std::invalid_argument);

  Algebra nil(Quiver::parse(kA1));
  for (int m = 1; m <= 4; ++m) {
    Element e = nil.divided_power_idempotent(0, m);
    CHECK(nil.mul(e, e) == e);
    if (!e.empty()) CHECK(nil.element_degree(e) == 0);
  }
  CHECK_THROWS_AS(nil.symmetrizer(0, 2), std::invalid_argument);
}

TEST_CASE("elements_equal runs both routes") {
  Algebra jordan(Quiver::parse(kJordan));
  Seq s{0, 0};
  Element t = jordan.crossing(s, 0);
  CHECK(elements_equal(jordan, jordan.mul(t, t), jordan.unit(s)));

  Algebra nil(Quiver::parse(kA1));
  Element tn = nil.crossing(s, 0);
  CHECK(elements_equal(nil, nil.mul(tn, tn), Element{}));
  CHECK_FALSE(elements_equal(nil, tn, nil.unit(s)));

  Element x = nil.dot(s, 0);
  Seq s1{0};
  CHECK_THROWS_AS(elements_equal(nil, x, nil.dot(s1, 0)), std::invalid_argument);
}

TEST_CASE("graded components and basis counting") {
  Algebra jordan(Quiver::parse(kJordan));
  Seq ii{0, 0};
  CHECK(jordan.graded_component(ii, ii, 0).size() == 2);  // 1 and tau
  CHECK(jordan.graded_component(ii, ii, 1).empty());
  CHECK(jordan.graded_component(ii, ii, 2).size() == 4);

  Algebra nil(Quiver::parse(kA1));
  CHECK(nil.graded_component(ii, ii, -2).size() == 1);  // tau alone

  Algebra a2(Quiver::parse(kA2));
  Seq ij{0, 1};
  // loopless distinct letters, degree 0: only the idempotent
  auto c0 = a2.graded_component(ij, ij, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].exps == std::vector<int>{0, 0});

  // counting: words with |r| <= B match #perms x #exponent vectors
  for (int B = 0; B <= 3; ++B) {
    int count = 0;
    for (int d = -2; d <= 2 * B; ++d) {
      for (const Word& w : nil.graded_component(ii, ii, d)) {
        int total = 0;
        for (int r : w.exps) total += r;
        if (total <= B) ++count;
      }
    }
    // 2 permutations, exponent vectors with r1 + r2 <= B
    CHECK(count == 2 * (B + 1) * (B + 2) / 2);
  }
}

TEST_CASE("empty weight degenerates gracefully") {
  Algebra alg(Quiver::parse(kA1));
  Seq empty{};
  Element one = alg.unit(empty);
  CHECK(alg.mul(one, one) == one);
  CHECK(alg.psi(one) == one);
  CHECK(alg.element_degree(one) == 0);
  CHECK(alg.graded_component(empty, empty, 0).size() == 1);
}

TEST_CASE("incomposable raw words are rejected with a diagnostic") {
  Algebra alg(Quiver::parse(kA1));
  Algebra::RawTerm bad{Rat(1), alg.seq_id(Seq{0, 0}), {Algebra::Tok{true, 5}}};
  CHECK_THROWS_AS(alg.reduce(bad), std::invalid_argument);
}
