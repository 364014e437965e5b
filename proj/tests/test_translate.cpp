#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sapp/axioms.hpp"
#include "sapp/eq_decider.hpp"
#include "sapp/parser.hpp"
#include "sapp/translate.hpp"
#include "sapp/util.hpp"

using namespace sapp;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

// Admissible tuples built constructively: each slope pair is a fresh pair,
// a copy of an earlier pair, or an earlier pair swapped; all three moves
// preserve every kappa_i.
CoordTuple random_admissible(Rng& rng, std::size_t len) {
  CoordTuple a;
  long long next_fresh = 10;
  for (std::size_t i = 0; i < len; ++i) {
    Rational c1, c2;
    const std::uint64_t move = i == 0 ? 0 : rng.below(3);
    if (move == 1) {
      const CoordTriple& prev = a[rng.below(i)];
      c1 = prev.c1;
      c2 = prev.c2;
    } else if (move == 2) {
      const CoordTriple& prev = a[rng.below(i)];
      c1 = prev.c2;
      c2 = prev.c1;
    } else {
      c1 = rat(next_fresh++);
      c2 = rat(next_fresh++);
    }
    a.push_back(CoordTriple{c1, c2, rat(1 + static_cast<long long>(rng.below(4)))});
  }
  return a;
}

bool atom_perp_hat(const CoordTriple& x, const CoordTriple& y) { return x.c1 == y.c2; }
bool atom_eq_hat(const CoordTriple& x, const CoordTriple& y) {
  return x.c1 == y.c1 && x.c3 == y.c3;
}

} // namespace

TEST_CASE("kappa(1) is the bare inequality") {
  const FormulaPtr k1 = kappa(1);
  REQUIRE(k1->kind() == Kind::Not);
  REQUIRE(k1->child()->kind() == Kind::AtomEq);
  CHECK(print(k1) == "x1_1 != x1_2");
  CHECK(metrics(k1).quantifier_count == 0);
  CHECK(metrics(k1).free_variables == std::set<std::string>{"x1_1", "x1_2"});
}

TEST_CASE("kappa(2) carries both biconditional blocks") {
  const FormulaPtr k2 = kappa(2);
  CHECK(equal(k2, parse("x2_1 != x2_2 & (x1_1 = x2_1 <-> x1_2 = x2_2) "
                        "& (x1_1 = x2_2 <-> x1_2 = x2_1)")));
  CHECK(metrics(k2).quantifier_count == 0);
  CHECK(metrics(k2).free_variables ==
        std::set<std::string>{"x1_1", "x1_2", "x2_1", "x2_2"});
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(metrics(kappa(n)).quantifier_count == 0);
  CHECK_THROWS_AS(kappa(0), Error);
}

TEST_CASE("translate lambda3 composes the atomic and quantifier rules") {
  const FormulaPtr hat = translate(canonicalize(axiom(AxiomName::lambda3)));
  // !(exists x1_1. exists x1_2. exists x1_3. (!!(x1_1 = x1_2) & kappa(1)))
  const FormulaPtr expected = Formula::make_not(Formula::make_exists(
      coord_var(1, 1),
      Formula::make_exists(
          coord_var(1, 2),
          Formula::make_exists(
              coord_var(1, 3),
              Formula::make_and(
                  Formula::make_not(Formula::make_not(
                      Formula::atom_eq(coord_var(1, 1), coord_var(1, 2)))),
                  kappa(1))))));
  CHECK(equal(hat, expected));
  CHECK(metrics(hat).quantifier_count == 3);
  CHECK(contains_subformula(hat, kappa(1)));
  CHECK(print(hat).find(print(kappa(1))) != std::string::npos);
}

TEST_CASE("translation triples the quantifier count") {
  CHECK(metrics(translate(canonicalize(axiom(AxiomName::lambda4)))).quantifier_count == 6);
  CHECK(metrics(translate(canonicalize(axiom(AxiomName::lambda6)))).quantifier_count == 12);
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::string text = "(O(a,b) & a != b)";
    const char* vars[] = {"a", "b", "c"};
    const unsigned q = 2 + rng.below(2);
    for (unsigned i = q; i >= 1; --i)
      text = std::string(rng.below(2) ? "exists " : "forall ") + vars[i - 1] + ". " + text;
    const FormulaPtr canon = canonicalize(parse(text));
    CHECK(metrics(translate(canon)).quantifier_count ==
          3 * metrics(canon).quantifier_count);
  }
}

TEST_CASE("translation output is linear in the input plus kappa blocks") {
  for (const FormulaPtr& f : {axiom(AxiomName::lambda4), axiom(AxiomName::lambda6),
                              axiom(AxiomName::lambda1, 2)}) {
    const FormulaPtr canon = canonicalize(f);
    // every node maps to at most 3 nodes, plus per-quantifier overhead
    // (two extra Exists, one And, one kappa block of at most rank r)
    const std::size_t in = node_count(canon);
    const unsigned q = metrics(canon).quantifier_count;
    const unsigned r = metrics(canon).quantifier_rank;
    const std::size_t kappa_bound = static_cast<std::size_t>(q) * (20 * r + 10);
    CHECK(node_count(translate(canon)) <= 3 * in + kappa_bound);
  }
}

TEST_CASE("translate requires a canonical sentence") {
  CHECK_THROWS_AS(translate(parse("O(x,y)")), Error);
  // parsed sentences are already depth-indexed, so this passes
  CHECK_NOTHROW(translate(parse("forall x. !O(x,x)")));
}

TEST_CASE("translated equality-only sentences stay equivalent") {
  const std::vector<std::string> corpus = {
      "exists x. x = x",
      "exists x. x != x",
      "exists x. exists y. x != y",
      "exists x. exists y. x = y",
      "exists x. forall y. y = x",
      "forall x. exists y. x != y",
      "forall x. forall y. x = y",
      "forall x. forall y. (x = y -> y = x)",
      "exists x. forall y. y != x",
      "forall x. exists y. x = y",
  };
  for (const std::string& text : corpus) {
    const FormulaPtr f = canonicalize(parse(text));
    const FormulaPtr hat = translate(f);
    CAPTURE(text);
    CHECK(decide_eq_infinity(hat) == decide_eq_infinity(f));
    const unsigned size = 3 * metrics(f).quantifier_count + 1;
    CHECK(eval_finite_eq(hat, size) == eval_finite_eq(f, size));
  }
}

TEST_CASE("translated symmetry sentence evaluates true on a finite domain") {
  const FormulaPtr hat =
      translate(canonicalize(parse("forall x. forall y. (x = y -> y = x)")));
  CHECK(eval_finite_eq(hat, 6));
}

TEST_CASE("correspondence examples") {
  const CoordTuple a = {{rat(2), rat(-1, 2), rat(5)}};
  CHECK(is_corresponding(a, a));
  CHECK(is_corresponding({{rat(3), rat(-1, 3), rat(5)}}, a));
  CHECK_FALSE(is_corresponding({{rat(3), rat(-1, 3), rat(7)}}, a));
  // second component must be the negative reciprocal
  CHECK_FALSE(is_corresponding({{rat(3), rat(-1, 2), rat(5)}}, a));
  // zero components are rejected, not an error
  CHECK_FALSE(is_corresponding({{rat(3), rat(-1, 3), rat(0)}}, a));
}

TEST_CASE("correspondence input validation") {
  const CoordTuple a = {{rat(2), rat(-1, 2), rat(5)}};
  CHECK_THROWS_AS(is_corresponding({}, a), Error);
  // kappa violated: equal slope components
  const CoordTuple bad = {{rat(2), rat(2), rat(5)}};
  try {
    is_corresponding(bad, bad);
    FAIL("expected inadmissibility error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index 1") != std::string::npos);
  }
  // admissible at 1, broken at 2: x1_1 = x2_1 but x1_2 != x2_2
  const CoordTuple bad2 = {{rat(2), rat(3), rat(5)}, {rat(2), rat(7), rat(5)}};
  try {
    is_corresponding(bad2, bad2);
    FAIL("expected inadmissibility error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index 2") != std::string::npos);
  }
}

TEST_CASE("freshness must transfer") {
  // a repeats the slope, b must repeat it too
  const CoordTuple a = {{rat(2), rat(-1, 2), rat(5)}, {rat(2), rat(-1, 2), rat(7)}};
  const CoordTuple good = {{rat(3), rat(-1, 3), rat(5)}, {rat(3), rat(-1, 3), rat(7)}};
  const CoordTuple drift = {{rat(3), rat(-1, 3), rat(5)}, {rat(4), rat(-1, 4), rat(7)}};
  CHECK(is_corresponding(good, a));
  CHECK_FALSE(is_corresponding(drift, a));

  // a is fresh at 2, b must not collide
  const CoordTuple af = {{rat(2), rat(-1, 2), rat(5)}, {rat(3), rat(-1, 3), rat(7)}};
  const CoordTuple collide = {{rat(2), rat(-1, 2), rat(5)}, {rat(-1, 2), rat(2), rat(7)}};
  CHECK_FALSE(is_corresponding(collide, af));
}

TEST_CASE("make_corresponding produces corresponding tuples (Lemma 5/6 at desk scale)") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng.below(4);
    const CoordTuple a = random_admissible(rng, len);
    const CoordTuple b = make_corresponding(a);
    REQUIRE(is_corresponding(b, a));

    // atom transfer: both translated atoms agree under valuation by a and b
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < len; ++j) {
        CHECK(atom_perp_hat(a[i], a[j]) == atom_perp_hat(b[i], b[j]));
        CHECK(atom_eq_hat(a[i], a[j]) == atom_eq_hat(b[i], b[j]));
      }

    // subsequence closure: any nondecreasing index selection corresponds
    std::vector<std::size_t> idx;
    for (std::size_t pos = 0; pos < len; ++pos)
      if (rng.below(2) == 0) idx.push_back(pos);
    for (std::size_t pos = 0; pos < len; ++pos)
      if (rng.below(4) == 0) idx.push_back(idx.empty() ? pos : idx.back());
    std::sort(idx.begin(), idx.end());
    CoordTuple sub_a, sub_b;
    for (std::size_t pos : idx) {
      sub_a.push_back(a[pos]);
      sub_b.push_back(b[pos]);
    }
    if (!sub_a.empty()) CHECK(is_corresponding(sub_b, sub_a));
  }
}

TEST_CASE("make_corresponding picks fresh slopes away from reciprocals") {
  const CoordTuple a = {{rat(10), rat(11), rat(1)}, {rat(12), rat(13), rat(2)}};
  const CoordTuple b = make_corresponding(a);
  CHECK(b[0].c1 == rat(1));
  CHECK(b[0].c2 == rat(-1));
  // 2 collides with nothing; -1/2, -2, and 1/2 are all unused
  CHECK(b[1].c1 == rat(2));
  CHECK(b[1].c2 == rat(-1, 2));
  CHECK(b[0].c3 == rat(1));
  CHECK(b[1].c3 == rat(2));
}
