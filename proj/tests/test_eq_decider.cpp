#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sapp/axioms.hpp"
#include "sapp/corpus.hpp"
#include "sapp/eq_decider.hpp"
#include "sapp/parser.hpp"
#include "sapp/translate.hpp"
#include "sapp/util.hpp"

using namespace sapp;

namespace {

std::string distinct_sentence(unsigned n) {
  std::string body;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      if (!body.empty()) body += " & ";
      body += "d" + std::to_string(i) + " != d" + std::to_string(j);
    }
  if (body.empty()) body = "d1 = d1";
  std::string text = "(" + body + ")";
  for (unsigned i = n; i >= 1; --i) text = "exists d" + std::to_string(i) + ". " + text;
  return text;
}

} // namespace

TEST_CASE("infinite-structure truths") {
  CHECK(decide_eq_infinity(parse("exists x. exists y. x != y")));
  CHECK_FALSE(decide_eq_infinity(parse("exists x. forall y. y = x")));
  CHECK(decide_eq_infinity(parse("forall x. exists y. x != y")));
  CHECK_FALSE(decide_eq_infinity(parse("forall x. forall y. x = y")));
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(decide_eq_infinity(parse(distinct_sentence(n))));
}

TEST_CASE("finite evaluation depends on the cardinality") {
  const FormulaPtr two = parse("exists x. exists y. x != y");
  CHECK_FALSE(eval_finite_eq(two, 1));
  CHECK(eval_finite_eq(two, 2));
  // "exactly two elements" separates sizes
  const FormulaPtr exactly2 =
      parse("exists x. exists y. (x != y & forall z. (z = x | z = y))");
  CHECK_FALSE(eval_finite_eq(exactly2, 1));
  CHECK(eval_finite_eq(exactly2, 2));
  CHECK_FALSE(eval_finite_eq(exactly2, 3));
  CHECK_FALSE(decide_eq_infinity(exactly2));
  CHECK_THROWS_AS(eval_finite_eq(two, 0), Error);
}

TEST_CASE("saturation: finite sizes q, q+1, q+2 match the infinite verdict") {
  for (const FormulaPtr& f : l1_corpus()) {
    const unsigned q = metrics(f).quantifier_count;
    if (q > 6) continue;
    const bool inf = decide_eq_infinity(f);
    CAPTURE(print(f));
    for (unsigned size = std::max(1u, q); size <= q + 2; ++size)
      CHECK(eval_finite_eq(f, size) == inf);
  }
}

TEST_CASE("saturation on random deep sentences (q 7..9)") {
  Rng rng(4242);
  int done = 0;
  while (done < 8) {
    const unsigned q = 7 + rng.below(3);
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= q; ++i) vars.push_back("v" + std::to_string(i));
    auto gen = [&](auto&& self, unsigned depth) -> std::string {
      if (depth == 0 || rng.percent(45)) {
        const std::string& a = vars[rng.below(vars.size())];
        const std::string& b = vars[rng.below(vars.size())];
        return rng.below(2) ? a + " = " + b : a + " != " + b;
      }
      if (rng.below(2) == 0) return "!(" + self(self, depth - 1) + ")";
      return "(" + self(self, depth - 1) + " & " + self(self, depth - 1) + ")";
    };
    std::string text = "(" + gen(gen, 3) + ")";
    for (unsigned i = q; i >= 1; --i)
      text = std::string(rng.below(2) ? "exists " : "forall ") + vars[i - 1] + ". " + text;
    const FormulaPtr f = parse(text);
    const bool inf = decide_eq_infinity(f);
    CAPTURE(text);
    CHECK(eval_finite_eq(f, q) == inf);
    CHECK(eval_finite_eq(f, q + 1) == inf);
    ++done;
  }
}

TEST_CASE("negation completeness") {
  std::vector<FormulaPtr> sample = l1_corpus();
  for (const FormulaPtr& f : sample) {
    const bool pos = decide_eq_infinity(f);
    const bool neg = decide_eq_infinity(Formula::make_not(f));
    CHECK(pos != neg);
  }
}

TEST_CASE("language and cap guards") {
  CHECK_THROWS_AS(decide_eq_infinity(parse("exists x. O(x,x)")), LanguageError);
  CHECK_THROWS_AS(eval_finite_eq(parse("exists x. O(x,x)"), 3), LanguageError);
  CHECK_THROWS_AS(decide_eq_infinity(parse("x = y")), FreeVariableError);

  // lambda1(3) translates to 15 quantifiers, one over the default cap
  const FormulaPtr big = translate(canonicalize(axiom(AxiomName::lambda1, 3)));
  CHECK(metrics(big).quantifier_count == 15);
  CHECK_THROWS_AS(decide_eq_infinity(big), CapError);
  EqOptions raised;
  raised.quantifier_cap = 12;
  CHECK_THROWS_AS(
      decide_eq_infinity(translate(canonicalize(axiom(AxiomName::lambda2, 4))), raised),
      CapError);
}

TEST_CASE("verdicts are invariant under id permutation") {
  // strip the exists prefix off closed corpus sentences to get open bodies
  std::vector<FormulaPtr> bodies;
  std::vector<unsigned> arities;
  for (const FormulaPtr& f : l1_corpus()) {
    FormulaPtr cur = canonicalize(f);
    unsigned stripped = 0;
    while (cur->kind() == Kind::Exists) {
      cur = cur->child();
      ++stripped;
    }
    if (stripped > 0 && metrics(cur).quantifier_count <= 4) {
      bodies.push_back(cur);
      arities.push_back(stripped);
    }
  }
  REQUIRE(!bodies.empty());

  Rng rng(555);
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<unsigned> env;
      for (unsigned i = 0; i < arities[b]; ++i)
        env.push_back(static_cast<unsigned>(rng.below(arities[b])));
      // injective relabeling pi(v) = 7v + 3 keeps the equality pattern
      std::vector<unsigned> permuted;
      for (unsigned v : env) permuted.push_back(7 * v + 3);
      CHECK(eval_eq_with_env(bodies[b], env) == eval_eq_with_env(bodies[b], permuted));
    }
  }
}

TEST_CASE("memo statistics are populated") {
  EqStats stats;
  decide_eq_infinity(parse(distinct_sentence(5)), {}, &stats);
  CHECK(stats.branches > 0);
  CHECK(stats.memo_peak > 0);
}
