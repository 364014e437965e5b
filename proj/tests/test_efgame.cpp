#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sapp/axioms.hpp"
#include "sapp/corpus.hpp"
#include "sapp/efgame.hpp"
#include "sapp/util.hpp"

using namespace sapp;

namespace {

// Independent oracle: plain minimax with no memoization and no
// canonicalization, sharing nothing with the engine under test.
bool brute_consistent(const FiniteStructure& a, const std::vector<std::size_t>& pa,
                      std::size_t x, const FiniteStructure& b,
                      const std::vector<std::size_t>& pb, std::size_t y) {
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if ((pa[i] == x) != (pb[i] == y)) return false;
    if (a.perp_at(pa[i], x) != b.perp_at(pb[i], y)) return false;
  }
  return true;
}

bool brute_wins(const FiniteStructure& a, const FiniteStructure& b,
                std::vector<std::size_t>& pa, std::vector<std::size_t>& pb,
                unsigned rounds) {
  if (rounds == 0) return true;
  for (int side = 0; side < 2; ++side) {
    const FiniteStructure& sp = side == 0 ? a : b;
    const FiniteStructure& du = side == 0 ? b : a;
    for (std::size_t x = 0; x < sp.size(); ++x) {
      bool answered = false;
      for (std::size_t y = 0; y < du.size() && !answered; ++y) {
        const std::size_t xa = side == 0 ? x : y;
        const std::size_t xb = side == 0 ? y : x;
        if (!brute_consistent(a, pa, xa, b, pb, xb)) continue;
        pa.push_back(xa);
        pb.push_back(xb);
        if (brute_wins(a, b, pa, pb, rounds - 1)) answered = true;
        pa.pop_back();
        pb.pop_back();
      }
      if (!answered) return false;
    }
  }
  return true;
}

bool brute_ef(const FiniteStructure& a, const FiniteStructure& b, unsigned k) {
  std::vector<std::size_t> pa, pb;
  return brute_wins(a, b, pa, pb, k);
}

FiniteStructure bare(std::size_t n) { return FiniteStructure(n, {}); }

FiniteStructure random_structure(Rng& rng, std::size_t size) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (rng.percent(30)) pairs.emplace_back(i, j);
  return FiniteStructure(size, std::move(pairs));
}

} // namespace

TEST_CASE("a structure is equivalent to itself") {
  const FiniteStructure s = gen_S(2);
  for (unsigned k = 0; k <= 4; ++k) CHECK(ef_equivalent(s, s, k));
  const FiniteStructure b = bare(4);
  for (unsigned k = 0; k <= 4; ++k) CHECK(ef_equivalent(b, b, k));
}

TEST_CASE("bare sets of size 3 and 5 separate exactly at four rounds") {
  EfOptions opt;
  opt.max_rounds = 5;
  CHECK(ef_equivalent(bare(3), bare(5), 3, opt));
  CHECK_FALSE(ef_equivalent(bare(3), bare(5), 4, opt));
  CHECK(distinguishing_rank(bare(3), bare(5), 5, opt) == 4u);
}

TEST_CASE("engine matches the brute-force oracle") {
  // the S truncations at two rounds
  CHECK(ef_equivalent(gen_S(3), gen_S(4), 2) == brute_ef(gen_S(3), gen_S(4), 2));

  Rng rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const FiniteStructure a = random_structure(rng, 2 + rng.below(4));
    const FiniteStructure b = random_structure(rng, 2 + rng.below(4));
    for (unsigned k = 0; k <= 3; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(ef_equivalent(a, b, k) == brute_ef(a, b, k));
    }
  }
}

TEST_CASE("equivalence is antitone in the round count") {
  Rng rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteStructure a = random_structure(rng, 2 + rng.below(6));
    const FiniteStructure b = random_structure(rng, 2 + rng.below(6));
    bool prev = true;
    for (unsigned k = 0; k <= 3; ++k) {
      const bool now = ef_equivalent(a, b, k);
      if (!prev) CHECK_FALSE(now);
      prev = now;
    }
  }
}

TEST_CASE("isomorphic copies are equivalent at every tested depth") {
  Rng rng(106);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng.below(4);
    const FiniteStructure a = random_structure(rng, n);
    // relabel by a random permutation
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [i, j] : a.pairs()) pairs.emplace_back(perm[i], perm[j]);
    const FiniteStructure b(n, std::move(pairs));
    for (unsigned k = 0; k <= 4; ++k) CHECK(ef_equivalent(a, b, k));
  }
}

TEST_CASE("k-equivalence transfers rank-k corpus verdicts") {
  const std::vector<FormulaPtr> corpus = exhaustive_corpus();
  const FiniteStructure s3 = gen_S(3);
  const FiniteStructure s4 = gen_S(4);
  REQUIRE(ef_equivalent(s3, s4, 2));
  for (const FormulaPtr& f : corpus) {
    CAPTURE(print(f));
    CHECK(eval_finite(f, s3) == eval_finite(f, s4));
  }
}

TEST_CASE("gen_S builds the slope/intercept truncation") {
  const FiniteStructure s3 = gen_S(3);
  CHECK(s3.size() == 18);
  CHECK(gen_S(1).size() == 2);
  CHECK(gen_S(4).size() == 32);

  REQUIRE(s3.provenance().has_value());
  const std::vector<Line>& lines = *s3.provenance();
  // relation matches the slope products, recomputed here from scratch
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const bool product = !lines[i].is_vertical() && !lines[j].is_vertical() &&
                           lines[i].slope() * lines[j].slope() == Rational(-1);
      CHECK(s3.perp_at(i, j) == product);
    }

  // six directions, paired slope s with -1/s
  const auto view = direction_view(s3);
  CHECK(view.classes.size() == 6);
  for (const auto& cls : view.classes) CHECK(cls.size() == 3);
  for (std::size_t c = 0; c < view.classes.size(); ++c) {
    REQUIRE(view.partners[c].size() == 1);
    const std::size_t p = view.partners[c][0];
    CHECK(p != c);
    CHECK(view.partners[p][0] == c);
    const Rational slope = lines[view.classes[c][0]].slope();
    const Rational partner_slope = lines[view.classes[p][0]].slope();
    CHECK(slope * partner_slope == Rational(-1));
  }
}

TEST_CASE("perp laws hold on every truncation") {
  for (unsigned k = 1; k <= 4; ++k) {
    const FiniteStructure s = gen_S(k);
    CHECK(eval_finite(axiom(AxiomName::lambda3), s));
    CHECK(eval_finite(axiom(AxiomName::lambda4), s));
  }
}

TEST_CASE("the lambda1 cutoff pattern on truncations") {
  for (unsigned k = 2; k <= 4; ++k) {
    const FiniteStructure s = gen_S(k);
    for (unsigned n = 1; n < k; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(eval_finite(axiom(AxiomName::lambda1, n), s));
    }
    CHECK_FALSE(eval_finite(axiom(AxiomName::lambda1, k), s));
  }
}

TEST_CASE("distinguishing rank") {
  const FiniteStructure s2 = gen_S(2);
  CHECK(distinguishing_rank(s2, s2, 3) == std::nullopt);
  CHECK(distinguishing_rank(bare(3), bare(3), 3) == std::nullopt);
  EfOptions opt;
  opt.max_rounds = 3;
  // two rounds count out the second element
  CHECK(distinguishing_rank(bare(1), bare(2), 3, opt) == 2u);
  // below the separating depth nothing is found
  CHECK(distinguishing_rank(bare(3), bare(5), 3) == std::nullopt);
}

TEST_CASE("caps guard rounds and domain") {
  CHECK_THROWS_AS(ef_equivalent(bare(3), bare(3), 5), CapError);
  EfOptions small;
  small.max_domain = 10;
  CHECK_THROWS_AS(ef_equivalent(gen_S(3), gen_S(3), 2, small), CapError);
  EfOptions raised;
  raised.max_rounds = 6;
  CHECK_NOTHROW(ef_equivalent(bare(2), bare(2), 5, raised));
}

TEST_CASE("game statistics are populated") {
  EfStats stats;
  ef_equivalent(gen_S(2), gen_S(3), 2, {}, &stats);
  CHECK(stats.states > 0);
  CHECK(stats.memo > 0);
}
