#include "sapp/checks.hpp"

#include <json.hpp>

#include "sapp/axioms.hpp"
#include "sapp/corpus.hpp"
#include "sapp/efgame.hpp"
#include "sapp/geometry.hpp"
#include "sapp/parser.hpp"
#include "sapp/translate.hpp"
#include "sapp/util.hpp"

namespace sapp {

namespace {

void add_item(SuiteResult& r, const std::string& name, bool pass,
              const std::string& detail = "") {
  r.items.push_back(CheckItem{name, pass, detail});
}

struct AxiomSpec {
  AxiomName name;
  std::optional<unsigned> n;
  std::string label;
};

std::vector<AxiomSpec> axiom_suite_entries() {
  std::vector<AxiomSpec> out = {
      {AxiomName::lambda3, std::nullopt, "lambda3"},
      {AxiomName::lambda4, std::nullopt, "lambda4"},
      {AxiomName::lambda5, std::nullopt, "lambda5"},
      {AxiomName::lambda6, std::nullopt, "lambda6"},
  };
  for (unsigned n = 1; n <= 4; ++n)
    out.push_back({AxiomName::lambda1, n, "lambda1 n=" + std::to_string(n)});
  for (unsigned n = 2; n <= 4; ++n)
    out.push_back({AxiomName::lambda2, n, "lambda2 n=" + std::to_string(n)});
  return out;
}

SuiteResult suite_axioms(const RunConfig& cfg) {
  SuiteResult r{"axioms", {}};
  const DecideOptions opt = cfg.decide_options();
  for (const AxiomSpec& spec : axiom_suite_entries()) {
    const FormulaPtr f = axiom(spec.name, spec.n);
    const Verdict direct = decide(f, opt);
    add_item(r, spec.label + " direct", direct == Verdict::Valid, to_string(direct));

    const unsigned q = metrics(f).quantifier_count;
    if (3 * q <= 12) {
      const Verdict via = decide_via_translation(f, opt);
      add_item(r, spec.label + " translation", via == Verdict::Valid, to_string(via));
    }
  }
  return r;
}

SuiteResult suite_agreement(const RunConfig& cfg) {
  SuiteResult r{"agreement", {}};
  const DecideOptions opt = cfg.decide_options();

  const auto run_corpus = [&](const std::string& label,
                              const std::vector<FormulaPtr>& corpus) {
    std::size_t disagreements = 0;
    std::string first;
    for (const FormulaPtr& f : corpus) {
      const Verdict a = decide(f, opt);
      const Verdict b = decide_via_translation(f, opt);
      if (a != b) {
        ++disagreements;
        if (first.empty()) first = print(f);
      }
    }
    std::string detail = std::to_string(corpus.size()) + " sentences, " +
                         std::to_string(disagreements) + " disagreements";
    if (!first.empty()) detail += "; first: " + first;
    add_item(r, label, disagreements == 0, detail);
  };

  run_corpus("exhaustive corpus (rank <= 2)", exhaustive_corpus());
  run_corpus("random corpus (200, rank <= 3, seed " + std::to_string(cfg.seed) + ")",
             random_corpus(cfg.seed, 200, 3));
  return r;
}

SuiteResult suite_completeness(const RunConfig& cfg) {
  SuiteResult r{"completeness", {}};
  const DecideOptions opt = cfg.decide_options();

  const auto run_corpus = [&](const std::string& label,
                              const std::vector<FormulaPtr>& corpus) {
    std::size_t violations = 0;
    std::string first;
    for (const FormulaPtr& f : corpus) {
      const bool f_valid = decide(f, opt) == Verdict::Valid;
      const bool not_f_valid = decide(Formula::make_not(f), opt) == Verdict::Valid;
      if (f_valid == not_f_valid) {
        ++violations;
        if (first.empty()) first = print(f);
      }
    }
    std::string detail = std::to_string(corpus.size()) + " sentences, " +
                         std::to_string(violations) + " violations";
    if (!first.empty()) detail += "; first: " + first;
    add_item(r, label, violations == 0, detail);
  };

  run_corpus("exhaustive corpus", exhaustive_corpus());
  run_corpus("random corpus (200, seed " + std::to_string(cfg.seed) + ")",
             random_corpus(cfg.seed, 200, 3));
  return r;
}

SuiteResult suite_eq_saturation(const RunConfig& cfg) {
  SuiteResult r{"eq-saturation", {}};
  EqOptions eq;
  eq.quantifier_cap = cfg.eq_cap;

  std::size_t checked = 0, disagreements = 0;
  std::string first;
  for (const FormulaPtr& f : l1_corpus()) {
    const unsigned q = metrics(f).quantifier_count;
    if (q > 6) continue;
    const bool inf = decide_eq_infinity(f, eq);
    for (unsigned size = q; size <= q + 2; ++size) {
      if (size == 0) continue;
      ++checked;
      if (eval_finite_eq(f, size, eq) != inf) {
        ++disagreements;
        if (first.empty()) first = print(f) + " at size " + std::to_string(size);
      }
    }
  }
  std::string detail = std::to_string(checked) + " evaluations, " +
                       std::to_string(disagreements) + " disagreements";
  if (!first.empty()) detail += "; first: " + first;
  add_item(r, "finite saturation at q, q+1, q+2", disagreements == 0, detail);
  return r;
}

SuiteResult suite_definability(const RunConfig& cfg) {
  SuiteResult r{"definability", {}};
  for (unsigned i = 0; i < 5; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    const std::vector<Line> lines = sample_FQ(seed, 12);
    for (const DefinablePred pred : {DefinablePred::P, DefinablePred::C}) {
      const DefinabilityReport report = check_definability(pred, lines);
      const std::string label = std::string(pred == DefinablePred::P ? "P" : "C") +
                                " on sample_FQ(seed " + std::to_string(seed) + ", 12)";
      add_item(r, label, report.disagreements.empty(),
               std::to_string(report.pairs_checked) + " pairs, " +
                   std::to_string(report.disagreements.size()) + " disagreements");
    }
  }
  return r;
}

SuiteResult suite_non_finite_ax(const RunConfig&) {
  SuiteResult r{"non-finite-ax", {}};
  for (unsigned k = 2; k <= 4; ++k) {
    const FiniteStructure s = gen_S(k);
    bool pattern_ok = true;
    std::string detail;
    for (unsigned n = 1; n < k; ++n) {
      const bool holds = eval_finite(axiom(AxiomName::lambda1, n), s);
      if (!holds) {
        pattern_ok = false;
        detail += " lambda1(" + std::to_string(n) + ") unexpectedly false;";
      }
    }
    const bool at_k = eval_finite(axiom(AxiomName::lambda1, k), s);
    if (at_k) {
      pattern_ok = false;
      detail += " lambda1(" + std::to_string(k) + ") unexpectedly true;";
    }
    add_item(r, "lambda1 cutoff on S(" + std::to_string(k) + ")", pattern_ok,
             "true below " + std::to_string(k) + ", false at " + std::to_string(k) +
                 (detail.empty() ? "" : ";" + detail));

    const bool laws = eval_finite(axiom(AxiomName::lambda3), s) &&
                      eval_finite(axiom(AxiomName::lambda4), s) &&
                      eval_finite(axiom(AxiomName::lambda6), s);
    add_item(r, "lambda3/4/6 hold on S(" + std::to_string(k) + ")", laws);
  }
  return r;
}

FiniteStructure random_structure(Rng& rng, std::size_t size) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (rng.percent(30)) pairs.emplace_back(i, j);
  return FiniteStructure(size, std::move(pairs));
}

SuiteResult suite_ef_soundness(const RunConfig& cfg) {
  SuiteResult r{"ef-soundness", {}};
  EfOptions ef;

  {
    Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::size_t violations = 0;
    for (unsigned trial = 0; trial < 50; ++trial) {
      const FiniteStructure a = random_structure(rng, 2 + rng.below(6));
      const FiniteStructure b = random_structure(rng, 2 + rng.below(6));
      bool prev = true;
      for (unsigned k = 0; k <= 3; ++k) {
        const bool now = ef_equivalent(a, b, k, ef);
        if (now && !prev) ++violations; // equivalent at k but not at k-1
        prev = now;
      }
    }
    add_item(r, "monotonicity on 50 random pairs", violations == 0,
             std::to_string(violations) + " violations");
  }

  {
    const FiniteStructure three(3, {});
    const FiniteStructure five(5, {});
    const bool at3 = ef_equivalent(three, five, 3, ef);
    const bool at4 = ef_equivalent(three, five, 4, ef);
    add_item(r, "bare sizes 3 vs 5: equivalent at k=3, not at k=4", at3 && !at4,
             std::string("k=3 ") + (at3 ? "true" : "false") + ", k=4 " +
                 (at4 ? "true" : "false"));
  }

  {
    // rank-2 transfer: 2-round equivalence must carry every rank-<=2
    // corpus verdict across
    std::vector<std::pair<FiniteStructure, FiniteStructure>> pairs;
    pairs.emplace_back(gen_S(3), gen_S(4));
    pairs.emplace_back(FiniteStructure(3, {}), FiniteStructure(5, {}));
    Rng rng(cfg.seed ^ 0xabcdefull);
    for (unsigned trial = 0; trial < 10; ++trial)
      pairs.emplace_back(random_structure(rng, 2 + rng.below(5)),
                         random_structure(rng, 2 + rng.below(5)));

    const std::vector<FormulaPtr> corpus = exhaustive_corpus();
    std::size_t transfers = 0, violations = 0;
    for (const auto& [a, b] : pairs) {
      if (!ef_equivalent(a, b, 2, ef)) continue;
      ++transfers;
      for (const FormulaPtr& f : corpus)
        if (eval_finite(f, a) != eval_finite(f, b)) ++violations;
    }
    add_item(r, "rank-2 corpus transfer", violations == 0,
             std::to_string(transfers) + " equivalent pairs, " +
                 std::to_string(violations) + " violations");
  }
  return r;
}

SuiteResult suite_translation_shape(const RunConfig& cfg) {
  SuiteResult r{"translation-shape", {}};

  {
    std::size_t violations = 0;
    const auto corpus = random_corpus(cfg.seed ^ 0x77ull, 100, 3);
    for (const FormulaPtr& f : corpus) {
      const FormulaPtr canon = canonicalize(f);
      if (metrics(translate(canon)).quantifier_count != 3 * metrics(canon).quantifier_count)
        ++violations;
    }
    add_item(r, "translated quantifier count is 3x (100 random sentences)",
             violations == 0, std::to_string(violations) + " violations");
  }

  {
    const FormulaPtr hat = translate(canonicalize(axiom(AxiomName::lambda3)));
    const FormulaPtr k1 = kappa(1);
    add_item(r, "translate(lambda3) contains kappa(1) as a subformula",
             contains_subformula(hat, k1), print(k1));
    add_item(r, "printed translate(lambda3) contains printed kappa(1)",
             print(hat).find(print(k1)) != std::string::npos);
  }

  {
    const CoordTuple a = {{Rational(2), Rational(-1, 2), Rational(5)}};
    const CoordTuple b_same = a;
    const CoordTuple b_fresh = {{Rational(3), Rational(-1, 3), Rational(5)}};
    const CoordTuple b_wrong = {{Rational(3), Rational(-1, 3), Rational(7)}};
    const bool ok = is_corresponding(b_same, a) && is_corresponding(b_fresh, a) &&
                    !is_corresponding(b_wrong, a);
    add_item(r, "Def-2 correspondence examples", ok);
  }
  return r;
}

SuiteResult suite_determinism(const RunConfig& cfg) {
  SuiteResult r{"determinism", {}};
  const auto pass1 = render_report({suite_axioms(cfg), suite_agreement(cfg)});
  const auto pass2 = render_report({suite_axioms(cfg), suite_agreement(cfg)});
  add_item(r, "seeded suites render byte-identically on a second run", pass1 == pass2,
           "report hash " + hex64(fnv1a64(pass1)));
  return r;
}

} // namespace

std::vector<std::string> suite_names() {
  return {"axioms",        "agreement",     "completeness",
          "eq-saturation", "definability",  "non-finite-ax",
          "ef-soundness",  "translation-shape", "determinism"};
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "axioms") return suite_axioms(cfg);
  if (name == "agreement") return suite_agreement(cfg);
  if (name == "completeness") return suite_completeness(cfg);
  if (name == "eq-saturation") return suite_eq_saturation(cfg);
  if (name == "definability") return suite_definability(cfg);
  if (name == "non-finite-ax") return suite_non_finite_ax(cfg);
  if (name == "ef-soundness") return suite_ef_soundness(cfg);
  if (name == "translation-shape") return suite_translation_shape(cfg);
  if (name == "determinism") return suite_determinism(cfg);
  throw Error("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, cfg));
  return out;
}

std::string render_report(const std::vector<SuiteResult>& results) {
  std::string out;
  std::size_t checks = 0, failures = 0;
  for (const SuiteResult& suite : results)
    for (const CheckItem& item : suite.items) {
      ++checks;
      if (!item.pass) ++failures;
      out += std::string(item.pass ? "ok   " : "FAIL ") + suite.suite + ": " + item.name;
      if (!item.detail.empty()) out += " [" + item.detail + "]";
      out += "\n";
    }
  out += std::to_string(checks) + " checks, " + std::to_string(failures) + " failures\n";
  return out;
}

std::string render_report_records(const std::vector<SuiteResult>& results) {
  std::string out;
  std::size_t checks = 0, failures = 0;
  for (const SuiteResult& suite : results)
    for (const CheckItem& item : suite.items) {
      ++checks;
      if (!item.pass) ++failures;
      nlohmann::json rec;
      rec["suite"] = suite.suite;
      rec["item"] = item.name;
      rec["pass"] = item.pass;
      if (!item.detail.empty()) rec["detail"] = item.detail;
      out += rec.dump() + "\n";
    }
  nlohmann::json summary;
  summary["checks"] = checks;
  summary["failures"] = failures;
  out += summary.dump() + "\n";
  return out;
}

} // namespace sapp
