#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sapp/axioms.hpp"
#include "sapp/checks.hpp"
#include "sapp/efgame.hpp"
#include "sapp/geometry.hpp"
#include "sapp/parser.hpp"
#include "sapp/structure_io.hpp"
#include "sapp/translate.hpp"
#include "sapp/util.hpp"

namespace {

using nlohmann::json;
using namespace sapp;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

struct Common {
  std::string engine = "both";
  unsigned cap = 0; // 0 = per-engine defaults
  std::uint64_t seed = 1;
  std::string format = "text";
  bool trace = false;

  RunConfig run_config() const {
    RunConfig cfg;
    cfg.seed = seed;
    if (cap > 0) {
      cfg.cap_direct = cap;
      cfg.cap_translation = cap;
      cfg.eq_cap = std::max(14u, 3 * cap);
    }
    return cfg;
  }

  bool records() const { return format == "records"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_engine = false) {
  if (with_engine)
    cmd->add_option("--engine", c.engine, "direct, translation or both")
        ->check(CLI::IsMember({"direct", "translation", "both"}));
  cmd->add_option("--cap", c.cap, "quantifier cap for both engines");
  cmd->add_option("--seed", c.seed, "seed for all randomized inputs");
  cmd->add_option("--format", c.format, "text or records")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_flag("--trace", c.trace, "include the evaluation trace");
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_decide(const std::string& text, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const RunConfig cfg = c.run_config();
  const DecideOptions opt = cfg.decide_options();
  const FormulaPtr f = canonicalize(parse(text));
  const unsigned q = metrics(f).quantifier_count;

  std::optional<Verdict> direct, translation;
  DecideStats direct_stats;
  EqStats eq_stats;
  if (c.engine == "direct" || c.engine == "both")
    direct = decide(f, opt, &direct_stats);
  if (c.engine == "translation" || (c.engine == "both" && q <= opt.cap_translation))
    translation = decide_via_translation(f, opt, &eq_stats);

  if (direct && translation && *direct != *translation)
    throw Error("engine disagreement on " + print(f) +
                ": direct=" + to_string(*direct) +
                " translation=" + to_string(*translation));

  const Verdict verdict = direct ? *direct : *translation;
  const std::string engines = direct && translation ? "direct+translation"
                              : direct              ? "direct"
                                                    : "translation";

  if (c.records()) {
    json rec;
    rec["command"] = "decide";
    rec["input_hash"] = hex64(fnv1a64(text));
    rec["verdict"] = to_string(verdict);
    rec["engine"] = engines;
    if (c.trace) {
      rec["quantifiers"] = q;
      rec["branches_direct"] = direct_stats.branches;
      rec["memo_direct"] = direct_stats.memo_peak;
      rec["branches_translation"] = eq_stats.branches;
      rec["memo_translation"] = eq_stats.memo_peak;
      rec["elapsed_ms"] = elapsed_ms(start);
    }
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << to_string(verdict) << "\n";
    std::cout << "engine: " << engines << "\n";
    if (c.trace) {
      const Trace t = explain(f, opt);
      std::cout << "canonical: " << print(t.canonical) << "\n"
                << "translated: " << print(t.translated) << "\n"
                << "quantifiers: " << t.quantifier_count << " -> "
                << t.translated_quantifier_count << "\n"
                << "branches: direct " << t.branches_direct << ", translation "
                << t.branches_translation << "\n"
                << "memo peak: direct " << t.memo_peak_direct << ", translation "
                << t.memo_peak_translation << "\n"
                << "elapsed_ms: " << elapsed_ms(start) << "\n";
    }
  }
  return verdict == Verdict::Valid ? kExitValid : kExitInvalid;
}

int cmd_translate(const std::string& text, const Common& c) {
  const FormulaPtr translated = translate(canonicalize(parse(text)));
  if (c.records()) {
    json rec;
    rec["command"] = "translate";
    rec["input_hash"] = hex64(fnv1a64(text));
    rec["output"] = print(translated);
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << print(translated) << "\n";
  }
  return kExitValid;
}

int cmd_eval(const std::string& text, const std::string& model_path,
             const std::vector<std::string>& assigns, const Common& c) {
  const LoadedStructure loaded = load_structure_file(model_path);
  for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";

  Valuation valuation;
  for (const std::string& a : assigns) {
    const std::size_t eq = a.find('=');
    if (eq == std::string::npos)
      throw Error("bad --assign '" + a + "'; expected name=index");
    valuation[a.substr(0, eq)] = std::stoul(a.substr(eq + 1));
  }

  const bool result = eval_finite(parse(text), loaded.structure, valuation);
  if (c.records()) {
    json rec;
    rec["command"] = "eval";
    rec["input_hash"] = hex64(fnv1a64(text));
    rec["result"] = result;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kExitValid : kExitInvalid;
}

int cmd_ef(const std::string& path_a, const std::string& path_b, unsigned k,
           const Common& c) {
  const LoadedStructure a = load_structure_file(path_a);
  const LoadedStructure b = load_structure_file(path_b);
  for (const std::string& w : a.warnings) std::cerr << "warning: " << path_a << ": " << w << "\n";
  for (const std::string& w : b.warnings) std::cerr << "warning: " << path_b << ": " << w << "\n";

  EfOptions opt;
  if (c.cap > 0) opt.max_rounds = c.cap;
  const bool result = ef_equivalent(a.structure, b.structure, k, opt);
  if (c.records()) {
    json rec;
    rec["command"] = "ef";
    rec["input_hash"] = hex64(fnv1a64(path_a + "|" + path_b + "|" + std::to_string(k)));
    rec["result"] = result;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kExitValid : kExitInvalid;
}

int cmd_gen(const std::string& name, unsigned k, std::size_t n,
            const std::string& out_path, const Common& c) {
  std::vector<Line> lines;
  if (name == "S") {
    const FiniteStructure s = gen_S(k);
    lines = *s.provenance();
  } else if (name == "FQ") {
    lines = sample_FQ(c.seed, n);
  } else {
    throw Error("unknown structure '" + name + "'; expected S or FQ");
  }

  if (out_path.empty()) {
    save_lines(std::cout, lines);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    save_lines(out, lines);
  }
  return kExitValid;
}

int cmd_axiom(const std::string& name, std::optional<unsigned> n, const Common& c) {
  const std::optional<unsigned> arg = n;
  const std::string text = axiom_text(axiom_name_from_string(name), arg);
  if (c.records()) {
    json rec;
    rec["command"] = "axiom";
    rec["axiom"] = name;
    if (arg) rec["n"] = *arg;
    rec["output"] = text;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kExitValid;
}

int cmd_check(const std::string& suite, const Common& c) {
  const RunConfig cfg = c.run_config();
  std::vector<SuiteResult> results;
  if (suite.empty()) {
    results = run_all_suites(cfg);
  } else {
    results.push_back(run_suite(suite, cfg));
  }
  std::cout << (c.records() ? render_report_records(results) : render_report(results));
  for (const SuiteResult& r : results)
    if (!r.pass()) return kExitInvalid;
  return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision toolkit for the first-order theory of perpendicularity of lines"};
  app.require_subcommand(1);

  Common c_decide, c_translate, c_eval, c_ef, c_gen, c_axiom, c_check;
  std::string formula_text, model_path, ef_a, ef_b, gen_name, axiom_name, suite;
  std::string gen_out;
  std::vector<std::string> assigns;
  unsigned ef_k = 0, gen_k = 3;
  std::size_t gen_n = 12;
  unsigned axiom_n_raw = 0;
  bool axiom_n_set = false;

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide validity of a sentence");
  decide_cmd->add_option("formula", formula_text, "sentence in the O/= syntax")->required();
  add_common(decide_cmd, c_decide, /*with_engine=*/true);

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "compile a sentence into pure equality");
  translate_cmd->add_option("formula", formula_text, "sentence to translate")->required();
  add_common(translate_cmd, c_translate);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate over a finite structure");
  eval_cmd->add_option("formula", formula_text, "formula to evaluate")->required();
  eval_cmd->add_option("--model", model_path, "structure or line-set file")->required();
  eval_cmd->add_option("--assign", assigns, "free-variable binding name=index");
  add_common(eval_cmd, c_eval);

  CLI::App* ef_cmd = app.add_subcommand("ef", "k-round game equivalence of two structures");
  ef_cmd->add_option("a", ef_a, "first structure file")->required();
  ef_cmd->add_option("b", ef_b, "second structure file")->required();
  ef_cmd->add_option("--k", ef_k, "number of rounds")->required();
  add_common(ef_cmd, c_ef);

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a line set (S or FQ)");
  gen_cmd->add_option("name", gen_name, "S or FQ")->required();
  gen_cmd->add_option("--k", gen_k, "slope/intercept bound for S");
  gen_cmd->add_option("--n", gen_n, "line count for FQ");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
  add_common(gen_cmd, c_gen);

  CLI::App* axiom_cmd = app.add_subcommand("axiom", "print an axiom");
  axiom_cmd->add_option("name", axiom_name, "lambda1..lambda6")->required();
  axiom_cmd->add_option("--n", axiom_n_raw, "schema parameter")->trigger_on_parse();
  add_common(axiom_cmd, c_axiom);

  CLI::App* check_cmd = app.add_subcommand("check", "run the verification suites");
  check_cmd->add_option("suite", suite, "suite name (default: all)");
  add_common(check_cmd, c_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitValid : kExitError;
  }

  axiom_n_set = axiom_cmd->count("--n") > 0;

  try {
    if (decide_cmd->parsed()) return cmd_decide(formula_text, c_decide);
    if (translate_cmd->parsed()) return cmd_translate(formula_text, c_translate);
    if (eval_cmd->parsed()) return cmd_eval(formula_text, model_path, assigns, c_eval);
    if (ef_cmd->parsed()) return cmd_ef(ef_a, ef_b, ef_k, c_ef);
    if (gen_cmd->parsed()) return cmd_gen(gen_name, gen_k, gen_n, gen_out, c_gen);
    if (axiom_cmd->parsed())
      return cmd_axiom(axiom_name,
                       axiom_n_set ? std::optional<unsigned>(axiom_n_raw) : std::nullopt,
                       c_axiom);
    if (check_cmd->parsed()) return cmd_check(suite, c_check);
  } catch (const Error& e) {
    json rec;
    rec["error"] = e.what();
    std::cerr << rec.dump() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    json rec;
    rec["error"] = e.what();
    std::cerr << rec.dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
