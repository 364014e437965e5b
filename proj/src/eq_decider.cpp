#include "sapp/eq_decider.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sapp {

namespace {

void require_l1(const FormulaPtr& f) {
  if (language(f) == Lang::L)
    throw LanguageError("pure-equality decider got a formula with O atoms");
}

void require_within_cap(const FormulaPtr& f, unsigned cap) {
  const unsigned q = metrics(f).quantifier_count;
  if (q > cap)
    throw CapError("quantifier count " + std::to_string(q) + " exceeds cap " +
                   std::to_string(cap));
}

// Equality pattern of the bound ids: every id replaced by the rank of its
// first occurrence. Verdicts are invariant under id permutation, so this
// is a sound memo key.
std::string partition_signature(const std::vector<unsigned>& env) {
  std::string sig(env.size(), '\0');
  std::vector<unsigned> seen;
  for (std::size_t i = 0; i < env.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), env[i]);
    if (it == seen.end()) {
      seen.push_back(env[i]);
      sig[i] = static_cast<char>(seen.size() - 1);
    } else {
      sig[i] = static_cast<char>(it - seen.begin());
    }
  }
  return sig;
}

class InfEvaluator {
public:
  explicit InfEvaluator(EqStats* stats) : stats_(stats) {}

  bool eval(const Formula* f, std::vector<unsigned>& env) {
    switch (f->kind()) {
      case Kind::AtomPerp:
        throw LanguageError("O atom in pure-equality evaluation");
      case Kind::AtomEq:
        return value(f->lhs(), env) == value(f->rhs(), env);
      case Kind::Not:
        return !eval(f->child().get(), env);
      case Kind::And:
        return eval(f->left().get(), env) && eval(f->right().get(), env);
      case Kind::Exists:
        return eval_exists(f, env);
    }
    return false;
  }

  std::size_t memo_size() const { return memo_entries_; }

private:
  static unsigned value(const Var& v, const std::vector<unsigned>& env) {
    if (v.index < 1 || v.index > env.size())
      throw FreeVariableError(var_name(v));
    return env[v.index - 1];
  }

  bool eval_exists(const Formula* f, std::vector<unsigned>& env) {
    auto& node_memo = memo_[f];
    const std::string sig = partition_signature(env);
    if (auto it = node_memo.find(sig); it != node_memo.end()) return it->second;

    // candidates: each bound id once, in order of first use, plus the
    // smallest unused id as the fresh element
    std::vector<unsigned> candidates;
    for (unsigned id : env)
      if (std::find(candidates.begin(), candidates.end(), id) == candidates.end())
        candidates.push_back(id);
    unsigned fresh = 0;
    while (std::find(env.begin(), env.end(), fresh) != env.end()) ++fresh;
    candidates.push_back(fresh);

    bool result = false;
    for (unsigned id : candidates) {
      if (stats_) stats_->branches += 1;
      env.push_back(id);
      const bool sub = eval(f->child().get(), env);
      env.pop_back();
      if (sub) {
        result = true;
        break;
      }
    }

    node_memo.emplace(sig, result);
    ++memo_entries_;
    return result;
  }

  std::unordered_map<const Formula*, std::unordered_map<std::string, bool>> memo_;
  std::size_t memo_entries_ = 0;
  EqStats* stats_;
};

bool eval_finite_rec(const Formula* f, std::vector<unsigned>& env, unsigned size) {
  switch (f->kind()) {
    case Kind::AtomPerp:
      throw LanguageError("O atom in pure-equality evaluation");
    case Kind::AtomEq: {
      auto value = [&](const Var& v) {
        if (v.index < 1 || v.index > env.size()) throw FreeVariableError(var_name(v));
        return env[v.index - 1];
      };
      return value(f->lhs()) == value(f->rhs());
    }
    case Kind::Not:
      return !eval_finite_rec(f->child().get(), env, size);
    case Kind::And:
      return eval_finite_rec(f->left().get(), env, size) &&
             eval_finite_rec(f->right().get(), env, size);
    case Kind::Exists:
      for (unsigned v = 0; v < size; ++v) {
        env.push_back(v);
        const bool sub = eval_finite_rec(f->child().get(), env, size);
        env.pop_back();
        if (sub) return true;
      }
      return false;
  }
  return false;
}

} // namespace

bool decide_eq_infinity(const FormulaPtr& f, const EqOptions& opt, EqStats* stats) {
  require_l1(f);
  require_within_cap(f, opt.quantifier_cap);
  const FormulaPtr canon = canonicalize(f);
  InfEvaluator ev(stats);
  std::vector<unsigned> env;
  const bool result = ev.eval(canon.get(), env);
  if (stats) stats->memo_peak = ev.memo_size();
  return result;
}

bool eval_finite_eq(const FormulaPtr& f, unsigned domain_size, const EqOptions& opt) {
  if (domain_size < 1) throw Error("domain size must be >= 1");
  require_l1(f);
  require_within_cap(f, opt.quantifier_cap);
  const FormulaPtr canon = canonicalize(f);
  std::vector<unsigned> env;
  return eval_finite_rec(canon.get(), env, domain_size);
}

bool eval_eq_with_env(const FormulaPtr& f, const std::vector<unsigned>& env,
                      const EqOptions& opt) {
  require_l1(f);
  require_within_cap(f, opt.quantifier_cap);
  InfEvaluator ev(nullptr);
  std::vector<unsigned> working = env;
  return ev.eval(f.get(), working);
}

} // namespace sapp
