#include "sapp/decider.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "sapp/translate.hpp"

namespace sapp {

namespace {

void require_direct_cap(const FormulaPtr& f, unsigned cap) {
  const unsigned q = metrics(f).quantifier_count;
  if (q > cap)
    throw CapError("quantifier count " + std::to_string(q) +
                   " exceeds the direct-engine cap " + std::to_string(cap));
}

void require_translation_cap(const FormulaPtr& f, unsigned cap) {
  const unsigned q = metrics(f).quantifier_count;
  if (q > cap)
    throw CapError("quantifier count " + std::to_string(q) +
                   " exceeds the translation cap " + std::to_string(cap));
}

// One abstract line per bound variable plus the pairing built so far.
// Directions and lines are small integers; the pairing is an involution
// without fixed points on the directions it covers.
struct ModelState {
  std::vector<std::pair<unsigned, unsigned>> env; // (direction, line) per depth
  std::vector<int> partner;                       // direction -> direction or -1

  unsigned fresh_line(unsigned dir) const {
    unsigned id = 0;
    for (bool taken = true; taken; ++id) {
      taken = false;
      for (const auto& [d, l] : env)
        if (d == dir && l == id) {
          taken = true;
          break;
        }
    }
    return id - 1;
  }
};

// first-occurrence relabeling of directions and of lines within each
// direction, plus the pairing over relabeled directions; two states with
// the same signature are automorphic images of each other
std::string state_signature(const ModelState& s) {
  std::vector<unsigned> dir_order;
  std::string sig;
  for (const auto& [d, l] : s.env) {
    auto it = std::find(dir_order.begin(), dir_order.end(), d);
    if (it == dir_order.end()) {
      dir_order.push_back(d);
      it = dir_order.end() - 1;
    }
    const std::size_t dslot = static_cast<std::size_t>(it - dir_order.begin());
    // line slot: rank of first occurrence of (d, l)
    std::size_t lslot = 0;
    std::vector<unsigned> seen;
    for (const auto& [d2, l2] : s.env) {
      if (d2 != d) continue;
      if (std::find(seen.begin(), seen.end(), l2) == seen.end()) seen.push_back(l2);
      if (d2 == d && l2 == l) break;
    }
    lslot = static_cast<std::size_t>(
        std::find(seen.begin(), seen.end(), l) - seen.begin());
    sig += static_cast<char>('A' + dslot);
    sig += static_cast<char>('a' + lslot);
  }
  sig += '|';
  for (std::size_t i = 0; i < dir_order.size(); ++i) {
    const int p = dir_order[i] < s.partner.size() ? s.partner[dir_order[i]] : -1;
    if (p < 0) {
      sig += '.';
      continue;
    }
    const auto it = std::find(dir_order.begin(), dir_order.end(), static_cast<unsigned>(p));
    sig += it == dir_order.end() ? '?' : static_cast<char>('A' + (it - dir_order.begin()));
  }
  return sig;
}

class DirectEvaluator {
public:
  DirectEvaluator(const DecideOptions& opt, DecideStats* stats)
      : opt_(opt), stats_(stats) {}

  bool eval(const Formula* f, ModelState& s) {
    switch (f->kind()) {
      case Kind::AtomPerp: {
        const auto& x = s.env[f->lhs().index - 1];
        const auto& y = s.env[f->rhs().index - 1];
        return x.first < s.partner.size() &&
               s.partner[x.first] == static_cast<int>(y.first);
      }
      case Kind::AtomEq:
        return s.env[f->lhs().index - 1] == s.env[f->rhs().index - 1];
      case Kind::Not:
        return !eval(f->child().get(), s);
      case Kind::And:
        return eval(f->left().get(), s) && eval(f->right().get(), s);
      case Kind::Exists:
        return eval_exists(f, s);
    }
    return false;
  }

  std::size_t memo_size() const { return memo_entries_; }

private:
  bool eval_exists(const Formula* f, ModelState& s) {
    auto& node_memo = memo_[f];
    const std::string sig = state_signature(s);
    if (auto it = node_memo.find(sig); it != node_memo.end()) return it->second;

    bool result = false;

    // (a) every already-bound line
    std::vector<std::pair<unsigned, unsigned>> lines;
    for (const auto& bound : s.env)
      if (std::find(lines.begin(), lines.end(), bound) == lines.end())
        lines.push_back(bound);
    // bound directions, in order of first use
    std::vector<unsigned> dirs;
    for (const auto& [d, l] : s.env)
      if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);

    for (const auto& cand : lines)
      if (try_candidate(f, s, cand.first, cand.second, false)) {
        result = true;
        break;
      }
    // (b) a fresh line in every bound direction
    if (!result)
      for (unsigned d : dirs)
        if (try_candidate(f, s, d, s.fresh_line(d), false)) {
          result = true;
          break;
        }
    // (c) a fresh line in the partner of every bound direction
    if (!result)
      for (unsigned d : dirs) {
        const bool create = s.partner[d] < 0;
        const unsigned p = create ? static_cast<unsigned>(s.partner.size())
                                  : static_cast<unsigned>(s.partner[d]);
        if (!create && std::find(dirs.begin(), dirs.end(), p) != dirs.end())
          continue; // already covered by (b)
        if (try_candidate(f, s, p, create ? 0 : s.fresh_line(p), create, d)) {
          result = true;
          break;
        }
      }
    // (d) a fresh line in a fresh direction; with the sentinel knob off it
    // still seeds the first pick, where no other class applies
    if (!result && (opt_.allow_fresh_direction || s.env.empty()))
      result = try_candidate(f, s, static_cast<unsigned>(s.partner.size()), 0, false);

    node_memo.emplace(sig, result);
    ++memo_entries_;
    return result;
  }

  bool try_candidate(const Formula* f, ModelState& s, unsigned dir, unsigned line,
                     bool pair_with_dir, unsigned paired = 0) {
    if (stats_) stats_->branches += 1;
    ModelState next = s;
    if (dir >= next.partner.size()) next.partner.resize(dir + 1, -1);
    if (pair_with_dir) {
      next.partner[dir] = static_cast<int>(paired);
      next.partner[paired] = static_cast<int>(dir);
    }
    next.env.emplace_back(dir, line);
    return eval(f->child().get(), next);
  }

  const DecideOptions& opt_;
  DecideStats* stats_;
  std::unordered_map<const Formula*, std::unordered_map<std::string, bool>> memo_;
  std::size_t memo_entries_ = 0;
};

} // namespace

Verdict decide(const FormulaPtr& f, const DecideOptions& opt, DecideStats* stats) {
  const FormulaPtr canon = canonicalize(f);
  require_direct_cap(canon, opt.cap_direct);
  DirectEvaluator ev(opt, stats);
  ModelState state;
  const bool truth = ev.eval(canon.get(), state);
  if (stats) stats->memo_peak = ev.memo_size();
  return truth ? Verdict::Valid : Verdict::Invalid;
}

Verdict decide_via_translation(const FormulaPtr& f, const DecideOptions& opt,
                               EqStats* stats) {
  const FormulaPtr canon = canonicalize(f);
  require_translation_cap(canon, opt.cap_translation);
  const FormulaPtr translated = translate(canon);
  return decide_eq_infinity(translated, opt.eq, stats) ? Verdict::Valid
                                                       : Verdict::Invalid;
}

Trace explain(const FormulaPtr& f, const DecideOptions& opt) {
  Trace trace;
  trace.canonical = canonicalize(f);
  require_direct_cap(trace.canonical, opt.cap_direct);
  require_translation_cap(trace.canonical, opt.cap_translation);
  trace.translated = translate(trace.canonical);
  trace.quantifier_count = metrics(trace.canonical).quantifier_count;
  trace.translated_quantifier_count = metrics(trace.translated).quantifier_count;

  DecideStats direct_stats;
  trace.direct = decide(trace.canonical, opt, &direct_stats);
  trace.branches_direct = direct_stats.branches;
  trace.memo_peak_direct = direct_stats.memo_peak;

  EqStats eq_stats;
  trace.translation = decide_via_translation(trace.canonical, opt, &eq_stats);
  trace.branches_translation = eq_stats.branches;
  trace.memo_peak_translation = eq_stats.memo_peak;
  return trace;
}

} // namespace sapp
