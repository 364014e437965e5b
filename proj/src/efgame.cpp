#include "sapp/efgame.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace sapp {

namespace {

// Per-structure canonicalization of a pick sequence. Valid only for
// structures whose relation is determined by direction classes forming a
// partial matching: classes and members are renamed by first occurrence,
// and each mentioned class carries its size, its partner's size and, when
// the partner is itself mentioned, the partner's rename. Two states with
// equal keys are then related by automorphisms, so they have the same
// game value.
struct ClassCoder {
  const DirectionView* view = nullptr;

  bool usable() const { return view != nullptr; }

  void encode(const std::vector<std::size_t>& picks, std::string& out) const {
    std::vector<std::size_t> class_slots;  // actual class id per slot
    std::vector<std::vector<std::size_t>> members; // actual element per (slot, member slot)
    for (std::size_t e : picks) {
      const std::size_t cls = view->class_of[e];
      auto it = std::find(class_slots.begin(), class_slots.end(), cls);
      std::size_t slot;
      if (it == class_slots.end()) {
        slot = class_slots.size();
        class_slots.push_back(cls);
        members.emplace_back();
      } else {
        slot = static_cast<std::size_t>(it - class_slots.begin());
      }
      auto& mem = members[slot];
      auto mit = std::find(mem.begin(), mem.end(), e);
      if (mit == mem.end()) {
        mem.push_back(e);
        mit = mem.end() - 1;
      }
      out += static_cast<char>('A' + slot);
      out += static_cast<char>('a' + (mit - mem.begin()));
    }
    out += '|';
    for (std::size_t slot = 0; slot < class_slots.size(); ++slot) {
      const std::size_t cls = class_slots[slot];
      const auto& ps = view->partners[cls];
      const std::size_t size = view->classes[cls].size();
      std::size_t partner_size = 0;
      std::size_t partner_slot = 0; // 1-based; 0 = absent or unmentioned
      if (!ps.empty()) {
        partner_size = view->classes[ps[0]].size();
        auto pit = std::find(class_slots.begin(), class_slots.end(), ps[0]);
        if (pit != class_slots.end())
          partner_slot = static_cast<std::size_t>(pit - class_slots.begin()) + 1;
      }
      out += std::to_string(size) + "," + std::to_string(partner_size) + "," +
             std::to_string(partner_slot) + ";";
    }
  }
};

class Game {
public:
  Game(const FiniteStructure& a, const FiniteStructure& b, EfStats* stats)
      : a_(a), b_(b), stats_(stats) {
    view_a_ = try_direction_view(a);
    view_b_ = try_direction_view(b);
    const auto matching = [](const std::optional<DirectionView>& v) {
      if (!v) return false;
      for (const auto& ps : v->partners)
        if (ps.size() > 1) return false;
      return true;
    };
    if (matching(view_a_) && matching(view_b_)) {
      coder_a_.view = &*view_a_;
      coder_b_.view = &*view_b_;
    }
  }

  bool duplicator_wins(unsigned rounds) {
    picks_a_.clear();
    picks_b_.clear();
    return wins(rounds);
  }

  std::size_t memo_size() const { return memo_.size(); }

private:
  bool consistent(const FiniteStructure& sa, const std::vector<std::size_t>& pa,
                  std::size_t x, const FiniteStructure& sb,
                  const std::vector<std::size_t>& pb, std::size_t y) const {
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if ((pa[i] == x) != (pb[i] == y)) return false;
      if (sa.perp_at(pa[i], x) != sb.perp_at(pb[i], y)) return false;
    }
    return true;
  }

  std::string state_key() const {
    std::string key;
    if (coder_a_.usable()) {
      coder_a_.encode(picks_a_, key);
      key += '/';
      coder_b_.encode(picks_b_, key);
      return key;
    }
    // fallback: the partial map as a sorted pair set
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < picks_a_.size(); ++i)
      pairs.emplace_back(picks_a_[i], picks_b_[i]);
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [x, y] : pairs)
      key += std::to_string(x) + ":" + std::to_string(y) + ",";
    return key;
  }

  bool wins(unsigned rounds) {
    if (rounds == 0) return true;
    if (stats_) stats_->states += 1;

    const std::string key = state_key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = true;
    // spoiler picks in a, duplicator answers in b; then the mirror image
    for (std::size_t x = 0; x < a_.size() && result; ++x)
      result = answer(x, /*spoiler_in_a=*/true, rounds);
    for (std::size_t y = 0; y < b_.size() && result; ++y)
      result = answer(y, /*spoiler_in_a=*/false, rounds);

    memo_.emplace(key, result);
    return result;
  }

  bool answer(std::size_t spoiler, bool spoiler_in_a, unsigned rounds) {
    const FiniteStructure& other = spoiler_in_a ? b_ : a_;
    for (std::size_t y = 0; y < other.size(); ++y) {
      const std::size_t xa = spoiler_in_a ? spoiler : y;
      const std::size_t xb = spoiler_in_a ? y : spoiler;
      if (!consistent(a_, picks_a_, xa, b_, picks_b_, xb)) continue;
      picks_a_.push_back(xa);
      picks_b_.push_back(xb);
      const bool ok = wins(rounds - 1);
      picks_a_.pop_back();
      picks_b_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  const FiniteStructure& a_;
  const FiniteStructure& b_;
  std::optional<DirectionView> view_a_, view_b_;
  ClassCoder coder_a_, coder_b_;
  std::vector<std::size_t> picks_a_, picks_b_;
  std::unordered_map<std::string, bool> memo_;
  EfStats* stats_;
};

} // namespace

bool ef_equivalent(const FiniteStructure& a, const FiniteStructure& b, unsigned k,
                   const EfOptions& opt, EfStats* stats) {
  if (k > opt.max_rounds)
    throw CapError("rounds " + std::to_string(k) + " exceed cap " +
                   std::to_string(opt.max_rounds));
  if (a.size() > opt.max_domain || b.size() > opt.max_domain)
    throw CapError("domain size exceeds cap " + std::to_string(opt.max_domain));

  Game game(a, b, stats);
  const bool result = game.duplicator_wins(k);
  if (stats) stats->memo = game.memo_size();
  return result;
}

std::optional<unsigned> distinguishing_rank(const FiniteStructure& a,
                                            const FiniteStructure& b, unsigned max_k,
                                            const EfOptions& opt) {
  for (unsigned k = 0; k <= max_k; ++k)
    if (!ef_equivalent(a, b, k, opt)) return k;
  return std::nullopt;
}

FiniteStructure gen_S(unsigned k) {
  if (k < 1) throw Error("gen_S: k must be >= 1");
  std::vector<Rational> slopes;
  for (unsigned a = 1; a <= k; ++a) slopes.emplace_back(a);
  for (unsigned a = 1; a <= k; ++a) slopes.push_back(Rational(-1, a));

  std::vector<Line> lines;
  for (const Rational& slope : slopes)
    for (unsigned b = 1; b <= k; ++b) lines.push_back(Line::slanted(slope, Rational(b)));
  return to_structure(lines);
}

} // namespace sapp
