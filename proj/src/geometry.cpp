#include "sapp/geometry.hpp"

#include <algorithm>
#include <set>

#include "sapp/parser.hpp"
#include "sapp/util.hpp"

namespace sapp {

namespace {
const Rational kZero(0);
const Rational kMinusOne(-1);
} // namespace

std::string to_string(const Line& a) {
  if (a.is_vertical()) return "vertical x=" + format_rational(a.vertical_x());
  return "y=" + format_rational(a.slope()) + "*x+" + format_rational(a.intercept());
}

bool perp(const Line& a, const Line& b) {
  if (a.is_vertical() && b.is_vertical()) return false;
  if (a.is_vertical()) return b.slope() == kZero;
  if (b.is_vertical()) return a.slope() == kZero;
  return a.slope() * b.slope() == kMinusOne;
}

namespace {

bool same_direction(const Line& a, const Line& b) {
  if (a.is_vertical() != b.is_vertical()) return false;
  if (a.is_vertical()) return true;
  return a.slope() == b.slope();
}

} // namespace

bool parallel(const Line& a, const Line& b) { return a != b && same_direction(a, b); }

bool converge(const Line& a, const Line& b) { return !same_direction(a, b); }

bool in_A_star(const Line& a) {
  return !a.is_vertical() && a.slope() != kZero && a.intercept() != kZero;
}

Coords coords(const Line& a) {
  if (!in_A_star(a))
    throw Error("coords: " + to_string(a) + " is outside the three-coordinate substructure");
  return Coords{a.slope(), kMinusOne / a.slope(), a.intercept()};
}

std::vector<Line> sample_FQ(std::uint64_t seed, std::size_t n) {
  if (n < 1) throw Error("sample_FQ: n must be >= 1");
  Rng rng(seed);

  auto small_rational = [&](bool nonzero) {
    for (;;) {
      const long long num = rng.range(-6, 6);
      if (nonzero && num == 0) continue;
      return Rational(num, rng.range(1, 4));
    }
  };

  std::set<Line> seen;
  std::vector<Line> out;
  auto add = [&](const Line& l) {
    if (!seen.insert(l).second) return false;
    out.push_back(l);
    return true;
  };

  if (n >= 4) {
    // guarantee block: two parallels and a line perpendicular to them
    const Rational m = small_rational(true);
    const Rational c1 = small_rational(false);
    add(Line::slanted(m, c1));
    for (;;) {
      const Rational c2 = small_rational(false);
      if (c2 != c1) {
        add(Line::slanted(m, c2));
        break;
      }
    }
    add(Line::slanted(kMinusOne / m, small_rational(false)));
  }

  while (out.size() < n) {
    if (rng.below(5) == 0)
      add(Line::vertical(small_rational(false)));
    else
      add(Line::slanted(small_rational(false), small_rational(false)));
  }
  return out;
}

FiniteStructure::FiniteStructure(std::size_t n,
                                 std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                 std::optional<std::vector<Line>> provenance)
    : n_(n), rel_(n * n, false), provenance_(std::move(provenance)) {
  if (n == 0) throw Error("structure domain must be nonempty");
  if (provenance_ && provenance_->size() != n)
    throw Error("provenance size differs from the domain size");
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n) throw Error("relation index out of range");
    if (i == j) throw Error("self-perpendicular element " + std::to_string(i));
    rel_[i * n_ + j] = rel_[j * n_ + i] = true;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteStructure::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (perp_at(i, j)) out.emplace_back(i, j);
  return out;
}

FiniteStructure to_structure(const std::vector<Line>& lines) {
  std::set<Line> seen;
  for (const Line& l : lines)
    if (!seen.insert(l).second) throw Error("duplicate line " + to_string(l));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (perp(lines[i], lines[j])) pairs.emplace_back(i, j);
  return FiniteStructure(lines.size(), std::move(pairs), lines);
}

namespace {

class FiniteEvaluator {
public:
  FiniteEvaluator(const FiniteStructure& m, const Valuation& v) : m_(m), val_(v) {}

  bool eval(const Formula* f) {
    switch (f->kind()) {
      case Kind::AtomPerp:
        return m_.perp_at(value(f->lhs()), value(f->rhs()));
      case Kind::AtomEq:
        return value(f->lhs()) == value(f->rhs());
      case Kind::Not:
        return !eval(f->child().get());
      case Kind::And:
        return eval(f->left().get()) && eval(f->right().get());
      case Kind::Exists: {
        for (std::size_t x = 0; x < m_.size(); ++x) {
          env_.push_back(x);
          const bool sub = eval(f->child().get());
          env_.pop_back();
          if (sub) return true;
        }
        return false;
      }
    }
    return false;
  }

private:
  std::size_t value(const Var& v) const {
    if (v.index >= 1 && v.index <= env_.size()) return env_[v.index - 1];
    const auto it = val_.find(var_name(v));
    if (it == val_.end()) throw Error("unbound variable '" + var_name(v) + "'");
    return it->second;
  }

  const FiniteStructure& m_;
  const Valuation& val_;
  std::vector<std::size_t> env_;
};

} // namespace

bool eval_finite(const FormulaPtr& f, const FiniteStructure& m, const Valuation& v) {
  for (const auto& [name, value] : v)
    if (value >= m.size())
      throw Error("valuation of '" + name + "' is outside the domain");
  FiniteEvaluator ev(m, v);
  const FormulaPtr prepared = annotate(f);
  return ev.eval(prepared.get());
}

namespace {

std::vector<bool> r1_matrix(const FiniteStructure& m) {
  const std::size_t n = m.size();
  std::vector<bool> r(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool related = true;
      for (std::size_t z = 0; z < n && related; ++z)
        if (m.perp_at(i, z) && !m.perp_at(j, z)) related = false;
      r[i * n + j] = related;
    }
  return r;
}

} // namespace

DirectionView direction_view(const FiniteStructure& m) {
  const std::size_t n = m.size();
  const std::vector<bool> r = r1_matrix(m);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i * n + j] != r[j * n + i])
        throw Error("R1 is not symmetric over this domain: witnesses " +
                    std::to_string(i) + ", " + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (r[j * n + k] && !r[i * n + k])
          throw Error("R1 is not transitive over this domain: witnesses " +
                      std::to_string(i) + ", " + std::to_string(j) + ", " +
                      std::to_string(k));
    }

  DirectionView view;
  view.class_of.assign(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j)
      if (r[i * n + j]) {
        cls.push_back(j);
        placed[j] = true;
        view.class_of[j] = view.classes.size();
      }
    view.classes.push_back(std::move(cls));
  }

  view.partners.assign(view.classes.size(), {});
  for (std::size_t c = 0; c < view.classes.size(); ++c) {
    std::set<std::size_t> ps;
    for (std::size_t i : view.classes[c])
      for (std::size_t j = 0; j < n; ++j)
        if (m.perp_at(i, j)) ps.insert(view.class_of[j]);
    view.partners[c].assign(ps.begin(), ps.end());
  }
  return view;
}

std::optional<DirectionView> try_direction_view(const FiniteStructure& m) {
  try {
    return direction_view(m);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<std::vector<std::size_t>> r1_classes(const FiniteStructure& m) {
  return direction_view(m).classes;
}

std::vector<std::vector<std::size_t>> r2_pairs(const FiniteStructure& m) {
  return direction_view(m).partners;
}

namespace {

// Direction of a line, encodable as a key: vertical or a slope value.
struct Direction {
  bool vertical;
  Rational slope;

  friend bool operator<(const Direction& a, const Direction& b) {
    if (a.vertical != b.vertical) return a.vertical < b.vertical;
    return a.slope < b.slope;
  }
  friend bool operator==(const Direction& a, const Direction& b) {
    return a.vertical == b.vertical && a.slope == b.slope;
  }
};

Direction direction_of(const Line& l) {
  if (l.is_vertical()) return {true, kZero};
  return {false, l.slope()};
}

Direction perp_direction(const Direction& d) {
  if (d.vertical) return {false, kZero};
  if (d.slope == kZero) return {true, kZero};
  return {false, kMinusOne / d.slope};
}

Line origin_line(const Direction& d) {
  if (d.vertical) return Line::vertical(kZero);
  return Line::slanted(d.slope, kZero);
}

} // namespace

std::vector<Line> witness_closure(const std::vector<Line>& lines) {
  std::vector<Line> out = lines;
  std::set<Direction> present;
  for (const Line& l : lines) present.insert(direction_of(l));

  for (const Line& l : lines) {
    const Direction pd = perp_direction(direction_of(l));
    if (present.insert(pd).second) out.push_back(origin_line(pd));
  }
  return out;
}

DefinabilityReport check_definability(DefinablePred pred, const std::vector<Line>& lines) {
  if (lines.empty()) throw Error("check_definability: empty line set");
  static const FormulaPtr p_formula = parse("x != y & exists z. (O(x,z) & O(y,z))");
  static const FormulaPtr c_formula = parse("exists z. (O(x,z) & !O(y,z))");

  const std::vector<Line> closed = witness_closure(lines);
  const FiniteStructure st = to_structure(closed);
  const FormulaPtr& formula = pred == DefinablePred::P ? p_formula : c_formula;

  DefinabilityReport report;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const bool geometric = pred == DefinablePred::P ? parallel(lines[i], lines[j])
                                                      : converge(lines[i], lines[j]);
      const bool defined = eval_finite(formula, st, {{"x", i}, {"y", j}});
      report.pairs_checked += 1;
      if (geometric != defined)
        report.disagreements.push_back({i, j, geometric, defined});
    }
  return report;
}

bool swap_preserves_O(const std::vector<Line>& lines, const Line& a, const Line& b) {
  const auto find = [&](const Line& l) {
    const auto it = std::find(lines.begin(), lines.end(), l);
    if (it == lines.end()) throw Error("line " + to_string(l) + " is not in the set");
    return static_cast<std::size_t>(it - lines.begin());
  };
  const std::size_t ia = find(a);
  const std::size_t ib = find(b);
  if (ia != ib && !parallel(a, b))
    throw Error("swap requires identical or parallel lines");

  const FiniteStructure st = to_structure(lines);
  const auto sigma = [&](std::size_t i) { return i == ia ? ib : i == ib ? ia : i; };
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = 0; j < st.size(); ++j)
      if (st.perp_at(i, j) != st.perp_at(sigma(i), sigma(j))) return false;
  return true;
}

} // namespace sapp
