#include "sapp/formula.hpp"

#include <algorithm>
#include <vector>

namespace sapp {

Var coord_var(unsigned base, unsigned c) {
  return Var{3 * (base - 1) + c, c,
             "x" + std::to_string(base) + "_" + std::to_string(c)};
}

FormulaPtr Formula::atom_perp(Var a, Var b) {
  return FormulaPtr(new Formula(Kind::AtomPerp, std::move(a), std::move(b), nullptr, nullptr));
}

FormulaPtr Formula::atom_eq(Var a, Var b) {
  return FormulaPtr(new Formula(Kind::AtomEq, std::move(a), std::move(b), nullptr, nullptr));
}

FormulaPtr Formula::make_not(FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Not, Var{}, Var{}, std::move(f), nullptr));
}

FormulaPtr Formula::make_and(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::And, Var{}, Var{}, std::move(a), std::move(b)));
}

FormulaPtr Formula::make_exists(Var v, FormulaPtr body) {
  return FormulaPtr(new Formula(Kind::Exists, std::move(v), Var{}, std::move(body), nullptr));
}

FormulaPtr make_neq(Var a, Var b) {
  return Formula::make_not(Formula::atom_eq(std::move(a), std::move(b)));
}

FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
  return Formula::make_not(Formula::make_and(Formula::make_not(std::move(a)),
                                             Formula::make_not(std::move(b))));
}

FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) {
  return Formula::make_not(Formula::make_and(std::move(a), Formula::make_not(std::move(b))));
}

FormulaPtr make_iff(FormulaPtr a, FormulaPtr b) {
  return Formula::make_and(make_implies(a, b), make_implies(b, a));
}

FormulaPtr make_forall(Var v, FormulaPtr body) {
  return Formula::make_not(Formula::make_exists(std::move(v), Formula::make_not(std::move(body))));
}

std::string var_name(const Var& v) {
  if (!v.name.empty()) return v.name;
  return "x" + std::to_string(v.index);
}

namespace {

// An occurrence is a bound reference relative to the root being compared
// iff its index points at an enclosing binder of that root.
bool var_equal(const Var& a, const Var& b, unsigned depth) {
  const bool bound_a = a.index >= 1 && a.index <= depth;
  const bool bound_b = b.index >= 1 && b.index <= depth;
  if (bound_a != bound_b) return false;
  if (bound_a) return a.index == b.index;
  return var_name(a) == var_name(b);
}

bool equal_rec(const Formula* a, const Formula* b, unsigned depth) {
  if (a == b) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Kind::AtomPerp:
    case Kind::AtomEq:
      return var_equal(a->lhs(), b->lhs(), depth) && var_equal(a->rhs(), b->rhs(), depth);
    case Kind::Not:
      return equal_rec(a->child().get(), b->child().get(), depth);
    case Kind::And:
      return equal_rec(a->left().get(), b->left().get(), depth) &&
             equal_rec(a->right().get(), b->right().get(), depth);
    case Kind::Exists:
      return equal_rec(a->child().get(), b->child().get(), depth + 1);
  }
  return false;
}

} // namespace

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  return equal_rec(a.get(), b.get(), 0);
}

bool contains_subformula(const FormulaPtr& whole, const FormulaPtr& sub) {
  if (!whole || !sub) return false;
  if (equal(whole, sub)) return true;
  switch (whole->kind()) {
    case Kind::AtomPerp:
    case Kind::AtomEq:
      return false;
    case Kind::Not:
    case Kind::Exists:
      return contains_subformula(whole->child(), sub);
    case Kind::And:
      return contains_subformula(whole->left(), sub) ||
             contains_subformula(whole->right(), sub);
  }
  return false;
}

std::size_t node_count(const FormulaPtr& f) {
  if (!f) return 0;
  switch (f->kind()) {
    case Kind::AtomPerp:
    case Kind::AtomEq:
      return 1;
    case Kind::Not:
    case Kind::Exists:
      return 1 + node_count(f->child());
    case Kind::And:
      return 1 + node_count(f->left()) + node_count(f->right());
  }
  return 0;
}

Lang language(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::AtomPerp:
      return Lang::L;
    case Kind::AtomEq:
      return Lang::L1;
    case Kind::Not:
    case Kind::Exists:
      return language(f->child());
    case Kind::And:
      return language(f->left()) == Lang::L || language(f->right()) == Lang::L
                 ? Lang::L
                 : Lang::L1;
  }
  return Lang::L1;
}

namespace {

void metrics_rec(const Formula* f, unsigned depth, Metrics& out) {
  auto note_var = [&](const Var& v) {
    if (!(v.index >= 1 && v.index <= depth)) out.free_variables.insert(var_name(v));
  };
  switch (f->kind()) {
    case Kind::AtomPerp:
    case Kind::AtomEq:
      note_var(f->lhs());
      note_var(f->rhs());
      return;
    case Kind::Not:
      metrics_rec(f->child().get(), depth, out);
      return;
    case Kind::And:
      metrics_rec(f->left().get(), depth, out);
      metrics_rec(f->right().get(), depth, out);
      return;
    case Kind::Exists:
      out.quantifier_count += 1;
      out.quantifier_rank = std::max(out.quantifier_rank, depth + 1);
      metrics_rec(f->child().get(), depth + 1, out);
      return;
  }
}

} // namespace

Metrics metrics(const FormulaPtr& f) {
  Metrics m;
  metrics_rec(f.get(), 0, m);
  return m;
}

namespace {

// Precedence for printing: a quantifier body extends maximally to the
// right, so quantifiers bind loosest. Negated equality prints as the
// atom-level "!=" form.
enum : int { PrecExists = 1, PrecAnd = 2, PrecNot = 3, PrecAtom = 4 };

void print_rec(const Formula* f, int min_prec, std::string& out) {
  const auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };

  switch (f->kind()) {
    case Kind::AtomPerp:
      out += "O(" + var_name(f->lhs()) + "," + var_name(f->rhs()) + ")";
      return;
    case Kind::AtomEq:
      out += var_name(f->lhs()) + " = " + var_name(f->rhs());
      return;
    case Kind::Not: {
      const Formula* c = f->child().get();
      if (c->kind() == Kind::AtomEq) {
        out += var_name(c->lhs()) + " != " + var_name(c->rhs());
        return;
      }
      // !(exists v. !body) reads back as a forall
      if (c->kind() == Kind::Exists && c->child()->kind() == Kind::Not) {
        wrap(PrecExists, [&] {
          out += "forall " + var_name(c->binder()) + ". ";
          print_rec(c->child()->child().get(), PrecExists, out);
        });
        return;
      }
      wrap(PrecNot, [&] {
        out += '!';
        print_rec(c, PrecNot, out);
      });
      return;
    }
    case Kind::And:
      wrap(PrecAnd, [&] {
        print_rec(f->left().get(), PrecAnd, out);
        out += " & ";
        print_rec(f->right().get(), PrecNot, out);
      });
      return;
    case Kind::Exists:
      wrap(PrecExists, [&] {
        out += "exists " + var_name(f->binder()) + ". ";
        print_rec(f->child().get(), PrecExists, out);
      });
      return;
  }
}

} // namespace

std::string print(const FormulaPtr& f) {
  std::string out;
  print_rec(f.get(), 0, out);
  return out;
}

namespace {

FormulaPtr rebind_rec(const Formula* f, std::vector<std::string>& scope, bool require_closed) {
  auto resolve = [&](const Var& v) -> Var {
    const std::string name = var_name(v);
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i] == name)
        return Var{static_cast<unsigned>(i + 1), v.coord, v.name};
    }
    if (require_closed) throw FreeVariableError(name);
    return Var{0, v.coord, v.name};
  };

  switch (f->kind()) {
    case Kind::AtomPerp:
      return Formula::atom_perp(resolve(f->lhs()), resolve(f->rhs()));
    case Kind::AtomEq:
      return Formula::atom_eq(resolve(f->lhs()), resolve(f->rhs()));
    case Kind::Not:
      return Formula::make_not(rebind_rec(f->child().get(), scope, require_closed));
    case Kind::And:
      return Formula::make_and(rebind_rec(f->left().get(), scope, require_closed),
                               rebind_rec(f->right().get(), scope, require_closed));
    case Kind::Exists: {
      const Var& b = f->binder();
      scope.push_back(var_name(b));
      Var binder{static_cast<unsigned>(scope.size()), b.coord, b.name};
      FormulaPtr body = rebind_rec(f->child().get(), scope, require_closed);
      scope.pop_back();
      return Formula::make_exists(std::move(binder), std::move(body));
    }
  }
  return nullptr;
}

} // namespace

FormulaPtr canonicalize(const FormulaPtr& f) {
  std::vector<std::string> scope;
  return rebind_rec(f.get(), scope, /*require_closed=*/true);
}

FormulaPtr annotate(const FormulaPtr& f) {
  std::vector<std::string> scope;
  return rebind_rec(f.get(), scope, /*require_closed=*/false);
}

namespace {

bool canonical_rec(const Formula* f, std::vector<const Var*>& scope) {
  auto resolved = [&](const Var& v) {
    if (v.index < 1 || v.index > scope.size()) return false;
    const Var* binder = scope[v.index - 1];
    return var_name(*binder) == var_name(v);
  };
  switch (f->kind()) {
    case Kind::AtomPerp:
    case Kind::AtomEq:
      return resolved(f->lhs()) && resolved(f->rhs());
    case Kind::Not:
      return canonical_rec(f->child().get(), scope);
    case Kind::And:
      return canonical_rec(f->left().get(), scope) && canonical_rec(f->right().get(), scope);
    case Kind::Exists: {
      if (f->binder().index != scope.size() + 1) return false;
      scope.push_back(&f->binder());
      const bool ok = canonical_rec(f->child().get(), scope);
      scope.pop_back();
      return ok;
    }
  }
  return false;
}

} // namespace

bool is_canonical(const FormulaPtr& f) {
  std::vector<const Var*> scope;
  return canonical_rec(f.get(), scope);
}

} // namespace sapp
