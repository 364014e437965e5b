#include "sapp/translate.hpp"

#include <set>

namespace sapp {

namespace {

// xi_1 = xj_1 style atom between coordinates (i,ci) and (j,cj).
FormulaPtr coord_eq(unsigned i, unsigned ci, unsigned j, unsigned cj) {
  return Formula::atom_eq(coord_var(i, ci), coord_var(j, cj));
}

FormulaPtr kappa_body(unsigned n) {
  FormulaPtr f = Formula::make_not(coord_eq(n, 1, n, 2));
  for (unsigned i = 1; i < n; ++i)
    f = Formula::make_and(std::move(f), make_iff(coord_eq(i, 1, n, 1), coord_eq(i, 2, n, 2)));
  for (unsigned i = 1; i < n; ++i)
    f = Formula::make_and(std::move(f), make_iff(coord_eq(i, 1, n, 2), coord_eq(i, 2, n, 1)));
  return f;
}

FormulaPtr translate_rec(const Formula* f) {
  switch (f->kind()) {
    case Kind::AtomPerp:
      return coord_eq(f->lhs().index, 1, f->rhs().index, 2);
    case Kind::AtomEq:
      return Formula::make_and(coord_eq(f->lhs().index, 1, f->rhs().index, 1),
                               coord_eq(f->lhs().index, 3, f->rhs().index, 3));
    case Kind::Not:
      return Formula::make_not(translate_rec(f->child().get()));
    case Kind::And:
      return Formula::make_and(translate_rec(f->left().get()),
                               translate_rec(f->right().get()));
    case Kind::Exists: {
      const unsigned n = f->binder().index;
      FormulaPtr body = Formula::make_and(translate_rec(f->child().get()), kappa_body(n));
      body = Formula::make_exists(coord_var(n, 3), std::move(body));
      body = Formula::make_exists(coord_var(n, 2), std::move(body));
      return Formula::make_exists(coord_var(n, 1), std::move(body));
    }
  }
  return nullptr;
}

} // namespace

FormulaPtr kappa(unsigned n) {
  if (n < 1) throw Error("kappa: n must be >= 1");
  return kappa_body(n);
}

FormulaPtr translate(const FormulaPtr& f) {
  if (!is_canonical(f))
    throw Error("translate: input must be a canonical sentence "
                "(canonicalize it first)");
  return translate_rec(f.get());
}

bool kappa_holds(const CoordTuple& a, std::size_t i) {
  if (i < 1 || i > a.size()) throw Error("kappa_holds: index out of range");
  const CoordTriple& ai = a[i - 1];
  if (ai.c1 == ai.c2) return false;
  for (std::size_t k = 0; k + 1 < i; ++k) {
    const CoordTriple& ak = a[k];
    if ((ak.c1 == ai.c1) != (ak.c2 == ai.c2)) return false;
    if ((ak.c1 == ai.c2) != (ak.c2 == ai.c1)) return false;
  }
  return true;
}

namespace {

const Rational kZero(0);

void require_admissible(const CoordTuple& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].c1 == kZero || a[i].c2 == kZero || a[i].c3 == kZero)
      throw Error("tuple has a zero component at index " + std::to_string(i + 1));
    if (!kappa_holds(a, i + 1))
      throw Error("tuple is inadmissible: kappa violated at index " + std::to_string(i + 1));
  }
}

} // namespace

bool is_corresponding(const CoordTuple& b, const CoordTuple& a) {
  if (a.size() != b.size())
    throw Error("tuple length mismatch: " + std::to_string(b.size()) + " vs " +
                std::to_string(a.size()));
  require_admissible(a);

  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].c1 == kZero || b[i].c2 == kZero || b[i].c3 == kZero) return false;

    bool a_fresh = true;
    for (std::size_t k = 0; k < i; ++k) {
      if (a[i].c1 == a[k].c1) {
        a_fresh = false;
        if (b[i].c1 != b[k].c1) return false;
      }
      if (a[i].c1 == a[k].c2) {
        a_fresh = false;
        if (b[i].c1 != b[k].c2) return false;
      }
    }
    if (a_fresh) {
      for (std::size_t k = 0; k < i; ++k)
        if (b[i].c1 == b[k].c1 || b[i].c1 == b[k].c2) return false;
    }

    if (b[i].c2 != Rational(-1) / b[i].c1) return false;
    if (b[i].c3 != a[i].c3) return false;
  }
  return true;
}

CoordTuple make_corresponding(const CoordTuple& a) {
  require_admissible(a);
  CoordTuple b;
  b.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s;
    bool found = false;
    for (std::size_t k = 0; k < i && !found; ++k) {
      if (a[i].c1 == a[k].c1) {
        s = b[k].c1;
        found = true;
      } else if (a[i].c1 == a[k].c2) {
        s = b[k].c2;
        found = true;
      }
    }
    if (!found) {
      std::set<Rational> used;
      for (const CoordTriple& t : b) {
        used.insert(t.c1);
        used.insert(t.c2);
      }
      for (long long m = 1;; ++m) {
        const Rational cand(m);
        const Rational recip = Rational(-1) / cand;
        if (!used.count(cand) && !used.count(-cand) && !used.count(recip) &&
            !used.count(-recip)) {
          s = cand;
          break;
        }
      }
    }
    b.push_back(CoordTriple{s, Rational(-1) / s, a[i].c3});
  }
  return b;
}

} // namespace sapp
