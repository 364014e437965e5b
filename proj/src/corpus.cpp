#include "sapp/corpus.hpp"

#include <string>

#include "sapp/parser.hpp"
#include "sapp/translate.hpp"
#include "sapp/util.hpp"

namespace sapp {

namespace {

std::string neg(const std::string& b) { return "!(" + b + ")"; }
std::string conj(const std::string& a, const std::string& b) {
  return "(" + a + " & " + b + ")";
}

// bodies over the given atoms with at most two connective nodes
std::vector<std::string> small_bodies(const std::vector<std::string>& atoms) {
  std::vector<std::string> size0 = atoms;
  std::vector<std::string> size1;
  for (const auto& a : size0) size1.push_back(neg(a));
  for (const auto& a : size0)
    for (const auto& b : size0) size1.push_back(conj(a, b));

  std::vector<std::string> size2;
  for (const auto& a : size1) size2.push_back(neg(a));
  for (const auto& a : size0)
    for (const auto& b : size1) size2.push_back(conj(a, b));
  for (const auto& a : size1)
    for (const auto& b : size0) size2.push_back(conj(a, b));

  std::vector<std::string> out;
  out.reserve(size0.size() + size1.size() + size2.size());
  out.insert(out.end(), size0.begin(), size0.end());
  out.insert(out.end(), size1.begin(), size1.end());
  out.insert(out.end(), size2.begin(), size2.end());
  return out;
}

} // namespace

std::vector<FormulaPtr> exhaustive_corpus() {
  std::vector<FormulaPtr> out;

  const std::vector<std::string> quantifiers = {"exists", "forall"};

  const std::vector<std::string> atoms1 = {"O(x,x)", "x = x"};
  for (const auto& q : quantifiers)
    for (const auto& body : small_bodies(atoms1))
      out.push_back(parse(q + " x. " + body));

  const std::vector<std::string> atoms2 = {"O(x,y)", "O(y,x)", "O(x,x)", "O(y,y)", "x = y"};
  for (const auto& q1 : quantifiers)
    for (const auto& q2 : quantifiers)
      for (const auto& body : small_bodies(atoms2))
        out.push_back(parse(q1 + " x. " + q2 + " y. " + body));

  return out;
}

std::vector<FormulaPtr> random_corpus(std::uint64_t seed, std::size_t count,
                                      unsigned max_q) {
  Rng rng(seed);
  std::vector<FormulaPtr> out;
  out.reserve(count);

  while (out.size() < count) {
    const unsigned q = 1 + static_cast<unsigned>(rng.below(max_q));
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= q; ++i) vars.push_back("v" + std::to_string(i));

    // small random body over the bound variables
    auto gen_body = [&](auto&& self, unsigned depth) -> std::string {
      if (depth == 0 || rng.percent(40)) {
        const std::string& a = vars[rng.below(vars.size())];
        const std::string& b = vars[rng.below(vars.size())];
        switch (rng.below(3)) {
          case 0: return "O(" + a + "," + b + ")";
          case 1: return a + " = " + b;
          default: return a + " != " + b;
        }
      }
      if (rng.below(2) == 0) return neg(self(self, depth - 1));
      return conj(self(self, depth - 1), self(self, depth - 1));
    };

    std::string text = gen_body(gen_body, 3);
    for (unsigned i = q; i >= 1; --i)
      text = std::string(rng.below(2) == 0 ? "exists " : "forall ") + vars[i - 1] +
             ". " + (i == q ? "(" + text + ")" : text);
    out.push_back(parse(text));
  }
  return out;
}

std::vector<FormulaPtr> l1_corpus() {
  std::vector<FormulaPtr> out;

  const std::vector<std::string> fixed = {
      "exists x. x = x",
      "exists x. x != x",
      "exists x. exists y. x != y",
      "exists x. forall y. y = x",
      "forall x. exists y. x = y",
      "forall x. exists y. x != y",
      "forall x. forall y. x = y",
      "forall x. forall y. (x = y -> y = x)",
      "forall x. forall y. forall z. (x = y & y = z -> x = z)",
      "exists x. exists y. (x != y & forall z. (z = x | z = y))",
      "exists x. exists y. exists z. (x != y & y != z & x != z)",
      "forall x. forall y. (x = y <-> y = x)",
  };
  for (const auto& text : fixed) out.push_back(parse(text));

  // pairwise-distinct chains, one to six witnesses
  for (unsigned n = 1; n <= 6; ++n) {
    std::string body;
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) {
        if (!body.empty()) body += " & ";
        body += "d" + std::to_string(i) + " != d" + std::to_string(j);
      }
    if (body.empty()) body = "d1 = d1";
    std::string text = "(" + body + ")";
    for (unsigned i = n; i >= 1; --i)
      text = "exists d" + std::to_string(i) + ". " + text;
    out.push_back(parse(text));
  }

  // translations of small perpendicularity sentences are pure equality
  const std::vector<std::string> l_side = {
      "forall x. !O(x,x)",
      "forall x. forall y. (O(x,y) -> O(y,x))",
      "exists x. exists y. (x != y & !O(x,y))",
      "exists x. exists y. O(x,y)",
  };
  for (const auto& text : l_side)
    out.push_back(translate(canonicalize(parse(text))));

  return out;
}

} // namespace sapp
