#include "rsg/fr.hpp"

#include <algorithm>

namespace rsg::fr {

using trees::Tree;
using words::Letter;

GenTerm GenTerm::prod(GenTerm a, GenTerm b) {
  if (a.k == K::One) return b;
  if (b.k == K::One) return a;
  GenTerm t;
  t.k = K::Prod;
  t.kids.push_back(std::move(a));
  t.kids.push_back(std::move(b));
  return t;
}

GenTerm GenTerm::plus(GenTerm a) {
  GenTerm t;
  t.k = K::Plus;
  t.kids.push_back(std::move(a));
  return t;
}

GenTerm GenTerm::star(GenTerm a) {
  GenTerm t;
  t.k = K::Star;
  t.kids.push_back(std::move(a));
  return t;
}

std::string GenTerm::str() const {
  switch (k) {
    case K::One:
      return "1";
    case K::Gen:
      return std::string(1, letter);
    case K::Prod: {
      auto wrap = [](const GenTerm& g) {
        return g.k == K::Prod ? "(" + g.str() + ")" : g.str();
      };
      return wrap(kids[0]) + " " + wrap(kids[1]);
    }
    case K::Plus:
      return "(" + kids[0].str() + ")^+";
    case K::Star:
      return "(" + kids[0].str() + ")^*";
  }
  return "?";
}

bool is_fr_element(const FreeGroupAction&, const FRElem& x) {
  return words::positive(x.second) && trees::in_ideal_Y(x.first) && x.first.contains(x.second);
}

FRElem fr_generator(const FreeGroupAction& act, char a) {
  act.alpha.require(a);
  Word w{{Letter{a, false}}};
  return {trees::span({Word{}, w}), w};
}

FRElem fr_one(const FreeGroupAction&) { return {trees::singleton(Word{}), Word{}}; }

namespace {

// projection term of a tree rooted at ε, branches in canonical letter order
GenTerm proj_term(const Tree& a) {
  // split vertices by their first letter
  std::map<Letter, std::vector<Word>> branch;
  for (const Word& v : a.vs)
    if (!v.empty()) branch[v.ls.front()].push_back(v);
  std::vector<Letter> order;
  for (auto& [l, _] : branch) order.push_back(l);
  std::sort(order.begin(), order.end(), [](Letter x, Letter y) {
    if (x.inv != y.inv) return !x.inv; // positive letters first
    return x.sym < y.sym;
  });
  GenTerm t = GenTerm::one();
  for (Letter l : order) {
    Word edge{{l}};
    std::vector<Word> sub;
    for (const Word& v : branch[l]) sub.push_back(words::gmul(words::ginv(edge), v));
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    Tree subtree{std::move(sub)}; // translated branch: connected, contains ε
    GenTerm inner = proj_term(subtree);
    GenTerm g = GenTerm::gen(l.sym);
    GenTerm piece = l.inv ? GenTerm::star(GenTerm::prod(std::move(inner), std::move(g)))
                          : GenTerm::plus(GenTerm::prod(std::move(g), std::move(inner)));
    t = GenTerm::prod(std::move(t), std::move(piece));
  }
  return t;
}

} // namespace

GenTerm fr_decompose(const FreeGroupAction& act, const FRElem& x) {
  if (!is_fr_element(act, x))
    throw domain_error("not an element of FR(\xce\xa9): (" + trees::tree_str(x.first) + ", " +
                       words::wire(x.second) + ")");
  GenTerm t = proj_term(x.first);
  for (Letter l : x.second.ls) t = GenTerm::prod(std::move(t), GenTerm::gen(l.sym));
  return t;
}

} // namespace rsg::fr
