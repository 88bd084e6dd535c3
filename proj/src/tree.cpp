#include "rsg/tree.hpp"

#include <algorithm>

namespace rsg::trees {

using words::ginv;
using words::gmul;
using words::Letter;

bool Tree::contains(const Word& w) const {
  return std::binary_search(vs.begin(), vs.end(), w);
}

std::size_t Tree::max_vertex_len() const {
  std::size_t m = 0;
  for (const Word& v : vs) m = std::max(m, v.size());
  return m;
}

bool Tree::operator<(const Tree& o) const {
  return std::lexicographical_compare(vs.begin(), vs.end(), o.vs.begin(), o.vs.end());
}

Tree singleton(const Word& v) { return Tree{{v}}; }

static void sort_unique(std::vector<Word>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

Tree span(std::vector<Word> gens) {
  if (gens.empty()) throw domain_error("span of an empty vertex set");
  // Union of the geodesics from a fixed root to every generator.  In a tree
  // this is the minimum subtree containing all of them.
  const Word root = gens.front();
  std::vector<Word> out;
  for (const Word& v : gens) {
    Word path = gmul(ginv(root), v);
    Word cur = root;
    out.push_back(cur);
    for (Letter l : path.ls) {
      if (!cur.ls.empty() && cur.ls.back() == inverse(l))
        cur.ls.pop_back();
      else
        cur.ls.push_back(l);
      out.push_back(cur);
    }
  }
  sort_unique(out);
  return Tree{std::move(out)};
}

Tree tree_meet(const Tree& a, const Tree& b) {
  std::vector<Word> vs = a.vs;
  vs.insert(vs.end(), b.vs.begin(), b.vs.end());
  return span(std::move(vs));
}

Tree tree_act(const Word& g, const Tree& a) {
  std::vector<Word> vs;
  vs.reserve(a.vs.size());
  for (const Word& v : a.vs) vs.push_back(gmul(g, v));
  sort_unique(vs); // translation preserves connectivity
  return Tree{std::move(vs)};
}

bool tree_leq(const Tree& a, const Tree& b) {
  return std::includes(a.vs.begin(), a.vs.end(), b.vs.begin(), b.vs.end());
}

bool in_ideal_Y(const Tree& a) { return a.contains(Word{}); }

std::string tree_str(const Tree& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.vs.size(); ++i) {
    if (i) s += ",";
    s += words::wire(a.vs[i]);
  }
  return s + "}";
}

Tree parse_tree(std::string_view s, const Alphabet* alpha) {
  std::size_t b = s.find('{'), e = s.rfind('}');
  if (b == std::string_view::npos || e == std::string_view::npos || e < b)
    throw parse_error("tree literal must look like {\xce\xb5,a,ab}: got \"" + std::string(s) +
                      "\"");
  std::string_view body = s.substr(b + 1, e - b - 1);
  std::vector<Word> vs;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    std::size_t l = 0, r = item.size();
    while (l < r && std::isspace(static_cast<unsigned char>(item[l]))) ++l;
    while (r > l && std::isspace(static_cast<unsigned char>(item[r - 1]))) --r;
    item = item.substr(l, r - l);
    if (!item.empty()) {
      Word w = words::parse_word(item, alpha);
      if (!words::is_reduced(words::parse_letters(item, alpha)))
        throw parse_error("tree vertex \"" + std::string(item) + "\" is not reduced");
      vs.push_back(w);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return span(std::move(vs));
}

std::string tree_dot(const Tree& a, const Alphabet& alpha) {
  std::string s = "digraph tree {\n  rankdir=LR;\n";
  for (const Word& v : a.vs)
    s += "  \"" + words::wire(v) + "\" [shape=circle];\n";
  for (const Word& v : a.vs) {
    for (char c : alpha.letters) {
      Word w = gmul(v, Word{{Letter{c, false}}});
      if (a.contains(w))
        s += "  \"" + words::wire(v) + "\" -> \"" + words::wire(w) + "\" [label=\"" +
             std::string(1, c) + "\"];\n";
    }
  }
  return s + "}\n";
}

bool MinClosedSet::contains(const Abelian& a) const {
  return std::binary_search(es.begin(), es.end(), a,
                            [](const Abelian& x, const Abelian& y) { return x < y; });
}

bool MinClosedSet::operator<(const MinClosedSet& o) const {
  return std::lexicographical_compare(es.begin(), es.end(), o.es.begin(), o.es.end());
}

static void sort_unique(std::vector<Abelian>& es) {
  std::sort(es.begin(), es.end(), [](const Abelian& x, const Abelian& y) { return x < y; });
  es.erase(std::unique(es.begin(), es.end()), es.end());
}

MinClosedSet minclosed_span(std::vector<Abelian> gens) {
  if (gens.empty()) throw domain_error("min-closure of an empty set");
  sort_unique(gens);
  // worklist of pairwise minima
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Abelian> add;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Abelian m = words::amin(gens[i], gens[j]);
        if (!std::binary_search(gens.begin(), gens.end(), m,
                                [](const Abelian& x, const Abelian& y) { return x < y; }))
          add.push_back(m);
      }
    if (!add.empty()) {
      gens.insert(gens.end(), add.begin(), add.end());
      sort_unique(gens);
      grew = true;
    }
  }
  return MinClosedSet{std::move(gens)};
}

MinClosedSet mc_meet(const MinClosedSet& a, const MinClosedSet& b) {
  std::vector<Abelian> es = a.es;
  es.insert(es.end(), b.es.begin(), b.es.end());
  return minclosed_span(std::move(es));
}

MinClosedSet mc_act(const Abelian& g, const MinClosedSet& a) {
  std::vector<Abelian> es;
  es.reserve(a.es.size());
  for (const Abelian& x : a.es) es.push_back(words::amul(g, x));
  sort_unique(es);
  return MinClosedSet{std::move(es)};
}

bool mc_leq(const MinClosedSet& a, const MinClosedSet& b) {
  return std::includes(a.es.begin(), a.es.end(), b.es.begin(), b.es.end(),
                       [](const Abelian& x, const Abelian& y) { return x < y; });
}

bool mc_in_Y(const MinClosedSet& a) { return a.contains(Abelian{}); }

std::string mc_str(const MinClosedSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.es.size(); ++i) {
    if (i) s += ", ";
    s += words::abelian_str(a.es[i]);
  }
  return s + "}";
}

} // namespace rsg::trees
