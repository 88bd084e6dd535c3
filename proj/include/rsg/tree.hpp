#pragma once
#include <string>
#include <vector>

#include "rsg/words.hpp"

namespace rsg::trees {

using words::Abelian;
using words::Alphabet;
using words::Word;

// Finite connected subtree of the Cayley graph of the free group, stored as
// its sorted vertex set.  span() is the only constructor that establishes
// connectivity; every other operation preserves it.  The semilattice order is
// reverse inclusion, so the meet is the spanned union.
struct Tree {
  std::vector<Word> vs; // sorted shortlex, unique, nonempty

  std::size_t size() const { return vs.size(); }
  bool contains(const Word& w) const;
  std::size_t max_vertex_len() const;
  bool operator==(const Tree&) const = default;
  bool operator<(const Tree& o) const;
};

Tree singleton(const Word& v);
Tree span(std::vector<Word> gens); // domain_error on empty input
Tree tree_meet(const Tree& a, const Tree& b);
Tree tree_act(const Word& g, const Tree& a);
bool tree_leq(const Tree& a, const Tree& b); // reverse inclusion: b ⊆ a
bool in_ideal_Y(const Tree& a);              // ε ∈ A

std::string tree_str(const Tree& a); // "{ε,a,ab}"
Tree parse_tree(std::string_view s, const Alphabet* alpha = nullptr);
std::string tree_dot(const Tree& a, const Alphabet& alpha);

// Finite min-closed subset of the free abelian group (Cayley analogue for the
// free commutative case).  Meet is again the closed union.
struct MinClosedSet {
  std::vector<Abelian> es; // sorted, unique, nonempty, min-closed

  std::size_t size() const { return es.size(); }
  bool contains(const Abelian& a) const;
  bool operator==(const MinClosedSet&) const = default;
  bool operator<(const MinClosedSet& o) const;
};

MinClosedSet minclosed_span(std::vector<Abelian> gens); // domain_error on empty
MinClosedSet mc_meet(const MinClosedSet& a, const MinClosedSet& b);
MinClosedSet mc_act(const Abelian& g, const MinClosedSet& a);
bool mc_leq(const MinClosedSet& a, const MinClosedSet& b);
bool mc_in_Y(const MinClosedSet& a);
std::string mc_str(const MinClosedSet& a);

} // namespace rsg::trees
