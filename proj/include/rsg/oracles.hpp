#pragma once
#include <algorithm>
#include <set>
#include <vector>

#include "rsg/finalg.hpp"
#include "rsg/tree.hpp"

// Independent reference implementations used by the property suites and unit
// tests.  Each deliberately takes a different route from the library code it
// checks.
namespace rsg::oracle {

using trees::Tree;
using words::Abelian;
using words::Letter;
using words::Word;

// repeated-scan cancellation, vs. the stack reducer
inline Word reduce_fixpoint(std::vector<Letter> raw) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
      if (raw[i].sym == raw[i + 1].sym && raw[i].inv != raw[i + 1].inv) {
        raw.erase(raw.begin() + static_cast<long>(i), raw.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return Word{raw};
}

// all-pairs geodesic union (one pass suffices in a tree), vs. the rooted walk
inline Tree span_allpairs(const std::vector<Word>& gens) {
  if (gens.empty()) throw domain_error("span of an empty vertex set");
  std::set<Word> out(gens.begin(), gens.end());
  for (const Word& g : gens)
    for (const Word& h : gens) {
      Word path = words::gmul(words::ginv(g), h);
      Word prefix; // prefixes of a reduced word are reduced
      for (Letter l : path.ls) {
        prefix.ls.push_back(l);
        out.insert(words::gmul(g, prefix));
      }
    }
  return Tree{{out.begin(), out.end()}};
}

// subset minima (closure = picks of coordinatewise minima), vs. the pairwise
// worklist
inline trees::MinClosedSet minclosed_subsets(const std::vector<Abelian>& gens) {
  if (gens.empty()) throw domain_error("min-closure of an empty set");
  std::set<Abelian> out;
  std::size_t n = gens.size();
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    bool first = true;
    Abelian m;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        m = first ? gens[i] : words::amin(m, gens[i]);
        first = false;
      }
    out.insert(m);
  }
  return trees::MinClosedSet{{out.begin(), out.end()}};
}

// naive relation-matrix fixpoint, vs. the union-find worklist
inline alg::Congruence congruence_fixpoint(const alg::FinAlg& s,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::size_t n = s.size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
  for (auto [a, b] : pairs) {
    rel[a * n + b] = true;
    rel[b * n + a] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto set = [&](std::size_t a, std::size_t b) {
      if (!rel[a * n + b]) {
        rel[a * n + b] = rel[b * n + a] = true;
        changed = true;
      }
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!rel[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (rel[b * n + c]) set(a, c); // transitivity
          set(s.product(c, a), s.product(c, b));
          set(s.product(a, c), s.product(b, c));
        }
        set(s.plus(a), s.plus(b));
        set(s.star(a), s.star(b));
      }
  }
  // read off blocks
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> blk;
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i * n + j]) {
        blk.push_back(j);
        seen[j] = true;
      }
    blocks.push_back(std::move(blk));
  }
  return alg::Congruence::from_blocks(n, blocks);
}

} // namespace rsg::oracle
