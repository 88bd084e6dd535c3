#include "rsg/chain.hpp"

#include <algorithm>
#include <set>

namespace rsg::chain {

using words::Letter;

namespace {

// vertices whose insertion keeps span(A ∪ {v}) within `slack` extra vertices:
// breadth-first ring around A up to that distance, capped by vertex length
std::vector<Word> near_vertices(const Tree& a, int slack, int lencap,
                                const words::Alphabet& alpha) {
  std::set<Word> seen(a.vs.begin(), a.vs.end());
  std::vector<Word> frontier = a.vs, out;
  for (int d = 0; d < slack; ++d) {
    std::vector<Word> next;
    for (const Word& v : frontier)
      for (char c : alpha.letters)
        for (bool inv : {false, true}) {
          Word w = words::gmul(v, Word{{Letter{c, inv}}});
          if (w.size() > static_cast<std::size_t>(lencap)) continue;
          if (seen.insert(w).second) {
            next.push_back(w);
            out.push_back(w);
          }
        }
    frontier = std::move(next);
  }
  return out;
}

BoundedCongruence run_saturation(const act::FreeGroupAction& action,
                                 const std::vector<std::pair<Tree, Tree>>& gens, int bound,
                                 const std::vector<Tree>& seeds) {
  BoundedCongruence bc;
  bc.bound = bound;
  for (const auto& [a, b] : gens)
    if (!bc.in_bound(a) || !bc.in_bound(b))
      throw domain_error("epsilon generator exceeds the bound");
  for (const Tree& s : seeds)
    if (bc.in_bound(s)) bc.intern(s);

  std::deque<std::pair<std::size_t, std::size_t>> work;
  for (const auto& [a, b] : gens) work.emplace_back(bc.intern(a), bc.intern(b));

  while (!work.empty()) {
    auto [ia, ib] = work.front();
    work.pop_front();
    if (!bc.merge(ia, ib)) continue;
    Tree a = bc.items_[ia], b = bc.items_[ib]; // copies: items_ may reallocate

    // translations by the letters of T and their inverses
    for (char c : action.alpha.letters)
      for (bool inv : {false, true}) {
        Word g{{Letter{c, inv}}};
        Tree ta = trees::tree_act(g, a), tb = trees::tree_act(g, b);
        if (bc.in_bound(ta) && bc.in_bound(tb))
          work.emplace_back(bc.intern(ta), bc.intern(tb));
      }

    // meets with singleton trees; singletons meet-generate the semilattice
    int slack_a = bound - static_cast<int>(a.size());
    int slack_b = bound - static_cast<int>(b.size());
    std::vector<Word> cand = near_vertices(a, std::max(slack_a, 0), bound, action.alpha);
    auto more = near_vertices(b, std::max(slack_b, 0), bound, action.alpha);
    cand.insert(cand.end(), more.begin(), more.end());
    cand.insert(cand.end(), a.vs.begin(), a.vs.end());
    cand.insert(cand.end(), b.vs.begin(), b.vs.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const Word& v : cand) {
      if (v.size() > static_cast<std::size_t>(bound)) continue;
      Tree ma = trees::tree_meet(a, trees::singleton(v));
      if (!bc.in_bound(ma)) continue;
      Tree mb = trees::tree_meet(b, trees::singleton(v));
      if (!bc.in_bound(mb)) continue;
      work.emplace_back(bc.intern(ma), bc.intern(mb));
    }
  }
  return bc;
}

} // namespace

BoundedCongruence saturate_epsilon(const act::FreeGroupAction& action,
                                   const std::vector<std::pair<Tree, Tree>>& gens, int bound,
                                   const std::vector<Tree>& seeds, bool certify) {
  BoundedCongruence bc = run_saturation(action, gens, bound, seeds);
  if (certify) {
    // one extra radius: does bound+1 refine nothing on the bound-N universe?
    BoundedCongruence wide = run_saturation(action, gens, bound + 1, seeds);
    bc.stabilized = true;
    std::map<std::size_t, std::size_t> wide_to_narrow;
    for (std::size_t i = 0; i < bc.items_.size() && bc.stabilized; ++i) {
      auto wc = wide.class_of(bc.items_[i]);
      std::size_t nc = bc.find(i);
      if (!wc) continue;
      auto [it, fresh] = wide_to_narrow.emplace(*wc, nc);
      if (!fresh && it->second != nc) bc.stabilized = false;
    }
  }
  return bc;
}

} // namespace rsg::chain
