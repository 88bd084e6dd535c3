#pragma once
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsg/term.hpp"

namespace rsg::chain {

using act::NiceAction;
using sd::SDElem;
using term::Term;

// One link of a ρ-sequence: a term, its constants and a generating pair.
template <class A>
struct ChainLink {
  Term t;
  std::vector<SDElem<A>> consts;
  SDElem<A> c, d;
};

// Witness that the endpoints are congruent: s = t₁(c₁,α₁),
// tᵢ(dᵢ,αᵢ) = tᵢ₊₁(cᵢ₊₁,αᵢ₊₁), tₖ(dₖ,αₖ) = t.  An empty chain asserts s = t.
template <class A>
struct Chain {
  SDElem<A> s, t;
  std::vector<ChainLink<A>> links;
};

struct ChainCheck {
  bool ok = true;
  int index = -1; // first failing link, -1 when ok
  std::string why;
};

template <NiceAction A>
ChainCheck verify_chain(const A& action, const Chain<A>& ch) {
  sd::SDAlgebra<A> alg(action);
  auto fail = [](int i, std::string w) { return ChainCheck{false, i, std::move(w)}; };
  if (ch.links.empty()) {
    if (!alg.equal(ch.s, ch.t)) return fail(-1, "empty chain with distinct endpoints");
    return {};
  }
  auto left = term::eval_term(alg, ch.links.front().t, ch.links.front().c,
                              ch.links.front().consts);
  if (!alg.equal(ch.s, left)) return fail(0, "s != t_1(c_1, a_1)");
  for (std::size_t i = 0; i < ch.links.size(); ++i) {
    auto right = term::eval_term(alg, ch.links[i].t, ch.links[i].d, ch.links[i].consts);
    if (i + 1 < ch.links.size()) {
      auto next = term::eval_term(alg, ch.links[i + 1].t, ch.links[i + 1].c,
                                  ch.links[i + 1].consts);
      if (!alg.equal(right, next))
        return fail(static_cast<int>(i) + 1, "middle equality fails after link " +
                                                 std::to_string(i + 1));
    } else if (!alg.equal(right, ch.t)) {
      return fail(static_cast<int>(i), "t_k(d_k, a_k) != t");
    }
  }
  return {};
}

// All constants, generating pairs and endpoints lie in R.
template <NiceAction A>
bool chain_in_R(const A& action, const Chain<A>& ch) {
  if (!sd::in_R(action, ch.s) || !sd::in_R(action, ch.t)) return false;
  for (const auto& l : ch.links) {
    if (!sd::in_R(action, l.c) || !sd::in_R(action, l.d)) return false;
    for (const auto& a : l.consts)
      if (!sd::in_R(action, a)) return false;
  }
  return true;
}

// Chain pulldown: rewrite every link by two_transform so the whole
// chain runs inside R with the same endpoints.
template <NiceAction A>
Chain<A> transform_chain(const A& action, const Chain<A>& ch) {
  if (!sd::in_R(action, ch.s) || !sd::in_R(action, ch.t))
    throw domain_error("transform_chain: endpoints must lie in R");
  for (const auto& l : ch.links)
    if (!sd::in_R(action, l.c) || !sd::in_R(action, l.d))
      throw domain_error("transform_chain: generating pairs must lie in R");
  Chain<A> out;
  out.s = ch.s;
  out.t = ch.t;
  out.links.reserve(ch.links.size());
  for (const auto& l : ch.links) {
    auto tb = term::two_transform(action, l.t, l.consts);
    out.links.push_back(ChainLink<A>{tb.t, std::move(tb.consts), l.c, l.d});
  }
  return out;
}

// A pair under a congruence contained in σ either has equal second
// components and reduces
// to the projection pair ((A,1),(B,1)), or cannot be ρ-related at all.
template <class A>
struct SigmaNormal {
  bool matched = false;
  SDElem<A> a_proj, b_proj;
};

template <NiceAction A>
SigmaNormal<A> in_sigma_normalize(const A& action, const SDElem<A>& x, const SDElem<A>& y) {
  SigmaNormal<A> r;
  if (!action.grp_eq(x.second, y.second)) return r;
  r.matched = true;
  r.a_proj = {x.first, action.gid()};
  r.b_proj = {y.first, action.gid()};
  return r;
}

// ---- bounded ε-saturation over the tree semilattice ------------------------

using trees::Tree;
using words::Word;

// ε is the least G-invariant semilattice congruence containing the generator
// pairs.  We close within the bound (vertex count ≤ N, vertex length ≤ N):
// translations by generators of T and their inverses, and meets with
// singleton trees, which meet-generate the semilattice.  Meets with arbitrary
// in-bound trees follow stepwise because partial spans stay inside the final
// span.  The stabilization certificate re-runs at N+1 and compares the
// restriction.
class BoundedCongruence {
public:
  int bound = 0;
  bool stabilized = false;

  bool in_bound(const Tree& a) const {
    return a.size() <= static_cast<std::size_t>(bound) &&
           a.max_vertex_len() <= static_cast<std::size_t>(bound);
  }
  bool related(const Tree& a, const Tree& b) const {
    if (a == b) return true;
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return false;
    return find(ia->second) == find(ib->second);
  }
  std::size_t universe_size() const { return items_.size(); }
  const std::vector<Tree>& universe() const { return items_; }
  // class id of a tree, treating unseen trees as singletons keyed by value
  std::optional<std::size_t> class_of(const Tree& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return find(it->second);
  }

  // saturation internals; exposed for the saturation driver and reporting
  std::map<Tree, std::size_t> index_;
  std::vector<Tree> items_;
  mutable std::vector<std::size_t> parent_;

  std::size_t intern(const Tree& a) {
    auto [it, fresh] = index_.emplace(a, items_.size());
    if (fresh) {
      items_.push_back(a);
      parent_.push_back(parent_.size());
    }
    return it->second;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

BoundedCongruence saturate_epsilon(const act::FreeGroupAction& action,
                                   const std::vector<std::pair<Tree, Tree>>& gens, int bound,
                                   const std::vector<Tree>& seeds = {}, bool certify = true);

} // namespace rsg::chain
