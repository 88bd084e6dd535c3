#pragma once
#include "rsg/action.hpp"
#include "rsg/algebra.hpp"

namespace rsg::sd {

using act::NiceAction;

// Element (A, w) of X⋊T or X⋊G in the (a,t) representation.
template <class A>
struct SDElem {
  typename A::Lat first;
  typename A::Grp second;
};

// X⋊G as a (2,1,1)-algebra over a NiceAction; X⋊T is the subset with second
// components in the monoid.  σ is the kernel of the second projection and the
// natural order compares first components at equal second components.
template <NiceAction A>
struct SDAlgebra {
  const A* action;

  using Elem = SDElem<A>;

  explicit SDAlgebra(const A& a) : action(&a) {}

  Elem product(const Elem& x, const Elem& y) const {
    return {action->meet(x.first, action->apply(x.second, y.first)),
            action->gmul(x.second, y.second)};
  }
  Elem plus(const Elem& x) const { return {x.first, action->gid()}; }
  Elem star(const Elem& x) const {
    return {action->apply(action->ginv(x.second), x.first), action->gid()};
  }
  bool equal(const Elem& x, const Elem& y) const {
    return action->lat_eq(x.first, y.first) && action->grp_eq(x.second, y.second);
  }
  std::string str(const Elem& x) const {
    return "(" + action->lat_str(x.first) + ", " + action->grp_str(x.second) + ")";
  }
  Elem one() const { return {action->one(), action->gid()}; }
  bool sigma(const Elem& x, const Elem& y) const {
    return action->grp_eq(x.second, y.second);
  }
  // (A,w) ≤ (B,u) iff A ≤ B and w = u
  bool leq(const Elem& x, const Elem& y) const {
    return sigma(x, y) && action->leq(x.first, y.first);
  }
};

// Membership in R = {(A, w) ∈ Y×T : A ≤ w·𝟏}; domain_error when the second
// component is not in T.
template <NiceAction A>
bool in_R(const A& action, const SDElem<A>& x) {
  if (!action.in_monoid(x.second))
    throw domain_error("in_R: second component " + action.grp_str(x.second) +
                       " is not in the monoid");
  return action.leq(x.first, action.one()) &&
         action.leq(x.first, action.apply(x.second, action.one()));
}

// (A,w)↓ = (𝟏 ∧ A ∧ w·𝟏, w): the maximum element of R below (A, w).
template <NiceAction A>
SDElem<A> down(const A& action, const SDElem<A>& x) {
  if (!action.in_monoid(x.second))
    throw domain_error("down: second component " + action.grp_str(x.second) +
                       " is not in the monoid");
  auto f = action.meet(action.one(), action.meet(x.first, action.apply(x.second, action.one())));
  return {std::move(f), x.second};
}

} // namespace rsg::sd
