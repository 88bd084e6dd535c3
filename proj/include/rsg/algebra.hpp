#pragma once
#include <array>
#include <concepts>
#include <string>
#include <vector>

#include "rsg/errors.hpp"

namespace rsg::alg {

// The (2,1,1) signature every instance in the library exposes: a product and
// the two unary operations, with decidable equality and printing.
template <class A>
concept Restriction = requires(const A& alg, const typename A::Elem& x, const typename A::Elem& y) {
  { alg.product(x, y) } -> std::convertible_to<typename A::Elem>;
  { alg.plus(x) } -> std::convertible_to<typename A::Elem>;
  { alg.star(x) } -> std::convertible_to<typename A::Elem>;
  { alg.equal(x, y) } -> std::convertible_to<bool>;
  { alg.str(x) } -> std::convertible_to<std::string>;
};

// a ≤ b iff a = a⁺b
template <Restriction A>
bool natural_leq(const A& alg, const typename A::Elem& a, const typename A::Elem& b) {
  return alg.equal(a, alg.product(alg.plus(a), b));
}

struct IdentityCheck {
  std::string law;
  bool pass = true;
  std::string witness; // set on first failure
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
  std::size_t samples = 0;
};

// The ten defining identity schemata: the left restriction identities, their
// right duals, and the two linking identities.  Failures are recorded with a
// witness, never thrown.
template <Restriction A>
IdentityReport check_identities(const A& alg,
                                const std::vector<std::array<typename A::Elem, 3>>& triples) {
  using E = typename A::Elem;
  IdentityReport rep;
  rep.samples = triples.size();
  auto law = [&](const std::string& name, auto&& fn) {
    IdentityCheck c{name, true, ""};
    for (const auto& tr : triples) {
      const E &x = tr[0], &y = tr[1];
      E lhs = fn(x, y, true), rhs = fn(x, y, false);
      if (!alg.equal(lhs, rhs)) {
        c.pass = false;
        c.witness = "x=" + alg.str(x) + ", y=" + alg.str(y) + ": " + alg.str(lhs) +
                    " != " + alg.str(rhs);
        break;
      }
    }
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(std::move(c));
  };
  auto P = [&](const E& a, const E& b) { return alg.product(a, b); };
  auto pl = [&](const E& a) { return alg.plus(a); };
  auto st = [&](const E& a) { return alg.star(a); };

  law("x+ x = x", [&](const E& x, const E&, bool l) { return l ? P(pl(x), x) : x; });
  law("x+ y+ = y+ x+",
      [&](const E& x, const E& y, bool l) { return l ? P(pl(x), pl(y)) : P(pl(y), pl(x)); });
  law("(x+ y)+ = x+ y+",
      [&](const E& x, const E& y, bool l) { return l ? pl(P(pl(x), y)) : P(pl(x), pl(y)); });
  law("x y+ = (x y)+ x",
      [&](const E& x, const E& y, bool l) { return l ? P(x, pl(y)) : P(pl(P(x, y)), x); });
  law("x x* = x", [&](const E& x, const E&, bool l) { return l ? P(x, st(x)) : x; });
  law("x* y* = y* x*",
      [&](const E& x, const E& y, bool l) { return l ? P(st(x), st(y)) : P(st(y), st(x)); });
  law("(x y*)* = x* y*",
      [&](const E& x, const E& y, bool l) { return l ? st(P(x, st(y))) : P(st(x), st(y)); });
  law("x* y = y (x y)*",
      [&](const E& x, const E& y, bool l) { return l ? P(st(x), y) : P(y, st(P(x, y))); });
  law("(x+)* = x+", [&](const E& x, const E&, bool l) { return l ? st(pl(x)) : pl(x); });
  law("(x*)+ = x*", [&](const E& x, const E&, bool l) { return l ? pl(st(x)) : st(x); });
  return rep;
}

} // namespace rsg::alg
