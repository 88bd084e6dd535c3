#pragma once
#include <concepts>
#include <string>
#include <vector>

#include "rsg/tree.hpp"

namespace rsg::act {

using words::Abelian;
using words::Alphabet;
using words::Word;

// A monoid T inside a group G acting on a semilattice X by automorphisms,
// together with a distinguished identity 𝟏 of the principal ideal Y and a
// factorization map producing alternating factorizations in T ∪ T⁻¹.
template <class A>
concept NiceAction = requires(const A& act, const typename A::Lat& x, const typename A::Grp& g) {
  { act.one() } -> std::convertible_to<typename A::Lat>;
  { act.meet(x, x) } -> std::convertible_to<typename A::Lat>;
  { act.leq(x, x) } -> std::convertible_to<bool>;
  { act.lat_eq(x, x) } -> std::convertible_to<bool>;
  { act.lat_str(x) } -> std::convertible_to<std::string>;
  { act.apply(g, x) } -> std::convertible_to<typename A::Lat>;
  { act.gid() } -> std::convertible_to<typename A::Grp>;
  { act.gmul(g, g) } -> std::convertible_to<typename A::Grp>;
  { act.ginv(g) } -> std::convertible_to<typename A::Grp>;
  { act.grp_eq(g, g) } -> std::convertible_to<bool>;
  { act.grp_str(g) } -> std::convertible_to<std::string>;
  { act.in_monoid(g) } -> std::convertible_to<bool>;
  { act.factorize(g) } -> std::convertible_to<std::vector<typename A::Grp>>;
};

// Ω* inside FG(Ω) acting on the semilattice of Cayley subtrees by left
// translation.  factorize returns the unique reduced alternating block
// factorization, which is nice here.
struct FreeGroupAction {
  Alphabet alpha;

  using Lat = trees::Tree;
  using Grp = Word;

  Lat one() const { return trees::singleton(Word{}); }
  Lat meet(const Lat& a, const Lat& b) const { return trees::tree_meet(a, b); }
  bool leq(const Lat& a, const Lat& b) const { return trees::tree_leq(a, b); }
  bool lat_eq(const Lat& a, const Lat& b) const { return a == b; }
  std::string lat_str(const Lat& a) const { return trees::tree_str(a); }
  Lat apply(const Grp& g, const Lat& a) const { return trees::tree_act(g, a); }
  Grp gid() const { return Word{}; }
  Grp gmul(const Grp& a, const Grp& b) const { return words::gmul(a, b); }
  Grp ginv(const Grp& a) const { return words::ginv(a); }
  bool grp_eq(const Grp& a, const Grp& b) const { return a == b; }
  std::string grp_str(const Grp& g) const { return words::wire(g); }
  bool in_monoid(const Grp& g) const { return words::positive(g); }
  std::vector<Grp> factorize(const Grp& g) const { return words::nice_blocks(g); }
};

// Free commutative monoid inside the free abelian group acting on min-closed
// sets by translation.  factorize returns g = u⁻¹·t.
struct AbelianAction {
  Alphabet alpha;

  using Lat = trees::MinClosedSet;
  using Grp = Abelian;

  Lat one() const { return trees::MinClosedSet{{Abelian{}}}; }
  Lat meet(const Lat& a, const Lat& b) const { return trees::mc_meet(a, b); }
  bool leq(const Lat& a, const Lat& b) const { return trees::mc_leq(a, b); }
  bool lat_eq(const Lat& a, const Lat& b) const { return a == b; }
  std::string lat_str(const Lat& a) const { return trees::mc_str(a); }
  Lat apply(const Grp& g, const Lat& a) const { return trees::mc_act(g, a); }
  Grp gid() const { return Abelian{}; }
  Grp gmul(const Grp& a, const Grp& b) const { return words::amul(a, b); }
  Grp ginv(const Grp& a) const { return words::ainv(a); }
  bool grp_eq(const Grp& a, const Grp& b) const { return a == b; }
  std::string grp_str(const Grp& g) const { return words::abelian_str(g); }
  bool in_monoid(const Grp& g) const { return words::nonnegative(g); }
  std::vector<Grp> factorize(const Grp& g) const {
    auto nf = words::abelian_normal_form(g);
    std::vector<Grp> fs;
    if (!nf.u.identity()) fs.push_back(words::ainv(nf.u));
    if (!nf.t.identity()) fs.push_back(nf.t);
    return fs;
  }
};

// Checks the factorization returned by the instance against the definition:
// alternating in T ∪ T⁻¹, multiplying back to g, and w_i·𝟏 ≥ 𝟏 ∧ w_i⋯w_n·𝟏
// for every i < n.  A factorization that fails to multiply back to g is an
// integrity error, not a false result.
template <NiceAction A>
bool verify_nice_factorization(const A& act, const typename A::Grp& g, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto fs = act.factorize(g);
  typename A::Grp prod = act.gid();
  for (const auto& w : fs) prod = act.gmul(prod, w);
  if (!act.grp_eq(prod, g))
    throw domain_error("factorization does not multiply back to its argument: " +
                       act.grp_str(g));
  int prev_sign = 0;
  for (const auto& w : fs) {
    if (act.grp_eq(w, act.gid())) return fail("identity factor");
    bool pos = act.in_monoid(w), neg = act.in_monoid(act.ginv(w));
    if (!pos && !neg) return fail("factor " + act.grp_str(w) + " is not in T or T^-1");
    int sign = pos ? 1 : -1;
    if (sign == prev_sign) return fail("signs do not alternate at " + act.grp_str(w));
    prev_sign = sign;
  }
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    typename A::Grp suffix = act.gid();
    for (std::size_t j = i; j < fs.size(); ++j) suffix = act.gmul(suffix, fs[j]);
    auto lhs = act.meet(act.one(), act.apply(suffix, act.one()));
    auto rhs = act.apply(fs[i], act.one());
    if (!act.leq(lhs, rhs))
      return fail("w_i·1 >= 1 ∧ w_i···w_n·1 fails at factor " + std::to_string(i + 1));
  }
  return true;
}

} // namespace rsg::act
