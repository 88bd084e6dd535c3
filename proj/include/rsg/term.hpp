#pragma once
#include <string>
#include <vector>

#include "rsg/semidirect.hpp"

namespace rsg::term {

using act::NiceAction;
using sd::SDElem;

// The term family used to drive congruence chains:
//
//   towers   t⁽⁰⁾ = (y₀ x z₀)^±,  t⁽ⁱ⁾ = (yᵢ t⁽ⁱ⁻¹⁾)⁺ or (t⁽ⁱ⁻¹⁾ zᵢ)*
//   sandwich y x z
//   sandwiched tower  y u z  with u a tower
//
// A tower is determined by its innermost operation and depth; the unary
// operations strictly alternate towards the outside.  Towers with innermost +
// form the (+) class, innermost * the (*) class.
//
// Constant slots are ordered: for towers (y₀, z₀, c₁, …, c_d) with c_i the
// level-i constant; a sandwich takes (y, z); a sandwiched tower takes
// (y, z, tower constants…).
struct Term {
  enum class Shape { Sandwich, Tower, SandwichedTower };
  Shape shape = Shape::Sandwich;
  bool base_plus = true; // innermost unary operation, towers only
  int depth = 0;         // tower depth

  bool in_plus_class() const { return base_plus; }
  bool outer_plus() const { return depth % 2 == 0 ? base_plus : !base_plus; }
  std::size_t arity() const {
    switch (shape) {
      case Shape::Sandwich:
        return 2;
      case Shape::Tower:
        return static_cast<std::size_t>(depth) + 2;
      case Shape::SandwichedTower:
        return static_cast<std::size_t>(depth) + 4;
    }
    return 0;
  }
  std::string str() const;

  static Term sandwich() { return {}; }
  static Term tower(int depth, bool innermost_plus) {
    Term t;
    t.shape = Shape::Tower;
    t.base_plus = innermost_plus;
    t.depth = depth;
    return t;
  }
  static Term sandwiched(int depth, bool innermost_plus) {
    Term t = tower(depth, innermost_plus);
    t.shape = Shape::SandwichedTower;
    return t;
  }
  bool operator==(const Term&) const = default;
};

inline Term build_term(int depth, bool innermost_plus) { return Term::tower(depth, innermost_plus); }

inline std::string Term::str() const {
  auto tower_str = [this]() {
    std::string s = base_plus ? "(y0 x z0)^+" : "(y0 x z0)^*";
    for (int i = 1; i <= depth; ++i) {
      bool pl = i % 2 == 0 ? base_plus : !base_plus;
      if (pl)
        s = "(y" + std::to_string(i) + " " + s + ")^+";
      else
        s = "(" + s + " z" + std::to_string(i) + ")^*";
    }
    return s;
  };
  switch (shape) {
    case Shape::Sandwich:
      return "y x z";
    case Shape::Tower:
      return tower_str();
    case Shape::SandwichedTower:
      return "y " + tower_str() + " z";
  }
  return "?";
}

namespace detail {

// op at tower level i (0 = innermost)
inline bool level_plus(const Term& t, int i) { return i % 2 == 0 ? t.base_plus : !t.base_plus; }

template <alg::Restriction A>
typename A::Elem eval_tower(const A& alg, const Term& t, int level, const typename A::Elem& c,
                            const std::vector<typename A::Elem>& consts, std::size_t off) {
  if (level == 0) {
    auto v = alg.product(consts[off], alg.product(c, consts[off + 1]));
    return t.base_plus ? alg.plus(v) : alg.star(v);
  }
  auto inner = eval_tower(alg, t, level - 1, c, consts, off);
  const auto& k = consts[off + 1 + static_cast<std::size_t>(level)];
  return level_plus(t, level) ? alg.plus(alg.product(k, inner))
                              : alg.star(alg.product(inner, k));
}

} // namespace detail

// Structural evaluation of t(c, consts) in any (2,1,1)-algebra.
template <alg::Restriction A>
typename A::Elem eval_term(const A& alg, const Term& t, const typename A::Elem& c,
                           const std::vector<typename A::Elem>& consts) {
  if (consts.size() != t.arity())
    throw domain_error("term arity is " + std::to_string(t.arity()) + " but " +
                       std::to_string(consts.size()) + " constants were given");
  switch (t.shape) {
    case Term::Shape::Sandwich:
      return alg.product(consts[0], alg.product(c, consts[1]));
    case Term::Shape::Tower:
      return detail::eval_tower(alg, t, t.depth, c, consts, 0);
    case Term::Shape::SandwichedTower: {
      std::vector<typename A::Elem> inner(consts.begin() + 2, consts.end());
      Term u = Term::tower(t.depth, t.base_plus);
      auto mid = detail::eval_tower(alg, u, u.depth, c, inner, 0);
      return alg.product(consts[0], alg.product(mid, consts[1]));
    }
  }
  throw error("unreachable");
}

// ---- term transformations over a nice action -------------------------------

template <class A>
struct OnedirParams {
  typename A::Lat U, V;
  typename A::Grp g;
};

// For a tower t and constants α in X⋊T, parameters (U, V, g) with
// t(c, α) = (U ∧ g·C̃ ∧ g c̃·V, 1) for every c ∈ R, where (C̃, c̃) is (C, c̄)
// for the (+) class and (c̄⁻¹·C, c̄⁻¹) for the (*) class.
template <NiceAction A>
OnedirParams<A> onedir_params(const A& act, const Term& t,
                              const std::vector<SDElem<A>>& alpha) {
  if (t.shape != Term::Shape::Tower) throw domain_error("onedir_params expects a tower term");
  if (alpha.size() != t.arity()) throw domain_error("constant vector has wrong arity");
  for (const auto& a : alpha)
    if (!act.in_monoid(a.second))
      throw domain_error("tower constants must lie in X⋊T");
  OnedirParams<A> p;
  const auto& y0 = alpha[0];
  const auto& z0 = alpha[1];
  if (t.base_plus) { // base (y₀ x z₀)⁺: U = A, V = B, g = ā
    p.U = y0.first;
    p.V = z0.first;
    p.g = y0.second;
  } else { // base (y₀ x z₀)*: U = b̄⁻¹·B, V = ā⁻¹·A, g = b̄⁻¹
    p.U = act.apply(act.ginv(z0.second), z0.first);
    p.V = act.apply(act.ginv(y0.second), y0.first);
    p.g = act.ginv(z0.second);
  }
  for (int i = 1; i <= t.depth; ++i) {
    const auto& k = alpha[static_cast<std::size_t>(i) + 1];
    if (detail::level_plus(t, i)) { // (yᵢ t⁽ⁱ⁻¹⁾)⁺: U = A ∧ ā·U', g = ā g'
      p.U = act.meet(k.first, act.apply(k.second, p.U));
      p.g = act.gmul(k.second, p.g);
    } else { // (t⁽ⁱ⁻¹⁾ zᵢ)*: U = ā⁻¹·U' ∧ ā⁻¹·A, g = ā⁻¹ g'
      auto inv = act.ginv(k.second);
      p.U = act.meet(act.apply(inv, p.U), act.apply(inv, k.first));
      p.g = act.gmul(inv, p.g);
    }
  }
  return p;
}

// (C̃, c̃) of the lemma for a given class
template <NiceAction A>
SDElem<A> tilde(const A& act, bool plus_class, const SDElem<A>& c) {
  if (plus_class) return c;
  auto inv = act.ginv(c.second);
  return {act.apply(inv, c.first), inv};
}

// Right-hand side (U ∧ g·C̃ ∧ g c̃·V, 1) of the Onedir identity.
template <NiceAction A>
SDElem<A> onedir_value(const A& act, bool plus_class, const OnedirParams<A>& p,
                       const SDElem<A>& c) {
  auto tc = tilde(act, plus_class, c);
  auto v = act.meet(p.U, act.meet(act.apply(p.g, tc.first),
                                  act.apply(act.gmul(p.g, tc.second), p.V)));
  return {std::move(v), act.gid()};
}

template <class A>
struct TermConsts {
  Term t;
  std::vector<SDElem<A>> consts;
};

// Target of the Yuck construction for sampling: (𝟏 ∧ U ∧ g·C̃ ∧ g c̃·V, 1).
template <NiceAction A>
SDElem<A> yuck_value(const A& act, const typename A::Lat& U, const typename A::Lat& V,
                     const typename A::Grp& g, bool variant_plus, const SDElem<A>& c) {
  auto tc = tilde(act, variant_plus, c);
  auto v = act.meet(act.one(),
                    act.meet(U, act.meet(act.apply(g, tc.first),
                                         act.apply(act.gmul(g, tc.second), V))));
  return {std::move(v), act.gid()};
}

// Builds t in the requested class and β ∈ R★ with
// (𝟏 ∧ U ∧ g·C̃ ∧ g c̃·V, 1) = t(c, β) for all c ∈ R, by induction over a nice
// factorization of g.  The base table handles a single factor; an empty
// factorization degenerates to the first table row with w₁ = 1.
template <NiceAction A>
TermConsts<A> yuck_construct(const A& act, const typename A::Lat& U, const typename A::Lat& V,
                             const typename A::Grp& g, bool variant_plus) {
  using E = SDElem<A>;
  auto fs = act.factorize(g);
  {
    typename A::Grp prod = act.gid();
    for (const auto& w : fs) prod = act.gmul(prod, w);
    if (!act.grp_eq(prod, g))
      throw domain_error("nice factorization unavailable for " + act.grp_str(g));
  }
  const auto one = act.one();
  const auto gid = act.gid();

  // base case for trailing factor w (or w = 1 for an empty factorization)
  auto base = [&](const typename A::Lat& u, const typename A::Grp& w,
                  bool w_in_T) -> TermConsts<A> {
    TermConsts<A> r;
    if (variant_plus) {
      if (w_in_T) { // ((𝟏∧U∧w·𝟏, w) x (𝟏∧V, 1))⁺
        r.t = Term::tower(0, true);
        r.consts = {E{act.meet(one, act.meet(u, act.apply(w, one))), w},
                    E{act.meet(one, V), gid}};
      } else { // ((x (𝟏∧V,1))⁺ (𝟏∧w⁻¹·U∧w⁻¹·𝟏, w⁻¹))*
        auto wi = act.ginv(w);
        r.t = Term::tower(1, true);
        r.consts = {E{one, gid}, E{act.meet(one, V), gid},
                    E{act.meet(one, act.meet(act.apply(wi, u), act.apply(wi, one))), wi}};
      }
    } else {
      if (w_in_T) { // ((𝟏∧U∧w·𝟏, w) ((𝟏∧V,1) x)*)⁺
        r.t = Term::tower(1, false);
        r.consts = {E{act.meet(one, V), gid}, E{one, gid},
                    E{act.meet(one, act.meet(u, act.apply(w, one))), w}};
      } else { // ((𝟏∧V,1) x (𝟏∧w⁻¹·U∧w⁻¹·𝟏, w⁻¹))*
        auto wi = act.ginv(w);
        r.t = Term::tower(0, false);
        r.consts = {E{act.meet(one, V), gid},
                    E{act.meet(one, act.meet(act.apply(wi, u), act.apply(wi, one))), wi}};
      }
    }
    return r;
  };

  // recursive peel of the leading factor
  auto rec = [&](auto&& self, std::size_t i, const typename A::Lat& u) -> TermConsts<A> {
    if (fs.empty()) return base(u, gid, true);
    const auto& w = fs[i];
    bool w_in_T = act.in_monoid(w);
    if (i + 1 == fs.size()) return base(u, w, w_in_T);
    auto sub = self(self, i + 1, act.apply(act.ginv(w), u));
    TermConsts<A> r;
    if (w_in_T) { // t = (yᵢ t')⁺, yᵢ = (𝟏 ∧ w·𝟏, w)
      if (sub.t.outer_plus()) throw error("alternation broken in yuck_construct");
      r.t = Term::tower(sub.t.depth + 1, sub.t.base_plus);
      r.consts = std::move(sub.consts);
      r.consts.push_back(E{act.meet(one, act.apply(w, one)), w});
    } else { // t = (t' zᵢ)*, zᵢ = (𝟏 ∧ w⁻¹·𝟏, w⁻¹)
      if (!sub.t.outer_plus()) throw error("alternation broken in yuck_construct");
      auto wi = act.ginv(w);
      r.t = Term::tower(sub.t.depth + 1, sub.t.base_plus);
      r.consts = std::move(sub.consts);
      r.consts.push_back(E{act.meet(one, act.apply(wi, one)), wi});
    }
    return r;
  };

  auto out = rec(rec, 0, U);
  if (out.t.in_plus_class() != variant_plus)
    throw error("yuck_construct produced a term of the wrong class");
  return out;
}

// Pulldown of a whole term: t' ∈ T and β ∈ R★ with t(c, α)↓ = t'(c, β) for
// all c ∈ R.
template <NiceAction A>
TermConsts<A> two_transform(const A& act, const Term& t, const std::vector<SDElem<A>>& alpha) {
  using E = SDElem<A>;
  if (alpha.size() != t.arity()) throw domain_error("constant vector has wrong arity");
  for (const auto& a : alpha)
    if (!act.in_monoid(a.second)) throw domain_error("chain constants must lie in X⋊T");
  const auto one = act.one();
  const auto gid = act.gid();

  if (t.shape == Term::Shape::Sandwich) {
    // t' = t, β = (y↓, z↓)
    TermConsts<A> r;
    r.t = t;
    r.consts = {sd::down(act, alpha[0]), sd::down(act, alpha[1])};
    return r;
  }
  if (t.shape != Term::Shape::SandwichedTower)
    throw domain_error("two_transform expects a term of the chain family T");

  const E& y = alpha[0];
  const E& z = alpha[1];
  std::vector<E> inner(alpha.begin() + 2, alpha.end());
  Term r_tower = Term::tower(t.depth, t.base_plus);
  auto p = onedir_params(act, r_tower, inner);
  // t(c,α) = (A ∧ ā·U ∧ āg·C̃ ∧ āg c̃·V ∧ ā·B, ā b̄); push 𝟏∧… through Yuck
  auto u_y = act.meet(y.first, act.meet(act.apply(y.second, p.U),
                                        act.apply(y.second, z.first)));
  auto g_y = act.gmul(y.second, p.g);
  auto sub = yuck_construct(act, u_y, p.V, g_y, t.base_plus);

  TermConsts<A> r;
  r.t = Term::sandwiched(sub.t.depth, sub.t.base_plus);
  auto ab = act.gmul(y.second, z.second);
  r.consts = {E{one, gid}, E{act.meet(one, act.apply(ab, one)), ab}};
  r.consts.insert(r.consts.end(), sub.consts.begin(), sub.consts.end());
  return r;
}

} // namespace rsg::term
