#pragma once
#include <utility>
#include <vector>

#include "rsg/finalg.hpp"

namespace rsg::sd {

// Finite monoid with a multiplication table.
struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::size_t> mul; // row-major
  std::size_t id = 0;

  std::size_t size() const { return names.size(); }
  std::size_t product(std::size_t a, std::size_t b) const { return mul[a * size() + b]; }
};

// Finite semilattice Y with a finite monoid T acting by automorphisms.
struct FiniteSemilatticeAction {
  alg::FinAlg Y; // semilattice algebra: plus = star = identity map
  FiniteMonoid T;
  std::vector<std::vector<std::size_t>> action; // action[t][y]

  void validate() const; // instance_error on failure
  std::size_t act(std::size_t t, std::size_t y) const { return action[t][y]; }
  std::size_t act_inv(std::size_t t, std::size_t y) const; // α_t is a bijection
};

// carrier index of (y, t) in the product algebra below
inline std::size_t sd_index(const FiniteSemilatticeAction& a, std::size_t y, std::size_t t) {
  return y * a.T.size() + t;
}

// Y⋊T as an explicit finite (2,1,1)-algebra.
alg::FinAlg semidirect_finite(const FiniteSemilatticeAction& a);

// The factorisable completion: Y^e with trivial action on the new identity,
// ρ_e = ρ ∪ equality on U, F = (Y^e⋊T)/ρ_e.
struct AdjoinResult {
  FiniteSemilatticeAction extended; // action on Y^e; the new top is index |Y|
  alg::FinAlg old_product;          // Y⋊T
  alg::FinAlg product;              // Y^e⋊T
  alg::Congruence rho;              // on Y⋊T, generated by the given pairs
  alg::Congruence rho_e;            // on Y^e⋊T
  alg::FinAlg F;                    // (Y^e⋊T)/ρ_e
  std::vector<std::size_t> old_to_F;   // (y,t)-index in Y⋊T -> element of F
  std::vector<std::size_t> unit_elems; // U(F) inside F
};

AdjoinResult adjoin_identity_new(const FiniteSemilatticeAction& a,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& rho_pairs);

} // namespace rsg::sd
