#pragma once
#include "rsg/finalg.hpp"
#include "rsg/pact.hpp"
#include "rsg/sdfinite.hpp"

// Small concrete instances shared by the unit tests, the property suites and
// the data files.
namespace rsg::instances {

// n-element chain semilattice 1 > e1 > ... (index 0 is the top)
alg::FinAlg chain_semilattice(std::size_t n);

// {1, e, f, 0} with e, f incomparable
alg::FinAlg diamond_semilattice();

// cyclic group of order n as a reduced restriction monoid
alg::FinAlg cyclic_reduced(std::size_t n);

// trivial monoid
alg::FinAlg trivial_monoid();

// Y = 2-chain, T = Z2 acting trivially
sd::FiniteSemilatticeAction two_chain_z2();

// Y = one point, T = trivial
sd::FiniteSemilatticeAction point_trivial();

// Y = 2-chain, T = trivial
sd::FiniteSemilatticeAction two_chain_trivial();

// partial action instances
pact::PartialAction pact_chain2(); // Y = {1>e}, Ω = {a}, α_a = id on {e}
// Y = {1, e, f, 0}, Ω = {a, b}: α_a maps ↓e to ↓f, α_b swaps e and f
pact::PartialAction pact_vee();

} // namespace rsg::instances
