#include "rsg/instances.hpp"

namespace rsg::instances {

using alg::FinAlg;
using pact::PartialAction;
using pact::PartialIso;
using sd::FiniteMonoid;
using sd::FiniteSemilatticeAction;

FinAlg chain_semilattice(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : "e" + std::to_string(i));
  std::vector<std::size_t> meet(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) meet[a * n + b] = std::max(a, b);
  return FinAlg::semilattice(std::move(names), std::move(meet));
}

FinAlg diamond_semilattice() {
  // order: 1 > e, f > 0 with indices 0,1,2,3
  std::vector<std::string> names{"1", "e", "f", "0"};
  auto m = [](std::size_t a, std::size_t b) -> std::size_t {
    if (a == b) return a;
    if (a == 0) return b;
    if (b == 0) return a;
    return 3;
  };
  std::vector<std::size_t> meet(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) meet[a * 4 + b] = m(a, b);
  return FinAlg::semilattice(std::move(names), std::move(meet));
}

FinAlg cyclic_reduced(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  names[0] = "1";
  std::vector<std::size_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FinAlg::reduced_monoid(std::move(names), std::move(mul), 0);
}

FinAlg trivial_monoid() { return cyclic_reduced(1); }

FiniteSemilatticeAction two_chain_z2() {
  FiniteSemilatticeAction a;
  a.Y = chain_semilattice(2);
  a.T = FiniteMonoid{{"1", "s"}, {0, 1, 1, 0}, 0};
  a.action = {{0, 1}, {0, 1}}; // s acts as the identity automorphism
  return a;
}

FiniteSemilatticeAction point_trivial() {
  FiniteSemilatticeAction a;
  a.Y = chain_semilattice(1);
  a.T = FiniteMonoid{{"1"}, {0}, 0};
  a.action = {{0}};
  return a;
}

FiniteSemilatticeAction two_chain_trivial() {
  FiniteSemilatticeAction a;
  a.Y = chain_semilattice(2);
  a.T = FiniteMonoid{{"1"}, {0}, 0};
  a.action = {{0, 1}};
  return a;
}

PartialAction pact_chain2() {
  PartialAction pa;
  pa.Y = chain_semilattice(2); // 1 > e1
  pa.alpha.letters = "a";
  PartialIso p = PartialIso::empty(2);
  p.fwd[1] = 1;
  p.bwd[1] = 1;
  pa.letter['a'] = p;
  pa.validate();
  return pa;
}

PartialAction pact_vee() {
  PartialAction pa;
  pa.Y = diamond_semilattice(); // 1, e, f, 0
  pa.alpha.letters = "ab";
  PartialIso a = PartialIso::empty(4); // ↓e -> ↓f: e ↦ f, 0 ↦ 0
  a.fwd[1] = 2;
  a.bwd[2] = 1;
  a.fwd[3] = 3;
  a.bwd[3] = 3;
  pa.letter['a'] = a;
  PartialIso b = PartialIso::identity(4); // automorphism swapping e and f
  b.fwd[1] = 2;
  b.fwd[2] = 1;
  b.bwd[1] = 2;
  b.bwd[2] = 1;
  pa.letter['b'] = b;
  pa.validate();
  return pa;
}

} // namespace rsg::instances
