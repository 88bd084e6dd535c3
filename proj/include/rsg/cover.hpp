#pragma once
#include <string>
#include <vector>

#include "rsg/chain.hpp"
#include "rsg/finalg.hpp"
#include "rsg/fr.hpp"

namespace rsg::cover {

using act::FreeGroupAction;
using alg::FinAlg;
using trees::Tree;

// Outcome of the proper-cover pipeline at a finite bound.  The quotient
// fragment is bounded, so every check is reported together with how much of
// the fragment it could actually decide; stabilization certifies that one
// more radius of saturation would not have changed the relation in bound.
struct CoverReport {
  std::string omega;                    // one letter per element of S
  std::vector<std::string> assignment;  // "a -> name"
  int bound = 0;

  std::size_t y_trees = 0;          // projections (A,1) with |A| ≤ bound
  std::size_t rho_p_pairs = 0;      // generating pairs of ρ_P
  std::size_t projection_classes = 0;
  std::size_t fragment_size = 0;    // R-elements within bound
  std::size_t universe_size = 0;    // trees touched by the saturation

  bool identity_class_singleton = false;
  bool morphism_ok = false;    // (a)
  bool separation_ok = false;  // (b)
  bool proper_ok = false;      // (c)
  bool stabilized = false;     // (d)
  std::size_t morphism_checked = 0, morphism_skipped = 0;
  std::size_t proper_checked = 0;
  std::string failure;

  bool all_ok() const { return morphism_ok && separation_ok && proper_ok && stabilized; }
  std::string to_json_text() const;
  std::string summary() const;
};

// All trees containing ε with at most `max_vertices` vertices.
std::vector<Tree> enumerate_ytrees(const FreeGroupAction& action, int max_vertices);

// Proper-cover pipeline at desk scale: Ω gets one letter per element of S,
// ρ_P is the kernel of the evaluation morphism restricted to bounded
// projections, ε is saturated within the bound, and the bounded image
// fragment of (X/ε)⋊Ω* is checked.  instance_error when S is not a
// restriction semigroup.
CoverReport build_proper_cover(const FinAlg& s, int bound, bool certify = true);

} // namespace rsg::cover
