#pragma once
#include <vector>

#include "rsg/pact.hpp"
#include "rsg/rng.hpp"
#include "rsg/semidirect.hpp"

namespace rsg::sample {

using act::AbelianAction;
using act::FreeGroupAction;
using sd::SDElem;
using trees::MinClosedSet;
using trees::Tree;
using words::Abelian;
using words::Alphabet;
using words::Word;

Word random_reduced_word(Pcg32& rng, const Alphabet& alpha, int maxlen);
Word random_positive_word(Pcg32& rng, const Alphabet& alpha, int maxlen);

// span of a few random reduced words; contains ε when rooted
Tree random_tree(Pcg32& rng, const Alphabet& alpha, int max_vertices, int maxlen);
Tree random_ytree(Pcg32& rng, const Alphabet& alpha, int max_vertices, int maxlen);

// (A, ā) with A ∈ Y and ā uniform among the positive vertices of A
SDElem<FreeGroupAction> random_relem(Pcg32& rng, const FreeGroupAction& act, int max_vertices,
                                     int maxlen);
// arbitrary element of X⋊T (second component positive) or X⋊G
SDElem<FreeGroupAction> random_sd(Pcg32& rng, const FreeGroupAction& act, int max_vertices,
                                  int maxlen, bool monoid_second);

Abelian random_abelian(Pcg32& rng, const Alphabet& alpha, long maxexp);
MinClosedSet random_minclosed(Pcg32& rng, const Alphabet& alpha, int gens, long maxexp);
SDElem<AbelianAction> random_ab_relem(Pcg32& rng, const AbelianAction& act, int gens, long maxexp);

pact::MElem random_melem(Pcg32& rng, const pact::PartialAction& pa, int maxlen);

} // namespace rsg::sample
