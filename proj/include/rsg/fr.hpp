#pragma once
#include <map>
#include <memory>
#include <vector>

#include "rsg/semidirect.hpp"

namespace rsg::fr {

using act::FreeGroupAction;
using sd::SDElem;
using words::Word;

using FRElem = SDElem<FreeGroupAction>;

// Term over the generators of Ω in the (2,1,1) signature.  Decomposition
// produces one of these as a canonical witness; evaluating it back recovers
// the element.
struct GenTerm {
  enum class K { One, Gen, Prod, Plus, Star };
  K k = K::One;
  char letter = 0;              // Gen
  std::vector<GenTerm> kids;    // Prod: exactly 2; Plus/Star: exactly 1

  static GenTerm one() { return {}; }
  static GenTerm gen(char c) {
    GenTerm t;
    t.k = K::Gen;
    t.letter = c;
    return t;
  }
  static GenTerm prod(GenTerm a, GenTerm b);
  static GenTerm plus(GenTerm a);
  static GenTerm star(GenTerm a);
  std::string str() const;
};

// (A, ā) with ε ∈ A, ā positive and ā ∈ A
bool is_fr_element(const FreeGroupAction& act, const FRElem& x);
FRElem fr_generator(const FreeGroupAction& act, char a); // ({ε,a}, a)
FRElem fr_one(const FreeGroupAction& act);

// Canonical generator-term witness: root-at-ε projection term times the word
// term of ā.  Branches are emitted positive letters first, then inverse
// letters, alphabetically.  domain_error on malformed input.
GenTerm fr_decompose(const FreeGroupAction& act, const FRElem& x);

template <alg::Restriction A>
typename A::Elem eval_genterm(const A& alg, const GenTerm& t,
                              const std::map<char, typename A::Elem>& assign,
                              const typename A::Elem& one) {
  switch (t.k) {
    case GenTerm::K::One:
      return one;
    case GenTerm::K::Gen: {
      auto it = assign.find(t.letter);
      if (it == assign.end())
        throw domain_error(std::string("assignment is missing letter '") + t.letter + "'");
      return it->second;
    }
    case GenTerm::K::Prod:
      return alg.product(eval_genterm(alg, t.kids[0], assign, one),
                         eval_genterm(alg, t.kids[1], assign, one));
    case GenTerm::K::Plus:
      return alg.plus(eval_genterm(alg, t.kids[0], assign, one));
    case GenTerm::K::Star:
      return alg.star(eval_genterm(alg, t.kids[0], assign, one));
  }
  throw error("unreachable");
}

// The induced morphism FR(Ω) → target determined by the assignment; goes
// through fr_decompose.
template <alg::Restriction A>
typename A::Elem evaluate_morphism(const FreeGroupAction& act, const FRElem& x, const A& alg,
                                   const std::map<char, typename A::Elem>& assign,
                                   const typename A::Elem& one) {
  return eval_genterm(alg, fr_decompose(act, x), assign, one);
}

} // namespace rsg::fr
