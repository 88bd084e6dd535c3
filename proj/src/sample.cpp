#include "rsg/sample.hpp"

namespace rsg::sample {

using words::Letter;

Word random_reduced_word(Pcg32& rng, const Alphabet& alpha, int maxlen) {
  std::size_t len = rng.below(static_cast<std::size_t>(maxlen) + 1);
  Word w;
  while (w.size() < len) {
    Letter l{alpha.letters[rng.below(alpha.letters.size())], rng.coin()};
    if (!w.ls.empty() && w.ls.back() == words::inverse(l)) continue;
    w.ls.push_back(l);
  }
  return w;
}

Word random_positive_word(Pcg32& rng, const Alphabet& alpha, int maxlen) {
  std::size_t len = rng.below(static_cast<std::size_t>(maxlen) + 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.ls.push_back(Letter{alpha.letters[rng.below(alpha.letters.size())], false});
  return w;
}

Tree random_tree(Pcg32& rng, const Alphabet& alpha, int max_vertices, int maxlen) {
  std::vector<Word> gens;
  std::size_t k = 1 + rng.below(static_cast<std::size_t>(max_vertices));
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_reduced_word(rng, alpha, maxlen));
  return trees::span(std::move(gens));
}

Tree random_ytree(Pcg32& rng, const Alphabet& alpha, int max_vertices, int maxlen) {
  std::vector<Word> gens{Word{}};
  std::size_t k = rng.below(static_cast<std::size_t>(max_vertices));
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_reduced_word(rng, alpha, maxlen));
  return trees::span(std::move(gens));
}

SDElem<FreeGroupAction> random_relem(Pcg32& rng, const FreeGroupAction& act, int max_vertices,
                                     int maxlen) {
  Tree a = random_ytree(rng, act.alpha, max_vertices, maxlen);
  std::vector<Word> pos;
  for (const Word& v : a.vs)
    if (words::positive(v)) pos.push_back(v);
  return {a, pos[rng.below(pos.size())]}; // ε is always positive
}

SDElem<FreeGroupAction> random_sd(Pcg32& rng, const FreeGroupAction& act, int max_vertices,
                                  int maxlen, bool monoid_second) {
  Tree a = random_tree(rng, act.alpha, max_vertices, maxlen);
  Word w = monoid_second ? random_positive_word(rng, act.alpha, maxlen)
                         : random_reduced_word(rng, act.alpha, maxlen);
  return {a, w};
}

Abelian random_abelian(Pcg32& rng, const Alphabet& alpha, long maxexp) {
  Abelian a;
  for (char c : alpha.letters) {
    long v = static_cast<long>(rng.below(static_cast<std::size_t>(2 * maxexp + 1))) - maxexp;
    if (v != 0) a.e[c] = v;
  }
  return a;
}

MinClosedSet random_minclosed(Pcg32& rng, const Alphabet& alpha, int gens, long maxexp) {
  std::vector<Abelian> xs;
  std::size_t k = 1 + rng.below(static_cast<std::size_t>(gens));
  for (std::size_t i = 0; i < k; ++i) xs.push_back(random_abelian(rng, alpha, maxexp));
  return trees::minclosed_span(std::move(xs));
}

SDElem<AbelianAction> random_ab_relem(Pcg32& rng, const AbelianAction& act, int gens,
                                      long maxexp) {
  // force the set into Y and pick a nonnegative member as second component
  std::vector<Abelian> xs{Abelian{}};
  std::size_t k = rng.below(static_cast<std::size_t>(gens));
  for (std::size_t i = 0; i < k; ++i) xs.push_back(random_abelian(rng, act.alpha, maxexp));
  auto a = trees::minclosed_span(std::move(xs));
  std::vector<Abelian> pos;
  for (const Abelian& x : a.es)
    if (words::nonnegative(x)) pos.push_back(x);
  return {a, pos[rng.below(pos.size())]};
}

pact::MElem random_melem(Pcg32& rng, const pact::PartialAction& pa, int maxlen) {
  for (;;) {
    Word t = random_positive_word(rng, pa.alpha, maxlen);
    auto ran = pa.iso_for(t).range();
    if (ran.empty()) continue;
    return {ran[rng.below(ran.size())], t};
  }
}

} // namespace rsg::sample
