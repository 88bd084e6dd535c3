#include "rsg/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace rsg::cover {

using chain::BoundedCongruence;
using chain::saturate_epsilon;
using words::Letter;
using words::Word;

std::vector<Tree> enumerate_ytrees(const FreeGroupAction& action, int max_vertices) {
  std::set<Tree> all;
  std::set<Tree> level;
  Tree one = action.one();
  all.insert(one);
  level.insert(one);
  for (int k = 2; k <= max_vertices; ++k) {
    std::set<Tree> next;
    for (const Tree& t : level)
      for (const Word& v : t.vs)
        for (char c : action.alpha.letters)
          for (bool inv : {false, true}) {
            Word w = words::gmul(v, Word{{Letter{c, inv}}});
            if (t.contains(w)) continue;
            Tree grown = trees::tree_meet(t, trees::singleton(w));
            if (grown.size() == static_cast<std::size_t>(k)) next.insert(grown);
          }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return {all.begin(), all.end()};
}

namespace {

std::vector<std::array<std::size_t, 3>> exhaustive_triples(const FinAlg& s) {
  std::vector<std::array<std::size_t, 3>> tr;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) tr.push_back({a, b, a});
  return tr;
}

} // namespace

CoverReport build_proper_cover(const FinAlg& s, int bound, bool certify) {
  CoverReport rep;
  rep.bound = bound;

  s.validate();
  auto idrep = alg::check_identities(s, exhaustive_triples(s));
  if (!idrep.all_pass)
    throw instance_error("input is not a restriction semigroup: " + idrep.checks.front().law);

  const bool had_identity = s.identity().has_value();
  FinAlg s1 = alg::adjoin_identity(s);
  const std::size_t one_elem = *s1.identity();

  if (s.size() > 26) throw instance_error("cover pipeline supports at most 26 elements");
  FreeGroupAction fga{words::Alphabet::first(static_cast<int>(s.size()))};
  rep.omega = fga.alpha.letters;
  std::map<char, std::size_t> assign;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = fga.alpha.letters[i];
    assign[c] = i;
    rep.assignment.push_back(std::string(1, c) + " -> " + s1.names[i]);
  }

  // projections (A, 1) of FR(Ω) within bound, and their images under φ
  std::vector<Tree> ytrees = enumerate_ytrees(fga, bound);
  rep.y_trees = ytrees.size();
  std::vector<std::size_t> img(ytrees.size());
  for (std::size_t i = 0; i < ytrees.size(); ++i)
    img[i] = fr::evaluate_morphism(fga, fr::FRElem{ytrees[i], Word{}}, s1, assign, one_elem);

  // ρ_P: pair every projection with the least member of its image class; the
  // hub has the shortest vertices, which keeps translate derivations inside
  // the bound
  std::map<std::size_t, std::vector<std::size_t>> by_img;
  for (std::size_t i = 0; i < ytrees.size(); ++i) by_img[img[i]].push_back(i);
  std::vector<std::pair<Tree, Tree>> gens;
  for (const auto& [v, idxs] : by_img)
    for (std::size_t j = 1; j < idxs.size(); ++j)
      gens.emplace_back(ytrees[idxs[0]], ytrees[idxs[j]]);
  rep.rho_p_pairs = gens.size();

  BoundedCongruence eps = saturate_epsilon(fga, gens, bound, ytrees, false);
  rep.universe_size = eps.universe_size();
  // every tree whose class an emitted check consults; the stabilization
  // certificate re-runs one radius wider and compares exactly these
  std::vector<Tree> touched = ytrees;

  // (b) projection separation: A ε B ⟺ φ(A) = φ(B) on bounded projections
  rep.separation_ok = true;
  for (std::size_t i = 0; i < ytrees.size() && rep.separation_ok; ++i)
    for (std::size_t j = i + 1; j < ytrees.size(); ++j) {
      bool rel = eps.related(ytrees[i], ytrees[j]);
      if (rel != (img[i] == img[j])) {
        rep.separation_ok = false;
        rep.failure = "separation fails at (" + trees::tree_str(ytrees[i]) + ", " +
                      trees::tree_str(ytrees[j]) + ")";
        break;
      }
    }
  {
    std::set<std::size_t> pc;
    for (const Tree& t : ytrees) {
      auto c = eps.class_of(t);
      if (c) pc.insert(*c);
    }
    rep.projection_classes = pc.size();
  }
  // the ρ-class of the identity projection; a singleton is what the
  // identity-free case of the theorem requires
  {
    Tree one = fga.one();
    bool singleton = true;
    for (const Tree& t : ytrees)
      if (!(t == one) && eps.related(t, one)) singleton = false;
    rep.identity_class_singleton = singleton;
    if (!had_identity && !singleton)
      rep.failure = "identity class not a singleton for an identity-free input";
  }

  // bounded R-fragment and its image
  struct Frag {
    Tree a;
    Word w;
    std::size_t cls; // ε-class of a
  };
  std::vector<Frag> frag;
  for (const Tree& t : ytrees)
    for (const Word& v : t.vs)
      if (words::positive(v)) frag.push_back({t, v, *eps.class_of(t)});
  rep.fragment_size = frag.size();

  // least Y-tree of each projection class: canonical representative with
  // small vertex lengths, so its translates stay inside the bound
  std::map<std::size_t, Tree> rep_of;
  for (const Tree& t : ytrees) {
    auto c = eps.class_of(t);
    if (!c) continue;
    auto [it, fresh] = rep_of.emplace(*c, t);
    if (!fresh && t < it->second) it->second = t;
  }
  auto cls_of = [&](const Tree& t) {
    touched.push_back(t);
    return eps.class_of(t);
  };

  // (a) the induced map is a morphism onto its image: operations computed on
  // canonical representatives agree with operations computed on the elements
  // themselves, wherever both stay in bound
  rep.morphism_ok = true;
  for (std::size_t i = 0; i < frag.size() && rep.morphism_ok; ++i) {
    // star route: (A,w)* has first component w⁻¹·A
    const Frag& x = frag[i];
    Tree direct_star = trees::tree_act(words::ginv(x.w), x.a);
    Tree rep_star = trees::tree_act(words::ginv(x.w), rep_of.at(x.cls));
    auto c1 = cls_of(direct_star), c2 = cls_of(rep_star);
    if (c1 && c2) {
      ++rep.morphism_checked;
      if (*c1 != *c2) {
        rep.morphism_ok = false;
        rep.failure = "star is not class-well-defined at " + trees::tree_str(x.a);
        break;
      }
    } else {
      ++rep.morphism_skipped;
    }
    for (std::size_t j = 0; j < frag.size(); ++j) {
      const Frag& y = frag[j];
      Tree direct = trees::tree_meet(x.a, trees::tree_act(x.w, y.a));
      if (!eps.in_bound(direct)) {
        ++rep.morphism_skipped;
        continue;
      }
      Tree via_rep = trees::tree_meet(rep_of.at(x.cls), trees::tree_act(x.w, rep_of.at(y.cls)));
      auto cd = cls_of(direct);
      auto cr = eps.in_bound(via_rep) ? cls_of(via_rep) : std::nullopt;
      if (!cd || !cr) {
        ++rep.morphism_skipped;
        continue;
      }
      ++rep.morphism_checked;
      if (*cd != *cr) {
        rep.morphism_ok = false;
        rep.failure = "product is not class-well-defined at (" + trees::tree_str(x.a) + "," +
                      words::wire(x.w) + ")(" + trees::tree_str(y.a) + "," + words::wire(y.w) +
                      ")";
        break;
      }
    }
  }

  // (c) properness of the image fragment: equal σ (= second components) and
  // equal projections force equality; dually with star classes
  std::map<std::pair<std::size_t, Word>, std::size_t> image; // distinct image elements
  for (const Frag& f : frag) image.emplace(std::make_pair(f.cls, f.w), image.size());
  rep.proper_ok = true;
  for (auto i1 = image.begin(); i1 != image.end() && rep.proper_ok; ++i1)
    for (auto i2 = std::next(i1); i2 != image.end(); ++i2) {
      if (!(i1->first.second == i2->first.second)) continue; // σ: equal seconds
      if (i1->first.first == i2->first.first) continue;      // same image element
      ++rep.proper_checked;
      // plus side: projections are the ε-classes themselves
      // star side: w⁻¹ translates of representatives
      Tree sa = trees::tree_act(words::ginv(i1->first.second), rep_of.at(i1->first.first));
      Tree sb = trees::tree_act(words::ginv(i2->first.second), rep_of.at(i2->first.first));
      auto ca = cls_of(sa), cb = cls_of(sb);
      if (ca && cb && *ca == *cb) {
        rep.proper_ok = false;
        rep.failure = "properness fails: distinct elements share star and sigma";
        break;
      }
    }

  // (d) stabilization: one extra radius of saturation must not change the
  // class of anything the checks above consulted
  if (certify) {
    BoundedCongruence wide = saturate_epsilon(fga, gens, bound + 1, ytrees, false);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    rep.stabilized = true;
    std::map<std::size_t, std::pair<bool, std::size_t>> wide_to_narrow;
    std::size_t fresh_id = eps.universe_size();
    for (const Tree& t : touched) {
      auto wc = wide.class_of(t);
      if (!wc) continue; // unseen on both sides: singleton either way
      auto nc = eps.class_of(t);
      std::pair<bool, std::size_t> narrow_key =
          nc ? std::make_pair(true, *nc) : std::make_pair(false, fresh_id++);
      auto [it, ins] = wide_to_narrow.emplace(*wc, narrow_key);
      if (!ins && it->second != narrow_key) {
        rep.stabilized = false;
        break;
      }
    }
  }

  return rep;
}

std::string CoverReport::to_json_text() const {
  nlohmann::ordered_json j;
  j["omega"] = omega;
  j["assignment"] = assignment;
  j["bound"] = bound;
  j["y_trees"] = y_trees;
  j["rho_p_pairs"] = rho_p_pairs;
  j["projection_classes"] = projection_classes;
  j["fragment_size"] = fragment_size;
  j["universe_size"] = universe_size;
  j["identity_class_singleton"] = identity_class_singleton;
  j["checks"]["morphism"] = morphism_ok;
  j["checks"]["projection_separation"] = separation_ok;
  j["checks"]["proper"] = proper_ok;
  j["checks"]["stabilized"] = stabilized;
  j["morphism_checked"] = morphism_checked;
  j["morphism_skipped"] = morphism_skipped;
  j["proper_checked"] = proper_checked;
  if (!failure.empty()) j["failure"] = failure;
  return j.dump(2);
}

std::string CoverReport::summary() const {
  std::string s;
  s += "cover pipeline over omega=\"" + omega + "\" at bound " + std::to_string(bound) + "\n";
  s += "  projections: " + std::to_string(y_trees) + " trees, " +
       std::to_string(projection_classes) + " classes, " + std::to_string(rho_p_pairs) +
       " generating pairs\n";
  s += "  fragment: " + std::to_string(fragment_size) + " elements, universe " +
       std::to_string(universe_size) + " trees\n";
  auto line = [](const std::string& n, bool ok) {
    return "  [" + std::string(ok ? "PASS" : "FAIL") + "] " + n + "\n";
  };
  s += line("morphism on fragment", morphism_ok);
  s += line("projection separation", separation_ok);
  s += line("properness", proper_ok);
  s += line("stabilized", stabilized);
  if (!failure.empty()) s += "  failure: " + failure + "\n";
  return s;
}

} // namespace rsg::cover
