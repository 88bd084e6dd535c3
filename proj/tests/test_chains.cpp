#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rsg/chain.hpp"
#include "rsg/sample.hpp"

using namespace rsg;
using act::FreeGroupAction;
using chain::BoundedCongruence;
using chain::Chain;
using chain::ChainLink;
using sd::SDAlgebra;
using sd::SDElem;
using term::Term;
using trees::parse_tree;
using trees::Tree;
using words::Alphabet;
using words::parse_word;
using words::Word;

namespace {
const FreeGroupAction fga{Alphabet::first(2)};
const SDAlgebra<FreeGroupAction> sdalg(fga);
using E = SDElem<FreeGroupAction>;
E mk(const char* tree, const char* word) { return {parse_tree(tree), parse_word(word)}; }
Tree T(const char* s) { return parse_tree(s); }
} // namespace

TEST_CASE("verify_chain") {
  // empty chain asserts equal endpoints
  Chain<FreeGroupAction> empty{mk("{\xce\xb5}", "\xce\xb5"), mk("{\xce\xb5}", "\xce\xb5"), {}};
  CHECK(chain::verify_chain(fga, empty).ok);
  empty.t = mk("{\xce\xb5,a}", "\xce\xb5");
  CHECK_FALSE(chain::verify_chain(fga, empty).ok);

  // single sandwich link with identity constants and c = d = x
  auto x = mk("{\xce\xb5,a}", "a");
  auto one = E{fga.one(), fga.gid()};
  Chain<FreeGroupAction> ch{x, x, {ChainLink<FreeGroupAction>{Term::sandwich(), {one, one}, x, x}}};
  CHECK(chain::verify_chain(fga, ch).ok);

  // planted broken middle equality is reported with its index
  Chain<FreeGroupAction> bad = ch;
  bad.links.push_back(
      ChainLink<FreeGroupAction>{Term::sandwich(), {one, one}, mk("{\xce\xb5,b}", "b"), x});
  auto res = chain::verify_chain(fga, bad);
  CHECK_FALSE(res.ok);
  CHECK(res.index == 1);
}

TEST_CASE("transform_chain preserves endpoints and validity") {
  Pcg32 rng(53);
  auto one = E{fga.one(), fga.gid()};
  for (int i = 0; i < 200; ++i) {
    // one mixed-constant link seeded from a random R-pair
    auto c = sample::random_relem(rng, fga, 4, 3);
    auto d = sample::random_relem(rng, fga, 4, 3);
    std::vector<E> alpha{E{sample::random_ytree(rng, fga.alpha, 4, 3),
                           sample::random_positive_word(rng, fga.alpha, 2)},
                         one};
    Chain<FreeGroupAction> ch;
    ch.links.push_back(ChainLink<FreeGroupAction>{Term::sandwich(), alpha, c, d});
    ch.s = term::eval_term(sdalg, Term::sandwich(), c, alpha);
    ch.t = term::eval_term(sdalg, Term::sandwich(), d, alpha);
    REQUIRE(chain::verify_chain(fga, ch).ok);
    REQUIRE(sd::in_R(fga, ch.s));
    auto tr = chain::transform_chain(fga, ch);
    CHECK(chain::verify_chain(fga, tr).ok);
    CHECK(chain::chain_in_R(fga, tr));
    CHECK(sdalg.equal(tr.s, ch.s));
    CHECK(sdalg.equal(tr.t, ch.t));
  }
  // endpoints outside R are rejected
  Chain<FreeGroupAction> off{mk("{a}", "a"), mk("{a}", "a"), {}};
  CHECK_THROWS_AS(chain::transform_chain(fga, off), domain_error);
}

TEST_CASE("in_sigma_normalize") {
  auto r = chain::in_sigma_normalize(fga, mk("{\xce\xb5,a}", "a"), mk("{\xce\xb5,b,a}", "a"));
  REQUIRE(r.matched);
  CHECK(sdalg.equal(r.a_proj, mk("{\xce\xb5,a}", "\xce\xb5")));
  CHECK(sdalg.equal(r.b_proj, mk("{\xce\xb5,b,a}", "\xce\xb5")));
  CHECK_FALSE(chain::in_sigma_normalize(fga, mk("{\xce\xb5,a}", "a"), mk("{\xce\xb5,b}", "b"))
                  .matched);
  // algebraic replay: (A∧B, a) = (A,1)(B,a)
  auto lhs = sdalg.product(r.a_proj, mk("{\xce\xb5,b,a}", "a"));
  CHECK(sdalg.equal(lhs, E{fga.meet(T("{\xce\xb5,a}"), T("{\xce\xb5,b,a}")), parse_word("a")}));
}

TEST_CASE("saturate_epsilon on a single letter") {
  FreeGroupAction f1{Alphabet::first(1)};
  // generator: 𝟏 ~ {ε,a}; within bound 3 every Y-tree glues onto its
  // a-extensions, and the relation is G-invariant
  auto eps = chain::saturate_epsilon(f1, {{T("{\xce\xb5}"), T("{\xce\xb5,a}")}}, 3);
  CHECK(eps.related(T("{\xce\xb5}"), T("{\xce\xb5,a}")));
  CHECK(eps.related(T("{\xce\xb5}"), T("{\xce\xb5,a,aa}")));
  CHECK(eps.related(T("{a}"), T("{a,aa}"))); // translate of the generator
  CHECK_FALSE(eps.related(T("{\xce\xb5}"), T("{a}")));

  // empty generators: equality, trivially stabilized
  auto none = chain::saturate_epsilon(f1, {}, 3);
  CHECK(none.stabilized);
  CHECK_FALSE(none.related(T("{\xce\xb5}"), T("{\xce\xb5,a}")));
  // equal-tree generator: still equality
  auto same = chain::saturate_epsilon(f1, {{T("{\xce\xb5}"), T("{\xce\xb5}")}}, 3);
  CHECK_FALSE(same.related(T("{\xce\xb5}"), T("{\xce\xb5,a}")));
  // a generator beyond the bound is rejected
  CHECK_THROWS_AS(chain::saturate_epsilon(f1, {{T("{\xce\xb5}"), T("{\xce\xb5,a,aa,aaa}")}}, 3),
                  domain_error);
}

TEST_CASE("saturate_epsilon matches a brute-force fixpoint at small bound") {
  FreeGroupAction f1{Alphabet::first(1)};
  const int N = 4;
  // brute force: enumerate every tree within the bound, then close the
  // relation under meets with all of them and both translations
  std::vector<Tree> universe;
  {
    std::vector<Word> ball;
    for (int k = -N; k <= N; ++k) {
      Word w;
      for (int i = 0; i < std::abs(k); ++i) w.ls.push_back({'a', k < 0});
      if (w.size() <= static_cast<std::size_t>(N)) ball.push_back(w);
    }
    // trees over one letter are intervals [a^-i, a^j]
    for (const Word& lo : ball)
      for (const Word& hi : ball) {
        auto t = trees::span({lo, hi});
        if (t.size() <= static_cast<std::size_t>(N) &&
            t.max_vertex_len() <= static_cast<std::size_t>(N))
          universe.push_back(t);
      }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  }
  auto gens = std::vector<std::pair<Tree, Tree>>{{T("{\xce\xb5}"), T("{\xce\xb5,a}")}};
  auto eps = chain::saturate_epsilon(f1, gens, N, universe);

  std::map<Tree, std::size_t> idx;
  for (std::size_t i = 0; i < universe.size(); ++i) idx[universe[i]] = i;
  std::vector<std::size_t> cls(universe.size());
  std::iota(cls.begin(), cls.end(), 0u);
  auto find = [&](std::size_t x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) cls[std::max(a, b)] = std::min(a, b);
  };
  unite(idx.at(gens[0].first), idx.at(gens[0].second));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if (find(i) != find(j)) continue;
        auto push = [&](const Tree& x, const Tree& y) {
          if (x.size() > static_cast<std::size_t>(N) ||
              y.size() > static_cast<std::size_t>(N))
            return;
          if (x.max_vertex_len() > static_cast<std::size_t>(N) ||
              y.max_vertex_len() > static_cast<std::size_t>(N))
            return;
          auto a = idx.find(x), b = idx.find(y);
          REQUIRE(a != idx.end());
          REQUIRE(b != idx.end());
          if (find(a->second) != find(b->second)) {
            unite(a->second, b->second);
            changed = true;
          }
        };
        for (const Tree& c : universe) push(trees::tree_meet(universe[i], c),
                                            trees::tree_meet(universe[j], c));
        for (bool inv : {false, true}) {
          Word g{{words::Letter{'a', inv}}};
          push(trees::tree_act(g, universe[i]), trees::tree_act(g, universe[j]));
        }
      }
  }
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = 0; j < universe.size(); ++j)
      CHECK(eps.related(universe[i], universe[j]) == (find(i) == find(j)));
}

TEST_CASE("a congruence generated by projection pairs stays inside sigma") {
  // bounded fragment of X⋊Ω* over one letter: the closure of projection pairs
  // never relates elements with different second components
  FreeGroupAction f1{Alphabet::first(1)};
  std::vector<E> frag;
  {
    std::vector<Tree> ts;
    for (const char* t : {"{\xce\xb5}", "{\xce\xb5,a}", "{\xce\xb5,A}", "{\xce\xb5,a,aa}",
                          "{\xce\xb5,a,A}", "{a}", "{a,aa}"})
      ts.push_back(parse_tree(t));
    for (const Tree& t : ts)
      for (const char* w : {"\xce\xb5", "a", "aa"}) frag.push_back({t, parse_word(w)});
  }
  std::map<std::pair<Tree, Word>, std::size_t> idx;
  for (std::size_t i = 0; i < frag.size(); ++i)
    idx.emplace(std::make_pair(frag[i].first, frag[i].second), i);
  SDAlgebra<FreeGroupAction> a1(f1);
  pact::PartialOpsTable tab;
  tab.n = frag.size();
  tab.mul.assign(tab.n * tab.n, std::nullopt);
  tab.plus.assign(tab.n, std::nullopt);
  tab.star.assign(tab.n, std::nullopt);
  auto look = [&](const E& e) -> std::optional<std::size_t> {
    auto it = idx.find(std::make_pair(e.first, e.second));
    if (it == idx.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t i = 0; i < tab.n; ++i) {
    tab.plus[i] = look(a1.plus(frag[i]));
    tab.star[i] = look(a1.star(frag[i]));
    for (std::size_t j = 0; j < tab.n; ++j) tab.mul[i * tab.n + j] = look(a1.product(frag[i], frag[j]));
  }
  // projection pairs: ({ε},ε) ~ ({ε,a},ε) and ({ε},ε) ~ ({ε,A},ε)
  auto p0 = *look({parse_tree("{\xce\xb5}"), Word{}});
  auto p1 = *look({parse_tree("{\xce\xb5,a}"), Word{}});
  auto p2 = *look({parse_tree("{\xce\xb5,A}"), Word{}});
  auto res = pact::bounded_congruence_closure(tab, {{p0, p1}, {p0, p2}});
  for (std::size_t i = 0; i < tab.n; ++i)
    for (std::size_t j = 0; j < tab.n; ++j)
      if (res.related(i, j)) CHECK(frag[i].second == frag[j].second);
}

TEST_CASE("epsilon is G-invariant and order independent within bound") {
  Pcg32 rng(59);
  auto g1 = std::pair<Tree, Tree>{T("{\xce\xb5}"), T("{\xce\xb5,a}")};
  auto g2 = std::pair<Tree, Tree>{T("{\xce\xb5,b}"), T("{\xce\xb5,b,ba}")};
  auto e12 = chain::saturate_epsilon(fga, {g1, g2}, 3);
  auto e21 = chain::saturate_epsilon(fga, {g2, g1}, 3);
  for (int i = 0; i < 2000; ++i) {
    Tree a = sample::random_tree(rng, fga.alpha, 3, 3);
    Tree b = sample::random_tree(rng, fga.alpha, 3, 3);
    CHECK(e12.related(a, b) == e21.related(a, b));
    if (e12.related(a, b)) {
      for (bool inv : {false, true}) {
        Word g{{words::Letter{'a', inv}}};
        Tree ta = trees::tree_act(g, a), tb = trees::tree_act(g, b);
        if (e12.in_bound(ta) && e12.in_bound(tb)) CHECK(e12.related(ta, tb));
      }
    }
  }
}
