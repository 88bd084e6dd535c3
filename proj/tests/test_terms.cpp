#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/sample.hpp"
#include "rsg/term.hpp"

using namespace rsg;
using act::FreeGroupAction;
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
} // namespace

TEST_CASE("tower structure and printing") {
  CHECK(term::build_term(0, true).str() == "(y0 x z0)^+");
  CHECK(term::build_term(1, true).str() == "((y0 x z0)^+ z1)^*");
  CHECK(term::build_term(1, false).str() == "(y1 (y0 x z0)^*)^+");
  CHECK(term::build_term(2, true).str() == "(y2 ((y0 x z0)^+ z1)^*)^+");
  CHECK(term::build_term(2, false).str() == "((y1 (y0 x z0)^*)^+ z2)^*");
  CHECK(term::build_term(3, true).arity() == 5);
  CHECK(Term::sandwich().arity() == 2);
  CHECK(Term::sandwiched(1, true).arity() == 5);
  // class bookkeeping: innermost op never changes along the recursion
  for (int d = 0; d <= 3; ++d) {
    CHECK(term::build_term(d, true).in_plus_class());
    CHECK_FALSE(term::build_term(d, false).in_plus_class());
  }
}

TEST_CASE("term evaluation on simple inputs") {
  auto c = mk("{\xce\xb5,a}", "a");
  auto one = E{fga.one(), fga.gid()};
  // (y0 x z0)^+ with identity constants is c⁺
  auto v = term::eval_term(sdalg, term::build_term(0, true), c, {one, one});
  CHECK(sdalg.equal(v, sdalg.plus(c)));
  CHECK(sdalg.equal(v, mk("{\xce\xb5,a}", "\xce\xb5")));
  // y x z with identity constants is c itself
  auto w = term::eval_term(sdalg, Term::sandwich(), c, {one, one});
  CHECK(sdalg.equal(w, c));
  // arity mismatch
  CHECK_THROWS_AS(term::eval_term(sdalg, term::build_term(1, true), c, {one, one}), domain_error);
}

TEST_CASE("onedir: base cases produce the expected parameters") {
  auto a = mk("{\xce\xb5,a}", "a");
  auto b = mk("{b,ba}", "ba");
  {
    auto p = term::onedir_params(fga, term::build_term(0, true), {a, b});
    CHECK(fga.lat_eq(p.U, a.first));
    CHECK(fga.lat_eq(p.V, b.first));
    CHECK(fga.grp_eq(p.g, a.second));
  }
  {
    auto p = term::onedir_params(fga, term::build_term(0, false), {a, b});
    CHECK(fga.lat_eq(p.U, fga.apply(fga.ginv(b.second), b.first)));
    CHECK(fga.lat_eq(p.V, fga.apply(fga.ginv(a.second), a.first)));
    CHECK(fga.grp_eq(p.g, fga.ginv(b.second)));
  }
}

TEST_CASE("onedir: the normal form holds for towers of depth <= 3") {
  Pcg32 rng(41);
  for (int depth = 0; depth <= 3; ++depth)
    for (bool plus : {true, false}) {
      Term t = term::build_term(depth, plus);
      for (int ai = 0; ai < 30; ++ai) {
        std::vector<E> alpha;
        for (std::size_t k = 0; k < t.arity(); ++k)
          alpha.push_back(sample::random_sd(rng, fga, 5, 4, true));
        auto p = term::onedir_params(fga, t, alpha);
        for (int ci = 0; ci < 20; ++ci) {
          auto c = sample::random_relem(rng, fga, 5, 4);
          auto lhs = term::eval_term(sdalg, t, c, alpha);
          auto rhs = term::onedir_value(fga, t.in_plus_class(), p, c);
          REQUIRE(sdalg.equal(lhs, rhs));
        }
      }
    }
  // constants outside the monoid are rejected
  Term t0 = term::build_term(0, true);
  CHECK_THROWS_AS(term::onedir_params(fga, t0, {mk("{\xce\xb5}", "A"), mk("{\xce\xb5}", "a")}),
                  domain_error);
}

TEST_CASE("yuck: base row for a single positive factor") {
  // n = 1, w ∈ T, variant (+): t = (y0 x z0)^+ with the stated β
  Tree u = parse_tree("{\xce\xb5,a}");
  Tree v = parse_tree("{\xce\xb5}");
  Word g = parse_word("a");
  auto r = term::yuck_construct(fga, u, v, g, true);
  CHECK(r.t == term::build_term(0, true));
  REQUIRE(r.consts.size() == 2);
  CHECK(sdalg.equal(r.consts[0], mk("{\xce\xb5,a}", "a")));
  CHECK(sdalg.equal(r.consts[1], mk("{\xce\xb5}", "\xce\xb5")));
}

TEST_CASE("yuck: both sides agree and β stays in R") {
  // Ω = {a}, U = V = 𝟏, g = a, c = (𝟏, ε): both sides are ({ε,a}, ε)
  {
    Tree one = fga.one();
    auto r = term::yuck_construct(fga, one, one, parse_word("a"), true);
    auto c = mk("{\xce\xb5}", "\xce\xb5");
    auto lhs = term::yuck_value(fga, one, one, parse_word("a"), true, c);
    auto rhs = term::eval_term(sdalg, r.t, c, r.consts);
    CHECK(sdalg.equal(lhs, mk("{\xce\xb5,a}", "\xce\xb5")));
    CHECK(sdalg.equal(lhs, rhs));
  }
  Pcg32 rng(43);
  for (int i = 0; i < 60; ++i)
    for (bool variant : {true, false}) {
      Tree u = sample::random_tree(rng, fga.alpha, 5, 4);
      Tree v = sample::random_tree(rng, fga.alpha, 5, 4);
      Word g = sample::random_reduced_word(rng, fga.alpha, 6);
      auto r = term::yuck_construct(fga, u, v, g, variant);
      CHECK(r.t.in_plus_class() == variant);
      for (const auto& bconst : r.consts) CHECK(sd::in_R(fga, bconst));
      for (int ci = 0; ci < 20; ++ci) {
        auto c = sample::random_relem(rng, fga, 5, 4);
        REQUIRE(sdalg.equal(term::yuck_value(fga, u, v, g, variant, c),
                          term::eval_term(sdalg, r.t, c, r.consts)));
      }
    }
  // a two-block factorization produces a depth-2 tower
  auto r2 = term::yuck_construct(fga, fga.one(), fga.one(), parse_word("aB"), true);
  CHECK(r2.t.depth >= 1);
}

TEST_CASE("two-transform: sandwich case fixes the term and pulls constants down") {
  auto a = mk("{a}", "a");
  auto b = mk("{b}", "b");
  auto r = term::two_transform(fga, Term::sandwich(), {a, b});
  CHECK(r.t == Term::sandwich());
  REQUIRE(r.consts.size() == 2);
  CHECK(sdalg.equal(r.consts[0], sd::down(fga, a)));
  CHECK(sdalg.equal(r.consts[1], sd::down(fga, b)));
  // constants already in R are fixed pointwise
  auto ra = mk("{\xce\xb5,a}", "a");
  auto rr = term::two_transform(fga, Term::sandwich(), {ra, ra});
  CHECK(sdalg.equal(rr.consts[0], ra));
  CHECK(sdalg.equal(rr.consts[1], ra));
}

TEST_CASE("two-transform: down of the evaluation equals the transformed evaluation") {
  Pcg32 rng(47);
  for (int i = 0; i < 150; ++i) {
    Term t;
    if (rng.coin())
      t = Term::sandwich();
    else
      t = Term::sandwiched(static_cast<int>(rng.below(3)), rng.coin());
    std::vector<E> alpha;
    for (std::size_t k = 0; k < t.arity(); ++k)
      alpha.push_back(sample::random_sd(rng, fga, 5, 3, true));
    auto r = term::two_transform(fga, t, alpha);
    CHECK(r.t.shape == t.shape);
    for (const auto& bconst : r.consts) CHECK(sd::in_R(fga, bconst));
    for (int ci = 0; ci < 25; ++ci) {
      auto c = sample::random_relem(rng, fga, 5, 3);
      auto lhs = sd::down(fga, term::eval_term(sdalg, t, c, alpha));
      auto rhs = term::eval_term(sdalg, r.t, c, r.consts);
      REQUIRE(sdalg.equal(lhs, rhs));
    }
  }
  // bare towers are not members of the chain family
  CHECK_THROWS_AS(
      term::two_transform(fga, term::build_term(0, true),
                          {mk("{\xce\xb5}", "\xce\xb5"), mk("{\xce\xb5}", "\xce\xb5")}),
      domain_error);
}
