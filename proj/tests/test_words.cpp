#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/oracles.hpp"
#include "rsg/rng.hpp"
#include "rsg/sample.hpp"
#include "rsg/words.hpp"

using namespace rsg;
using namespace rsg::words;

namespace {
Word W(const char* s) { return parse_word(s); }
std::vector<Letter> L(const char* s) { return parse_letters(s); }
} // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(L("aA")) == W("\xce\xb5"));
  CHECK(reduce(L("abBA")) == W("\xce\xb5"));
  CHECK(reduce(L("aBba")) == W("aa"));
  CHECK(wire(reduce(L("aBba"))) == "aa");
}

TEST_CASE("reduce is idempotent and matches the fixpoint oracle, exhaustively") {
  // all letter sequences of length <= 12 would be 4^12 over two letters; the
  // exhaustive tier runs |Ω| = 1 fully and |Ω| <= 3 by sampling below
  Alphabet one = Alphabet::first(1);
  std::vector<std::vector<Letter>> seqs{{}};
  for (int len = 1; len <= 12; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& s : seqs) {
      if (s.size() != static_cast<std::size_t>(len - 1)) continue;
      for (bool inv : {false, true}) {
        auto t = s;
        t.push_back({'a', inv});
        next.push_back(t);
      }
    }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  for (const auto& s : seqs) {
    Word r = reduce(s);
    CHECK(r == oracle::reduce_fixpoint(s));
    CHECK(reduce(r.ls) == r);
  }
  // random tier over three letters
  Pcg32 rng(7);
  Alphabet abc = Alphabet::first(3);
  for (int i = 0; i < 20000; ++i) {
    std::vector<Letter> s;
    std::size_t len = rng.below(13);
    for (std::size_t j = 0; j < len; ++j)
      s.push_back({abc.letters[rng.below(3)], rng.coin()});
    Word r = reduce(s);
    CHECK(r == oracle::reduce_fixpoint(s));
    CHECK(reduce(r.ls) == r);
  }
}

TEST_CASE("group multiplication and inversion") {
  CHECK(gmul(W("a"), W("A")) == W("\xce\xb5"));
  CHECK(ginv(W("ab")) == W("BA"));
  CHECK(gmul(W("ab"), W("Bc")) == W("ac"));
  // group axioms on random words
  Pcg32 rng(11);
  Alphabet ab = Alphabet::first(2);
  for (int i = 0; i < 2000; ++i) {
    Word x = sample::random_reduced_word(rng, ab, 6);
    Word y = sample::random_reduced_word(rng, ab, 6);
    Word z = sample::random_reduced_word(rng, ab, 6);
    CHECK(gmul(gmul(x, y), z) == gmul(x, gmul(y, z)));
    CHECK(gmul(x, ginv(x)).empty());
    // concatenate-then-reduce oracle
    std::vector<Letter> cat = x.ls;
    cat.insert(cat.end(), y.ls.begin(), y.ls.end());
    CHECK(gmul(x, y) == oracle::reduce_fixpoint(cat));
  }
}

TEST_CASE("alphabet validation") {
  Alphabet ab = Alphabet::first(2);
  CHECK_THROWS_AS(parse_word("abc", &ab), alphabet_error);
  CHECK_THROWS_AS(parse_word("a!b"), parse_error);
  CHECK(parse_word("aB", &ab) == W("aB"));
}

TEST_CASE("nice blocks: maximal alternating sign runs") {
  auto blocks = nice_blocks(W("aBa"));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == W("a"));
  CHECK(blocks[1] == W("B"));
  CHECK(blocks[2] == W("a"));
  CHECK(nice_blocks(W("\xce\xb5")).empty());
  auto b2 = nice_blocks(W("aaB"));
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == W("aa"));
  CHECK(b2[1] == W("B"));

  // blocks are nonempty, alternate, and concatenate back without
  // cancellation; a reduced alternating decomposition must split exactly at
  // the sign changes, so this one is unique.  Exhaustive to length 8.
  Alphabet ab = Alphabet::first(2);
  std::vector<Word> level{Word{}};
  for (int len = 1; len <= 8; ++len) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (char c : ab.letters)
        for (bool inv : {false, true}) {
          Word x = gmul(w, Word{{Letter{c, inv}}});
          if (x.size() == static_cast<std::size_t>(len)) next.push_back(x);
        }
    for (const Word& g : next) {
      auto bs = nice_blocks(g);
      Word back;
      int prev = 0;
      std::size_t total = 0;
      for (const Word& b : bs) {
        REQUIRE(!b.empty());
        bool pos = positive(b);
        bool neg = positive(ginv(b));
        CHECK(pos != neg);
        int sign = pos ? 1 : -1;
        CHECK(sign != prev);
        prev = sign;
        back = gmul(back, b);
        total += b.size();
      }
      CHECK(back == g);
      CHECK(total == g.size()); // no junction cancellation
    }
    level = std::move(next);
  }
}

TEST_CASE("abelian normal form") {
  Abelian g = parse_abelian("x^2 y^-3");
  auto nf = abelian_normal_form(g);
  CHECK(abelian_str(nf.u) == "y^3");
  CHECK(abelian_str(nf.t) == "x^2");
  auto nf0 = abelian_normal_form(Abelian{});
  CHECK(nf0.u.identity());
  CHECK(nf0.t.identity());
  auto nf2 = abelian_normal_form(parse_abelian("XY"));
  CHECK(abelian_str(nf2.u) == "x y");
  CHECK(nf2.t.identity());

  Pcg32 rng(5);
  Alphabet xyz{"xyz"};
  for (int i = 0; i < 10000; ++i) {
    Abelian a = sample::random_abelian(rng, xyz, 5);
    auto n = abelian_normal_form(a);
    CHECK(nonnegative(n.u));
    CHECK(nonnegative(n.t));
    CHECK(amul(ainv(n.u), n.t) == a);
    for (auto [c, k] : n.u.e) CHECK(n.t.exp(c) == 0); // disjoint supports
  }
}

TEST_CASE("abelian parsing round trips") {
  CHECK(parse_abelian("xxY") == parse_abelian("x^2 y^-1"));
  CHECK(parse_abelian("1").identity());
  CHECK(abelian_str(parse_abelian("Y^2 x")) == "x y^-2");
}
