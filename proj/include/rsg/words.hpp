#pragma once
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rsg/errors.hpp"

namespace rsg::words {

// Finite generator alphabet.  Wire syntax: a lowercase letter is a generator,
// the corresponding uppercase letter its inverse, so "aB" reads a·b⁻¹.
struct Alphabet {
  std::string letters; // distinct lowercase symbols, sorted

  bool contains(char c) const { return letters.find(c) != std::string::npos; }
  void require(char c) const;
  static Alphabet first(int k); // {'a','b',...,k letters}
};

struct Letter {
  char sym = 'a';
  bool inv = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.sym, !l.inv}; }

// Reduced word over Ω ∪ Ω⁻¹.  All functions below preserve reducedness;
// shortlex ordering makes words canonical container keys.
struct Word {
  std::vector<Letter> ls;

  std::size_t size() const { return ls.size(); }
  bool empty() const { return ls.empty(); }
  bool operator==(const Word&) const = default;
  std::weak_ordering operator<=>(const Word& o) const;
};

bool is_reduced(const std::vector<Letter>& raw);
Word reduce(const std::vector<Letter>& raw);
Word gmul(const Word& a, const Word& b);
Word ginv(const Word& a);
bool positive(const Word& w);

// Maximal sign-run blocks of a reduced word; blocks are nonempty and strictly
// alternate between all-positive and all-negative.
std::vector<Word> nice_blocks(const Word& g);

std::vector<Letter> parse_letters(std::string_view s, const Alphabet* alpha = nullptr);
Word parse_word(std::string_view s, const Alphabet* alpha = nullptr); // reduces
std::string wire(const Word& w);    // machine form: "aB", "ε" for the identity
std::string display(const Word& w); // human form: "ab⁻¹"

// Free abelian group element as a sparse exponent vector; no zero exponents
// are stored.
struct Abelian {
  std::map<char, long> e;

  bool identity() const { return e.empty(); }
  long exp(char c) const {
    auto it = e.find(c);
    return it == e.end() ? 0 : it->second;
  }
  bool operator==(const Abelian&) const = default;
  bool operator<(const Abelian& o) const;
};

Abelian amul(const Abelian&, const Abelian&);
Abelian ainv(const Abelian&);
Abelian amin(const Abelian&, const Abelian&); // coordinatewise minimum
bool nonnegative(const Abelian&);
Abelian abelian_of(const Word&);
Abelian parse_abelian(std::string_view s, const Alphabet* alpha = nullptr);
std::string abelian_str(const Abelian&); // "x^2 y^-3", "1" for the identity

// g = u⁻¹ t with u, t nonnegative of disjoint support
struct AbelianNF {
  Abelian u, t;
};
AbelianNF abelian_normal_form(const Abelian& g);

} // namespace rsg::words
