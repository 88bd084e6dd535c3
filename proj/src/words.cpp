#include "rsg/words.hpp"

#include <algorithm>
#include <cctype>

namespace rsg::words {

void Alphabet::require(char c) const {
  if (!contains(c))
    throw alphabet_error(std::string("symbol '") + c + "' is not in the declared alphabet \"" +
                         letters + "\"");
}

Alphabet Alphabet::first(int k) {
  Alphabet a;
  for (int i = 0; i < k; ++i) a.letters.push_back(static_cast<char>('a' + i));
  return a;
}

std::weak_ordering Word::operator<=>(const Word& o) const {
  if (ls.size() != o.ls.size()) return ls.size() <=> o.ls.size();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (auto c = ls[i] <=> o.ls[i]; c != 0) return c;
  return std::weak_ordering::equivalent;
}

bool is_reduced(const std::vector<Letter>& raw) {
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i].sym == raw[i + 1].sym && raw[i].inv != raw[i + 1].inv) return false;
  return true;
}

Word reduce(const std::vector<Letter>& raw) {
  Word w;
  w.ls.reserve(raw.size());
  for (Letter l : raw) {
    if (!w.ls.empty() && w.ls.back().sym == l.sym && w.ls.back().inv != l.inv)
      w.ls.pop_back();
    else
      w.ls.push_back(l);
  }
  return w;
}

Word gmul(const Word& a, const Word& b) {
  // both inputs reduced: cancellation can only happen at the junction
  std::size_t i = 0;
  std::size_t keep = a.size();
  while (keep > 0 && i < b.size() && a.ls[keep - 1].sym == b.ls[i].sym &&
         a.ls[keep - 1].inv != b.ls[i].inv) {
    --keep;
    ++i;
  }
  Word r;
  r.ls.reserve(keep + b.size() - i);
  r.ls.assign(a.ls.begin(), a.ls.begin() + static_cast<long>(keep));
  r.ls.insert(r.ls.end(), b.ls.begin() + static_cast<long>(i), b.ls.end());
  return r;
}

Word ginv(const Word& a) {
  Word r;
  r.ls.reserve(a.size());
  for (auto it = a.ls.rbegin(); it != a.ls.rend(); ++it) r.ls.push_back(inverse(*it));
  return r;
}

bool positive(const Word& w) {
  return std::all_of(w.ls.begin(), w.ls.end(), [](Letter l) { return !l.inv; });
}

std::vector<Word> nice_blocks(const Word& g) {
  std::vector<Word> out;
  for (Letter l : g.ls) {
    if (out.empty() || out.back().ls.back().inv != l.inv) out.emplace_back();
    out.back().ls.push_back(l);
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view s, const Alphabet* alpha) {
  std::vector<Letter> out;
  if (s == "\xce\xb5" || s == "1") return out; // ε or 1
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) continue;
    if (std::islower(c)) {
      if (alpha) alpha->require(static_cast<char>(c));
      out.push_back({static_cast<char>(c), false});
    } else if (std::isupper(c)) {
      char low = static_cast<char>(std::tolower(c));
      if (alpha) alpha->require(low);
      out.push_back({low, true});
    } else {
      throw parse_error("unexpected character '" + std::string(1, s[i]) + "' at position " +
                        std::to_string(i) + " in word \"" + std::string(s) + "\"");
    }
  }
  return out;
}

Word parse_word(std::string_view s, const Alphabet* alpha) {
  return reduce(parse_letters(s, alpha));
}

std::string wire(const Word& w) {
  if (w.empty()) return "\xce\xb5";
  std::string s;
  for (Letter l : w.ls)
    s.push_back(l.inv ? static_cast<char>(std::toupper(static_cast<unsigned char>(l.sym)))
                      : l.sym);
  return s;
}

std::string display(const Word& w) {
  if (w.empty()) return "\xce\xb5";
  std::string s;
  for (Letter l : w.ls) {
    s.push_back(l.sym);
    if (l.inv) s += "\xe2\x81\xbb\xc2\xb9"; // ⁻¹
  }
  return s;
}

bool Abelian::operator<(const Abelian& o) const {
  return std::lexicographical_compare(e.begin(), e.end(), o.e.begin(), o.e.end());
}

Abelian amul(const Abelian& a, const Abelian& b) {
  Abelian r = a;
  for (auto [c, k] : b.e) {
    long v = r.exp(c) + k;
    if (v == 0)
      r.e.erase(c);
    else
      r.e[c] = v;
  }
  return r;
}

Abelian ainv(const Abelian& a) {
  Abelian r;
  for (auto [c, k] : a.e) r.e[c] = -k;
  return r;
}

Abelian amin(const Abelian& a, const Abelian& b) {
  Abelian r;
  for (auto [c, k] : a.e) {
    long v = std::min(k, b.exp(c));
    if (v != 0) r.e[c] = v;
  }
  for (auto [c, k] : b.e) {
    long v = std::min(k, a.exp(c));
    if (v != 0) r.e[c] = v;
  }
  return r;
}

bool nonnegative(const Abelian& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](auto p) { return p.second >= 0; });
}

Abelian abelian_of(const Word& w) {
  Abelian r;
  for (Letter l : w.ls) {
    long v = r.exp(l.sym) + (l.inv ? -1 : 1);
    if (v == 0)
      r.e.erase(l.sym);
    else
      r.e[l.sym] = v;
  }
  return r;
}

Abelian parse_abelian(std::string_view s, const Alphabet* alpha) {
  // accepts the word form "xxY" and the power form "x^2 y^-1"
  if (s == "\xce\xb5" || s == "1") return {};
  Abelian r;
  std::size_t i = 0;
  auto flush = [&](char sym, long k) {
    if (alpha) alpha->require(sym);
    long v = r.exp(sym) + k;
    if (v == 0)
      r.e.erase(sym);
    else
      r.e[sym] = v;
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c) || c == '*') {
      ++i;
      continue;
    }
    bool up = std::isupper(c) != 0;
    if (!std::isalpha(c))
      throw parse_error("unexpected character '" + std::string(1, s[i]) + "' in \"" +
                        std::string(s) + "\"");
    char sym = static_cast<char>(std::tolower(c));
    ++i;
    long k = up ? -1 : 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("expected exponent after '^' in \"" + std::string(s) + "\"");
      long mag = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        mag = mag * 10 + (s[i++] - '0');
      k = (up != neg) ? -mag : mag; // uppercase flips the sign once more
    }
    flush(sym, k);
  }
  return r;
}

std::string abelian_str(const Abelian& a) {
  if (a.identity()) return "1";
  std::string s;
  for (auto [c, k] : a.e) {
    if (!s.empty()) s += ' ';
    s.push_back(c);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

AbelianNF abelian_normal_form(const Abelian& g) {
  AbelianNF nf;
  for (auto [c, k] : g.e) {
    if (k > 0)
      nf.t.e[c] = k;
    else
      nf.u.e[c] = -k;
  }
  return nf;
}

} // namespace rsg::words
