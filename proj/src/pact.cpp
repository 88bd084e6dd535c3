#include "rsg/pact.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include <json.hpp>

namespace rsg::pact {

using words::Letter;

PartialIso PartialIso::identity(std::size_t n) {
  PartialIso p;
  p.fwd.resize(n);
  std::iota(p.fwd.begin(), p.fwd.end(), 0);
  p.bwd = p.fwd;
  return p;
}

PartialIso PartialIso::empty(std::size_t n) {
  PartialIso p;
  p.fwd.assign(n, -1);
  p.bwd.assign(n, -1);
  return p;
}

PartialIso PartialIso::after(const PartialIso& g) const {
  PartialIso p = empty(fwd.size());
  for (std::size_t a = 0; a < fwd.size(); ++a) {
    int mid = g.fwd[a];
    if (mid < 0) continue;
    int out = fwd[static_cast<std::size_t>(mid)];
    if (out < 0) continue;
    p.fwd[a] = out;
    p.bwd[static_cast<std::size_t>(out)] = static_cast<int>(a);
  }
  return p;
}

bool PartialIso::is_empty() const {
  return std::all_of(fwd.begin(), fwd.end(), [](int v) { return v < 0; });
}

std::vector<std::size_t> PartialIso::domain() const {
  std::vector<std::size_t> d;
  for (std::size_t a = 0; a < fwd.size(); ++a)
    if (fwd[a] >= 0) d.push_back(a);
  return d;
}

std::vector<std::size_t> PartialIso::range() const {
  std::vector<std::size_t> r;
  for (std::size_t a = 0; a < bwd.size(); ++a)
    if (bwd[a] >= 0) r.push_back(a);
  return r;
}

namespace {

// nonempty down-set?  and does it have a top?
bool is_ideal(const FinAlg& y, const std::vector<std::size_t>& s) {
  std::set<std::size_t> in(s.begin(), s.end());
  for (std::size_t a : s)
    for (std::size_t b = 0; b < y.size(); ++b)
      if (y.product(a, b) == b && !in.count(b)) return false; // b ≤ a missing
  return !s.empty();
}

bool has_top(const FinAlg& y, const std::vector<std::size_t>& s) {
  for (std::size_t t : s) {
    bool top = true;
    for (std::size_t a : s)
      if (y.product(a, t) != a) top = false;
    if (top) return true;
  }
  return false;
}

} // namespace

void PartialAction::validate() {
  Y.validate();
  auto id = Y.identity();
  if (!id) throw instance_error("Y must be a semilattice with identity");
  for (std::size_t a = 0; a < Y.size(); ++a)
    if (Y.product(a, a) != a || Y.plus(a) != a || Y.star(a) != a)
      throw instance_error("Y must be a semilattice (plus = star = id, idempotent)");
  top = *id;
  munn = true;
  for (char c : alpha.letters) {
    auto it = letter.find(c);
    if (it == letter.end()) throw instance_error(std::string("no map for letter ") + c);
    const PartialIso& p = it->second;
    if (p.fwd.size() != Y.size() || p.bwd.size() != Y.size())
      throw instance_error("letter map has wrong carrier size");
    // mutually inverse partial bijection
    for (std::size_t a = 0; a < Y.size(); ++a) {
      if (p.fwd[a] >= 0 && p.bwd[static_cast<std::size_t>(p.fwd[a])] != static_cast<int>(a))
        throw instance_error("letter map is not a partial bijection");
      if (p.bwd[a] >= 0 && p.fwd[static_cast<std::size_t>(p.bwd[a])] != static_cast<int>(a))
        throw instance_error("letter map is not a partial bijection");
    }
    auto dom = p.domain(), ran = p.range();
    if (!is_ideal(Y, dom) || !is_ideal(Y, ran))
      throw instance_error(std::string("domain/range of letter ") + c + " is not an ideal");
    // order isomorphism between ideals = meet isomorphism
    for (std::size_t a : dom)
      for (std::size_t b : dom)
        if (p.fwd[Y.product(a, b)] !=
            static_cast<int>(Y.product(static_cast<std::size_t>(p.fwd[a]),
                                       static_cast<std::size_t>(p.fwd[b]))))
          throw instance_error(std::string("letter ") + c + " does not preserve meets");
    if (!has_top(Y, dom) || !has_top(Y, ran)) munn = false;
  }
}

PartialIso PartialAction::iso_for(const Word& g) const {
  PartialIso p = PartialIso::identity(Y.size());
  // left action: apply the rightmost letter first
  for (auto it = g.ls.rbegin(); it != g.ls.rend(); ++it) {
    const PartialIso& base = letter.at(it->sym);
    p = (it->inv ? base.inverse() : base).after(p);
  }
  return p;
}

std::optional<std::size_t> PartialAction::diamond(const Word& g, std::size_t a) const {
  int cur = static_cast<int>(a);
  for (auto it = g.ls.rbegin(); it != g.ls.rend(); ++it) {
    const PartialIso& base = letter.at(it->sym);
    cur = it->inv ? base.bwd[static_cast<std::size_t>(cur)]
                  : base.fwd[static_cast<std::size_t>(cur)];
    if (cur < 0) return std::nullopt;
  }
  return static_cast<std::size_t>(cur);
}

std::optional<std::size_t> PartialAction::circ(std::size_t a, const Word& g) const {
  return diamond(words::ginv(g), a);
}

std::optional<std::size_t> PartialAction::m_identity(const Word& g) const {
  auto ran = iso_for(g).range();
  if (ran.empty()) return std::nullopt;
  for (std::size_t t : ran) {
    bool topmost = true;
    for (std::size_t a : ran)
      if (Y.product(a, t) != a) topmost = false;
    if (topmost) return t;
  }
  return std::nullopt;
}

PartialAction PartialAction::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad partial action JSON: ") + e.what());
  }
  PartialAction pa;
  try {
    auto names = j.at("Y").at("names").get<std::vector<std::string>>();
    auto meet = j.at("Y").at("meet").get<std::vector<std::size_t>>();
    pa.Y = FinAlg::semilattice(names, meet);
    for (auto& [key, val] : j.at("letters").items()) {
      if (key.size() != 1) throw parse_error("letters must be single characters");
      char c = key[0];
      pa.alpha.letters.push_back(c);
      PartialIso p = PartialIso::empty(pa.Y.size());
      for (auto& [from, to] : val.items()) {
        std::size_t a = pa.Y.index_of(from);
        std::size_t b = pa.Y.index_of(to.get<std::string>());
        p.fwd[a] = static_cast<int>(b);
        p.bwd[b] = static_cast<int>(a);
      }
      pa.letter[c] = std::move(p);
    }
    std::sort(pa.alpha.letters.begin(), pa.alpha.letters.end());
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("partial action JSON needs Y{names,meet}, letters: ") +
                      e.what());
  }
  pa.validate();
  return pa;
}

std::string PartialAction::to_json_text() const {
  nlohmann::ordered_json j;
  j["Y"]["names"] = Y.names;
  j["Y"]["meet"] = Y.mul;
  for (char c : alpha.letters) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    const PartialIso& p = letter.at(c);
    for (std::size_t a : p.domain()) m[Y.names[a]] = Y.names[static_cast<std::size_t>(p.fwd[a])];
    j["letters"][std::string(1, c)] = m;
  }
  return j.dump(2);
}

MAlgebra::Elem MAlgebra::product(const Elem& x, const Elem& y) const {
  auto xt = pa->circ(x.a, x.t);
  if (!xt) throw domain_error("m_product: left operand invalid");
  auto m = pa->meet(*xt, y.a);
  auto first = pa->diamond(x.t, m);
  if (!first) throw domain_error("m_product: closure violated"); // never for valid operands
  return {*first, words::gmul(x.t, y.t)};
}

MAlgebra::Elem MAlgebra::star(const Elem& x) const {
  auto xt = pa->circ(x.a, x.t);
  if (!xt) throw domain_error("m_star: operand invalid");
  return {*xt, Word{}};
}

std::vector<MElem> m_fragment(const PartialAction& pa, int maxlen) {
  std::vector<MElem> out;
  std::vector<Word> level{Word{}};
  for (int len = 0; len <= maxlen; ++len) {
    for (const Word& t : level) {
      auto ran = pa.iso_for(t).range();
      for (std::size_t a : ran) out.push_back({a, t});
    }
    std::vector<Word> next;
    for (const Word& t : level)
      for (char c : pa.alpha.letters) next.push_back(words::gmul(t, Word{{Letter{c, false}}}));
    level = std::move(next);
  }
  return out;
}

namespace {

std::vector<Word> reduced_words_upto(const Alphabet& alpha, int maxlen) {
  std::vector<Word> all{Word{}}, level{Word{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (char c : alpha.letters)
        for (bool inv : {false, true}) {
          Word x = words::gmul(w, Word{{Letter{c, inv}}});
          if (x.size() == static_cast<std::size_t>(len)) next.push_back(x);
        }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

} // namespace

ChiClass chi_canonical(const PartialAction& pa, std::size_t a, const Word& g) {
  ChiClass best{a, g};
  for (const Word& h : reduced_words_upto(pa.alpha, static_cast<int>(g.size()))) {
    auto b = pa.circ(a, words::gmul(words::ginv(g), h));
    if (!b) continue;
    ChiClass cand{*b, h};
    if (cand < best) best = cand;
  }
  return best;
}

ChiClass chi_meet(const PartialAction& pa, const ChiClass& x, const ChiClass& y) {
  // [A,g] ∧ [B,h] = [g⁻¹h ◇ ((A ∧ M_{g⁻¹h}) ∘ g⁻¹h ∧ B), g]
  Word u = words::gmul(words::ginv(x.g), y.g);
  auto mu = pa.m_identity(u);
  if (!mu)
    throw domain_error("chi_meet: alpha_" + words::wire(u) +
                       " has empty or topless range (M undefined)");
  auto w = pa.circ(pa.meet(x.a, *mu), u);
  if (!w) throw domain_error("chi_meet: inner circ undefined");
  auto v = pa.diamond(u, pa.meet(*w, y.a));
  if (!v) throw domain_error("chi_meet: outer diamond undefined");
  return chi_canonical(pa, *v, x.g);
}

bool chi_in_Y(const ChiClass& x) { return x.g.empty(); }

ChiAction::ChiAction(const PartialAction& p) : pa(&p) {
  if (!p.munn)
    throw instance_error(
        "the chi-class semilattice requires the perfect case: letter maps between principal "
        "ideals");
}

PrefixReport check_prefix_criterion(const PartialAction& pa, int maxlen) {
  PrefixReport rep;
  ChiAction X(pa);
  auto words_all = reduced_words_upto(pa.alpha, maxlen);
  for (const Word& g : words_all)
    for (const Word& h : words_all) {
      if (!g.empty() && !h.empty() && g.ls.front() == h.ls.front()) continue;
      ++rep.checked;
      ChiClass cg = chi_canonical(pa, pa.top, g);
      ChiClass ch = chi_canonical(pa, pa.top, h);
      ChiClass m = chi_meet(pa, cg, ch);
      bool in_y = chi_in_Y(m);
      // closed form [h ◇ M_{h⁻¹g}, 1]
      Word hg = words::gmul(words::ginv(h), g);
      auto mh = pa.m_identity(hg);
      bool closed_ok = false;
      if (mh) {
        auto val = pa.diamond(h, *mh);
        if (val) closed_ok = chi_canonical(pa, *val, Word{}) == m;
      }
      if (!in_y || !closed_ok) {
        rep.pass = false;
        rep.violations.push_back("g=" + words::wire(g) + " h=" + words::wire(h) +
                                 (in_y ? " closed-form mismatch" : " meet not in Y"));
      }
    }
  return rep;
}

BoundedClosureResult bounded_congruence_closure(
    const PartialOpsTable& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> parent(t.n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  BoundedClosureResult res;
  std::deque<std::pair<std::size_t, std::size_t>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    auto push = [&](const std::optional<std::size_t>& x, const std::optional<std::size_t>& y) {
      if (x && y)
        work.emplace_back(*x, *y);
      else if (x.has_value() != y.has_value())
        ++res.skipped;
    };
    push(t.plus[a], t.plus[b]);
    push(t.star[a], t.star[b]);
    for (std::size_t c = 0; c < t.n; ++c) {
      push(t.mul[c * t.n + a], t.mul[c * t.n + b]);
      push(t.mul[a * t.n + c], t.mul[b * t.n + c]);
    }
  }
  res.class_of.resize(t.n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < t.n; ++i) {
    auto [it, fresh] = ids.emplace(find(i), ids.size());
    res.class_of[i] = it->second;
  }
  return res;
}

} // namespace rsg::pact
