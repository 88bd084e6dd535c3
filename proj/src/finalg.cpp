#include "rsg/finalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <json.hpp>

namespace rsg::alg {

std::vector<std::size_t> FinAlg::elements() const {
  std::vector<std::size_t> v(size());
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

std::optional<std::size_t> FinAlg::identity() const {
  for (std::size_t e = 0; e < size(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < size() && ok; ++a)
      ok = product(e, a) == a && product(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<std::size_t> FinAlg::projections() const {
  std::vector<std::size_t> p;
  for (std::size_t a = 0; a < size(); ++a) p.push_back(plus(a));
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

std::size_t FinAlg::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw parse_error("unknown element name \"" + name + "\"");
}

void FinAlg::validate() const {
  std::size_t n = size();
  if (mul.size() != n * n || plus_map.size() != n || star_map.size() != n)
    throw instance_error("table sizes do not match the carrier");
  for (std::size_t v : mul)
    if (v >= n) throw instance_error("multiplication table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (plus_map[a] >= n || star_map[a] >= n)
      throw instance_error("unary map entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (product(product(a, b), c) != product(a, product(b, c)))
          throw instance_error("multiplication is not associative at (" + names[a] + "," +
                               names[b] + "," + names[c] + ")");
}

FinAlg FinAlg::semilattice(std::vector<std::string> names, std::vector<std::size_t> meet) {
  FinAlg s;
  s.names = std::move(names);
  s.mul = std::move(meet);
  s.plus_map.resize(s.size());
  std::iota(s.plus_map.begin(), s.plus_map.end(), 0u);
  s.star_map = s.plus_map;
  return s;
}

FinAlg FinAlg::reduced_monoid(std::vector<std::string> names, std::vector<std::size_t> mul,
                              std::size_t id) {
  FinAlg s;
  s.names = std::move(names);
  s.mul = std::move(mul);
  s.plus_map.assign(s.size(), id);
  s.star_map.assign(s.size(), id);
  return s;
}

FinAlg FinAlg::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad algebra JSON: ") + e.what());
  }
  FinAlg s;
  try {
    s.names = j.at("names").get<std::vector<std::string>>();
    s.mul = j.at("mul").get<std::vector<std::size_t>>();
    s.plus_map = j.at("plus").get<std::vector<std::size_t>>();
    s.star_map = j.at("star").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("algebra JSON needs names/mul/plus/star: ") + e.what());
  }
  s.validate();
  return s;
}

std::string FinAlg::to_json_text() const {
  nlohmann::ordered_json j;
  j["names"] = names;
  j["mul"] = mul;
  j["plus"] = plus_map;
  j["star"] = star_map;
  return j.dump(2);
}

bool sigma_related(const FinAlg& s, std::size_t a, std::size_t b) {
  for (std::size_t e : s.projections())
    if (s.product(e, a) == s.product(e, b)) return true;
  return false;
}

bool is_reduced(const FinAlg& s) { return s.projections().size() == 1; }

bool is_proper(const FinAlg& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b || !sigma_related(s, a, b)) continue;
      if (s.plus(a) == s.plus(b)) return false;
      if (s.star(a) == s.star(b)) return false;
    }
  return true;
}

std::vector<std::size_t> units(const FinAlg& s) {
  auto id = s.identity();
  if (!id) throw instance_error("units are defined only for monoids");
  std::vector<std::size_t> u;
  for (std::size_t a = 0; a < s.size(); ++a)
    if (s.plus(a) == *id && s.star(a) == *id) u.push_back(a);
  return u;
}

bool is_factorisable(const FinAlg& s) {
  auto u = units(s);
  auto p = s.projections();
  auto setprod = [&](const std::vector<std::size_t>& xs, const std::vector<std::size_t>& ys) {
    std::vector<bool> hit(s.size(), false);
    for (auto x : xs)
      for (auto y : ys) hit[s.product(x, y)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  };
  bool pu = setprod(p, u);
  bool up = setprod(u, p);
  if (pu != up)
    throw instance_error("P(F)U(F) and U(F)P(F) disagree; not a restriction monoid?");
  return pu;
}

std::vector<std::vector<std::size_t>> Congruence::block_list() const {
  std::vector<std::vector<std::size_t>> bl(blocks);
  for (std::size_t i = 0; i < block_of.size(); ++i) bl[block_of[i]].push_back(i);
  return bl;
}

Congruence Congruence::from_blocks(std::size_t n,
                                   const std::vector<std::vector<std::size_t>>& bl) {
  Congruence c;
  c.block_of.assign(n, n);
  c.blocks = bl.size();
  for (std::size_t b = 0; b < bl.size(); ++b)
    for (std::size_t x : bl[b]) c.block_of[x] = b;
  for (std::size_t x : c.block_of)
    if (x >= bl.size()) throw domain_error("partition does not cover the carrier");
  return c;
}

Congruence Congruence::equality(std::size_t n) {
  Congruence c;
  c.block_of.resize(n);
  std::iota(c.block_of.begin(), c.block_of.end(), 0u);
  c.blocks = n;
  return c;
}

bool Congruence::operator==(const Congruence& o) const {
  if (block_of.size() != o.block_of.size()) return false;
  // equal as partitions, independent of block numbering
  std::map<std::size_t, std::size_t> fwd, bwd;
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = fwd.emplace(block_of[i], o.block_of[i]);
    if (!fresh && it->second != o.block_of[i]) return false;
    auto [jt, fresh2] = bwd.emplace(o.block_of[i], block_of[i]);
    if (!fresh2 && jt->second != block_of[i]) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence to_congruence(UnionFind& uf) {
  std::size_t n = uf.parent.size();
  Congruence c;
  c.block_of.assign(n, 0);
  std::map<std::size_t, std::size_t> id;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    auto [it, fresh] = id.emplace(r, id.size());
    c.block_of[i] = it->second;
  }
  c.blocks = id.size();
  return c;
}

} // namespace

Congruence finite_congruence_closure(
    const FinAlg& s, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  // Worklist over merge events; single-step translations and the unary maps
  // generate every unary polynomial on a finite carrier.
  UnionFind uf(s.size());
  std::deque<std::pair<std::size_t, std::size_t>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.merge(a, b)) continue;
    work.emplace_back(s.plus(a), s.plus(b));
    work.emplace_back(s.star(a), s.star(b));
    for (std::size_t c = 0; c < s.size(); ++c) {
      work.emplace_back(s.product(c, a), s.product(c, b));
      work.emplace_back(s.product(a, c), s.product(b, c));
    }
  }
  return to_congruence(uf);
}

std::optional<std::string> congruence_violation(const FinAlg& s, const Congruence& c) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!c.related(a, b)) continue;
      if (!c.related(s.plus(a), s.plus(b)))
        return "plus breaks " + s.str(a) + " ~ " + s.str(b);
      if (!c.related(s.star(a), s.star(b)))
        return "star breaks " + s.str(a) + " ~ " + s.str(b);
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (!c.related(s.product(x, a), s.product(x, b)))
          return "left translation by " + s.str(x) + " breaks " + s.str(a) + " ~ " + s.str(b);
        if (!c.related(s.product(a, x), s.product(b, x)))
          return "right translation by " + s.str(x) + " breaks " + s.str(a) + " ~ " + s.str(b);
      }
    }
  return std::nullopt;
}

FinAlg quotient(const FinAlg& s, const Congruence& c) {
  if (auto v = congruence_violation(s, c))
    throw congruence_error("not a congruence: " + *v);
  auto bl = c.block_list();
  FinAlg q;
  q.names.reserve(c.blocks);
  for (const auto& blk : bl) {
    std::string name;
    if (blk.size() == 1)
      name = s.names[blk[0]];
    else {
      name = "{";
      for (std::size_t i = 0; i < blk.size(); ++i) name += (i ? "," : "") + s.names[blk[i]];
      name += "}";
    }
    q.names.push_back(std::move(name));
  }
  q.mul.resize(c.blocks * c.blocks);
  q.plus_map.resize(c.blocks);
  q.star_map.resize(c.blocks);
  for (std::size_t a = 0; a < c.blocks; ++a) {
    std::size_t ra = bl[a][0];
    q.plus_map[a] = c.block_of[s.plus(ra)];
    q.star_map[a] = c.block_of[s.star(ra)];
    for (std::size_t b = 0; b < c.blocks; ++b)
      q.mul[a * c.blocks + b] = c.block_of[s.product(ra, bl[b][0])];
  }
  return q;
}

FinAlg adjoin_identity(const FinAlg& s, bool adjoin_always) {
  if (!adjoin_always && s.identity()) return s;
  std::size_t n = s.size();
  FinAlg m;
  m.names = s.names;
  m.names.push_back("1");
  m.mul.assign((n + 1) * (n + 1), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.mul[a * (n + 1) + b] = s.product(a, b);
  for (std::size_t a = 0; a <= n; ++a) {
    m.mul[a * (n + 1) + n] = a;
    m.mul[n * (n + 1) + a] = a;
  }
  m.plus_map = s.plus_map;
  m.plus_map.push_back(n);
  m.star_map = s.star_map;
  m.star_map.push_back(n);
  return m;
}

} // namespace rsg::alg
