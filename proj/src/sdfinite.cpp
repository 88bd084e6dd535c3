#include "rsg/sdfinite.hpp"

#include <algorithm>

namespace rsg::sd {

using alg::Congruence;
using alg::FinAlg;

void FiniteSemilatticeAction::validate() const {
  std::size_t ny = Y.size(), nt = T.size();
  if (action.size() != nt) throw instance_error("action table needs one row per monoid element");
  for (const auto& row : action) {
    if (row.size() != ny) throw instance_error("action row has wrong length");
    std::vector<bool> seen(ny, false);
    for (std::size_t v : row) {
      if (v >= ny || seen[v]) throw instance_error("action is not by bijections");
      seen[v] = true;
    }
  }
  for (std::size_t y = 0; y < ny; ++y)
    if (act(T.id, y) != y) throw instance_error("identity of T must act trivially");
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t a = 0; a < ny; ++a) {
      for (std::size_t b = 0; b < ny; ++b)
        if (act(t, Y.product(a, b)) != Y.product(act(t, a), act(t, b)))
          throw instance_error("action is not by semilattice automorphisms");
      for (std::size_t u = 0; u < nt; ++u)
        if (act(u, act(t, a)) != act(T.product(u, t), a))
          throw instance_error("action is not a monoid action");
    }
}

std::size_t FiniteSemilatticeAction::act_inv(std::size_t t, std::size_t y) const {
  const auto& row = action[t];
  for (std::size_t b = 0; b < row.size(); ++b)
    if (row[b] == y) return b;
  throw instance_error("action row is not surjective");
}

FinAlg semidirect_finite(const FiniteSemilatticeAction& a) {
  std::size_t ny = a.Y.size(), nt = a.T.size(), n = ny * nt;
  FinAlg s;
  s.names.resize(n);
  s.mul.resize(n * n);
  s.plus_map.resize(n);
  s.star_map.resize(n);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t i = sd_index(a, y, t);
      s.names[i] = "(" + a.Y.names[y] + "," + a.T.names[t] + ")";
      s.plus_map[i] = sd_index(a, y, a.T.id);
      s.star_map[i] = sd_index(a, a.act_inv(t, y), a.T.id);
      for (std::size_t z = 0; z < ny; ++z)
        for (std::size_t u = 0; u < nt; ++u)
          s.mul[i * n + sd_index(a, z, u)] =
              sd_index(a, a.Y.product(y, a.act(t, z)), a.T.product(t, u));
    }
  return s;
}

AdjoinResult adjoin_identity_new(const FiniteSemilatticeAction& a,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& rho_pairs) {
  a.validate();
  AdjoinResult r;
  r.old_product = semidirect_finite(a);
  r.rho = alg::finite_congruence_closure(r.old_product, rho_pairs);

  // Y^e: a fresh identity on top, fixed by every t
  std::size_t ny = a.Y.size(), nt = a.T.size();
  FiniteSemilatticeAction ext;
  ext.T = a.T;
  std::vector<std::string> names = a.Y.names;
  names.push_back("e");
  std::vector<std::size_t> meet((ny + 1) * (ny + 1));
  for (std::size_t x = 0; x <= ny; ++x)
    for (std::size_t y = 0; y <= ny; ++y) {
      if (x == ny)
        meet[x * (ny + 1) + y] = y;
      else if (y == ny)
        meet[x * (ny + 1) + y] = x;
      else
        meet[x * (ny + 1) + y] = a.Y.product(x, y);
    }
  ext.Y = FinAlg::semilattice(std::move(names), std::move(meet));
  ext.action.assign(nt, {});
  for (std::size_t t = 0; t < nt; ++t) {
    ext.action[t] = a.action[t];
    ext.action[t].push_back(ny); // t·e = e
  }
  ext.validate();
  r.extended = ext;
  r.product = semidirect_finite(ext);

  // ρ_e = ρ ∪ equality on U = (Y^e⋊T) \ (Y⋊T); old (y,t) sits at index
  // sd_index(ext, y, t) since y < ny keeps the same meaning in Y^e.
  std::size_t n_ext = r.product.size();
  std::vector<std::vector<std::size_t>> blocks;
  auto old_blocks = r.rho.block_list();
  for (const auto& blk : old_blocks) {
    std::vector<std::size_t> nb;
    for (std::size_t i : blk) {
      std::size_t y = i / nt, t = i % nt;
      nb.push_back(sd_index(ext, y, t));
    }
    blocks.push_back(std::move(nb));
  }
  for (std::size_t t = 0; t < nt; ++t) blocks.push_back({sd_index(ext, ny, t)});
  r.rho_e = Congruence::from_blocks(n_ext, blocks);

  r.F = alg::quotient(r.product, r.rho_e); // congruence_error if ρ_e not compatible
  r.old_to_F.resize(r.old_product.size());
  for (std::size_t i = 0; i < r.old_product.size(); ++i) {
    std::size_t y = i / nt, t = i % nt;
    r.old_to_F[i] = r.rho_e.block_of[sd_index(ext, y, t)];
  }
  for (std::size_t t = 0; t < nt; ++t)
    r.unit_elems.push_back(r.rho_e.block_of[sd_index(ext, ny, t)]);
  std::sort(r.unit_elems.begin(), r.unit_elems.end());
  return r;
}

} // namespace rsg::sd
