#include "dhall/subreps.hpp"

#include "dhall/errors.hpp"

#include <algorithm>
#include <functional>

namespace dhall {

std::vector<FpMatrix> enumerate_subspaces(const PrimeField& field, int n, int k) {
  std::vector<FpMatrix> out;
  if (k < 0 || k > n) return out;
  const std::uint32_t p = field.p();
  const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
  // Choose pivot columns, then fill the free entries of the reduced echelon form.
  std::vector<std::size_t> pivots(uk);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
    if (idx == uk) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < uk; ++r)
        for (std::size_t c = pivots[r] + 1; c < un; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<Fp> values(free.size(), 0);
      while (true) {
        FpMatrix m(field, uk, un);
        for (std::size_t r = 0; r < uk; ++r) m.set(r, pivots[r], 1);
        for (std::size_t i = 0; i < free.size(); ++i) m.set(free[i].first, free[i].second, values[i]);
        out.push_back(std::move(m));
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == p) values[i++] = 0;
        if (i == values.size()) break;
      }
      return;
    }
    for (std::size_t c = start; c + (uk - idx) <= un; ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

std::vector<Subrep> subreps(const Rep& z, const Bounds& bounds, const std::optional<DimVector>& sub_dims) {
  if (z.total_dim() > bounds.max_subrep_total_dim)
    throw ResourceError("subobject enumeration: total dimension " + std::to_string(z.total_dim()) +
                        " exceeds bound " + std::to_string(bounds.max_subrep_total_dim));
  const std::size_t verts = z.dims().size();
  std::vector<std::vector<FpMatrix>> choices(verts);
  std::uint64_t candidates = 1;
  for (std::size_t v = 0; v < verts; ++v) {
    if (sub_dims) {
      choices[v] = enumerate_subspaces(z.field(), z.dim(v), (*sub_dims)[v]);
    } else {
      for (int k = 0; k <= z.dim(v); ++k) {
        auto s = enumerate_subspaces(z.field(), z.dim(v), k);
        choices[v].insert(choices[v].end(), s.begin(), s.end());
      }
    }
    candidates *= choices[v].size();
    if (candidates > bounds.max_subrep_candidates)
      throw ResourceError("subobject enumeration: candidate count exceeds bound " +
                          std::to_string(bounds.max_subrep_candidates));
  }
  std::vector<Subrep> out;
  if (candidates == 0) return out;
  const SubspaceFamily everything = whole_space(z);
  const SubspaceFamily nothing = zero_space(z);
  std::vector<std::size_t> idx(verts, 0);
  while (true) {
    SubspaceFamily u;
    for (std::size_t v = 0; v < verts; ++v) u.push_back(choices[v][idx[v]]);
    if (is_subrep(z, u)) {
      Rep sub = subquotient(z, u, nothing);
      Rep quot = subquotient(z, everything, u);
      out.push_back({std::move(u), std::move(sub), std::move(quot)});
    }
    std::size_t v = 0;
    while (v < verts && ++idx[v] == choices[v].size()) idx[v++] = 0;
    if (v == verts) break;
  }
  return out;
}

}  // namespace dhall
