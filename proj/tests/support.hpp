#pragma once

#include "dhall/config.hpp"
#include "dhall/heart.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace dhall::testing {

inline std::unique_ptr<Heart> make_heart(const std::string& name, std::uint32_t p, Bounds bounds = {}) {
  const QuiverConfig cfg = builtin_config(name, p);
  return std::make_unique<Heart>(cfg.quiver(), cfg.field(), bounds);
}

// Every vector of length n over F_p, in lexicographic order.
inline std::vector<std::vector<Fp>> all_vectors(const PrimeField& f, std::size_t n) {
  std::vector<std::vector<Fp>> out;
  std::vector<Fp> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == f.p()) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline FpMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FpMatrix m(f, rows, cols);
  std::uniform_int_distribution<Fp> d(0, f.p() - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
  return m;
}

inline FpMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    FpMatrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

// m transported along random invertible maps at every vertex.
inline Rep conjugated(const Rep& m, std::mt19937_64& rng) {
  std::vector<FpMatrix> g, ginv;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    g.push_back(random_invertible(m.field(), static_cast<std::size_t>(m.dim(v)), rng));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<FpMatrix> maps;
  for (std::size_t a = 0; a < m.quiver().arrows().size(); ++a) {
    const Arrow& arr = m.quiver().arrows()[a];
    maps.push_back(g[arr.target] * m.map(a) * ginv[arr.source]);
  }
  return Rep(m.quiver_ptr(), m.field(), m.dims(), std::move(maps));
}

}  // namespace dhall::testing
