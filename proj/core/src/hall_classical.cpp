#include "dhall/hall_classical.hpp"

#include "dhall/subreps.hpp"

#include <set>

namespace dhall {

const ClassicalHall::Histogram& ClassicalHall::histogram(const IsoClass& z) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = histograms_.find(z); it != histograms_.end()) return it->second;
  }
  Histogram h;
  for (const Subrep& s : subreps(heart_.representative(z), heart_.bounds()))
    ++h[{heart_.decompose(s.sub), heart_.decompose(s.quotient)}];
  std::lock_guard lock(mutex_);
  return histograms_.try_emplace(z, std::move(h)).first->second;
}

BigInt ClassicalHall::hall_number(const IsoClass& x, const IsoClass& y, const IsoClass& z) const {
  const DimVector dx = heart_.dim_vector(x), dy = heart_.dim_vector(y), dz = heart_.dim_vector(z);
  for (std::size_t v = 0; v < dz.size(); ++v)
    if (dx[v] + dy[v] != dz[v]) return 0;
  const Histogram& h = histogram(z);
  auto it = h.find({x, y});
  return it == h.end() ? BigInt(0) : it->second;
}

HeartElement ClassicalHall::basis_product(const IsoClass& x, const IsoClass& y) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find({x, y}); it != products_.end()) return it->second;
  }
  DimVector d = heart_.dim_vector(x);
  const DimVector dy = heart_.dim_vector(y);
  for (std::size_t v = 0; v < d.size(); ++v) d[v] += dy[v];
  HeartElement out;
  for (const IsoClass& z : heart_.classes_with_dim(d)) {
    const BigInt g = hall_number(x, y, z);
    if (g != 0) out.add(z, Rational(g));
  }
  std::lock_guard lock(mutex_);
  products_.emplace(std::make_pair(x, y), out);
  return out;
}

HeartElement ClassicalHall::product(const HeartElement& a, const HeartElement& b) const {
  return HeartElement::bilinear(a, b, [this](const IsoClass& x, const IsoClass& y) { return basis_product(x, y); });
}

Rational ClassicalHall::orbit_check(const IsoClass& x, const IsoClass& y, const IsoClass& z) const {
  const DimVector dx = heart_.dim_vector(x), dy = heart_.dim_vector(y), dz = heart_.dim_vector(z);
  for (std::size_t v = 0; v < dz.size(); ++v)
    if (dx[v] + dy[v] != dz[v]) return 0;
  const Rep xr = heart_.representative(x), zr = heart_.representative(z);

  std::vector<RepMorphism> monos;
  for (RepMorphism& f : heart_.enumerate_span(hom_basis(xr, zr), xr, zr)) {
    if (!f.is_injective()) continue;
    const Rep coker = subquotient(zr, whole_space(zr), image(zr, f));
    if (heart_.decompose(coker) == y) monos.push_back(std::move(f));
  }
  std::vector<RepMorphism> automorphisms;
  for (RepMorphism& a : heart_.enumerate_span(hom_basis(xr, xr), xr, xr))
    if (a.is_invertible()) automorphisms.push_back(std::move(a));

  // Heart objects have no negative self-extensions, so the Ext correction is 1.
  std::set<std::vector<Fp>> visited;
  Rational sum = 0;
  for (const RepMorphism& f : monos) {
    const auto key = flatten(f);
    if (visited.count(key)) continue;
    BigInt stabilizer = 0;
    for (const RepMorphism& a : automorphisms) {
      const auto moved = flatten(compose(f, a));
      if (moved == key) ++stabilizer;
      visited.insert(moved);
    }
    sum += Rational(BigInt(1), stabilizer);
  }
  return sum;
}

}  // namespace dhall
