#include "dhall/heart.hpp"

#include "dhall/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

namespace dhall {

int IsoClass::multiplicity(std::size_t label) const {
  for (const auto& [l, m] : parts)
    if (l == label) return m;
  return 0;
}

IsoClass operator+(const IsoClass& a, const IsoClass& b) {
  std::map<std::size_t, int> merged;
  for (const auto& [l, m] : a.parts) merged[l] += m;
  for (const auto& [l, m] : b.parts) merged[l] += m;
  IsoClass out;
  for (const auto& [l, m] : merged) out.parts.emplace_back(l, m);
  return out;
}

namespace {

BigInt gl_order(std::uint32_t p, int n) {
  BigInt pn = ipower(p, static_cast<std::size_t>(n));
  BigInt out = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    out *= pn - pi;
    pi *= p;
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

bool is_nilpotent(const RepMorphism& phi, int height) {
  RepMorphism power = phi;
  for (int i = 1; i < height; ++i) power = compose(power, phi);
  return power.is_zero();
}

int max_dim(const Rep& m) { return *std::max_element(m.dims().begin(), m.dims().end()); }

}  // namespace

Heart::Heart(Quiver quiver, PrimeField field, Bounds bounds)
    : quiver_(std::make_shared<const Quiver>(std::move(quiver))), field_(field), bounds_(bounds) {
  if (!quiver_->is_finite_type()) throw std::invalid_argument("quiver is not of finite representation type");
  build_catalog();
}

void Heart::require_enumerable(std::size_t dimension, const char* what) const {
  if (checked_power(field_.p(), dimension, bounds_.max_enumeration) > bounds_.max_enumeration)
    throw ResourceError(std::string(what) + ": " + std::to_string(field_.p()) + "^" + std::to_string(dimension) +
                        " elements exceeds enumeration bound " + std::to_string(bounds_.max_enumeration));
}

Rep Heart::find_indecomposable(const DimVector& root) const {
  const auto& arrows = quiver_->arrows();
  std::size_t entries = 0;
  for (const Arrow& a : arrows) entries += static_cast<std::size_t>(root[a.source] * root[a.target]);
  const std::uint32_t p = field_.p();

  auto build = [&](const std::vector<Fp>& flat) {
    std::vector<FpMatrix> maps;
    std::size_t pos = 0;
    for (const Arrow& a : arrows) {
      const std::size_t r = root[a.target], c = root[a.source];
      maps.emplace_back(field_, r, c, std::vector<Fp>(flat.begin() + pos, flat.begin() + pos + r * c));
      pos += r * c;
    }
    return Rep(quiver_, field_, root, std::move(maps));
  };

  std::vector<Fp> flat(entries, 0);
  if (checked_power(p, entries, bounds_.max_enumeration) <= bounds_.max_enumeration) {
    // Exhaustive, in lexicographic order of the flattened arrow matrices.
    while (true) {
      Rep m = build(flat);
      if (dhall::hom_dim(m, m) == 1) return m;
      std::size_t i = 0;
      while (i < entries && ++flat[i] == p) flat[i++] = 0;
      if (i == entries) break;
    }
  } else {
    std::seed_seq seq(root.begin(), root.end());
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<Fp> dist(0, p - 1);
    for (std::uint64_t attempt = 0; attempt < bounds_.max_root_search; ++attempt) {
      for (Fp& e : flat) e = dist(rng);
      Rep m = build(flat);
      if (dhall::hom_dim(m, m) == 1) return m;
    }
  }
  throw ResourceError("no indecomposable found for a positive root within the search bound");
}

void Heart::build_catalog() {
  auto roots = quiver_->positive_roots();
  std::sort(roots.begin(), roots.end(), [](const DimVector& a, const DimVector& b) {
    const int ta = std::accumulate(a.begin(), a.end(), 0), tb = std::accumulate(b.begin(), b.end(), 0);
    if (ta != tb) return ta < tb;
    return a > b;
  });
  const std::size_t n = quiver_->vertex_count();
  for (const DimVector& root : roots) {
    indecomposables_.push_back(find_indecomposable(root));
    std::string name;
    const int total = std::accumulate(root.begin(), root.end(), 0);
    if (total == 1) {
      const auto v = static_cast<std::size_t>(std::find(root.begin(), root.end(), 1) - root.begin());
      name = "S" + std::to_string(v + 1);
    } else {
      name = "X";
      bool first = true;
      for (std::size_t v = 0; v < n; ++v)
        for (int k = 0; k < root[v]; ++k) {
          if (n > 9 && !first) name += ".";
          name += std::to_string(v + 1);
          first = false;
        }
    }
    names_.push_back(std::move(name));
  }
  for (const Rep& target : indecomposables_) {
    std::vector<std::size_t> fp;
    for (const Rep& probe : indecomposables_) fp.push_back(dhall::hom_dim(probe, target));
    fingerprints_.push_back(std::move(fp));
  }
}

std::size_t Heart::label_of_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw ParseError("unknown indecomposable '" + name + "'");
}

Rep Heart::representative(const IsoClass& x) const {
  Rep out = Rep::zero(quiver_, field_);
  for (const auto& [label, mult] : x.parts)
    for (int k = 0; k < mult; ++k) out = direct_sum(out, indecomposables_.at(label));
  return out;
}

DimVector Heart::dim_vector(const IsoClass& x) const {
  DimVector d(quiver_->vertex_count(), 0);
  for (const auto& [label, mult] : x.parts)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += mult * indecomposables_.at(label).dim(v);
  return d;
}

int Heart::total_dim(const IsoClass& x) const {
  const DimVector d = dim_vector(x);
  return std::accumulate(d.begin(), d.end(), 0);
}

std::size_t Heart::match_indecomposable(const Rep& m) const {
  std::vector<std::size_t> fp;
  for (const Rep& probe : indecomposables_) fp.push_back(dhall::hom_dim(probe, m));
  for (std::size_t i = 0; i < indecomposables_.size(); ++i)
    if (indecomposables_[i].dims() == m.dims() && fingerprints_[i] == fp) return i;
  throw std::logic_error("indecomposable summand matches no catalog entry");
}

void Heart::decompose_into(const Rep& m, IsoClass& out) const {
  if (m.total_dim() == 0) return;
  if (!m.compatible_with(indecomposables_.front())) throw MismatchError("representation over a different quiver or field");
  const auto basis = hom_basis(m, m);
  const int height = max_dim(m);
  auto splits = [&](const RepMorphism& phi) { return !phi.is_invertible() && !is_nilpotent(phi, height); };

  std::optional<RepMorphism> splitter;
  if (basis.size() > 1) {
    for (const auto& b : basis)
      if (splits(b)) {
        splitter = b;
        break;
      }
    if (!splitter) {
      std::mt19937_64 rng(basis.size());
      std::uniform_int_distribution<Fp> dist(0, field_.p() - 1);
      for (int attempt = 0; attempt < 64 && !splitter; ++attempt) {
        RepMorphism phi = RepMorphism::zero(m, m);
        for (const auto& b : basis) phi = phi + b.scaled(dist(rng));
        if (splits(phi)) splitter = phi;
      }
    }
    if (!splitter) {
      // Certify locality of End(m) exhaustively.
      require_enumerable(basis.size(), "indecomposability test");
      for (const auto& phi : enumerate_span(basis, m, m))
        if (splits(phi)) {
          splitter = phi;
          break;
        }
    }
  }
  if (!splitter) {
    out = out + IsoClass::single(match_indecomposable(m));
    return;
  }
  // Fitting decomposition m = ker(phi^N) (+) im(phi^N).
  RepMorphism power = *splitter;
  for (int i = 1; i < height; ++i) power = compose(power, *splitter);
  const Rep nil_part = subquotient(m, kernel(m, power), zero_space(m));
  const Rep iso_part = subquotient(m, image(m, power), zero_space(m));
  decompose_into(nil_part, out);
  decompose_into(iso_part, out);
}

IsoClass Heart::decompose(const Rep& m) const {
  IsoClass out;
  decompose_into(m, out);
  return out;
}

bool Heart::is_indecomposable(const Rep& m) const {
  const IsoClass c = decompose(m);
  return c.parts.size() == 1 && c.parts[0].second == 1;
}

bool Heart::iso_test(const Rep& m, const Rep& n) const {
  if (!m.compatible_with(n)) throw MismatchError("representations over different quivers or fields");
  if (m.dims() != n.dims()) return false;
  return decompose(m) == decompose(n);
}

std::vector<RepMorphism> Heart::enumerate_span(const std::vector<RepMorphism>& basis, const Rep& from,
                                               const Rep& to) const {
  require_enumerable(basis.size(), "span enumeration");
  const std::uint32_t p = field_.p();
  std::vector<RepMorphism> out;
  std::vector<Fp> coeff(basis.size(), 0);
  while (true) {
    RepMorphism phi = RepMorphism::zero(from, to);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeff[i]) phi = phi + basis[i].scaled(coeff[i]);
    out.push_back(std::move(phi));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

BigInt Heart::aut_order(const Rep& m) const {
  const auto basis = hom_basis(m, m);
  if (checked_power(field_.p(), basis.size(), bounds_.max_enumeration) <= bounds_.max_enumeration) {
    BigInt count = 0;
    for (const auto& phi : enumerate_span(basis, m, m))
      if (phi.is_invertible()) ++count;
    return count;
  }
  // End(I) = F_p for every catalog indecomposable, so End(m)/rad is a
  // product of matrix algebras M_{mult}(F_p).
  const IsoClass c = decompose(m);
  std::size_t semisimple_dim = 0;
  BigInt units = 1;
  for (const auto& [label, mult] : c.parts) {
    semisimple_dim += static_cast<std::size_t>(mult * mult);
    units *= gl_order(field_.p(), mult);
  }
  return units * ipower(field_.p(), basis.size() - semisimple_dim);
}

BigInt Heart::aut_order(const IsoClass& x) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = aut_memo_.find(x); it != aut_memo_.end()) return it->second;
  }
  BigInt value = aut_order(representative(x));
  std::lock_guard lock(memo_mutex_);
  aut_memo_.emplace(x, value);
  return value;
}

std::size_t Heart::hom_dim(const IsoClass& x, const IsoClass& y) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = hom_ext_memo_.find({x, y}); it != hom_ext_memo_.end()) return it->second.first;
  }
  const Rep a = representative(x), b = representative(y);
  const std::pair<std::size_t, std::size_t> value{dhall::hom_dim(a, b), dhall::ext1_dim(a, b)};
  std::lock_guard lock(memo_mutex_);
  hom_ext_memo_.emplace(std::make_pair(x, y), value);
  return value.first;
}

std::size_t Heart::ext1_dim(const IsoClass& x, const IsoClass& y) const {
  hom_dim(x, y);
  std::lock_guard lock(memo_mutex_);
  return hom_ext_memo_.at({x, y}).second;
}

int Heart::euler_form(const IsoClass& x, const IsoClass& y) const {
  return quiver_->euler_form(dim_vector(x), dim_vector(y));
}

std::vector<IsoClass> Heart::classes_below(const DimVector& bound) const {
  std::vector<IsoClass> out;
  IsoClass current;
  DimVector used(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t label) {
    if (label == indecomposables_.size()) {
      out.push_back(current);
      return;
    }
    const DimVector& d = indecomposables_[label].dims();
    int mult = 0;
    while (true) {
      rec(label + 1);
      bool fits = true;
      for (std::size_t v = 0; v < d.size(); ++v)
        if (used[v] + d[v] > bound[v]) fits = false;
      if (!fits) break;
      for (std::size_t v = 0; v < d.size(); ++v) used[v] += d[v];
      ++mult;
      if (mult == 1) current.parts.emplace_back(label, 1);
      else current.parts.back().second = mult;
    }
    if (mult > 0) {
      current.parts.pop_back();
      for (std::size_t v = 0; v < d.size(); ++v) used[v] -= mult * d[v];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoClass> Heart::classes_with_dim(const DimVector& d) const {
  std::vector<IsoClass> out;
  for (IsoClass& c : classes_below(d))
    if (dim_vector(c) == d) out.push_back(std::move(c));
  return out;
}

std::vector<IsoClass> Heart::classes_up_to(int n) const {
  std::vector<IsoClass> out;
  for (IsoClass& c : classes_below(DimVector(quiver_->vertex_count(), n)))
    if (total_dim(c) <= n) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [&](const IsoClass& a, const IsoClass& b) { return total_dim(a) < total_dim(b); });
  return out;
}

}  // namespace dhall
