#include "dhall/homotopy.hpp"

#include "dhall/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhall {

LFType::LFType(std::vector<Orders> components) : components_(std::move(components)) {
  for (const auto& c : components_)
    for (auto o : c)
      if (o < 1) throw std::invalid_argument("homotopy group order must be at least 1");
}

Rational homotopy_weight(const LFType::Orders& orders) {
  Rational w = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    // orders[i] is |pi_{i+1}|; odd degrees divide.
    if (i % 2 == 0) w /= orders[i];
    else w *= orders[i];
  }
  return w;
}

Rational LFType::weight(std::size_t component) const { return homotopy_weight(components_.at(component)); }

LFMap::LFMap(LFType source, LFType target, std::vector<std::size_t> component_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(component_map)) {
  if (map_.size() != source_.size()) throw std::invalid_argument("component map must be total on the source");
  for (std::size_t y : map_)
    if (y >= target_.size()) throw std::invalid_argument("component map lands outside the target");
}

LFMap LFMap::identity(const LFType& x) {
  std::vector<std::size_t> m(x.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return LFMap(x, x, std::move(m));
}

LFMap compose(const LFMap& g, const LFMap& f) {
  if (!(f.target() == g.source())) throw MismatchError("maps are not composable");
  std::vector<std::size_t> m(f.source().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g(f(i));
  return LFMap(f.source(), g.target(), std::move(m));
}

FnFinSupp::FnFinSupp(std::size_t domain_size, std::map<std::size_t, Rational> values) : domain_size_(domain_size) {
  for (auto& [k, v] : values) set(k, v);
}

FnFinSupp FnFinSupp::constant(std::size_t domain_size, const Rational& value) {
  FnFinSupp out(domain_size);
  for (std::size_t i = 0; i < domain_size; ++i) out.set(i, value);
  return out;
}

Rational FnFinSupp::operator()(std::size_t component) const {
  auto it = values_.find(component);
  return it == values_.end() ? Rational(0) : it->second;
}

void FnFinSupp::set(std::size_t component, const Rational& value) {
  if (component >= domain_size_) throw std::out_of_range("component outside the domain");
  if (value == 0) values_.erase(component);
  else values_[component] = value;
}

FnFinSupp operator+(const FnFinSupp& a, const FnFinSupp& b) {
  if (a.domain_size_ != b.domain_size_) throw MismatchError("functions on different types");
  FnFinSupp out = a;
  for (const auto& [k, v] : b.values_) out.set(k, out(k) + v);
  return out;
}

FnFinSupp FnFinSupp::scaled(const Rational& s) const {
  FnFinSupp out(domain_size_);
  for (const auto& [k, v] : values_) out.set(k, v * s);
  return out;
}

FnFinSupp pushforward_l1(const LFMap& f, const FnFinSupp& alpha) {
  if (alpha.domain_size() != f.source().size()) throw MismatchError("function is not defined on the source of the map");
  FnFinSupp out(f.target().size());
  for (const auto& [x, value] : alpha.support()) {
    const std::size_t y = f(x);
    out.set(y, out(y) + value * f.source().weight(x) / f.target().weight(y));
  }
  return out;
}

FnFinSupp pushforward_fibers(const FiberPresentation& fp, const FnFinSupp& alpha) {
  if (alpha.domain_size() != fp.source_size) throw MismatchError("function is not defined on the source of the map");
  FnFinSupp out(fp.fibers.size());
  for (std::size_t y = 0; y < fp.fibers.size(); ++y) {
    Rational sum = 0;
    for (const FiberComponent& z : fp.fibers[y]) {
      if (z.source_component >= fp.source_size) throw std::invalid_argument("fiber component attached outside the source");
      for (auto o : z.orders)
        if (o < 1) throw std::invalid_argument("homotopy group order must be at least 1");
      sum += alpha(z.source_component) * homotopy_weight(z.orders);
    }
    out.set(y, sum);
  }
  return out;
}

bool is_proper(const LFMap& f) {
  // Component lists are finite, so every preimage is finite.
  std::vector<std::size_t> preimages(f.target().size(), 0);
  for (std::size_t x = 0; x < f.source().size(); ++x) ++preimages[f(x)];
  return std::all_of(preimages.begin(), preimages.end(), [&](std::size_t n) { return n <= f.source().size(); });
}

FnFinSupp pullback(const LFMap& f, const FnFinSupp& alpha) {
  if (!is_proper(f)) throw std::invalid_argument("pull-back along a non-proper map");
  if (alpha.domain_size() != f.target().size()) throw MismatchError("function is not defined on the target of the map");
  FnFinSupp out(f.source().size());
  for (std::size_t x = 0; x < f.source().size(); ++x) out.set(x, alpha(f(x)));
  return out;
}

namespace {

LFType::Orders multiply_orders(const LFType::Orders& a, const LFType::Orders& b) {
  LFType::Orders out(std::max(a.size(), b.size()), 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (i < a.size() ? a[i] : 1) * (i < b.size() ? b[i] : 1);
  return out;
}

}  // namespace

LFType product(const LFType& fiber, const LFType& base) {
  std::vector<LFType::Orders> comps;
  for (std::size_t f = 0; f < fiber.size(); ++f)
    for (std::size_t y = 0; y < base.size(); ++y) comps.push_back(multiply_orders(fiber.orders(f), base.orders(y)));
  return LFType(std::move(comps));
}

LFMap projection(const LFType& fiber, const LFType& base) {
  std::vector<std::size_t> m;
  for (std::size_t f = 0; f < fiber.size(); ++f)
    for (std::size_t y = 0; y < base.size(); ++y) m.push_back(y);
  return LFMap(product(fiber, base), base, std::move(m));
}

FiberPresentation projection_fibers(const LFType& fiber, const LFType& base) {
  FiberPresentation fp;
  fp.source_size = fiber.size() * base.size();
  fp.fibers.resize(base.size());
  for (std::size_t y = 0; y < base.size(); ++y)
    for (std::size_t f = 0; f < fiber.size(); ++f) fp.fibers[y].push_back({fiber.orders(f), f * base.size() + y});
  return fp;
}

LFMap product_map(const LFType& fiber, const LFMap& u) {
  std::vector<std::size_t> m;
  for (std::size_t f = 0; f < fiber.size(); ++f)
    for (std::size_t y = 0; y < u.source().size(); ++y) m.push_back(f * u.target().size() + u(y));
  return LFMap(product(fiber, u.source()), product(fiber, u.target()), std::move(m));
}

}  // namespace dhall
