#pragma once

#include "dhall/numbers.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dhall {

// A locally finite homotopy type, recorded up to what the counting formulas
// see: its set of components and, per component, the orders of pi_1, pi_2, ...
// (trailing 1s may be omitted).
class LFType {
 public:
  using Orders = std::vector<std::uint64_t>;

  LFType() = default;
  explicit LFType(std::vector<Orders> components);

  std::size_t size() const { return components_.size(); }
  const Orders& orders(std::size_t component) const { return components_.at(component); }
  const std::vector<Orders>& components() const { return components_; }

  // prod_{i>0} |pi_i|^{(-1)^i}
  Rational weight(std::size_t component) const;

  friend bool operator==(const LFType&, const LFType&) = default;

 private:
  std::vector<Orders> components_;
};

// Alternating product prod_{i>0} orders[i-1]^{(-1)^i}.
Rational homotopy_weight(const LFType::Orders& orders);

class LFMap {
 public:
  LFMap(LFType source, LFType target, std::vector<std::size_t> component_map);

  static LFMap identity(const LFType& x);

  const LFType& source() const { return source_; }
  const LFType& target() const { return target_; }
  std::size_t operator()(std::size_t component) const { return map_.at(component); }
  const std::vector<std::size_t>& component_map() const { return map_; }

 private:
  LFType source_;
  LFType target_;
  std::vector<std::size_t> map_;
};

// g after f.
LFMap compose(const LFMap& g, const LFMap& f);

// Finitely supported rational function on the components of an LFType.
class FnFinSupp {
 public:
  explicit FnFinSupp(std::size_t domain_size) : domain_size_(domain_size) {}
  FnFinSupp(std::size_t domain_size, std::map<std::size_t, Rational> values);

  static FnFinSupp constant(std::size_t domain_size, const Rational& value);

  std::size_t domain_size() const { return domain_size_; }
  Rational operator()(std::size_t component) const;
  void set(std::size_t component, const Rational& value);
  const std::map<std::size_t, Rational>& support() const { return values_; }

  friend FnFinSupp operator+(const FnFinSupp& a, const FnFinSupp& b);
  FnFinSupp scaled(const Rational& s) const;
  friend bool operator==(const FnFinSupp&, const FnFinSupp&) = default;

 private:
  std::size_t domain_size_;
  std::map<std::size_t, Rational> values_;  // no zero entries
};

// Homotopy fibers of a map, given directly: for every target component, the
// components of the fiber over it with their homotopy orders and the source
// component each one lands in.
struct FiberComponent {
  LFType::Orders orders;
  std::size_t source_component;
};

struct FiberPresentation {
  std::size_t source_size = 0;
  std::vector<std::vector<FiberComponent>> fibers;  // indexed by target component
};

// Push-forward from the source/target homotopy orders of f.
FnFinSupp pushforward_l1(const LFMap& f, const FnFinSupp& alpha);

// Push-forward from an explicit fiber presentation.
FnFinSupp pushforward_fibers(const FiberPresentation& fibers, const FnFinSupp& alpha);

bool is_proper(const LFMap& f);

// (f^* alpha)(x) = alpha(f(x)); requires f proper.
FnFinSupp pullback(const LFMap& f, const FnFinSupp& alpha);

// F x Y, components indexed as f * |Y| + y, orders multiplied degreewise.
LFType product(const LFType& fiber, const LFType& base);
LFMap projection(const LFType& fiber, const LFType& base);
FiberPresentation projection_fibers(const LFType& fiber, const LFType& base);
// id_F x u : F x Y' -> F x Y
LFMap product_map(const LFType& fiber, const LFMap& u);

}  // namespace dhall
