#pragma once

#include "dhall/numbers.hpp"

#include <map>
#include <utility>

namespace dhall {

// Finite formal Q-linear combination of basis labels; zero coefficients are
// never stored.
template <class Key>
class HallElement {
 public:
  using Terms = std::map<Key, Rational>;

  HallElement() = default;
  static HallElement basis(const Key& k) {
    HallElement e;
    e.add(k, Rational(1));
    return e;
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  HallElement scaled(const Rational& s) const {
    HallElement out;
    if (s == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
  }

  HallElement& operator+=(const HallElement& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a += b.scaled(Rational(-1)); }
  friend bool operator==(const HallElement&, const HallElement&) = default;

  // Bilinear extension of a product on basis elements.
  template <class BasisProduct>
  static HallElement bilinear(const HallElement& a, const HallElement& b, BasisProduct&& basis_product) {
    HallElement out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out += basis_product(ka, kb).scaled(ca * cb);
    return out;
  }

  // Apply a map on labels (linear extension).
  template <class OtherKey, class Relabel>
  HallElement<OtherKey> relabel(Relabel&& f) const {
    HallElement<OtherKey> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace dhall
