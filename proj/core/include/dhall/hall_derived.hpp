#pragma once

#include "dhall/derived_category.hpp"
#include "dhall/hall_classical.hpp"
#include "dhall/hall_element.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace dhall {

using DerivedElement = HallElement<GradedObject>;

// Z_{x_1}^{[n_1]} Z_{x_2}^{[n_2]} ... read left to right. In normal form the
// degrees are strictly decreasing and no factor is zero.
using OrderedMonomial = std::vector<std::pair<int, IsoClass>>;

OrderedMonomial to_monomial(const GradedObject& x);
// Only valid for normal-form monomials.
GradedObject from_monomial(const OrderedMonomial& m);
bool is_normal(const OrderedMonomial& m);

// Key (k, c) of the exact sequences 0 -> k -> y -> x -> c -> 0.
using GammaTable = std::map<std::pair<IsoClass, IsoClass>, Rational>;

class DerivedHall {
 public:
  explicit DerivedHall(const Heart& heart) : heart_(heart), classical_(heart) {}

  const Heart& heart() const { return heart_; }
  const ClassicalHall& classical() const { return classical_; }

  // gamma_{x,y}^{k,c} = |V(k, y, x, c)| / (|Aut x| |Aut y|), for every (k, c).
  const GammaTable& gamma_table(const IsoClass& x, const IsoClass& y) const;
  Rational gamma(const IsoClass& x, const IsoClass& y, const IsoClass& k, const IsoClass& c) const;
  // The same number, counting the triples k -> y -> x -> c directly.
  Rational gamma_by_exact_sequences(const IsoClass& x, const IsoClass& y, const IsoClass& k,
                                    const IsoClass& c) const;

  // Rewrites a monomial into a combination of normal-form monomials.
  const HallElement<OrderedMonomial>& normal_form(const OrderedMonomial& m) const;

  DerivedElement basis_product(const GradedObject& x, const GradedObject& y) const;
  DerivedElement product(const DerivedElement& a, const DerivedElement& b) const;

  // Structure constant computed from counted morphisms with prescribed cone,
  // weighted by negative Ext orders and automorphism groups.
  Rational derived_hall_number(const GradedObject& x, const GradedObject& y, const GradedObject& z) const;
  // Objects z that can occur as extensions in a triangle x -> z -> y.
  std::vector<GradedObject> candidate_middles(const GradedObject& x, const GradedObject& y) const;
  DerivedElement oracle_basis_product(const GradedObject& x, const GradedObject& y) const;
  DerivedElement oracle_product(const DerivedElement& a, const DerivedElement& b) const;

 private:
  const std::map<GradedObject, BigInt>& cones(const GradedObject& x, const GradedObject& z) const;
  HallElement<OrderedMonomial> rewrite(const OrderedMonomial& m) const;

  const Heart& heart_;
  ClassicalHall classical_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<IsoClass, IsoClass>, GammaTable> gammas_;
  mutable std::map<OrderedMonomial, HallElement<OrderedMonomial>> normal_forms_;
  mutable std::map<std::pair<GradedObject, GradedObject>, std::map<GradedObject, BigInt>> cones_;
};

DerivedElement heart_embed(const HeartElement& a);
DerivedElement shift_action(const DerivedElement& a, int n);

}  // namespace dhall
