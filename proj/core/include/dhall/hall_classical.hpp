#pragma once

#include "dhall/hall_element.hpp"
#include "dhall/heart.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace dhall {

using HeartElement = HallElement<IsoClass>;

// The Hall algebra of the heart, with structure constants obtained by
// counting subobjects: g_{x,y}^z = #{x' <= z : x' ~ x, z/x' ~ y}.
class ClassicalHall {
 public:
  explicit ClassicalHall(const Heart& heart) : heart_(heart) {}

  const Heart& heart() const { return heart_; }

  BigInt hall_number(const IsoClass& x, const IsoClass& y, const IsoClass& z) const;

  HeartElement basis_product(const IsoClass& x, const IsoClass& y) const;
  HeartElement product(const HeartElement& a, const HeartElement& b) const;

  // Sum over Aut(x)-orbits of monomorphisms x -> z with cokernel ~ y of the
  // reciprocal stabilizer orders.
  Rational orbit_check(const IsoClass& x, const IsoClass& y, const IsoClass& z) const;

 private:
  using Histogram = std::map<std::pair<IsoClass, IsoClass>, BigInt>;
  const Histogram& histogram(const IsoClass& z) const;

  const Heart& heart_;
  mutable std::mutex mutex_;
  mutable std::map<IsoClass, Histogram> histograms_;
  mutable std::map<std::pair<IsoClass, IsoClass>, HeartElement> products_;
};

}  // namespace dhall
