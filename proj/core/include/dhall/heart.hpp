#pragma once

#include "dhall/numbers.hpp"
#include "dhall/rep.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace dhall {

// Resource limits. Exceeding any of them raises ResourceError.
struct Bounds {
  // Largest |End(M)| (or any Hom space) we are willing to enumerate.
  std::uint64_t max_enumeration = 1ull << 16;
  // Largest total dimension accepted by subobject enumeration.
  int max_subrep_total_dim = 6;
  // Largest number of candidate subspace tuples examined by subreps().
  std::uint64_t max_subrep_candidates = 1ull << 20;
  // Attempts per positive root when searching for an indecomposable.
  std::uint64_t max_root_search = 200000;
};

// Isomorphism class of a representation of a finite-type quiver: multiset of
// indecomposable labels, sorted by label.
struct IsoClass {
  std::vector<std::pair<std::size_t, int>> parts;  // (label, multiplicity > 0)

  static IsoClass single(std::size_t label, int mult = 1) { return IsoClass{{{label, mult}}}; }
  bool is_zero() const { return parts.empty(); }
  int multiplicity(std::size_t label) const;

  friend IsoClass operator+(const IsoClass& a, const IsoClass& b);  // direct sum
  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;
};

// The heart rep_{F_p}(Q) for a quiver of finite representation type, together
// with its indecomposable catalog and memo tables.
class Heart {
 public:
  Heart(Quiver quiver, PrimeField field, Bounds bounds = {});

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  const Bounds& bounds() const { return bounds_; }

  // Canonical indecomposables: ordered by total dimension, then dimension
  // vector in decreasing lexicographic order (so S1 precedes S2).
  const std::vector<Rep>& indecomposables() const { return indecomposables_; }
  const std::string& name(std::size_t label) const { return names_.at(label); }
  std::size_t label_of_name(const std::string& name) const;

  Rep representative(const IsoClass& x) const;
  DimVector dim_vector(const IsoClass& x) const;
  int total_dim(const IsoClass& x) const;

  IsoClass decompose(const Rep& m) const;
  bool is_indecomposable(const Rep& m) const;
  bool iso_test(const Rep& m, const Rep& n) const;

  BigInt aut_order(const Rep& m) const;
  BigInt aut_order(const IsoClass& x) const;

  std::size_t hom_dim(const IsoClass& x, const IsoClass& y) const;
  std::size_t ext1_dim(const IsoClass& x, const IsoClass& y) const;
  int euler_form(const IsoClass& x, const IsoClass& y) const;

  std::vector<IsoClass> classes_with_dim(const DimVector& d) const;
  // All classes whose dimension vector is componentwise <= bound.
  std::vector<IsoClass> classes_below(const DimVector& bound) const;
  // All classes with total dimension <= n, including 0; sorted.
  std::vector<IsoClass> classes_up_to(int n) const;

  // Enumerate all elements of the span of `basis` (p^{|basis|} of them),
  // refusing when that exceeds the enumeration bound.
  std::vector<RepMorphism> enumerate_span(const std::vector<RepMorphism>& basis, const Rep& from,
                                          const Rep& to) const;
  void require_enumerable(std::size_t dimension, const char* what) const;

 private:
  void build_catalog();
  Rep find_indecomposable(const DimVector& root) const;
  std::size_t match_indecomposable(const Rep& m) const;
  void decompose_into(const Rep& m, IsoClass& out) const;

  QuiverPtr quiver_;
  PrimeField field_;
  Bounds bounds_;
  std::vector<Rep> indecomposables_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> fingerprints_;  // dim Hom(I_j, I_k) over j

  mutable std::mutex memo_mutex_;
  mutable std::map<IsoClass, BigInt> aut_memo_;
  mutable std::map<std::pair<IsoClass, IsoClass>, std::pair<std::size_t, std::size_t>> hom_ext_memo_;
};

}  // namespace dhall
