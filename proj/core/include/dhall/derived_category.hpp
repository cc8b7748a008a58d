#pragma once

#include "dhall/heart.hpp"
#include "dhall/numbers.hpp"
#include "dhall/rep.hpp"

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace dhall {

// An object of D^b(heart) up to isomorphism: (+)_n x_n[n], keyed by shift
// degree n. Hom(x[n], y[m]) = Ext^{m-n}(x, y); x[n] has its cohomology in
// cohomological degree -n.
struct GradedObject {
  std::map<int, IsoClass> parts;  // zero components omitted

  static GradedObject in_degree(const IsoClass& x, int n);

  bool is_zero() const { return parts.empty(); }
  bool in_heart() const { return parts.empty() || (parts.size() == 1 && parts.begin()->first == 0); }
  IsoClass component(int n) const;
  GradedObject shifted(int n) const;
  int min_degree() const { return parts.begin()->first; }
  int max_degree() const { return parts.rbegin()->first; }

  friend GradedObject operator+(const GradedObject& a, const GradedObject& b);  // direct sum
  friend bool operator==(const GradedObject&, const GradedObject&) = default;
  friend auto operator<=>(const GradedObject&, const GradedObject&) = default;
};

// Every graded object with components in shift degrees lo..hi, each of total
// dimension <= max_dim (including 0), sorted.
std::vector<GradedObject> graded_objects(const Heart& heart, int lo, int hi, int max_dim);

// Bounded cochain complex of representations, cohomologically indexed:
// terms()[k] sits in degree lo() + k and d^j : C^j -> C^{j+1}.
class Complex {
 public:
  // Validates shapes, the intertwining property of each differential and d∘d = 0.
  Complex(const Heart& heart, int lo, std::vector<Rep> terms, std::vector<RepMorphism> differentials);

  const Heart& heart() const { return *heart_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  Rep term(int j) const;
  RepMorphism differential(int j) const;

  // (C[n])^j = C^{j+n} with differential -d.
  Complex shifted(int n) const;

 private:
  const Heart* heart_;
  int lo_;
  std::vector<Rep> terms_;
  std::vector<RepMorphism> diffs_;
};

class ChainMap {
 public:
  // components[k] : source^{lo+k} -> target^{lo+k}, for lo = min of both
  // ranges; validated to commute with the differentials.
  ChainMap(Complex source, Complex target, int lo, std::vector<RepMorphism> components);

  static ChainMap zero(Complex source, Complex target);
  static ChainMap identity(const Complex& c);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  RepMorphism component(int j) const;

  // f[n]^j = f^{j+n}
  ChainMap shifted(int n) const;

 private:
  Complex source_;
  Complex target_;
  int lo_;
  std::vector<RepMorphism> components_;
};

// Per-degree iso class of ker d^j / im d^{j-1}, placed at shift degree -j.
GradedObject cohomology(const Complex& c);

Complex mapping_cone(const ChainMap& f);
GradedObject cone_class(const ChainMap& f);

struct ProjectiveResolution {
  Rep p1;
  Rep p0;
  RepMorphism d;  // p1 -> p0, injective, cokernel ~ the resolved module
};

// Indecomposable projective P_i of the path algebra.
Rep projective(const Heart& heart, std::size_t vertex);

// 0 -> (+)_a P_{t(a)} (x) M_{s(a)} -> (+)_i P_i (x) M_i -> M -> 0
ProjectiveResolution standard_resolution(const Heart& heart, const Rep& m);

// Degreewise assembly of the standard resolutions of the components.
Complex projective_model(const Heart& heart, const GradedObject& x);
Complex zero_differential_model(const Heart& heart, const GradedObject& x);

// dim Hom_D(x, z[i]) = sum_n dim Hom(x_n, z_{n-i}) + dim Ext^1(x_n, z_{n-i+1})
std::size_t derived_hom_dim(const Heart& heart, const GradedObject& x, const GradedObject& z, int i);

// prod_n |Aut(x_n)| * prod_n p^{dim Ext^1(x_n, x_{n+1})}
BigInt graded_aut_order(const Heart& heart, const GradedObject& x);

// Chain maps source -> target modulo null-homotopic ones. When the source is
// a bounded complex of projectives this is Hom in the derived category.
class HomotopyClasses {
 public:
  HomotopyClasses(Complex source, Complex target);

  std::size_t dimension() const { return complement_.rows(); }
  std::size_t chain_map_dimension() const { return chain_maps_.rows(); }
  std::size_t null_homotopic_dimension() const { return homotopies_.rows(); }

  // One representative per class (p^dimension() of them), enumeration bounded.
  std::vector<ChainMap> representatives() const;
  // The full class of a representative (all chain maps homotopic to it).
  std::vector<ChainMap> homotopy_class(const ChainMap& f) const;

  ChainMap from_flat(std::span<const Fp> flat) const;
  std::vector<Fp> to_flat(const ChainMap& f) const;

 private:
  using ChainMapParts = std::vector<RepMorphism>;  // indexed by degree - lo_
  ChainMapParts zero_parts() const;
  ChainMapParts split(std::span<const Fp> flat) const;
  std::vector<Fp> join(const ChainMapParts& parts) const;
  ChainMap assemble(ChainMapParts parts) const;

  Complex source_;
  Complex target_;
  int lo_, hi_;
  FpMatrix chain_maps_;   // rows: basis of all chain maps (flattened)
  FpMatrix homotopies_;   // rows: basis of null-homotopic maps
  FpMatrix complement_;   // rows: complement of homotopies_ in chain_maps_
};

// Partition of [x, z] by the iso class of the cone, computed on the projective
// model of x mapping to the zero-differential model of z.
std::map<GradedObject, BigInt> cone_histogram(const Heart& heart, const GradedObject& x, const GradedObject& z);

// |[x, z]_y|
BigInt count_morphisms_with_cone(const Heart& heart, const GradedObject& x, const GradedObject& z,
                                 const GradedObject& y);

}  // namespace dhall
