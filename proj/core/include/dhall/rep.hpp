#pragma once

#include "dhall/field_matrix.hpp"
#include "dhall/quiver.hpp"

#include <memory>
#include <vector>

namespace dhall {

using QuiverPtr = std::shared_ptr<const Quiver>;

// A representation of a quiver over F_p: a vector space per vertex (given by
// its dimension) and a matrix of shape d_target x d_source per arrow.
class Rep {
 public:
  Rep(QuiverPtr quiver, PrimeField field, DimVector dims, std::vector<FpMatrix> maps);

  static Rep zero(QuiverPtr quiver, PrimeField field);
  static Rep simple(QuiverPtr quiver, PrimeField field, std::size_t vertex);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  int dim(std::size_t vertex) const { return dims_[vertex]; }
  int total_dim() const;
  const FpMatrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<FpMatrix>& maps() const { return maps_; }

  // Composite of the arrow maps along a path.
  FpMatrix path_map(const Path& path) const;

  bool compatible_with(const Rep& other) const;

  friend bool operator==(const Rep& a, const Rep& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_ && a.field_ == b.field_;
  }

 private:
  QuiverPtr quiver_;
  PrimeField field_;
  DimVector dims_;
  std::vector<FpMatrix> maps_;
};

Rep direct_sum(const Rep& a, const Rep& b);

// Per-vertex components; component v has shape (target dim v) x (source dim v).
struct RepMorphism {
  std::vector<FpMatrix> components;

  static RepMorphism zero(const Rep& from, const Rep& to);
  static RepMorphism identity(const Rep& m);

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_invertible() const;

  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  RepMorphism scaled(Fp s) const;
  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;
};

// g after f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

// N_a phi_{s(a)} == phi_{t(a)} M_a for every arrow a, with matching shapes.
bool is_intertwiner(const Rep& from, const Rep& to, const RepMorphism& phi);

// Matrix of the map Phi: (+)_i Hom(M_i, N_i) -> (+)_a Hom(M_{s(a)}, N_{t(a)}),
// phi -> N_a phi_{s(a)} - phi_{t(a)} M_a, on row-major flattened blocks.
FpMatrix intertwiner_matrix(const Rep& m, const Rep& n);

std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
std::size_t ext1_dim(const Rep& m, const Rep& n);
int euler_form(const Rep& m, const Rep& n);

// Flatten / unflatten a morphism to the concatenated row-major entries of its
// components.
std::vector<Fp> flatten(const RepMorphism& phi);
RepMorphism unflatten(const Rep& from, const Rep& to, std::span<const Fp> entries);

// A subspace at every vertex, stored as row bases.
using SubspaceFamily = std::vector<FpMatrix>;

SubspaceFamily whole_space(const Rep& m);
SubspaceFamily zero_space(const Rep& m);
bool is_subrep(const Rep& m, const SubspaceFamily& u);
SubspaceFamily kernel(const Rep& from, const RepMorphism& phi);
SubspaceFamily image(const Rep& to, const RepMorphism& phi);

// The representation outer/inner, for arrow-closed families inner <= outer.
Rep subquotient(const Rep& m, const SubspaceFamily& outer, const SubspaceFamily& inner);

}  // namespace dhall
