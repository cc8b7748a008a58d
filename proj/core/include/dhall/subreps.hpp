#pragma once

#include "dhall/heart.hpp"
#include "dhall/rep.hpp"

#include <optional>
#include <vector>

namespace dhall {

// All subspaces of F_p^n of dimension k, as reduced row-echelon bases.
std::vector<FpMatrix> enumerate_subspaces(const PrimeField& field, int n, int k);

struct Subrep {
  SubspaceFamily basis;  // per-vertex row basis of the subspace
  Rep sub;
  Rep quotient;
};

// Every arrow-closed tuple of subspaces of z (optionally only those with the
// given dimension vector), each with its induced sub and quotient.
std::vector<Subrep> subreps(const Rep& z, const Bounds& bounds, const std::optional<DimVector>& sub_dims = std::nullopt);

}  // namespace dhall
