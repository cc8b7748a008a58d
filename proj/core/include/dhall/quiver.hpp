#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dhall {

using DimVector = std::vector<int>;

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A path is a sequence of arrow indices; an empty path is the trivial path
// at `start`.
struct Path {
  std::size_t start;
  std::size_t end;
  std::vector<std::size_t> arrows;
};

// Finite quiver without oriented cycles. Vertices are 0-based.
class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Underlying graph is a disjoint union of A_n, D_n, E_6, E_7, E_8.
  bool is_finite_type() const;
  // e.g. "A2", "D4", "A1+A3"; empty when not of finite type.
  std::string dynkin_type() const;

  // All paths starting at `vertex` (including the trivial path), grouped by
  // end vertex: result[w] lists the paths vertex -> w.
  std::vector<std::vector<Path>> paths_from(std::size_t vertex) const;

  // Positive roots of the Tits form, generated by simple reflections.
  // Only meaningful for finite type.
  std::vector<DimVector> positive_roots() const;

  // sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}
  int euler_form(const DimVector& d, const DimVector& e) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

Quiver linear_quiver(std::size_t n);

}  // namespace dhall
