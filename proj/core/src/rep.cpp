#include "dhall/rep.hpp"

#include "dhall/errors.hpp"

#include <numeric>

namespace dhall {

Rep::Rep(QuiverPtr quiver, PrimeField field, DimVector dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw MismatchError("dimension vector length differs from vertex count");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative dimension");
  if (maps_.size() != quiver_->arrows().size()) throw MismatchError("one matrix per arrow required");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Arrow& a = quiver_->arrows()[i];
    if (maps_[i].field() != field_) throw MismatchError("arrow map over a different field");
    if (maps_[i].rows() != static_cast<std::size_t>(dims_[a.target]) ||
        maps_[i].cols() != static_cast<std::size_t>(dims_[a.source]))
      throw MismatchError("arrow map shape inconsistent with dimension vector");
  }
}

Rep Rep::zero(QuiverPtr quiver, PrimeField field) {
  const std::size_t n = quiver->vertex_count();
  std::vector<FpMatrix> maps(quiver->arrows().size(), FpMatrix(field, 0, 0));
  return Rep(std::move(quiver), field, DimVector(n, 0), std::move(maps));
}

Rep Rep::simple(QuiverPtr quiver, PrimeField field, std::size_t vertex) {
  DimVector dims(quiver->vertex_count(), 0);
  dims.at(vertex) = 1;
  std::vector<FpMatrix> maps;
  for (const Arrow& a : quiver->arrows())
    maps.emplace_back(field, static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]));
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

FpMatrix Rep::path_map(const Path& path) const {
  FpMatrix m = FpMatrix::identity(field_, static_cast<std::size_t>(dims_[path.start]));
  for (std::size_t arrow : path.arrows) m = maps_[arrow] * m;
  return m;
}

bool Rep::compatible_with(const Rep& other) const {
  return field_ == other.field_ && (quiver_ == other.quiver_ || *quiver_ == *other.quiver_);
}

namespace {

void require_compatible(const Rep& a, const Rep& b) {
  if (!a.compatible_with(b)) throw MismatchError("representations over different quivers or fields");
}

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

}  // namespace

Rep direct_sum(const Rep& a, const Rep& b) {
  require_compatible(a, b);
  DimVector dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dim(i) + b.dim(i);
  std::vector<FpMatrix> maps;
  for (std::size_t i = 0; i < a.maps().size(); ++i) maps.push_back(block_diagonal(a.map(i), b.map(i)));
  return Rep(a.quiver_ptr(), a.field(), std::move(dims), std::move(maps));
}

RepMorphism RepMorphism::zero(const Rep& from, const Rep& to) {
  RepMorphism z;
  for (std::size_t v = 0; v < from.dims().size(); ++v)
    z.components.emplace_back(from.field(), static_cast<std::size_t>(to.dim(v)), static_cast<std::size_t>(from.dim(v)));
  return z;
}

RepMorphism RepMorphism::identity(const Rep& m) {
  RepMorphism id;
  for (int d : m.dims()) id.components.push_back(FpMatrix::identity(m.field(), static_cast<std::size_t>(d)));
  return id;
}

bool RepMorphism::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

bool RepMorphism::is_injective() const {
  for (const auto& c : components)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool RepMorphism::is_surjective() const {
  for (const auto& c : components)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool RepMorphism::is_invertible() const {
  for (const auto& c : components)
    if (!dhall::is_invertible(c)) return false;
  return true;
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism out;
  for (std::size_t v = 0; v < a.components.size(); ++v) out.components.push_back(a.components[v] + b.components[v]);
  return out;
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism out;
  for (std::size_t v = 0; v < a.components.size(); ++v) out.components.push_back(a.components[v] - b.components[v]);
  return out;
}

RepMorphism RepMorphism::scaled(Fp s) const {
  RepMorphism out;
  for (const auto& c : components) out.components.push_back(c.scaled(s));
  return out;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (g.components.size() != f.components.size()) throw MismatchError("composing morphisms of different quivers");
  RepMorphism out;
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
  return out;
}

bool is_intertwiner(const Rep& from, const Rep& to, const RepMorphism& phi) {
  if (!from.compatible_with(to)) return false;
  if (phi.components.size() != from.dims().size()) return false;
  for (std::size_t v = 0; v < phi.components.size(); ++v) {
    const FpMatrix& c = phi.components[v];
    if (c.field() != from.field()) return false;
    if (c.rows() != static_cast<std::size_t>(to.dim(v)) || c.cols() != static_cast<std::size_t>(from.dim(v)))
      return false;
  }
  const auto& arrows = from.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (!(to.map(i) * phi.components[arrows[i].source] == phi.components[arrows[i].target] * from.map(i)))
      return false;
  return true;
}

FpMatrix intertwiner_matrix(const Rep& m, const Rep& n) {
  require_compatible(m, n);
  const PrimeField& f = m.field();
  const std::size_t verts = m.dims().size();
  std::vector<std::size_t> col_offset(verts + 1, 0);
  for (std::size_t v = 0; v < verts; ++v)
    col_offset[v + 1] = col_offset[v] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  const auto& arrows = m.quiver().arrows();
  std::vector<std::size_t> row_offset(arrows.size() + 1, 0);
  for (std::size_t i = 0; i < arrows.size(); ++i)
    row_offset[i + 1] = row_offset[i] + static_cast<std::size_t>(n.dim(arrows[i].target) * m.dim(arrows[i].source));

  FpMatrix phi(f, row_offset.back(), col_offset.back());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::size_t s = arrows[i].source, t = arrows[i].target;
    const std::size_t ms = m.dim(s), nt = n.dim(t), ns = n.dim(s), mt = m.dim(t);
    const FpMatrix& na = n.map(i);
    const FpMatrix& ma = m.map(i);
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        const std::size_t row = row_offset[i] + r * ms + c;
        // + (N_a phi_s)[r][c] = sum_k N_a[r][k] phi_s[k][c]
        for (std::size_t k = 0; k < ns; ++k) {
          const std::size_t col = col_offset[s] + k * ms + c;
          phi.set(row, col, f.add(phi(row, col), na(r, k)));
        }
        // - (phi_t M_a)[r][c] = sum_k phi_t[r][k] M_a[k][c]
        for (std::size_t k = 0; k < mt; ++k) {
          const std::size_t col = col_offset[t] + r * mt + k;
          phi.set(row, col, f.sub(phi(row, col), ma(k, c)));
        }
      }
  }
  return phi;
}

std::vector<Fp> flatten(const RepMorphism& phi) {
  std::vector<Fp> out;
  for (const auto& c : phi.components) out.insert(out.end(), c.entries().begin(), c.entries().end());
  return out;
}

RepMorphism unflatten(const Rep& from, const Rep& to, std::span<const Fp> entries) {
  RepMorphism out;
  std::size_t pos = 0;
  for (std::size_t v = 0; v < from.dims().size(); ++v) {
    const std::size_t r = to.dim(v), c = from.dim(v);
    if (pos + r * c > entries.size()) throw MismatchError("flattened morphism too short");
    out.components.emplace_back(from.field(), r, c, std::vector<Fp>(entries.begin() + pos, entries.begin() + pos + r * c));
    pos += r * c;
  }
  if (pos != entries.size()) throw MismatchError("flattened morphism too long");
  return out;
}

std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n) {
  const FpMatrix k = kernel_basis(intertwiner_matrix(m, n));
  std::vector<RepMorphism> out;
  out.reserve(k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r) out.push_back(unflatten(m, n, k.row(r)));
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
  const FpMatrix phi = intertwiner_matrix(m, n);
  return phi.cols() - rank(phi);
}

std::size_t ext1_dim(const Rep& m, const Rep& n) {
  const FpMatrix phi = intertwiner_matrix(m, n);
  return phi.rows() - rank(phi);
}

int euler_form(const Rep& m, const Rep& n) {
  const FpMatrix phi = intertwiner_matrix(m, n);
  const std::size_t r = rank(phi);
  return static_cast<int>(phi.cols() - r) - static_cast<int>(phi.rows() - r);
}

SubspaceFamily whole_space(const Rep& m) {
  SubspaceFamily out;
  for (int d : m.dims()) out.push_back(FpMatrix::identity(m.field(), static_cast<std::size_t>(d)));
  return out;
}

SubspaceFamily zero_space(const Rep& m) {
  SubspaceFamily out;
  for (int d : m.dims()) out.emplace_back(m.field(), 0, static_cast<std::size_t>(d));
  return out;
}

bool is_subrep(const Rep& m, const SubspaceFamily& u) {
  const auto& arrows = m.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const FpMatrix& src = u[arrows[i].source];
    const FpMatrix& dst = u[arrows[i].target];
    for (std::size_t r = 0; r < src.rows(); ++r) {
      const auto img = m.map(i).apply(src.row(r));
      if (!in_row_space(dst, img)) return false;
    }
  }
  return true;
}

SubspaceFamily kernel(const Rep& from, const RepMorphism& phi) {
  SubspaceFamily out;
  for (std::size_t v = 0; v < phi.components.size(); ++v) {
    FpMatrix k = kernel_basis(phi.components[v]);
    if (k.rows() == 0) k = FpMatrix(from.field(), 0, static_cast<std::size_t>(from.dim(v)));
    out.push_back(std::move(k));
  }
  return out;
}

SubspaceFamily image(const Rep& to, const RepMorphism& phi) {
  SubspaceFamily out;
  for (std::size_t v = 0; v < phi.components.size(); ++v) {
    FpMatrix im = image_basis(phi.components[v]);
    if (im.rows() == 0) im = FpMatrix(to.field(), 0, static_cast<std::size_t>(to.dim(v)));
    out.push_back(std::move(im));
  }
  return out;
}

Rep subquotient(const Rep& m, const SubspaceFamily& outer, const SubspaceFamily& inner) {
  const std::size_t verts = m.dims().size();
  const PrimeField& f = m.field();
  std::vector<FpMatrix> complement, basis_t;
  DimVector dims(verts);
  for (std::size_t v = 0; v < verts; ++v) {
    FpMatrix w = complement_rows(inner[v], outer[v]);
    if (w.rows() == 0) w = FpMatrix(f, 0, static_cast<std::size_t>(m.dim(v)));
    FpMatrix in = row_space_basis(inner[v]);
    if (in.rows() == 0) in = FpMatrix(f, 0, static_cast<std::size_t>(m.dim(v)));
    dims[v] = static_cast<int>(w.rows());
    basis_t.push_back(in.stacked(w).transpose());
    complement.push_back(std::move(w));
  }
  const auto& arrows = m.quiver().arrows();
  std::vector<FpMatrix> maps;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::size_t s = arrows[i].source, t = arrows[i].target;
    const std::size_t inner_t = basis_t[t].cols() - complement[t].rows();
    FpMatrix out(f, complement[t].rows(), complement[s].rows());
    for (std::size_t c = 0; c < complement[s].rows(); ++c) {
      const auto img = m.map(i).apply(complement[s].row(c));
      const auto coords = solve(basis_t[t], img);
      if (!coords) throw std::invalid_argument("subquotient: outer family is not closed under arrows");
      for (std::size_t r = 0; r < complement[t].rows(); ++r) out.set(r, c, (*coords)[inner_t + r]);
    }
    maps.push_back(std::move(out));
  }
  return Rep(m.quiver_ptr(), f, std::move(dims), std::move(maps));
}

}  // namespace dhall
