#include "dhall/derived_category.hpp"

#include "dhall/errors.hpp"

#include <algorithm>

namespace dhall {

GradedObject GradedObject::in_degree(const IsoClass& x, int n) {
  GradedObject g;
  if (!x.is_zero()) g.parts.emplace(n, x);
  return g;
}

IsoClass GradedObject::component(int n) const {
  auto it = parts.find(n);
  return it == parts.end() ? IsoClass{} : it->second;
}

GradedObject GradedObject::shifted(int n) const {
  GradedObject g;
  for (const auto& [deg, x] : parts) g.parts.emplace(deg + n, x);
  return g;
}

GradedObject operator+(const GradedObject& a, const GradedObject& b) {
  GradedObject g = a;
  for (const auto& [deg, x] : b.parts) {
    auto [it, inserted] = g.parts.try_emplace(deg, x);
    if (!inserted) it->second = it->second + x;
  }
  return g;
}

std::vector<GradedObject> graded_objects(const Heart& heart, int lo, int hi, int max_dim) {
  const std::vector<IsoClass> per_degree = heart.classes_up_to(max_dim);
  std::vector<GradedObject> out{GradedObject{}};
  for (int n = lo; n <= hi; ++n) {
    std::vector<GradedObject> next;
    for (const GradedObject& g : out)
      for (const IsoClass& c : per_degree) next.push_back(g + GradedObject::in_degree(c, n));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void place(FpMatrix& dst, std::size_t r0, std::size_t c0, const FpMatrix& src) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst.set(r0 + r, c0 + c, src(r, c));
}

std::size_t udim(const Rep& m, std::size_t v) { return static_cast<std::size_t>(m.dim(v)); }

// Morphism (+)_c from[c] -> (+)_r to[r] assembled from blocks[r][c] (nullptr = 0).
RepMorphism block_morphism(const std::vector<const Rep*>& from, const std::vector<const Rep*>& to,
                           const std::vector<std::vector<const RepMorphism*>>& blocks, const PrimeField& f,
                           std::size_t verts) {
  RepMorphism out;
  for (std::size_t v = 0; v < verts; ++v) {
    std::size_t rows = 0, cols = 0;
    for (const Rep* r : to) rows += udim(*r, v);
    for (const Rep* c : from) cols += udim(*c, v);
    FpMatrix m(f, rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < to.size(); ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < from.size(); ++j) {
        if (blocks[i][j]) place(m, r0, c0, blocks[i][j]->components[v]);
        c0 += udim(*from[j], v);
      }
      r0 += udim(*to[i], v);
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Complex::Complex(const Heart& heart, int lo, std::vector<Rep> terms, std::vector<RepMorphism> differentials)
    : heart_(&heart), lo_(lo), terms_(std::move(terms)), diffs_(std::move(differentials)) {
  if (terms_.empty()) {
    if (!diffs_.empty()) throw std::invalid_argument("differentials on an empty complex");
    return;
  }
  if (diffs_.size() + 1 != terms_.size()) throw std::invalid_argument("complex needs one differential between consecutive terms");
  const Rep zero = Rep::zero(heart.quiver_ptr(), heart.field());
  for (const Rep& t : terms_)
    if (!t.compatible_with(zero)) throw MismatchError("complex term over a different quiver or field");
  for (std::size_t k = 0; k < diffs_.size(); ++k)
    if (!is_intertwiner(terms_[k], terms_[k + 1], diffs_[k]))
      throw std::invalid_argument("differential is not a morphism of representations");
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!compose(diffs_[k + 1], diffs_[k]).is_zero()) throw std::invalid_argument("d∘d != 0");
}

Rep Complex::term(int j) const {
  if (j < lo_ || j > hi()) return Rep::zero(heart_->quiver_ptr(), heart_->field());
  return terms_[static_cast<std::size_t>(j - lo_)];
}

RepMorphism Complex::differential(int j) const {
  if (j < lo_ || j >= hi()) return RepMorphism::zero(term(j), term(j + 1));
  return diffs_[static_cast<std::size_t>(j - lo_)];
}

Complex Complex::shifted(int n) const {
  std::vector<RepMorphism> d;
  for (const auto& m : diffs_) d.push_back(m.scaled(heart_->field().neg(1)));
  return Complex(*heart_, lo_ - n, terms_, std::move(d));
}

ChainMap::ChainMap(Complex source, Complex target, int lo, std::vector<RepMorphism> components)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), components_(std::move(components)) {
  const int a = std::min(source_.lo(), target_.lo()) - 1;
  const int b = std::max(source_.hi(), target_.hi()) + 1;
  for (int j = a; j <= b; ++j) {
    const RepMorphism f = component(j);
    if (!is_intertwiner(source_.term(j), target_.term(j), f))
      throw std::invalid_argument("chain map component is not a morphism of representations");
    const RepMorphism lhs = compose(target_.differential(j), f);
    const RepMorphism rhs = compose(component(j + 1), source_.differential(j));
    if (!(lhs == rhs)) throw std::invalid_argument("chain map does not commute with the differentials");
  }
}

ChainMap ChainMap::zero(Complex source, Complex target) {
  const int lo = std::min(source.lo(), target.lo());
  return ChainMap(std::move(source), std::move(target), lo, {});
}

ChainMap ChainMap::identity(const Complex& c) {
  std::vector<RepMorphism> comps;
  for (int j = c.lo(); j <= c.hi(); ++j) comps.push_back(RepMorphism::identity(c.term(j)));
  return ChainMap(c, c, c.lo(), std::move(comps));
}

RepMorphism ChainMap::component(int j) const {
  if (j < lo_ || j >= lo_ + static_cast<int>(components_.size()))
    return RepMorphism::zero(source_.term(j), target_.term(j));
  return components_[static_cast<std::size_t>(j - lo_)];
}

ChainMap ChainMap::shifted(int n) const {
  return ChainMap(source_.shifted(n), target_.shifted(n), lo_ - n, components_);
}

GradedObject cohomology(const Complex& c) {
  GradedObject out;
  for (int j = c.lo(); j <= c.hi(); ++j) {
    const Rep t = c.term(j);
    const SubspaceFamily cycles = kernel(t, c.differential(j));
    const SubspaceFamily boundaries = image(t, c.differential(j - 1));
    const IsoClass h = c.heart().decompose(subquotient(t, cycles, boundaries));
    if (!h.is_zero()) out.parts.emplace(-j, h);
  }
  return out;
}

Complex mapping_cone(const ChainMap& f) {
  const Complex& a = f.source();
  const Complex& b = f.target();
  const Heart& heart = a.heart();
  const std::size_t verts = heart.quiver().vertex_count();
  const int lo = std::min(a.lo() - 1, b.lo());
  const int hi = std::max(a.hi() - 1, b.hi());
  std::vector<Rep> terms;
  for (int j = lo; j <= hi; ++j) terms.push_back(direct_sum(a.term(j + 1), b.term(j)));
  std::vector<RepMorphism> diffs;
  for (int j = lo; j < hi; ++j) {
    const Rep a1 = a.term(j + 1), bj = b.term(j), a2 = a.term(j + 2), b1 = b.term(j + 1);
    const RepMorphism minus_da = a.differential(j + 1).scaled(heart.field().neg(1));
    const RepMorphism fa = f.component(j + 1);
    const RepMorphism db = b.differential(j);
    diffs.push_back(block_morphism({&a1, &bj}, {&a2, &b1}, {{&minus_da, nullptr}, {&fa, &db}}, heart.field(), verts));
  }
  if (terms.empty()) return Complex(heart, 0, {}, {});
  return Complex(heart, lo, std::move(terms), std::move(diffs));
}

GradedObject cone_class(const ChainMap& f) { return cohomology(mapping_cone(f)); }

Rep projective(const Heart& heart, std::size_t vertex) {
  const Quiver& q = heart.quiver();
  const auto paths = q.paths_from(vertex);
  DimVector dims(q.vertex_count());
  for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = static_cast<int>(paths[w].size());
  std::vector<FpMatrix> maps;
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const Arrow& a = q.arrows()[i];
    FpMatrix m(heart.field(), paths[a.target].size(), paths[a.source].size());
    for (std::size_t c = 0; c < paths[a.source].size(); ++c) {
      auto extended = paths[a.source][c].arrows;
      extended.push_back(i);
      const auto& dst = paths[a.target];
      const auto it = std::find_if(dst.begin(), dst.end(), [&](const Path& p) { return p.arrows == extended; });
      m.set(static_cast<std::size_t>(it - dst.begin()), c, 1);
    }
    maps.push_back(std::move(m));
  }
  return Rep(heart.quiver_ptr(), heart.field(), std::move(dims), std::move(maps));
}

namespace {

// Direct sum of indecomposable projectives, with the position of every
// summand inside each vertex space.
struct FreeModule {
  Rep rep;
  std::vector<std::size_t> generators;            // vertex of each summand
  std::vector<std::vector<std::size_t>> offsets;  // offsets[k][w]
};

FreeModule free_module(const Heart& heart, const std::vector<std::size_t>& generators) {
  FreeModule fm{Rep::zero(heart.quiver_ptr(), heart.field()), generators, {}};
  for (std::size_t g : generators) {
    std::vector<std::size_t> off(heart.quiver().vertex_count());
    for (std::size_t w = 0; w < off.size(); ++w) off[w] = udim(fm.rep, w);
    fm.offsets.push_back(std::move(off));
    fm.rep = direct_sum(fm.rep, projective(heart, g));
  }
  return fm;
}

// The morphism out of a free module sending generator k to images[k] in N_{g_k}.
RepMorphism from_generators(const Heart& heart, const FreeModule& fm, const Rep& n,
                            const std::vector<std::vector<Fp>>& images) {
  const Quiver& q = heart.quiver();
  RepMorphism out = RepMorphism::zero(fm.rep, n);
  for (std::size_t k = 0; k < fm.generators.size(); ++k) {
    const auto paths = q.paths_from(fm.generators[k]);
    for (std::size_t w = 0; w < q.vertex_count(); ++w)
      for (std::size_t idx = 0; idx < paths[w].size(); ++idx) {
        const auto col = n.path_map(paths[w][idx]).apply(images[k]);
        for (std::size_t r = 0; r < col.size(); ++r) out.components[w].set(r, fm.offsets[k][w] + idx, col[r]);
      }
  }
  return out;
}

std::size_t path_index(const std::vector<Path>& bucket, const std::vector<std::size_t>& arrows) {
  return static_cast<std::size_t>(
      std::find_if(bucket.begin(), bucket.end(), [&](const Path& p) { return p.arrows == arrows; }) - bucket.begin());
}

}  // namespace

ProjectiveResolution standard_resolution(const Heart& heart, const Rep& m) {
  const Quiver& q = heart.quiver();
  const PrimeField& f = heart.field();
  std::vector<std::size_t> gens0, gens1;
  std::vector<std::size_t> first0(q.vertex_count());  // index of summand (i, 0)
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    first0[i] = gens0.size();
    for (int r = 0; r < m.dim(i); ++r) gens0.push_back(i);
  }
  for (const Arrow& a : q.arrows())
    for (int r = 0; r < m.dim(a.source); ++r) gens1.push_back(a.target);
  const FreeModule p0 = free_module(heart, gens0);
  const FreeModule p1 = free_module(heart, gens1);

  // Generator (a, r) maps to a.e_{(s(a), r)} - sum_r' (M_a)_{r' r} e_{(t(a), r')}.
  std::vector<std::vector<Fp>> images;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const auto from_source = q.paths_from(a.source);
    const auto from_target = q.paths_from(a.target);
    const std::size_t along_a = path_index(from_source[a.target], {ai});
    const std::size_t trivial = path_index(from_target[a.target], {});
    for (int r = 0; r < m.dim(a.source); ++r) {
      std::vector<Fp> g(udim(p0.rep, a.target), 0);
      const std::size_t k = first0[a.source] + static_cast<std::size_t>(r);
      g[p0.offsets[k][a.target] + along_a] = f.add(g[p0.offsets[k][a.target] + along_a], 1);
      for (int r2 = 0; r2 < m.dim(a.target); ++r2) {
        const std::size_t k2 = first0[a.target] + static_cast<std::size_t>(r2);
        const std::size_t pos = p0.offsets[k2][a.target] + trivial;
        g[pos] = f.sub(g[pos], m.map(ai)(static_cast<std::size_t>(r2), static_cast<std::size_t>(r)));
      }
      images.push_back(std::move(g));
    }
  }
  RepMorphism d = from_generators(heart, p1, p0.rep, images);
  return {p1.rep, p0.rep, std::move(d)};
}

Complex projective_model(const Heart& heart, const GradedObject& x) {
  if (x.is_zero()) return Complex(heart, 0, {}, {});
  const std::size_t verts = heart.quiver().vertex_count();
  std::map<int, ProjectiveResolution> res;  // keyed by shift degree
  for (const auto& [n, obj] : x.parts) res.emplace(n, standard_resolution(heart, heart.representative(obj)));
  const Rep zero = Rep::zero(heart.quiver_ptr(), heart.field());
  auto p0 = [&](int n) -> const Rep& { auto it = res.find(n); return it == res.end() ? zero : it->second.p0; };
  auto p1 = [&](int n) -> const Rep& { auto it = res.find(n); return it == res.end() ? zero : it->second.p1; };

  // Shift degree n occupies cohomological degrees -n-1 (P1) and -n (P0).
  const int lo = -x.max_degree() - 1, hi = -x.min_degree();
  std::vector<Rep> terms;
  for (int j = lo; j <= hi; ++j) terms.push_back(direct_sum(p0(-j), p1(-j - 1)));
  std::vector<RepMorphism> diffs;
  for (int j = lo; j < hi; ++j) {
    const int n = -j - 1;
    const Rep &a0 = p0(-j), &a1 = p1(-j - 1), &b0 = p0(-j - 1), &b1 = p1(-j - 2);
    auto it = res.find(n);
    const RepMorphism zero_d = RepMorphism::zero(a1, b0);
    const RepMorphism* d = it == res.end() ? &zero_d : &it->second.d;
    diffs.push_back(block_morphism({&a0, &a1}, {&b0, &b1}, {{nullptr, d}, {nullptr, nullptr}}, heart.field(), verts));
  }
  return Complex(heart, lo, std::move(terms), std::move(diffs));
}

Complex zero_differential_model(const Heart& heart, const GradedObject& x) {
  if (x.is_zero()) return Complex(heart, 0, {}, {});
  const int lo = -x.max_degree(), hi = -x.min_degree();
  std::vector<Rep> terms;
  std::vector<RepMorphism> diffs;
  for (int j = lo; j <= hi; ++j) terms.push_back(heart.representative(x.component(-j)));
  for (int j = lo; j < hi; ++j) diffs.push_back(RepMorphism::zero(terms[j - lo], terms[j - lo + 1]));
  return Complex(heart, lo, std::move(terms), std::move(diffs));
}

std::size_t derived_hom_dim(const Heart& heart, const GradedObject& x, const GradedObject& z, int i) {
  std::size_t total = 0;
  for (const auto& [n, xn] : x.parts) {
    const IsoClass same = z.component(n - i);
    const IsoClass next = z.component(n - i + 1);
    if (!same.is_zero()) total += heart.hom_dim(xn, same);
    if (!next.is_zero()) total += heart.ext1_dim(xn, next);
  }
  return total;
}

BigInt graded_aut_order(const Heart& heart, const GradedObject& x) {
  BigInt order = 1;
  std::size_t ext = 0;
  for (const auto& [n, xn] : x.parts) {
    order *= heart.aut_order(xn);
    const IsoClass next = x.component(n + 1);
    if (!next.is_zero()) ext += heart.ext1_dim(xn, next);
  }
  return order * ipower(heart.p(), ext);
}

HomotopyClasses::HomotopyClasses(Complex source, Complex target)
    : source_(std::move(source)),
      target_(std::move(target)),
      lo_(source_.empty() ? target_.lo() : target_.empty() ? source_.lo() : std::min(source_.lo(), target_.lo())),
      hi_(source_.empty() ? target_.hi() : target_.empty() ? source_.hi() : std::max(source_.hi(), target_.hi())),
      chain_maps_(source_.heart().field(), 0, 0),
      homotopies_(source_.heart().field(), 0, 0),
      complement_(source_.heart().field(), 0, 0) {
  const Heart& heart = source_.heart();
  const PrimeField& f = heart.field();
  const Quiver& q = heart.quiver();
  const std::size_t verts = q.vertex_count();

  std::size_t flat_size = 0;
  for (int j = lo_; j <= hi_; ++j) {
    const Rep a = source_.term(j), b = target_.term(j);
    for (std::size_t v = 0; v < verts; ++v) flat_size += udim(a, v) * udim(b, v);
  }

  // Constraint rows: intertwining in every degree, then commutation with d.
  auto constraints = [&](const ChainMapParts& parts) {
    std::vector<Fp> out;
    for (int j = lo_; j <= hi_; ++j) {
      const Rep a = source_.term(j), b = target_.term(j);
      const RepMorphism& fj = parts[static_cast<std::size_t>(j - lo_)];
      for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& arr = q.arrows()[ai];
        const FpMatrix diff = b.map(ai) * fj.components[arr.source] - fj.components[arr.target] * a.map(ai);
        out.insert(out.end(), diff.entries().begin(), diff.entries().end());
      }
      if (j < hi_) {
        const RepMorphism& fnext = parts[static_cast<std::size_t>(j + 1 - lo_)];
        const RepMorphism diff = compose(target_.differential(j), fj) - compose(fnext, source_.differential(j));
        const auto flat = flatten(diff);
        out.insert(out.end(), flat.begin(), flat.end());
      }
    }
    return out;
  };
  std::vector<std::vector<Fp>> columns;
  for (std::size_t k = 0; k < flat_size; ++k) {
    std::vector<Fp> unit(flat_size, 0);
    unit[k] = 1;
    columns.push_back(constraints(split(unit)));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  FpMatrix system(f, rows, flat_size);
  for (std::size_t c = 0; c < flat_size; ++c)
    for (std::size_t r = 0; r < rows; ++r) system.set(r, c, columns[c][r]);
  chain_maps_ = flat_size == 0 ? FpMatrix(f, 0, 0) : kernel_basis(system);

  // Null-homotopic maps d h + h d for h ranging over Hom(A^j, B^{j-1}).
  std::vector<Fp> h_rows;
  std::size_t h_count = 0;
  for (int j = lo_; j <= hi_ + 1; ++j) {
    const Rep a = source_.term(j), b = target_.term(j - 1);
    for (const RepMorphism& psi : hom_basis(a, b)) {
      ChainMapParts parts = zero_parts();
      if (j <= hi_) parts[static_cast<std::size_t>(j - lo_)] = compose(target_.differential(j - 1), psi);
      if (j - 1 >= lo_)
        parts[static_cast<std::size_t>(j - 1 - lo_)] =
            parts[static_cast<std::size_t>(j - 1 - lo_)] + compose(psi, source_.differential(j - 1));
      const auto flat = join(parts);
      h_rows.insert(h_rows.end(), flat.begin(), flat.end());
      ++h_count;
    }
  }
  homotopies_ = row_space_basis(FpMatrix(f, h_count, flat_size, std::move(h_rows)));
  if (homotopies_.rows() == 0) homotopies_ = FpMatrix(f, 0, flat_size);
  if (chain_maps_.rows() == 0) chain_maps_ = FpMatrix(f, 0, flat_size);
  complement_ = complement_rows(homotopies_, chain_maps_);
  if (complement_.rows() == 0) complement_ = FpMatrix(f, 0, flat_size);
}


HomotopyClasses::ChainMapParts HomotopyClasses::zero_parts() const {
  ChainMapParts parts;
  for (int j = lo_; j <= hi_; ++j) parts.push_back(RepMorphism::zero(source_.term(j), target_.term(j)));
  return parts;
}

HomotopyClasses::ChainMapParts HomotopyClasses::split(std::span<const Fp> flat) const {
  ChainMapParts parts;
  std::size_t pos = 0;
  for (int j = lo_; j <= hi_; ++j) {
    const Rep a = source_.term(j), b = target_.term(j);
    std::size_t len = 0;
    for (std::size_t v = 0; v < a.dims().size(); ++v) len += udim(a, v) * udim(b, v);
    parts.push_back(unflatten(a, b, flat.subspan(pos, len)));
    pos += len;
  }
  if (pos != flat.size()) throw MismatchError("flattened chain map has the wrong length");
  return parts;
}

std::vector<Fp> HomotopyClasses::join(const ChainMapParts& parts) const {
  std::vector<Fp> out;
  for (const RepMorphism& m : parts) {
    const auto flat = flatten(m);
    out.insert(out.end(), flat.begin(), flat.end());
  }
  return out;
}

ChainMap HomotopyClasses::assemble(ChainMapParts parts) const {
  return ChainMap(source_, target_, lo_, std::move(parts));
}

ChainMap HomotopyClasses::from_flat(std::span<const Fp> flat) const { return assemble(split(flat)); }

std::vector<Fp> HomotopyClasses::to_flat(const ChainMap& f) const {
  ChainMapParts parts;
  for (int j = lo_; j <= hi_; ++j) parts.push_back(f.component(j));
  return join(parts);
}

namespace {

// Every F_p-combination of the rows of `basis`, added to `offset`.
std::vector<std::vector<Fp>> span_points(const Heart& heart, const FpMatrix& basis, const std::vector<Fp>& offset,
                                         const char* what) {
  heart.require_enumerable(basis.rows(), what);
  const PrimeField& f = heart.field();
  std::vector<std::vector<Fp>> out;
  std::vector<Fp> coeffs(basis.rows(), 0);
  while (true) {
    std::vector<Fp> point = offset;
    for (std::size_t r = 0; r < basis.rows(); ++r)
      if (coeffs[r] != 0)
        for (std::size_t c = 0; c < basis.cols(); ++c) point[c] = f.add(point[c], f.mul(coeffs[r], basis(r, c)));
    out.push_back(std::move(point));
    std::size_t k = 0;
    while (k < coeffs.size() && ++coeffs[k] == f.p()) coeffs[k++] = 0;
    if (k == coeffs.size()) break;
  }
  return out;
}

}  // namespace

std::vector<ChainMap> HomotopyClasses::representatives() const {
  std::vector<ChainMap> out;
  for (const auto& flat : span_points(source_.heart(), complement_, std::vector<Fp>(complement_.cols(), 0),
                                      "homotopy class enumeration"))
    out.push_back(from_flat(flat));
  return out;
}

std::vector<ChainMap> HomotopyClasses::homotopy_class(const ChainMap& f) const {
  std::vector<ChainMap> out;
  for (const auto& flat : span_points(source_.heart(), homotopies_, to_flat(f), "homotopy class enumeration"))
    out.push_back(from_flat(flat));
  return out;
}

std::map<GradedObject, BigInt> cone_histogram(const Heart& heart, const GradedObject& x, const GradedObject& z) {
  const HomotopyClasses classes(projective_model(heart, x), zero_differential_model(heart, z));
  std::map<GradedObject, BigInt> hist;
  for (const ChainMap& f : classes.representatives()) hist[cone_class(f)] += 1;
  return hist;
}

BigInt count_morphisms_with_cone(const Heart& heart, const GradedObject& x, const GradedObject& z,
                                 const GradedObject& y) {
  const auto hist = cone_histogram(heart, x, z);
  const auto it = hist.find(y);
  return it == hist.end() ? BigInt(0) : it->second;
}

}  // namespace dhall
