#include "dhall/hall_derived.hpp"

#include "dhall/errors.hpp"

#include <functional>

namespace dhall {

OrderedMonomial to_monomial(const GradedObject& x) {
  OrderedMonomial m;
  for (auto it = x.parts.rbegin(); it != x.parts.rend(); ++it) m.emplace_back(it->first, it->second);
  return m;
}

bool is_normal(const OrderedMonomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].second.is_zero()) return false;
    if (i + 1 < m.size() && m[i].first <= m[i + 1].first) return false;
  }
  return true;
}

GradedObject from_monomial(const OrderedMonomial& m) {
  if (!is_normal(m)) throw std::invalid_argument("monomial is not in normal form");
  GradedObject x;
  for (const auto& [n, c] : m) x.parts.emplace(n, c);
  return x;
}

const GammaTable& DerivedHall::gamma_table(const IsoClass& x, const IsoClass& y) const {
  std::lock_guard lock(mutex_);
  if (auto it = gammas_.find({x, y}); it != gammas_.end()) return it->second;

  // Each u : y -> x fixes (ker u, coker u); the exact sequences through u are
  // the choices of isomorphisms k ~ ker u and coker u ~ c.
  const Rep ry = heart_.representative(y), rx = heart_.representative(x);
  std::map<std::pair<IsoClass, IsoClass>, BigInt> counts;
  for (const RepMorphism& u : heart_.enumerate_span(hom_basis(ry, rx), ry, rx)) {
    const IsoClass k = heart_.decompose(subquotient(ry, kernel(ry, u), zero_space(ry)));
    const IsoClass c = heart_.decompose(subquotient(rx, whole_space(rx), image(rx, u)));
    counts[{k, c}] += 1;
  }
  GammaTable table;
  const BigInt denominator = heart_.aut_order(x) * heart_.aut_order(y);
  for (const auto& [kc, n] : counts)
    table.emplace(kc, Rational(n * heart_.aut_order(kc.first) * heart_.aut_order(kc.second), denominator));
  return gammas_.emplace(std::make_pair(x, y), std::move(table)).first->second;
}

Rational DerivedHall::gamma(const IsoClass& x, const IsoClass& y, const IsoClass& k, const IsoClass& c) const {
  const GammaTable& table = gamma_table(x, y);
  auto it = table.find({k, c});
  return it == table.end() ? Rational(0) : it->second;
}

Rational DerivedHall::gamma_by_exact_sequences(const IsoClass& x, const IsoClass& y, const IsoClass& k,
                                               const IsoClass& c) const {
  const DimVector dx = heart_.dim_vector(x), dy = heart_.dim_vector(y);
  const DimVector dk = heart_.dim_vector(k), dc = heart_.dim_vector(c);
  for (std::size_t v = 0; v < dx.size(); ++v)
    if (dk[v] - dy[v] + dx[v] - dc[v] != 0) return 0;

  const Rep rk = heart_.representative(k), ry = heart_.representative(y);
  const Rep rx = heart_.representative(x), rc = heart_.representative(c);
  const auto incl = heart_.enumerate_span(hom_basis(rk, ry), rk, ry);
  const auto mids = heart_.enumerate_span(hom_basis(ry, rx), ry, rx);
  const auto projs = heart_.enumerate_span(hom_basis(rx, rc), rx, rc);

  auto ranks = [](const RepMorphism& f) {
    std::vector<std::size_t> r;
    for (const auto& m : f.components) r.push_back(rank(m));
    return r;
  };
  BigInt exact = 0;
  for (const auto& u : mids) {
    const auto ru = ranks(u);
    for (const auto& i : incl) {
      if (!compose(u, i).is_zero()) continue;
      const auto ri = ranks(i);
      bool ok = true;
      for (std::size_t v = 0; v < dx.size() && ok; ++v)
        ok = static_cast<int>(ri[v]) == dk[v] && dk[v] == dy[v] - static_cast<int>(ru[v]);
      if (!ok) continue;
      for (const auto& pi : projs) {
        if (!compose(pi, u).is_zero()) continue;
        const auto rp = ranks(pi);
        bool onto = true;
        for (std::size_t v = 0; v < dx.size() && onto; ++v)
          onto = static_cast<int>(rp[v]) == dc[v] && dx[v] - static_cast<int>(rp[v]) == static_cast<int>(ru[v]);
        if (onto) ++exact;
      }
    }
  }
  return Rational(exact, heart_.aut_order(x) * heart_.aut_order(y));
}

namespace {

OrderedMonomial splice(const OrderedMonomial& m, std::size_t at,
                       std::initializer_list<std::pair<int, IsoClass>> middle) {
  OrderedMonomial out(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(at));
  for (const auto& f : middle)
    if (!f.second.is_zero()) out.push_back(f);
  out.insert(out.end(), m.begin() + static_cast<std::ptrdiff_t>(at) + 2, m.end());
  return out;
}

}  // namespace

HallElement<OrderedMonomial> DerivedHall::rewrite(const OrderedMonomial& m) const {
  std::size_t i = 0;
  while (i + 1 < m.size() && m[i].first > m[i + 1].first) ++i;
  if (i + 1 >= m.size()) return HallElement<OrderedMonomial>::basis(m);

  const auto& [n, x] = m[i];
  const auto& [k_deg, y] = m[i + 1];
  const std::uint32_t q = heart_.p();
  HallElement<OrderedMonomial> out;
  if (k_deg == n) {
    for (const auto& [z, g] : classical_.basis_product(x, y))
      out += normal_form(splice(m, i, {{n, z}})).scaled(g);
  } else if (k_deg == n + 1) {
    for (const auto& [kc, g] : gamma_table(x, y)) {
      const auto& [k, c] = kc;
      const Rational coeff = g * power(q, -heart_.euler_form(c, k));
      out += normal_form(splice(m, i, {{n + 1, k}, {n, c}})).scaled(coeff);
    }
  } else {
    const int sign = (k_deg - n) % 2 == 0 ? 1 : -1;
    out += normal_form(splice(m, i, {{k_deg, y}, {n, x}})).scaled(power(q, sign * heart_.euler_form(x, y)));
  }
  return out;
}

const HallElement<OrderedMonomial>& DerivedHall::normal_form(const OrderedMonomial& m) const {
  std::lock_guard lock(mutex_);
  if (auto it = normal_forms_.find(m); it != normal_forms_.end()) return it->second;
  HallElement<OrderedMonomial> value = rewrite(m);
  return normal_forms_.emplace(m, std::move(value)).first->second;
}

DerivedElement DerivedHall::basis_product(const GradedObject& x, const GradedObject& y) const {
  OrderedMonomial word = to_monomial(x);
  const OrderedMonomial right = to_monomial(y);
  word.insert(word.end(), right.begin(), right.end());
  return normal_form(word).relabel<GradedObject>(from_monomial);
}

DerivedElement DerivedHall::product(const DerivedElement& a, const DerivedElement& b) const {
  return DerivedElement::bilinear(a, b, [&](const GradedObject& x, const GradedObject& y) {
    return basis_product(x, y);
  });
}

const std::map<GradedObject, BigInt>& DerivedHall::cones(const GradedObject& x, const GradedObject& z) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cones_.find({x, z}); it != cones_.end()) return it->second;
  }
  auto hist = cone_histogram(heart_, x, z);
  std::lock_guard lock(mutex_);
  return cones_.emplace(std::make_pair(x, z), std::move(hist)).first->second;
}

Rational DerivedHall::derived_hall_number(const GradedObject& x, const GradedObject& y,
                                          const GradedObject& z) const {
  const auto& hist = cones(x, z);
  const auto it = hist.find(y);
  if (it == hist.end()) return 0;

  // Sum over i > 0 of (-1)^i dim Ext^{-i}(x, w); zero once i exceeds the spread.
  auto alternating = [&](const GradedObject& w) {
    long total = 0;
    if (x.is_zero() || w.is_zero()) return total;
    for (int i = 1; i <= w.max_degree() - x.min_degree() + 1; ++i) {
      const long d = static_cast<long>(derived_hom_dim(heart_, x, w, -i));
      total += i % 2 == 0 ? d : -d;
    }
    return total;
  };
  const Rational weight = power(heart_.p(), alternating(z) - alternating(x));
  return Rational(it->second) * weight / Rational(graded_aut_order(heart_, x));
}

std::vector<GradedObject> DerivedHall::candidate_middles(const GradedObject& x, const GradedObject& y) const {
  const std::size_t verts = heart_.quiver().vertex_count();
  std::map<int, DimVector> bound;
  DimVector k0(verts, 0);
  for (const GradedObject* w : {&x, &y})
    for (const auto& [n, c] : w->parts) {
      auto& b = bound.try_emplace(n, DimVector(verts, 0)).first->second;
      const DimVector d = heart_.dim_vector(c);
      for (std::size_t v = 0; v < verts; ++v) {
        b[v] += d[v];
        k0[v] += n % 2 == 0 ? d[v] : -d[v];
      }
    }

  std::vector<std::pair<int, std::vector<IsoClass>>> choices;
  for (const auto& [n, b] : bound) choices.emplace_back(n, heart_.classes_below(b));

  std::vector<GradedObject> out;
  GradedObject current;
  DimVector class_sum(verts, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == choices.size()) {
      if (class_sum == k0) out.push_back(current);
      return;
    }
    const auto& [n, options] = choices[level];
    for (const IsoClass& c : options) {
      const DimVector d = heart_.dim_vector(c);
      for (std::size_t v = 0; v < verts; ++v) class_sum[v] += n % 2 == 0 ? d[v] : -d[v];
      if (!c.is_zero()) current.parts[n] = c;
      rec(level + 1);
      current.parts.erase(n);
      for (std::size_t v = 0; v < verts; ++v) class_sum[v] -= n % 2 == 0 ? d[v] : -d[v];
    }
  };
  rec(0);
  return out;
}

DerivedElement DerivedHall::oracle_basis_product(const GradedObject& x, const GradedObject& y) const {
  DerivedElement out;
  for (const GradedObject& z : candidate_middles(x, y)) out.add(z, derived_hall_number(x, y, z));
  return out;
}

DerivedElement DerivedHall::oracle_product(const DerivedElement& a, const DerivedElement& b) const {
  return DerivedElement::bilinear(a, b, [&](const GradedObject& x, const GradedObject& y) {
    return oracle_basis_product(x, y);
  });
}

DerivedElement heart_embed(const HeartElement& a) {
  return a.relabel<GradedObject>([](const IsoClass& x) { return GradedObject::in_degree(x, 0); });
}

DerivedElement shift_action(const DerivedElement& a, int n) {
  return a.relabel<GradedObject>([n](const GradedObject& x) { return x.shifted(n); });
}

}  // namespace dhall
