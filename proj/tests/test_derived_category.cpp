#include "dhall/derived_category.hpp"
#include "dhall/errors.hpp"
#include "dhall/labels.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dhall;
using dhall::testing::make_heart;

namespace {

GradedObject g(const Heart& h, const char* label) { return parse_graded(h, label); }

// Complex concentrated in degrees lo, lo+1 with the given differential.
Complex two_term(const Heart& h, int lo, const Rep& a, const Rep& b, const RepMorphism& d) {
  return Complex(h, lo, {a, b}, {d});
}

}  // namespace

TEST(GradedObject, ShiftAndSum) {
  auto h = make_heart("A2", 2);
  const GradedObject x = g(*h, "S1[0]"), y = g(*h, "S2[1]");
  EXPECT_EQ((x + y).shifted(2), g(*h, "S2[3]+S1[2]"));
  EXPECT_EQ(x + x, g(*h, "S1^2[0]"));
  EXPECT_TRUE(GradedObject{}.in_heart());
  EXPECT_FALSE(y.in_heart());
}

TEST(Complex, RejectsNonzeroSquare) {
  auto h = make_heart("A1", 2);
  const Rep s = h->representative(IsoClass::single(0));
  const auto id = RepMorphism::identity(s);
  EXPECT_THROW(Complex(*h, 0, {s, s, s}, {id, id}), std::invalid_argument);
  EXPECT_NO_THROW(Complex(*h, 0, {s, s}, {id}));
  EXPECT_THROW(Complex(*h, 0, {s, s}, {}), std::invalid_argument);
}

TEST(ChainMap, RejectsNonCommutingComponents) {
  auto h = make_heart("A1", 2);
  const Rep s = h->representative(IsoClass::single(0));
  const auto id = RepMorphism::identity(s);
  const Complex c = two_term(*h, 0, s, s, id);
  const Complex d = two_term(*h, 0, s, s, RepMorphism::zero(s, s));
  // With f = (0, id) the square gives f^1 d_c = id but d_d f^0 = 0.
  EXPECT_THROW(ChainMap(c, d, 0, {RepMorphism::zero(s, s), id}), std::invalid_argument);
  EXPECT_NO_THROW(ChainMap(c, d, 0, {id, RepMorphism::zero(s, s)}));
}

TEST(Cohomology, Examples) {
  auto h = make_heart("A2", 2);
  const Rep s1 = h->representative(g(*h, "S1").component(0));
  const Rep s2 = h->representative(g(*h, "S2").component(0));
  const Rep x = h->representative(g(*h, "X12").component(0));

  const GradedObject obj = g(*h, "S1[1]+X12[0]+S2[-2]");
  EXPECT_EQ(cohomology(zero_differential_model(*h, obj)), obj);

  const Complex acyclic = two_term(*h, 0, s1, s1, RepMorphism::identity(s1));
  EXPECT_TRUE(cohomology(acyclic).is_zero());

  const RepMorphism incl = hom_basis(s2, x).at(0);
  EXPECT_EQ(cohomology(two_term(*h, -1, s2, x, incl)), g(*h, "S1[0]"));
}

TEST(Projective, PathAlgebraModules) {
  auto h = make_heart("A3", 2);
  EXPECT_EQ(projective(*h, 0).dims(), (DimVector{1, 1, 1}));
  EXPECT_EQ(projective(*h, 1).dims(), (DimVector{0, 1, 1}));
  EXPECT_EQ(projective(*h, 2).dims(), (DimVector{0, 0, 1}));
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_TRUE(h->is_indecomposable(projective(*h, v)));
    // Hom(P_v, M) = M_v
    for (const auto& c : h->classes_up_to(2))
      EXPECT_EQ(hom_dim(projective(*h, v), h->representative(c)), static_cast<std::size_t>(h->dim_vector(c)[v]));
  }
}

TEST(StandardResolution, IsAResolution) {
  for (const char* name : {"A2", "A3", "D4"}) {
    auto h = make_heart(name, 3);
    for (const auto& c : h->classes_up_to(2)) {
      const Rep m = h->representative(c);
      const ProjectiveResolution r = standard_resolution(*h, m);
      EXPECT_TRUE(is_intertwiner(r.p1, r.p0, r.d));
      EXPECT_TRUE(r.d.is_injective());
      EXPECT_EQ(h->decompose(subquotient(r.p0, whole_space(r.p0), image(r.p0, r.d))), c) << name;
      // Projectives have no self-extensions with anything.
      for (const auto& d : h->classes_up_to(1)) EXPECT_EQ(ext1_dim(r.p0, h->representative(d)), 0u);
    }
  }
}

TEST(ProjectiveModel, HasTheRightCohomology) {
  auto h = make_heart("A2", 2);
  for (const auto& x : graded_objects(*h, -1, 1, 1)) EXPECT_EQ(cohomology(projective_model(*h, x)), x);
}

TEST(DerivedHomDim, Examples) {
  auto a1 = make_heart("A1", 2);
  EXPECT_EQ(derived_hom_dim(*a1, g(*a1, "S1[0]"), g(*a1, "S1[1]"), 0), 0u);
  EXPECT_EQ(derived_hom_dim(*a1, g(*a1, "S1[0]"), g(*a1, "S1[0]"), 0), 1u);
  EXPECT_EQ(derived_hom_dim(*a1, g(*a1, "S1[0]"), g(*a1, "S1[1]+S1[0]"), -1), 1u);
  auto a2 = make_heart("A2", 2);
  EXPECT_EQ(derived_hom_dim(*a2, g(*a2, "S1[0]"), g(*a2, "S2[1]"), 0), 1u);
}

// dim Hom_D(x, z[i]) from homotopy classes of maps out of the projective model.
TEST(DerivedHomDim, AgreesWithHomotopyClasses) {
  for (const char* name : {"A1", "A2"}) {
    auto h = make_heart(name, 2);
    const auto family = graded_objects(*h, 0, 1, 1);
    for (const auto& x : family)
      for (const auto& z : family)
        for (int i = -2; i <= 2; ++i) {
          const HomotopyClasses hc(projective_model(*h, x), zero_differential_model(*h, z.shifted(i)));
          EXPECT_EQ(hc.dimension(), derived_hom_dim(*h, x, z, i))
              << name << " " << format_graded(*h, x) << " -> " << format_graded(*h, z) << "[" << i << "]";
        }
  }
}

TEST(GradedAutOrder, Examples) {
  auto a1 = make_heart("A1", 2);
  EXPECT_EQ(graded_aut_order(*a1, g(*a1, "S1[1]+S1[0]")), 1);
  EXPECT_EQ(graded_aut_order(*a1, g(*a1, "S1[0]")), 1);
  auto a2 = make_heart("A2", 2);
  EXPECT_EQ(graded_aut_order(*a2, g(*a2, "S2[1]+S1[0]")), 2);
}

// Invertible homotopy classes of self-maps of the projective model: a class
// is invertible exactly when its cone is acyclic.
TEST(GradedAutOrder, MatchesInvertibleSelfMaps) {
  for (const char* name : {"A1", "A2"}) {
    auto h = make_heart(name, 2);
    for (const auto& x : graded_objects(*h, 0, 1, 2)) {
      const Complex px = projective_model(*h, x);
      const HomotopyClasses hc(px, px);
      BigInt invertible = 0;
      for (const ChainMap& f : hc.representatives())
        if (cone_class(f).is_zero()) ++invertible;
      EXPECT_EQ(invertible, graded_aut_order(*h, x)) << name << " " << format_graded(*h, x);
    }
  }
}

TEST(ConeClass, Examples) {
  auto h = make_heart("A2", 2);
  const GradedObject x = g(*h, "X12[0]+S1[1]");
  const Complex px = projective_model(*h, x);
  EXPECT_TRUE(cone_class(ChainMap::identity(px)).is_zero());

  const GradedObject z = g(*h, "S2[0]+S2[2]");
  const ChainMap zero = ChainMap::zero(px, zero_differential_model(*h, z));
  EXPECT_EQ(cone_class(zero), z + x.shifted(1));

  const Complex s2 = zero_differential_model(*h, g(*h, "S2[0]"));
  const Complex xx = zero_differential_model(*h, g(*h, "X12[0]"));
  const RepMorphism incl = hom_basis(s2.term(0), xx.term(0)).at(0);
  EXPECT_EQ(cone_class(ChainMap(s2, xx, 0, {incl})), g(*h, "S1[0]"));
}

TEST(CountMorphismsWithCone, Examples) {
  auto h = make_heart("A1", 2);
  EXPECT_EQ(count_morphisms_with_cone(*h, g(*h, "S1"), g(*h, "S1^2"), g(*h, "S1")), 3);
  EXPECT_EQ(count_morphisms_with_cone(*h, g(*h, "S1"), g(*h, "S1[2]+S1[0]"), g(*h, "S1[2]")), 1);
  EXPECT_EQ(count_morphisms_with_cone(*h, g(*h, "S1"), GradedObject{}, g(*h, "S1[1]")), 1);
}

TEST(ConeHistogram, PartitionsTheHomSpace) {
  for (const char* name : {"A1", "A2"}) {
    auto h = make_heart(name, 2);
    const auto family = graded_objects(*h, 0, 1, 1);
    for (const auto& x : family)
      for (const auto& z : family) {
        BigInt total = 0;
        for (const auto& [y, n] : cone_histogram(*h, x, z)) total += n;
        EXPECT_EQ(total, ipower(h->p(), derived_hom_dim(*h, x, z, 0)));
      }
  }
}

TEST(HomotopyClasses, ConeIsConstantOnClassesAndShiftsWithTheMap) {
  auto h = make_heart("A2", 2);
  // Dimension 2 per degree brings in X12, which carries nonzero homotopies.
  const auto family = graded_objects(*h, 0, 1, 2);
  std::size_t nontrivial = 0;
  for (const auto& x : family)
    for (const auto& z : family) {
      const HomotopyClasses hc(projective_model(*h, x), zero_differential_model(*h, z));
      for (const ChainMap& f : hc.representatives()) {
        const GradedObject cone = cone_class(f);
        const auto cls = hc.homotopy_class(f);
        EXPECT_EQ(BigInt(cls.size()), ipower(h->p(), hc.null_homotopic_dimension()));
        if (cls.size() > 1) ++nontrivial;
        for (const ChainMap& f2 : cls) EXPECT_EQ(cone_class(f2), cone);
        EXPECT_EQ(cone_class(f.shifted(1)), cone.shifted(1));
        EXPECT_EQ(cone_class(f.shifted(-2)), cone.shifted(-2));
      }
    }
  EXPECT_GT(nontrivial, 0u);
}

TEST(HomotopyClasses, FlatRoundTrip) {
  auto h = make_heart("A2", 3);
  const GradedObject x = g(*h, "X12[1]+S1[0]");
  const HomotopyClasses hc(projective_model(*h, x), zero_differential_model(*h, g(*h, "S1[1]+S2[0]")));
  for (const ChainMap& f : hc.representatives()) {
    const auto flat = hc.to_flat(f);
    EXPECT_EQ(hc.to_flat(hc.from_flat(flat)), flat);
  }
}

TEST(HomotopyClasses, EnumerationIsBounded) {
  Bounds b;
  b.max_enumeration = 8;
  auto h = make_heart("A1", 2, b);
  const GradedObject big = g(*h, "S1^4");
  const HomotopyClasses hc(projective_model(*h, big), zero_differential_model(*h, big));
  EXPECT_EQ(hc.dimension(), 16u);
  EXPECT_THROW(hc.representatives(), ResourceError);
}
