#include <gtest/gtest.h>

#include <set>

#include "toric/error.hpp"
#include "toric/multival.hpp"

using namespace toric;

namespace {

IntVector V(std::initializer_list<long> c) { return make_int_vector(c); }

Fan octahedron_positive_first() { return build_octahedron_fan(); }

std::size_t positive_octant_index(const Fan& f) {
  for (std::size_t i = 0; i < f.maximal_count(); ++i) {
    bool pos = true;
    for (auto r : f.maximal_cones()[i])
      for (const auto& x : f.rays()[r]) pos = pos && x >= 0;
    if (pos) return i;
  }
  return 0;
}

}  // namespace

TEST(Multival, FacetFunctionals) {
  Cone octant = Cone::from_generators(3, {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  auto f = facet_functionals(octant);
  EXPECT_EQ(std::set<IntVector>(f.begin(), f.end()), (std::set<IntVector>{V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})}));
  Cone s1 = Cone::from_generators(3, {V({1, -1, -1}), V({1, -1, 2}), V({1, 1, -1}), V({1, 2, 3})});
  auto g = facet_functionals(s1);
  EXPECT_EQ(g.size(), 4u);
  for (const auto& u : g) {
    EXPECT_EQ(content(u), 1);
    std::size_t zeros = 0;
    for (const auto& r : s1.rays()) {
      EXPECT_GE(dot(u, r), 0);
      zeros += dot(u, r) == 0;
    }
    EXPECT_EQ(zeros, 2u);
  }
  auto h = facet_functionals(Cone::from_generators(2, {V({1, 0}), V({1, 2})}));
  EXPECT_EQ(std::set<IntVector>(h.begin(), h.end()), (std::set<IntVector>{V({0, 1}), V({2, -1})}));
  EXPECT_THROW(facet_functionals(Cone::from_generators(3, {V({1, 0, 0})})), Error);
}

TEST(Multival, CubeSquareFace) {
  Fan f = build_cube_fan();
  NontrivialConstruction c = construct_nontrivial(f);
  EXPECT_EQ(c.facet_functionals.size(), 4u);
  EXPECT_EQ(c.function.degree(), 8u);
  EXPECT_TRUE(c.even.contains(V({0, 0, 0})));
  EXPECT_FALSE(c.odd.contains(V({0, 0, 0})));
  EXPECT_TRUE(check_consistency(c.function).consistent);
  TrivialityResult t = is_trivial(c.function);
  EXPECT_FALSE(t.trivial);
  ASSERT_TRUE(t.witness_cone);
}

TEST(Multival, OctahedronPositiveOctant) {
  Fan f = octahedron_positive_first();
  std::size_t k = positive_octant_index(f);
  NontrivialConstruction c = construct_nontrivial(f, k);
  EXPECT_EQ(c.function.degree(), 4u);
  EXPECT_EQ(c.odd, FunctionalMultiset({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}), V({1, 1, 1})}));
  EXPECT_EQ(c.even, FunctionalMultiset({V({0, 0, 0}), V({1, 1, 0}), V({1, 0, 1}), V({0, 1, 1})}));
  // Restrictions agree on each coordinate plane, checked by hand-coded projection.
  for (std::size_t drop = 0; drop < 3; ++drop) {
    auto project = [&](const FunctionalMultiset& s) {
      std::multiset<IntVector> out;
      for (auto u : s.elements()) {
        u[drop] = 0;
        out.insert(u);
      }
      return out;
    };
    EXPECT_EQ(project(c.odd), project(c.even));
  }
  EXPECT_TRUE(check_consistency(c.function).consistent);
  EXPECT_FALSE(is_trivial(c.function).trivial);

  auto s1 = elementary_symmetric(c.function, 1);
  Polynomial expected = Polynomial::linear(V({2, 2, 2}));
  for (const auto& p : s1) EXPECT_EQ(p, expected);
}

TEST(Multival, PayneSigma1) {
  Fan f = build_payne_fan();
  auto s1 = f.label("sigma1");
  std::size_t k = 0;
  while (f.maximal_cones()[k] != *s1) ++k;
  NontrivialConstruction c = construct_nontrivial(f, k);
  EXPECT_EQ(c.function.degree(), 8u);
  EXPECT_TRUE(check_consistency(c.function).consistent);
  EXPECT_FALSE(is_trivial(c.function).trivial);
}

TEST(Multival, ConstructedViolation) {
  Fan f = build_octahedron_fan();
  std::vector<FunctionalMultiset> sets(f.maximal_count(), FunctionalMultiset({V({1, 0, 0})}));
  std::size_t k = positive_octant_index(f);
  // Flip an octant adjacent across the x = 0 plane so the restriction to it differs.
  sets[k] = FunctionalMultiset({V({0, 1, 0})});
  ConsistencyReport r = check_consistency(MultivaluedCPL{f, sets});
  EXPECT_FALSE(r.consistent);
  EXPECT_FALSE(r.mismatches.empty());
}

TEST(Multival, ConstantIsConsistentAndTrivial) {
  Fan f = build_cube_fan();
  std::vector<FunctionalMultiset> sets(f.maximal_count(), FunctionalMultiset({V({1, 2, 3}), V({0, -1, 4})}));
  MultivaluedCPL m{f, sets};
  EXPECT_TRUE(check_consistency(m).consistent);
  EXPECT_TRUE(is_trivial(m).trivial);
}

TEST(Multival, FromNontrivialCpl) {
  Fan f = build_octahedron_fan();
  auto w = nontrivial_cpl(f);
  ASSERT_TRUE(w);
  MultivaluedCPL m = from_cpl(f, w->function);
  EXPECT_EQ(m.degree(), 1u);
  EXPECT_TRUE(check_consistency(m).consistent);
  EXPECT_FALSE(is_trivial(m).trivial);
}

TEST(Multival, ElementarySymmetricSmall) {
  Fan f(2, {V({1, 0}), V({0, 1})}, {{0, 1}});
  MultivaluedCPL m{f, {FunctionalMultiset({V({1, 0}), V({0, 1})})}};
  EXPECT_EQ(elementary_symmetric(m, 1)[0], Polynomial::linear(V({1, 1})));
  EXPECT_EQ(elementary_symmetric(m, 2)[0], Polynomial::linear(V({1, 0})) * Polynomial::linear(V({0, 1})));
  EXPECT_THROW(elementary_symmetric(m, 3), Error);
  EXPECT_THROW(elementary_symmetric(m, 0), Error);
}

TEST(Multival, SymmetricFunctionsAgreeOnSharedFaces) {
  for (const Fan& f : {build_cube_fan(), build_octahedron_fan(), build_payne_fan()}) {
    NontrivialConstruction c = construct_nontrivial(f);
    for (std::size_t i = 1; i <= 3; ++i) {
      auto polys = elementary_symmetric(c.function, i);
      for (std::size_t a = 0; a < f.maximal_count(); ++a)
        for (std::size_t b = a + 1; b < f.maximal_count(); ++b) {
          Cone common = intersect(f.maximal_cone(a), f.maximal_cone(b));
          if (common.dim() == 0) continue;
          auto basis = span(common).integer_basis();
          EXPECT_EQ(polys[a].substitute(basis), polys[b].substitute(basis));
        }
    }
  }
}

TEST(Multival, RestrictionToFullDimensionalIsInjective) {
  Cone full = Cone::from_generators(3, {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  FunctionalMultiset a({V({1, 2, 3})}), b({V({1, 2, 4})});
  EXPECT_NE(restrict_to(a, full), restrict_to(b, full));
  EXPECT_EQ(restrict_to(a, full), a);
}

TEST(Multival, HypothesisEnforced) {
  Fan one(3, {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})}, {{0, 1, 2}});
  EXPECT_THROW(construct_nontrivial(one), Error);
}
