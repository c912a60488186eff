#include <gtest/gtest.h>

#include "toric/cpl.hpp"
#include "toric/error.hpp"

using namespace toric;

namespace {

IntVector V(std::initializer_list<long> c) { return make_int_vector(c); }

// Independent count for simplicial complete fans: a conewise linear function is
// determined by arbitrary values on the rays, so dim = number of rays.
std::size_t simplicial_dim(const Fan& f) { return f.rays().size(); }

}  // namespace

TEST(Cpl, P1) {
  CPLSpace s = cpl_space(build_p1_fan());
  EXPECT_EQ(s.dim, 2u);
  EXPECT_EQ(s.trivial_dim, 1u);
  auto w = nontrivial_cpl(build_p1_fan());
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->function.is_integral());
  EXPECT_FALSE(global_representative(build_p1_fan(), w->function));
}

TEST(Cpl, Octahedron) {
  Fan f = build_octahedron_fan();
  CPLSpace s = cpl_space(f);
  EXPECT_EQ(s.dim, 6u);
  EXPECT_EQ(s.dim, simplicial_dim(f));
  EXPECT_EQ(s.trivial_dim, 3u);
  for (const auto& b : s.basis) EXPECT_TRUE(satisfies_agreement(f, b));
  auto w = nontrivial_cpl(f);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->function.is_integral());
  EXPECT_NE(w->function.value_at_ray(f, w->witness_ray), dot(w->compared_against, f.rays()[w->witness_ray]));
}

TEST(Cpl, CubeAtLeastGlobal) {
  Fan f = build_cube_fan();
  CPLSpace s = cpl_space(f);
  EXPECT_GE(s.dim, 3u);
  for (const auto& b : s.basis) EXPECT_TRUE(satisfies_agreement(f, b));
}

TEST(Cpl, GlobalFunctionalsEmbed) {
  for (const Fan& f : {build_cube_fan(), build_octahedron_fan(), build_payne_fan()}) {
    for (std::size_t i = 0; i < 3; ++i) {
      RatVector e(3, Rat(0));
      e[i] = 1;
      CPLFunction g{std::vector<RatVector>(f.maximal_count(), e)};
      EXPECT_TRUE(satisfies_agreement(f, g));
      EXPECT_EQ(global_representative(f, g), e);
    }
  }
}

TEST(Cpl, SingleConeHasOnlyLinearFunctions) {
  Fan f(3, {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})}, {{0, 1, 2}});
  EXPECT_FALSE(nontrivial_cpl(f));
}

TEST(Cpl, Counting) {
  CountReport o = counting_certificate(build_octahedron_fan());
  EXPECT_EQ(o.f1, 6);
  EXPECT_EQ(o.f2, 12);
  EXPECT_EQ(o.f3, 8);
  EXPECT_EQ(o.four_f1, 24);
  EXPECT_EQ(o.two_f2, 24);
  EXPECT_TRUE(o.four_f1_le_two_f2);
  EXPECT_EQ(o.two_f1_minus_3, 9);
  EXPECT_TRUE(o.f2_gt_two_f1_minus_3);
  EXPECT_TRUE(o.hypothesis_holds);
  EXPECT_EQ(o.cpl_dim, 6);

  CountReport c = counting_certificate(build_cube_fan());
  EXPECT_EQ(c.min_m_rho, 3);
  EXPECT_FALSE(c.hypothesis_holds);

  CountReport p = counting_certificate(build_payne_fan());
  EXPECT_EQ(p.min_m_rho, 3);
  EXPECT_FALSE(p.hypothesis_holds);

  EXPECT_THROW(counting_certificate(build_p1_fan()), Error);
}
