// Sanity checks of the reference implementation itself.
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"

using namespace testing_support;
namespace o = oracle;

namespace {

std::size_t gaussian(std::size_t n, std::size_t k, std::size_t q) {
  double num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= static_cast<double>(std::pow(q, n - i) - 1);
    den *= static_cast<double>(std::pow(q, i + 1) - 1);
  }
  return static_cast<std::size_t>(num / den + 0.5);
}

}  // namespace

TEST(Oracle, SubspaceCountsAreGaussianBinomials) {
  for (o::u32 p : {2u, 3u}) {
    for (std::size_t d = 0; d <= 4; ++d) {
      std::size_t expected = 0;
      for (std::size_t k = 0; k <= d; ++k) expected += gaussian(d, k, p);
      EXPECT_EQ(o::all_subspaces(p, d).size(), expected) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Oracle, SubrepsOfM12) {
  auto b = a2();
  const auto q = o::quiver_of(*b);
  const auto subs = o::all_subreps(q, o::rep_of(m12(b)));
  // 0, the S2-line, everything.
  EXPECT_EQ(subs.size(), 3u);
}

TEST(Oracle, HomDimOnA2) {
  auto b = a2();
  const auto q = o::quiver_of(*b);
  const auto s1 = o::rep_of(Obj::simple(b, 0));
  const auto m = o::rep_of(m12(b));
  EXPECT_EQ(o::hom_dim(q, s1, s1), 1u);
  EXPECT_EQ(o::hom_dim(q, m, s1), 1u);
  EXPECT_EQ(o::hom_dim(q, s1, m), 0u);
}

TEST(Oracle, ColimitWithEmptyCIsHom) {
  for (const auto& b : small_backends()) {
    auto rng = gen::trial_rng(11, 0);
    const auto q = o::quiver_of(*b);
    const std::vector<bool> none(b->simple_count(), false);
    for (int i = 0; i < 5; ++i) {
      const auto m = o::rep_of(gen::random_object(b, rng, {3, 1}));
      const auto n = o::rep_of(gen::random_object(b, rng, {3, 1}));
      const auto dim = o::colimit_qhom_dim(q, m, n, none, 400);
      ASSERT_TRUE(dim.has_value());
      EXPECT_EQ(*dim, o::hom_dim(q, m, n));
    }
  }
}

TEST(Oracle, ColimitOnA2Example) {
  auto b = a2();
  const auto q = o::quiver_of(*b);
  const auto m = o::rep_of(m12(b));
  EXPECT_EQ(o::colimit_qhom_dim(q, m, m, {false, true}, 400), std::optional<std::size_t>(1));
  EXPECT_EQ(o::colimit_qhom_dim(q, m, m, {true, true}, 400), std::optional<std::size_t>(0));
  EXPECT_EQ(o::q_length(q, m, {false, true}), 1u);
}

TEST(Oracle, MultiplicitiesOfRegularRep) {
  auto b = Backend::group_algebra(Field::prime(5), {4});
  Mat shift(b->field(), 4, 4);
  for (std::size_t i = 0; i < 4; ++i) shift.set((i + 1) % 4, i, 1L);
  const auto mult = o::multiplicities(o::quiver_of(*b), o::rep_of(Obj(b, {4}, {shift})));
  EXPECT_EQ(mult, std::vector<std::size_t>(4, 1));
}

TEST(Oracle, FusionOfCellSimples) {
  auto b = Backend::matvec(Field::prime(2), {2, 1});
  const auto e12 = *b->simple_index("E1_1_2");
  const auto e21 = *b->simple_index("E1_2_1");
  const auto e11 = *b->simple_index("E1_1_1");
  auto f = o::fusion(*b, e12, e21);
  EXPECT_EQ(f[e11], 1u);
  EXPECT_EQ(std::accumulate(f.begin(), f.end(), std::size_t{0}), 1u);
  f = o::fusion(*b, e12, e12);
  EXPECT_EQ(std::accumulate(f.begin(), f.end(), std::size_t{0}), 0u);
}
