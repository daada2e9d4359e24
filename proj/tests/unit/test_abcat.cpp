#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/verify.hpp"
#include "support.hpp"

using namespace testing_support;
namespace o = oracle;

namespace {

void expect_error(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> oracle_factors(const Obj& x) {
  return o::multiplicities(o::quiver_of(*x.backend()), o::rep_of(x));
}

Mor top_projection(const BackendPtr& b) {
  const Field f = b->field();
  return Mor(m12(b), Obj::simple(b, 0), {Mat::identity(f, 1), Mat::zero(f, 0, 1)});
}

}  // namespace

TEST(Backend, Inventory) {
  auto b = a2();
  ASSERT_EQ(b->simple_count(), 2u);
  EXPECT_EQ(b->label(0), "S1");
  EXPECT_EQ(b->label(1), "S2");
  auto m = Backend::matvec(Field::rationals(), {2, 1});
  EXPECT_EQ(m->simple_count(), 5u);
  auto g = Backend::group_algebra(Field::prime(5), {4});
  EXPECT_EQ(g->simple_count(), 4u);
}

TEST(Backend, CyclicQuiverRejected) {
  EXPECT_ANY_THROW(Backend::path_algebra(Field::prime(2), 2, {{0, 1, ""}, {1, 0, ""}}));
}

TEST(Backend, GroupRelationsChecked) {
  auto g = repz2();
  // g^2 must be the identity.
  EXPECT_ANY_THROW(Obj(g, {1}, {Mat::from_ints(g->field(), {{2}})}));
  EXPECT_NO_THROW(Obj(g, {1}, {Mat::from_ints(g->field(), {{-1}})}));
}

TEST(HomBasis, A2Examples) {
  auto b = a2();
  const Obj s1 = Obj::simple(b, 0), m = m12(b);
  EXPECT_EQ(hom_basis(s1, s1).size(), 1u);
  EXPECT_EQ(hom_basis(m, s1).size(), 1u);
  EXPECT_EQ(hom_basis(s1, m).size(), 0u);
}

TEST(HomBasis, BackendMismatch) {
  expect_error(ErrorCode::BackendMismatch,
               [] { (void)hom_basis(Obj::simple(a2(), 0), Obj::simple(a3(), 0)); });
}

TEST(HomBasis, AgreesWithOracle) {
  for (const auto& b : small_backends()) {
    const auto q = o::quiver_of(*b);
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = gen::trial_rng(21, t);
      const Obj m = gen::random_object(b, rng, {4, 2});
      const Obj n = gen::random_object(b, rng, {4, 2});
      const auto basis = hom_basis(m, n);
      EXPECT_EQ(basis.size(), o::hom_dim(q, o::rep_of(m), o::rep_of(n)));
      if (!basis.empty()) {
        Mat all = basis[0].total().transpose();
        for (std::size_t i = 1; i < basis.size(); ++i) {
          all = Mat::vstack(all, basis[i].total().transpose());
        }
        std::vector<Mat> flat;
        for (const auto& f : basis) {
          Mat col(b->field(), f.total().rows() * f.total().cols(), 1);
          const Mat tot = f.total();
          for (std::size_t r = 0; r < tot.rows(); ++r)
            for (std::size_t c = 0; c < tot.cols(); ++c) col.set(r * tot.cols() + c, 0, tot.at(r, c));
          flat.push_back(col);
        }
        EXPECT_EQ(lin::rank(Mat::hstack(b->field(), flat[0].rows(), flat)), basis.size());
      }
    }
  }
}

TEST(Morphism, InvalidIntertwinerRejected) {
  auto b = a2();
  const Field f = b->field();
  // M12 -> S2 nonzero on the bottom vertex does not commute with the arrow.
  expect_error(ErrorCode::InvalidMorphism, [&] {
    (void)Mor(m12(b), Obj::simple(b, 1), {Mat::zero(f, 0, 1), Mat::identity(f, 1)});
  });
  expect_error(ErrorCode::InvalidMorphism, [&] {
    (void)Mor(Obj::simple(b, 0), m12(b), {Mat::identity(f, 1), Mat::zero(f, 1, 0)});
  });
}

TEST(Morphism, ComposeMismatch) {
  auto b = a2();
  const Mor p = top_projection(b);
  expect_error(ErrorCode::ComposeError, [&] { (void)compose(p, p); });
}

TEST(KernelCokernel, TopProjection) {
  auto b = a2();
  const Mor p = top_projection(b);
  const SubObj k = kernel(p);
  EXPECT_EQ(k.object.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_isomorphic(k.object, Obj::simple(b, 1)));
  EXPECT_TRUE(cokernel(p).object.is_zero());
  EXPECT_TRUE(compose(p, k.inclusion).is_zero());
}

TEST(KernelCokernel, AbelianIdentities) {
  for (const auto& b : small_backends()) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = gen::trial_rng(31, t);
      const Obj m = gen::random_object(b, rng, {5, 2});
      const Obj n = gen::random_object(b, rng, {5, 2});
      const Mor f = gen::random_morphism(m, n, rng);
      const SubObj im = image(f);
      const QuotientObj ck = cokernel(f);
      EXPECT_TRUE(same_subobject(im, kernel(ck.projection)));
      EXPECT_TRUE(is_isomorphic(coimage(f).object, im.object));
      EXPECT_EQ(kernel(f).dim() + im.dim(), m.dim());
      EXPECT_EQ(im.dim() + ck.object.dim(), n.dim());
    }
  }
}

TEST(Spin, SocleVectorGivesS2Line) {
  auto b = a2();
  const Obj m = m12(b);
  const SubObj s = spin_submodule(m, Mat::from_ints(b->field(), {{0}, {1}}));
  EXPECT_EQ(s.object.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(spin_submodule(m, Mat::zero(b->field(), 2, 0)).object.is_zero());
  // The top vector generates everything.
  EXPECT_EQ(spin_submodule(m, Mat::from_ints(b->field(), {{1}, {0}})).dim(), 2u);
}

TEST(CompositionFactors, Examples) {
  auto b = a2();
  EXPECT_EQ(composition_factors(Obj::simple(b, 0)), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(composition_factors(m12(b)), (std::vector<std::size_t>{1, 1}));
  const auto cs = composition_series(m12(b));
  EXPECT_EQ(cs.factors, (std::vector<std::size_t>{1, 0}));
  const auto subs = o::all_subreps(o::quiver_of(*b), o::rep_of(m12(b)));
  EXPECT_EQ(subs.size(), 3u);  // the series 0 < S2 < M12 is unique
}

TEST(CompositionFactors, AgreeWithOracleAndAreSeriesIndependent) {
  for (const auto& b : small_backends()) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = gen::trial_rng(41, t);
      const Obj m = gen::random_object(b, rng, {5, 2});
      const Obj n = gen::random_object(b, rng, {5, 2});
      const auto fm = composition_factors(m);
      EXPECT_EQ(fm, oracle_factors(m));
      auto r1 = gen::trial_rng(42, t), r2 = gen::trial_rng(43, t);
      EXPECT_EQ(sorted(composition_series(m, &r1).factors),
                sorted(composition_series(m, &r2).factors));
      auto both = fm;
      const auto fn = composition_factors(n);
      for (std::size_t s = 0; s < both.size(); ++s) both[s] += fn[s];
      EXPECT_EQ(composition_factors(direct_sum(m, n)), both);
      EXPECT_EQ(length(m), m.dim());
    }
  }
}

TEST(CompositionSeries, ChainIsIncreasing) {
  auto b = a3(Field::prime(3));
  auto rng = gen::trial_rng(5, 0);
  const Obj m = gen::random_object(b, rng, {6, 2});
  const auto cs = composition_series(m);
  ASSERT_EQ(cs.chain.size(), cs.factors.size() + 1);
  for (std::size_t i = 0; i + 1 < cs.chain.size(); ++i) {
    EXPECT_TRUE(contains(cs.chain[i + 1], cs.chain[i]));
    EXPECT_EQ(cs.chain[i + 1].dim(), cs.chain[i].dim() + 1);
  }
}

TEST(Quotients, Examples) {
  auto b = a2();
  const Obj m = m12(b);
  EXPECT_TRUE(is_isomorphic(quotient_object(m, zero_subobject(m)).object, m));
  const SubObj line = spin_submodule(m, Mat::from_ints(b->field(), {{0}, {1}}));
  EXPECT_TRUE(is_isomorphic(quotient_object(m, line).object, Obj::simple(b, 0)));
  EXPECT_EQ(direct_sum(m, m).dim(), 4u);
}

TEST(Quotients, NotSubobject) {
  auto b = a2();
  const Obj m = m12(b);
  // The top line is not invariant.
  expect_error(ErrorCode::NotSubobject, [&] {
    (void)subobject(m, {Mat::identity(b->field(), 1), Mat::zero(b->field(), 1, 0)});
  });
  const SubObj other = whole(direct_sum(m, m));
  expect_error(ErrorCode::NotSubobject, [&] { (void)quotient_object(m, other); });
}

TEST(Subobjects, LatticeAgainstOracle) {
  for (const auto& b : small_backends()) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      auto rng = gen::trial_rng(51, t);
      const Obj m = gen::random_object(b, rng, {4, 1});
      const auto subs = o::all_subreps(o::quiver_of(*b), o::rep_of(m));
      const auto mine = verify::all_subobjects(m, 10000);
      ASSERT_TRUE(mine.has_value());
      EXPECT_EQ(mine->size(), subs.size());
      const SubObj a = gen::random_subobject(m, rng), c = gen::random_subobject(m, rng);
      EXPECT_EQ(sum(a, c).dim() + intersection(a, c).dim(), a.dim() + c.dim());
      EXPECT_TRUE(contains(sum(a, c), a));
      EXPECT_TRUE(contains(a, intersection(a, c)));
    }
  }
}

TEST(Isomorphism, Simples) {
  auto b = a2();
  EXPECT_TRUE(is_isomorphic(Obj::simple(b, 0), Obj::simple(b, "S1")));
  EXPECT_FALSE(is_isomorphic(Obj::simple(b, 0), Obj::simple(b, 1)));
  EXPECT_EQ(simple_label(Obj::simple(b, 1)), std::optional<std::size_t>(1));
  EXPECT_FALSE(simple_label(m12(b)).has_value());
}
