#include <gtest/gtest.h>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/exactlin/poly.hpp"
#include "support.hpp"

using namespace qcat;
using namespace qcat::lin;
namespace o = oracle;

namespace {

const Field Q = Field::rationals();

o::M to_oracle(const Mat& m, o::u32 p) {
  o::M out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      long v = std::stol(m.at(i, j).to_string()) % static_cast<long>(p);
      out(i, j) = static_cast<o::u32>(v < 0 ? v + p : v);
    }
  }
  return out;
}

void expect_error(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Scalar, FieldArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar(f7, 3) * Scalar(f7, 5), Scalar(f7, 1));
  EXPECT_EQ(Scalar(f7, 3).inverse(), Scalar(f7, 5));
  EXPECT_EQ(Scalar(f7, -1), Scalar(f7, 6));
  EXPECT_EQ(Scalar(Q, 1) / Scalar(Q, 3) + Scalar(Q, 2) / Scalar(Q, 3), Scalar::one(Q));
  EXPECT_EQ(Scalar::parse(Q, "-3/6").to_string(), "-1/2");
  expect_error(ErrorCode::DivisionByZero, [&] { (void)Scalar::zero(f7).inverse(); });
  expect_error(ErrorCode::FieldMismatch, [&] { (void)(Scalar(f7, 1) + Scalar(Q, 1)); });
}

TEST(Field, ParseAndPrimality) {
  EXPECT_EQ(Field::parse("Q"), Q);
  EXPECT_EQ(Field::parse("GF(5)"), Field::prime(5));
  EXPECT_ANY_THROW(Field::prime(6));
  EXPECT_TRUE(is_prime_number(65537));
  EXPECT_FALSE(is_prime_number(1));
}

TEST(KernelBasis, Identity) { EXPECT_EQ(kernel_basis(Mat::identity(Q, 3)).cols(), 0u); }

TEST(KernelBasis, AllOnes) {
  const Mat k = kernel_basis(Mat::from_ints(Q, {{1, 1}, {1, 1}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(same_span(k, Mat::from_ints(Q, {{1}, {-1}})));
}

TEST(KernelBasis, RankNullityOverGF3) {
  const Field f3 = Field::prime(3);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = gen::trial_rng(3, t);
    const Mat m = gen::random_matrix(f3, 4, 6, rng);
    const Mat k = kernel_basis(m);
    EXPECT_EQ(k.cols(), 6 - rank(m));
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
    EXPECT_EQ(rank(m), o::rank(3, to_oracle(m, 3)));
  }
}

TEST(KernelBasis, FieldMismatch) {
  expect_error(ErrorCode::FieldMismatch,
               [] { (void)(Mat::identity(Q, 2) * Mat::identity(Field::prime(2), 2)); });
}

TEST(Solve, Identity) {
  const Mat b = Mat::from_ints(Q, {{4}, {-2}});
  EXPECT_EQ(solve(Mat::identity(Q, 2), b), b);
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve(Mat::from_ints(Q, {{1, 1}, {1, 1}}), Mat::from_ints(Q, {{1}, {2}})));
}

TEST(Solve, RandomConsistentOverQ) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = gen::trial_rng(5, t);
    const Mat m = gen::random_matrix(Q, 4, 5, rng);
    const Mat b = m * gen::random_matrix(Q, 5, 1, rng);
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
}

TEST(Solve, ShapeError) {
  expect_error(ErrorCode::ShapeError,
               [] { (void)solve(Mat::identity(Q, 2), Mat::from_ints(Q, {{1}, {2}, {3}})); });
}

TEST(Kronecker, Small) {
  EXPECT_EQ(kronecker(Mat::from_ints(Q, {{2}}), Mat::from_ints(Q, {{3}})), Mat::from_ints(Q, {{6}}));
  EXPECT_EQ(kronecker(Mat::identity(Q, 2), Mat::identity(Q, 3)), Mat::identity(Q, 6));
}

TEST(Kronecker, MixedProductAndRank) {
  const Field f5 = Field::prime(5);
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = gen::trial_rng(7, t);
    const Mat a = gen::random_matrix(f5, 2, 3, rng), b = gen::random_matrix(f5, 3, 2, rng);
    const Mat c = gen::random_matrix(f5, 3, 2, rng), d = gen::random_matrix(f5, 2, 2, rng);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
    EXPECT_EQ(rank(kronecker(a, b)), rank(a) * rank(b));
  }
}

TEST(ImageBasis, ZeroMatrix) { EXPECT_EQ(image_basis(Mat::zero(Q, 3, 2)).cols(), 0u); }

TEST(QuotientCoords, KillsSubspace) {
  const Mat basis = Mat::from_ints(Q, {{0}, {1}});
  const Mat pi = quotient_coords(2, basis);
  EXPECT_EQ(pi.rows(), 1u);
  EXPECT_EQ(pi.cols(), 2u);
  EXPECT_TRUE((pi * basis).is_zero());
  EXPECT_EQ(rank(pi), 1u);
  EXPECT_TRUE((pi * complement_basis(2, basis)).is_identity());
}

TEST(QuotientCoords, DegenerateBasis) {
  expect_error(ErrorCode::DegenerateBasis,
               [] { (void)quotient_coords(2, Mat::from_ints(Q, {{1, 2}, {1, 2}})); });
}

TEST(Spans, SumAndIntersectionDimensions) {
  const Field f2 = Field::prime(2);
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = gen::trial_rng(9, t);
    const Mat a = image_basis(gen::random_matrix(f2, 5, 3, rng));
    const Mat b = image_basis(gen::random_matrix(f2, 5, 3, rng));
    const Mat s = span_sum(a, b), i = span_intersection(a, b);
    EXPECT_EQ(s.cols() + i.cols(), a.cols() + b.cols());
    for (std::size_t j = 0; j < i.cols(); ++j) {
      EXPECT_TRUE(in_span(a, i.col(j)));
      EXPECT_TRUE(in_span(b, i.col(j)));
    }
  }
}

TEST(Inverse, RoundTrip) {
  const Mat m = Mat::from_ints(Q, {{2, 1}, {1, 1}});
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((m * *inv).is_identity());
  EXPECT_FALSE(inverse(Mat::from_ints(Q, {{1, 1}, {1, 1}})));
}

TEST(Poly, MinimalPolynomialRoots) {
  const Field f5 = Field::prime(5);
  const Mat d = Mat::from_ints(f5, {{1, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const Poly mu = minimal_polynomial(d, Mat::identity(f5, 3));
  auto r = roots(mu);
  std::vector<std::string> names;
  for (const auto& x : r) names.push_back(x.to_string());
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "4"}));
}
