#include "qcat/exactlin/linalg.hpp"

#include "exactlin/ops.hpp"

namespace qcat::lin {

using detail::check_same_field;
using detail::MatAccess;
using detail::with_ops;

namespace {

// Gauss-Jordan on a row-major buffer; returns pivot columns. Only the first
// `limit` columns are eligible as pivots (used for augmented systems).
template <class Ops, class V>
std::vector<std::size_t> reduce(const Ops& ops, std::vector<V>& a, std::size_t rows,
                                std::size_t cols, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && Ops::is_zero(a[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    const V inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      if (!Ops::is_zero(a[r * cols + j])) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const V f = a[i * cols + c];
      if (Ops::is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (!Ops::is_zero(a[r * cols + j])) ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const Mat& m) {
  Mat out(m);
  std::vector<std::size_t> pivots = with_ops(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    return reduce(ops, MatAccess::data<Ops>(out), m.rows(), m.cols(), m.cols());
  });
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  const auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Mat basis(m.field(), n, free.size());
  with_ops(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    const auto& r = MatAccess::data<Ops>(red);
    auto& b = MatAccess::data<Ops>(basis);
    const std::size_t k = free.size();
    for (std::size_t f = 0; f < k; ++f) {
      const std::size_t fc = free[f];
      b[fc * k + f] = Ops::one();
      for (std::size_t row = 0; row < pivots.size(); ++row) {
        const auto& v = r[row * n + fc];
        if (!Ops::is_zero(v)) b[pivots[row] * k + f] = ops.neg(v);
      }
    }
  });
  return basis;
}

Mat image_basis(const Mat& m) {
  const auto pivots = rref(m).pivots;
  return m.select_cols(pivots);
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  check_same_field(m, b);
  require(m.rows() == b.rows(), ErrorCode::ShapeError, "solve: right-hand side has wrong height");
  const std::size_t n = m.cols();
  const std::size_t k = b.cols();
  Mat aug = Mat::hstack(m, b);
  auto pivots = with_ops(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    return reduce(ops, MatAccess::data<Ops>(aug), aug.rows(), aug.cols(), n);
  });
  // Inconsistent iff some row past the pivots has a nonzero right-hand side.
  for (std::size_t row = pivots.size(); row < aug.rows(); ++row) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!aug.at(row, n + j).is_zero()) return std::nullopt;
    }
  }
  Mat x(m.field(), n, k);
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    x.set_block(pivots[row], 0, aug.block(row, n, 1, k));
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  require(m.rows() == m.cols(), ErrorCode::ShapeError, "inverse of a non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.field(), m.rows()));
}

Mat kronecker(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  with_ops(a.field(), [&](auto ops) {
    using Ops = decltype(ops);
    const auto& x = MatAccess::data<Ops>(a);
    const auto& y = MatAccess::data<Ops>(b);
    auto& z = MatAccess::data<Ops>(out);
    const std::size_t oc = out.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& aij = x[i * a.cols() + j];
        if (Ops::is_zero(aij)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            z[(i * b.rows() + k) * oc + j * b.cols() + l] = ops.mul(aij, y[k * b.cols() + l]);
          }
        }
      }
    }
  });
  return out;
}

namespace {

// Standard vectors completing the columns of `basis` to a basis of k^n.
std::vector<std::size_t> completion_indices(std::size_t n, const Mat& basis) {
  require(basis.rows() == n, ErrorCode::ShapeError, "subspace basis has wrong ambient dimension");
  require(rank(basis) == basis.cols(), ErrorCode::DegenerateBasis,
          "subspace basis is linearly dependent");
  // Row-reduce B^T: the non-pivot columns are exactly the coordinates whose
  // standard vectors extend B, taken greedily in index order.
  const auto pivots = rref(basis.transpose()).pivots;
  std::vector<bool> used(n, false);
  for (auto p : pivots) used[p] = true;
  std::vector<std::size_t> extra;
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) extra.push_back(j);
  }
  return extra;
}

}  // namespace

Mat complement_basis(std::size_t n, const Mat& basis) {
  const auto extra = completion_indices(n, basis);
  return Mat::identity(basis.field(), n).select_cols(extra);
}

Mat quotient_coords(std::size_t n, const Mat& basis) {
  const Mat extra = complement_basis(n, basis);
  const Mat full = Mat::hstack(basis, extra);
  const auto inv = inverse(full);
  require(inv.has_value(), ErrorCode::DegenerateBasis, "completion is not a basis");
  return inv->block(basis.cols(), 0, extra.cols(), n);
}

Mat span_sum(const Mat& a, const Mat& b) { return image_basis(Mat::hstack(a, b)); }

Mat span_intersection(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows() == b.rows(), ErrorCode::ShapeError, "intersection of spans in different spaces");
  const Mat ia = image_basis(a);
  const Mat ib = image_basis(b);
  // x in both iff x = A u = B v, i.e. [A | -B] (u, v) = 0.
  const Mat k = kernel_basis(Mat::hstack(ia, -ib));
  if (k.cols() == 0) return Mat(a.field(), a.rows(), 0);
  return image_basis(ia * k.block(0, 0, ia.cols(), k.cols()));
}

bool in_span(const Mat& basis, const Mat& v) {
  if (basis.cols() == 0) return v.is_zero();
  return solve(basis, v).has_value();
}

bool same_span(const Mat& a, const Mat& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(Mat::hstack(a, b));
}

}  // namespace qcat::lin
