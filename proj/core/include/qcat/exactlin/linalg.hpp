#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcat/exactlin/matrix.hpp"

namespace qcat::lin {

struct RowEchelon {
  Mat reduced;                       ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
RowEchelon rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Basis of the null space as the columns of a cols x k matrix.
/// Free variables are enumerated in index order and each basis vector has a 1
/// in its own free coordinate.
Mat kernel_basis(const Mat& m);

/// Basis of the column space: the pivot columns of m, in order.
Mat image_basis(const Mat& m);

/// Some x with m * x = b (b may have several columns), or nothing when the
/// system is inconsistent. Free variables are set to zero.
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// Two-sided inverse of a square matrix, if it exists.
std::optional<Mat> inverse(const Mat& m);

Mat kronecker(const Mat& a, const Mat& b);

/// Surjection k^n -> k^(n - |B|) whose kernel is exactly span(B).
///
/// B is extended to a basis with standard vectors taken in index order; the
/// map is the projection onto the coordinates of the added vectors.
/// Throws DegenerateBasis when the columns of B are dependent.
Mat quotient_coords(std::size_t n, const Mat& basis);

/// The standard vectors chosen by quotient_coords to complete B, as columns.
/// quotient_coords(n, B) * complement_basis(n, B) is the identity.
Mat complement_basis(std::size_t n, const Mat& basis);

/// Sum and intersection of column spans, returned as bases.
Mat span_sum(const Mat& a, const Mat& b);
Mat span_intersection(const Mat& a, const Mat& b);

bool in_span(const Mat& basis, const Mat& v);
/// span(a) == span(b).
bool same_span(const Mat& a, const Mat& b);

}  // namespace qcat::lin
