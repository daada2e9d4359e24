#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcat/exactlin/field.hpp"

namespace qcat::lin {

namespace detail {
struct MatAccess;
}

/// Dense row-major matrix over an exact field.
///
/// A list of column vectors is represented as a matrix whose columns are the
/// vectors, so an empty list over an n-dimensional space is an n x 0 matrix.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Mat from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Mat column(Field f, const std::vector<Scalar>& entries);
  /// Standard basis vector e_i of length n as an n x 1 matrix.
  static Mat unit_vector(Field f, std::size_t n, std::size_t i);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v);

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Mat col(std::size_t j) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& m);
  /// Columns selected by index, in the given order.
  Mat select_cols(std::span<const std::size_t> idx) const;
  Mat select_rows(std::span<const std::size_t> idx) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(Field f, std::size_t rows, std::span<const Mat> parts);
  static Mat vstack(Field f, std::size_t cols, std::span<const Mat> parts);
  static Mat block_diag(Field f, std::span<const Mat> parts);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;

  friend bool operator==(const Mat& a, const Mat& b);

  /// One row per line, entries separated by spaces; fractions as "p/q".
  std::string to_string() const;
  /// Rows of entry strings, the exchange format used by the JSON codec.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  friend struct detail::MatAccess;
  using Storage = std::variant<std::vector<mpq_class>, std::vector<std::uint32_t>>;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

}  // namespace qcat::lin
