#include "qcat/exactlin/matrix.hpp"

#include <sstream>

#include "exactlin/ops.hpp"

namespace qcat::lin {

using detail::check_same_field;
using detail::MatAccess;
using detail::with_ops;

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational()) {
    data_ = std::vector<mpq_class>(rows * cols);
  } else {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  }
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_ints(f, v);
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, ErrorCode::ShapeError, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, ErrorCode::ShapeError, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::column(Field f, const std::vector<Scalar>& entries) {
  Mat m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Mat Mat::unit_vector(Field f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m.set(i, 0, 1);
  return m;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, ErrorCode::ShapeError, "matrix index out of range");
  return with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    return Scalar(field_, Ops::to(MatAccess::data<Ops>(*this)[r * cols_ + c]));
  });
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  require(r < rows_ && c < cols_, ErrorCode::ShapeError, "matrix index out of range");
  require(v.field() == field_, ErrorCode::FieldMismatch, "scalar field differs from matrix field");
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    MatAccess::data<Ops>(*this)[r * cols_ + c] = ops.from(v.value());
  });
}

void Mat::set(std::size_t r, std::size_t c, long v) { set(r, c, Scalar(field_, v)); }

bool Mat::is_zero() const {
  return with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    for (const auto& x : MatAccess::data<Ops>(*this)) {
      if (!Ops::is_zero(x)) return false;
    }
    return true;
  });
}

bool Mat::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    const auto& a = MatAccess::data<Ops>(*this);
    auto& b = MatAccess::data<Ops>(t);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) b[j * rows_ + i] = a[i * cols_ + j];
    }
  });
  return t;
}

Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorCode::ShapeError, "block out of range");
  Mat out(field_, nr, nc);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    const auto& a = MatAccess::data<Ops>(*this);
    auto& b = MatAccess::data<Ops>(out);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
    }
  });
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  check_same_field(*this, m);
  require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, ErrorCode::ShapeError,
          "set_block out of range");
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = MatAccess::data<Ops>(*this);
    const auto& b = MatAccess::data<Ops>(m);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) a[(r0 + i) * cols_ + c0 + j] = b[i * m.cols_ + j];
    }
  });
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out.set_block(0, k, col(idx[k]));
  return out;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) out.set_block(k, 0, block(idx[k], 0, 1, cols_));
  return out;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows_ == b.rows_, ErrorCode::ShapeError, "hstack row mismatch");
  Mat out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.cols_ == b.cols_, ErrorCode::ShapeError, "vstack column mismatch");
  Mat out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Mat Mat::hstack(Field f, std::size_t rows, std::span<const Mat> parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require(p.rows_ == rows, ErrorCode::ShapeError, "hstack row mismatch");
    cols += p.cols_;
  }
  Mat out(f, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols_;
  }
  return out;
}

Mat Mat::vstack(Field f, std::size_t cols, std::span<const Mat> parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    require(p.cols_ == cols, ErrorCode::ShapeError, "vstack column mismatch");
    rows += p.rows_;
  }
  Mat out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows_;
  }
  return out;
}

Mat Mat::block_diag(Field f, std::span<const Mat> parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Mat out(f, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows_;
    c += p.cols_;
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(*this, o);
  require(cols_ == o.rows_, ErrorCode::ShapeError,
          "product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
              " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Mat out(field_, rows_, o.cols_);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    const auto& a = MatAccess::data<Ops>(*this);
    const auto& b = MatAccess::data<Ops>(o);
    auto& c = MatAccess::data<Ops>(out);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& aik = a[i * cols_ + k];
        if (Ops::is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const auto& bkj = b[k * o.cols_ + j];
          if (!Ops::is_zero(bkj)) ops.add_mul(c[i * o.cols_ + j], aik, bkj);
        }
      }
    }
  });
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(*this, o);
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::ShapeError, "sum shape mismatch");
  Mat out(*this);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = MatAccess::data<Ops>(out);
    const auto& b = MatAccess::data<Ops>(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.add(a[i], b[i]);
  });
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat out(*this);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    for (auto& x : MatAccess::data<Ops>(out)) x = ops.neg(x);
  });
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  require(s.field() == field_, ErrorCode::FieldMismatch, "scalar field differs from matrix field");
  Mat out(*this);
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    auto f = ops.from(s.value());
    for (auto& x : MatAccess::data<Ops>(out)) x = ops.mul(x, f);
  });
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> Mat::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
  }
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  const auto s = to_strings();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << s[i][j];
    os << '\n';
  }
  return os.str();
}

}  // namespace qcat::lin
