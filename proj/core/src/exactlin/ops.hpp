#pragma once

// Typed field kernels behind the runtime-tagged Mat.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/exactlin/matrix.hpp"

namespace qcat::lin::detail {

struct RationalOps {
  using value_type = mpq_class;

  static value_type zero() { return value_type(0); }
  static value_type one() { return value_type(1); }
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type inv(const value_type& a) {
    require(!is_zero(a), ErrorCode::DivisionByZero, "division by zero");
    return value_type(1) / a;
  }
  /// acc -= f * x
  static void sub_mul(value_type& acc, const value_type& f, const value_type& x) { acc -= f * x; }
  static void add_mul(value_type& acc, const value_type& f, const value_type& x) { acc += f * x; }
  static value_type from(const mpq_class& q) { return q; }
  static mpq_class to(const value_type& v) { return v; }
};

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint64_t p;

  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static bool is_zero(value_type a) { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return value_type(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return value_type(a >= b ? a - b : std::uint64_t(a) + p - b);
  }
  value_type mul(value_type a, value_type b) const { return value_type(std::uint64_t(a) * b % p); }
  value_type neg(value_type a) const { return a == 0 ? 0 : value_type(p - a); }
  value_type inv(value_type a) const {
    require(a != 0, ErrorCode::DivisionByZero, "division by zero");
    std::int64_t t = 0, nt = 1, r = std::int64_t(p), nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += std::int64_t(p);
    return value_type(t);
  }
  void sub_mul(value_type& acc, value_type f, value_type x) const { acc = sub(acc, mul(f, x)); }
  void add_mul(value_type& acc, value_type f, value_type x) const { acc = add(acc, mul(f, x)); }
  value_type from(const mpq_class& q) const {
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
    value_type n = value_type(num.get_ui());
    value_type d = value_type(den.get_ui());
    require(d != 0, ErrorCode::DivisionByZero, "denominator vanishes in GF(p)");
    return mul(n, inv(d));
  }
  static mpq_class to(value_type v) { return mpq_class(static_cast<unsigned long>(v)); }
};

struct MatAccess {
  template <class Ops>
  static std::vector<typename Ops::value_type>& data(Mat& m) {
    return std::get<std::vector<typename Ops::value_type>>(m.data_);
  }
  template <class Ops>
  static const std::vector<typename Ops::value_type>& data(const Mat& m) {
    return std::get<std::vector<typename Ops::value_type>>(m.data_);
  }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_rational()) return std::forward<Fn>(fn)(RationalOps{});
  return std::forward<Fn>(fn)(PrimeOps{f.characteristic()});
}

inline void check_same_field(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch,
          "field mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace qcat::lin::detail
