#include "qcat/exactlin/poly.hpp"

#include <algorithm>
#include <cstdint>

#include "qcat/error.hpp"
#include "qcat/exactlin/linalg.hpp"

namespace qcat::lin {

namespace {

Mat flatten(const Mat& m) {
  Mat v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
  }
  return v;
}

// ---- GF(p) root finding on raw residues ------------------------------------

using Residues = std::vector<std::uint64_t>;

struct ModPolys {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(Residues& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  Residues mod(Residues a, const Residues& m) const {
    trim(a);
    const std::uint64_t lead_inv = inv(m.back());
    while (a.size() >= m.size()) {
      const std::uint64_t c = mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] + p - mul(c, m[i])) % p;
      }
      trim(a);
    }
    return a;
  }

  Residues mulmod(const Residues& a, const Residues& b, const Residues& m) const {
    if (a.empty() || b.empty()) return {};
    Residues c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul(a[i], b[j])) % p;
    }
    return mod(std::move(c), m);
  }

  Residues powmod(Residues base, std::uint64_t e, const Residues& m) const {
    Residues r = mod({1}, m);
    base = mod(std::move(base), m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  Residues gcd(Residues a, Residues b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Residues r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) {
      const std::uint64_t li = inv(a.back());
      for (auto& c : a) c = mul(c, li);
    }
    return a;
  }

  Residues sub(Residues a, const Residues& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
  }

  // g is monic and a product of distinct linear factors.
  void split(const Residues& g, std::vector<std::uint64_t>& out) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back((p - g[0]) % p);
      return;
    }
    for (std::uint64_t delta = 0;; ++delta) {
      Residues h = powmod({delta % p, 1}, (p - 1) / 2, g);
      h = sub(std::move(h), {1});
      Residues d = gcd(g, h);
      if (d.size() > 1 && d.size() < g.size()) {
        split(d, out);
        // g / d by long division
        Residues quot(g.size() - d.size() + 1, 0);
        Residues rem = g;
        for (std::size_t k = quot.size(); k-- > 0;) {
          const std::uint64_t c = rem[k + d.size() - 1];
          quot[k] = c;
          for (std::size_t i = 0; i < d.size(); ++i) {
            rem[k + i] = (rem[k + i] + p - mul(c, d[i])) % p;
          }
        }
        split(quot, out);
        return;
      }
    }
  }
};

std::vector<Scalar> prime_roots(const Poly& f) {
  const Field field = f.front().field();
  const std::uint64_t p = field.characteristic();
  Residues coeffs;
  for (const auto& c : f) coeffs.push_back(c.value().get_num().get_ui());
  ModPolys ops{p};
  ModPolys::trim(coeffs);
  require(!coeffs.empty(), ErrorCode::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::uint64_t> found;
  if (p <= 4096) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = (ops.mul(acc, x) + coeffs[i]) % p;
      if (acc == 0) found.push_back(x);
    }
  } else {
    const std::uint64_t li = ops.inv(coeffs.back());
    for (auto& c : coeffs) c = ops.mul(c, li);
    if (coeffs.size() > 1) {
      Residues xp = ops.powmod({0, 1}, p, coeffs);
      Residues g = ops.gcd(coeffs, ops.sub(std::move(xp), {0, 1}));
      ops.split(g, found);
    }
    std::sort(found.begin(), found.end());
  }
  std::vector<Scalar> out;
  for (auto x : found) out.emplace_back(field, static_cast<long>(x));
  return out;
}

// ---- rational roots ----------------------------------------------------------

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  require(n <= mpz_class("1000000000000"), ErrorCode::BackendContract,
          "rational root search: coefficient too large");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  const Field field = Field::rationals();
  mpz_class lcm = 1;
  for (const auto& c : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : f) a.push_back(mpz_class(c.value() * lcm));
  while (!a.empty() && a.back() == 0) a.pop_back();
  require(!a.empty(), ErrorCode::InvalidArgument, "roots of the zero polynomial");

  std::vector<mpq_class> found;
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) found.push_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  if (a.size() > 1) {
    auto eval = [&](const mpq_class& x) {
      mpq_class acc = 0;
      for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
      return acc;
    };
    for (const auto& num : divisors(a.front())) {
      for (const auto& den : divisors(a.back())) {
        for (int sign : {1, -1}) {
          mpq_class x(num * sign, den);
          x.canonicalize();
          if (eval(x) == 0 && std::find(found.begin(), found.end(), x) == found.end()) {
            found.push_back(x);
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Scalar> out;
  for (const auto& x : found) out.emplace_back(field, x);
  return out;
}

}  // namespace

Poly minimal_polynomial(const Mat& a, const Mat& unit) {
  const Field f = a.field();
  std::vector<Mat> powers{flatten(unit)};
  Mat current = unit;
  const std::size_t limit = a.rows() * a.cols() + 1;
  for (std::size_t k = 1; k <= limit; ++k) {
    current = current * a;
    const Mat v = flatten(current);
    const Mat span = Mat::hstack(f, v.rows(), powers);
    if (auto c = solve(span, v)) {
      Poly poly;
      for (std::size_t i = 0; i < k; ++i) poly.push_back(-c->at(i, 0));
      poly.push_back(Scalar::one(f));
      return poly;
    }
    powers.push_back(v);
  }
  fail(ErrorCode::BackendContract, "minimal polynomial search did not terminate");
}

Scalar evaluate(const Poly& f, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

std::vector<Scalar> roots(const Poly& f) {
  require(!f.empty(), ErrorCode::InvalidArgument, "roots of the empty polynomial");
  if (f.front().field().is_rational()) return rational_roots(f);
  return prime_roots(f);
}

}  // namespace qcat::lin
