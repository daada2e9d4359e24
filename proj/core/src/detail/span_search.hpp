#pragma once

// Search a finite-dimensional space of morphisms for an element satisfying a
// predicate. Candidates: each basis element, the sum of all of them, then
// either every coefficient vector (small finite fields) or a fixed pseudo-
// random sequence of combinations. Deterministic for a given input.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qcat/exactlin/field.hpp"

namespace qcat::detail {

inline constexpr std::uint64_t kExhaustiveLimit = 4096;
inline constexpr int kRandomTrialsFinite = 64;
inline constexpr int kRandomTrialsRational = 24;

template <class T, class Pred>
std::optional<T> search_span(const std::vector<T>& basis, const lin::Field& field, const T& zero,
                             Pred&& pred) {
  if (basis.empty()) {
    if (pred(zero)) return zero;
    return std::nullopt;
  }
  for (const auto& b : basis) {
    if (pred(b)) return b;
  }
  T total = basis.front();
  for (std::size_t i = 1; i < basis.size(); ++i) total = total + basis[i];
  if (pred(total)) return total;

  auto combine = [&](const std::vector<long>& coeffs) {
    T acc = zero;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i] != 0) acc = acc + basis[i].scaled(lin::Scalar(field, coeffs[i]));
    }
    return acc;
  };

  if (field.is_prime()) {
    const std::uint64_t p = field.characteristic();
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < basis.size() && small; ++i) {
      count *= p;
      small = count <= kExhaustiveLimit;
    }
    if (small) {
      std::vector<long> c(basis.size(), 0);
      for (std::uint64_t n = 1; n < count; ++n) {
        std::uint64_t x = n;
        for (auto& ci : c) {
          ci = static_cast<long>(x % p);
          x /= p;
        }
        T candidate = combine(c);
        if (pred(candidate)) return candidate;
      }
      return std::nullopt;
    }
  }

  std::mt19937_64 rng(0x51c0ffeeULL + basis.size());
  const int trials = field.is_prime() ? kRandomTrialsFinite : kRandomTrialsRational;
  for (int t = 0; t < trials; ++t) {
    std::vector<long> c(basis.size());
    for (auto& ci : c) {
      if (field.is_prime()) {
        ci = static_cast<long>(rng() % field.characteristic());
      } else {
        ci = static_cast<long>(rng() % (1u << 20)) - (1 << 19);
      }
    }
    T candidate = combine(c);
    if (pred(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace qcat::detail
