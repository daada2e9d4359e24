#pragma once

// Seeded generators for random objects, morphisms and subobjects.

#include <cstdint>
#include <random>

#include "qcat/abcat.hpp"

namespace qcat::gen {

using Rng = std::mt19937_64;

/// Generator for trial `trial` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct Bounds {
  std::size_t max_dim = 8;   ///< total dimension cap
  std::size_t max_cell = 3;  ///< matvec cell cap
};

Scalar random_scalar(const Field& f, Rng& rng);
Scalar random_nonzero_scalar(const Field& f, Rng& rng);
Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);

Obj random_object(const BackendPtr& b, Rng& rng, const Bounds& bounds = {});
/// Random linear combination of hom_basis(m, n).
Mor random_morphism(const Obj& m, const Obj& n, Rng& rng);
/// Random element of the span of the given morphisms (zero when empty).
Mor random_combination(const std::vector<Mor>& basis, const Obj& m, const Obj& n, Rng& rng);
/// Spin of up to two random carrier vectors.
SubObj random_subobject(const Obj& m, Rng& rng);

}  // namespace qcat::gen
