#include "qcat/random.hpp"

#include "qcat/exactlin/linalg.hpp"

namespace qcat::gen {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime()) return Scalar(f, static_cast<long>(rng() % f.characteristic()));
  return Scalar(f, static_cast<long>(rng() % 7) - 3);
}

Scalar random_nonzero_scalar(const Field& f, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
  }
  return m;
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Obj random_path_object(const BackendPtr& b, Rng& rng, const Bounds& bounds) {
  std::vector<std::size_t> dims(b->vertex_count(), 0);
  const std::size_t total = uniform(rng, 0, bounds.max_dim);
  for (std::size_t k = 0; k < total; ++k) ++dims[uniform(rng, 0, dims.size() - 1)];
  std::vector<Mat> maps;
  for (const auto& a : b->arrows()) {
    maps.push_back(random_matrix(b->field(), dims[a.target], dims[a.source], rng));
  }
  return Obj(b, std::move(dims), std::move(maps));
}

Obj random_group_object(const BackendPtr& b, Rng& rng, const Bounds& bounds) {
  const Field f = b->field();
  const std::size_t d = uniform(rng, 0, bounds.max_dim);
  Mat p = Mat::identity(f, d);
  std::optional<Mat> pinv;
  for (int attempt = 0; attempt < 32 && d > 0; ++attempt) {
    Mat cand = random_matrix(f, d, d, rng);
    if ((pinv = lin::inverse(cand))) {
      p = std::move(cand);
      break;
    }
  }
  if (!pinv) pinv = Mat::identity(f, d);
  std::vector<std::size_t> chars(d);
  for (auto& c : chars) c = uniform(rng, 0, b->simple_count() - 1);
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < b->arrows().size(); ++i) {
    Mat diag(f, d, d);
    for (std::size_t k = 0; k < d; ++k) diag.set(k, k, b->simples()[chars[k]].arrow_scalars[i]);
    maps.push_back(p * diag * *pinv);
  }
  return Obj(b, {d}, std::move(maps));
}

Obj random_matvec_object(const BackendPtr& b, Rng& rng, const Bounds& bounds) {
  std::vector<std::size_t> dims(b->vertex_count());
  std::size_t total = 0;
  for (auto& d : dims) total += d = uniform(rng, 0, bounds.max_cell);
  while (total > bounds.max_dim) {
    const std::size_t v = uniform(rng, 0, dims.size() - 1);
    if (dims[v] > 0) {
      --dims[v];
      --total;
    }
  }
  return Obj(b, std::move(dims), {});
}

}  // namespace

Obj random_object(const BackendPtr& b, Rng& rng, const Bounds& bounds) {
  if (b->vertex_count() == 0) return Obj::zero(b);
  switch (b->kind()) {
    case BackendKind::PathAlgebra: return random_path_object(b, rng, bounds);
    case BackendKind::GroupAlgebra: return random_group_object(b, rng, bounds);
    case BackendKind::MatVec: return random_matvec_object(b, rng, bounds);
  }
  return Obj::zero(b);
}

Mor random_combination(const std::vector<Mor>& basis, const Obj& m, const Obj& n, Rng& rng) {
  Mor acc = Mor::zero(m, n);
  for (const auto& f : basis) {
    const Scalar s = random_scalar(m.field(), rng);
    if (!s.is_zero()) acc = acc + f.scaled(s);
  }
  return acc;
}

Mor random_morphism(const Obj& m, const Obj& n, Rng& rng) {
  return random_combination(hom_basis(m, n), m, n, rng);
}

SubObj random_subobject(const Obj& m, Rng& rng) {
  const std::size_t k = uniform(rng, 0, 2);
  return spin_submodule(m, random_matrix(m.field(), m.dim(), k, rng));
}

}  // namespace qcat::gen
