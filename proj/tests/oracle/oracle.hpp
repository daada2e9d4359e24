#pragma once

// Brute-force reference computations over GF(p), written against raw
// quiver data so they share no algorithm with the library: subspaces are
// enumerated exhaustively, Hom spaces come from explicit linear systems and
// quotient Hom spaces from the literal colimit of the direct system.

#include <cstdint>
#include <optional>
#include <vector>

#include "qcat/abcat.hpp"

namespace oracle {

using u32 = std::uint32_t;
/// Row-major matrix over GF(p).
struct M {
  std::size_t r = 0, c = 0;
  std::vector<u32> a;

  M() = default;
  M(std::size_t rows, std::size_t cols) : r(rows), c(cols), a(rows * cols, 0) {}
  u32& operator()(std::size_t i, std::size_t j) { return a[i * c + j]; }
  u32 operator()(std::size_t i, std::size_t j) const { return a[i * c + j]; }
};

struct Quiver {
  u32 p = 2;
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  ///< (source, target)
  struct Simple {
    std::size_t vertex;
    std::vector<u32> loop_scalars;  ///< one per arrow; used on loops only
  };
  std::vector<Simple> simples;
};

struct Rep {
  std::vector<std::size_t> dims;
  std::vector<M> maps;
};

/// Subrepresentation as one column basis per vertex.
using Sub = std::vector<M>;

// Conversion from library values (data only, no algorithms).
Quiver quiver_of(const qcat::Backend& b);
Rep rep_of(const qcat::Obj& x);

// Plain linear algebra mod p.
M mul(u32 p, const M& x, const M& y);
std::size_t rank(u32 p, M x);
/// Kernel basis as columns.
M kernel(u32 p, M x);

/// Every subspace of GF(p)^d, as column bases in reduced form.
std::vector<M> all_subspaces(u32 p, std::size_t d);

/// Every subrepresentation, by exhaustive search over vertexwise subspaces.
std::vector<Sub> all_subreps(const Quiver& q, const Rep& x);

/// Composition multiplicities of a subrepresentation: per vertex without
/// loops the dimension, with loops the joint eigenspace dimension.
std::vector<std::size_t> multiplicities(const Quiver& q, const Rep& x, const Sub& s);
std::vector<std::size_t> multiplicities(const Quiver& q, const Rep& x);

/// dim Hom(x, y) from the intertwining equations.
std::size_t hom_dim(const Quiver& q, const Rep& x, const Rep& y);

/// dim of colim Hom(M', N/N') over M' with M/M' in C and N' in C.
/// Nothing when the direct sum of all terms exceeds `cap` dimensions.
std::optional<std::size_t> colimit_qhom_dim(const Quiver& q, const Rep& m, const Rep& n,
                                            const std::vector<bool>& in_c, std::size_t cap);

/// Number of composition factors outside C.
std::size_t q_length(const Quiver& q, const Rep& x, const std::vector<bool>& in_c);

/// Fusion multiplicities of simples from closed formulas: characters
/// multiply for group algebras, E_ij (x) E_jk = E_ik for matrix blocks.
std::vector<std::size_t> fusion(const qcat::Backend& b, std::size_t s, std::size_t t);

/// Subsets of simples closed under tensoring with any simple on either side,
/// as sorted index lists in lexicographic order of their bitmasks.
std::vector<std::vector<std::size_t>> brute_force_ideals(const qcat::Backend& b);

}  // namespace oracle
