#pragma once

// Finite-length k-linear abelian categories presented as representations of a
// quiver with relations:
//
//   * path algebras of acyclic quivers (no relations),
//   * group algebras of finite abelian groups Z/n1 x ... x Z/nr in good
//     characteristic (one vertex, one commuting loop per cyclic factor),
//   * grids  (+)_b Mat_{n_b}(Vec)  (one vertex per cell, no arrows).
//
// An object is a vector space per vertex plus a matrix per arrow; a morphism
// is a matrix per vertex intertwining all arrow actions. Every simple object
// in these three families is one-dimensional, so the simple inventory is a
// list of (vertex, loop scalars) pairs fixed by the backend.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/exactlin/field.hpp"
#include "qcat/exactlin/matrix.hpp"

namespace qcat {

using lin::Field;
using lin::Mat;
using lin::Scalar;

enum class BackendKind { PathAlgebra, GroupAlgebra, MatVec };

std::string to_string(BackendKind kind);

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::string name;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct SimpleInfo {
  std::string label;
  std::size_t vertex;
  /// Scalar by which each arrow acts; zero for arrows that are not loops at
  /// `vertex`.
  std::vector<Scalar> arrow_scalars;
};

/// A character of a finite abelian group, by exponents against the chosen
/// roots of unity: g_i acts by zeta_i^{e_i}.
struct NamedCharacter {
  std::string label;
  std::vector<std::uint32_t> exponents;
};

struct Cell {
  std::size_t block;
  std::size_t row;
  std::size_t col;
};

class Backend;
using BackendPtr = std::shared_ptr<const Backend>;

class Backend {
 public:
  /// Acyclic quiver; vertices are 0-based, simples are labelled S1..Sn.
  static BackendPtr path_algebra(Field field, std::size_t vertices, std::vector<Arrow> arrows,
                                 std::string id = {});
  /// Group algebra of Z/n1 x ... x Z/nr. Requires every ni to divide |k^x|
  /// so that all characters are defined over the field (this also forces the
  /// characteristic not to divide the group order). When `characters` is
  /// empty every character is listed with label chi_e1_..._er.
  static BackendPtr group_algebra(Field field, std::vector<std::uint32_t> cyclic_orders,
                                  std::vector<NamedCharacter> characters = {},
                                  std::string id = {});
  /// (+)_b Mat_{n_b}(Vec). The cell simple E_{ij} of block b is labelled
  /// "E<b>_<i>_<j>" (1-based). An empty block list is the zero category.
  static BackendPtr matvec(Field field, std::vector<std::size_t> blocks, std::string id = {});

  BackendKind kind() const noexcept { return kind_; }
  const Field& field() const noexcept { return field_; }
  const std::string& id() const noexcept { return id_; }

  std::size_t vertex_count() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<SimpleInfo>& simples() const noexcept { return simples_; }
  std::size_t simple_count() const noexcept { return simples_.size(); }
  std::optional<std::size_t> simple_index(const std::string& label) const;
  const std::string& label(std::size_t simple) const { return simples_.at(simple).label; }

  /// Group algebra data.
  const std::vector<std::uint32_t>& cyclic_orders() const noexcept { return orders_; }
  /// Chosen primitive root of unity for each cyclic factor.
  const std::vector<Scalar>& roots_of_unity() const noexcept { return roots_; }
  std::uint64_t group_order() const;

  /// Matvec data.
  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  Cell cell(std::size_t vertex) const;
  std::size_t vertex_of(const Cell& c) const;

  /// Throws InvalidMorphism when the arrow matrices violate the relations.
  void check_relations(const std::vector<std::size_t>& dims, const std::vector<Mat>& maps) const;

  /// Structural equality of presentations.
  friend bool operator==(const Backend& a, const Backend& b);

 private:
  Backend() = default;

  BackendKind kind_ = BackendKind::PathAlgebra;
  Field field_ = Field::rationals();
  std::string id_;
  std::size_t vertices_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<SimpleInfo> simples_;
  std::vector<std::uint32_t> orders_;
  std::vector<Scalar> roots_;
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> block_offsets_;
};

bool same_backend(const BackendPtr& a, const BackendPtr& b);

/// Immutable object handle; copies share the presentation.
class Obj {
 public:
  Obj(BackendPtr backend, std::vector<std::size_t> dims, std::vector<Mat> maps);
  /// Skips the relation check; for constructions that preserve relations.
  struct Unchecked {};
  Obj(Unchecked, BackendPtr backend, std::vector<std::size_t> dims, std::vector<Mat> maps);

  static Obj zero(BackendPtr backend);
  static Obj simple(BackendPtr backend, std::size_t index);
  static Obj simple(BackendPtr backend, const std::string& label);

  const BackendPtr& backend() const noexcept { return d_->backend; }
  const Field& field() const noexcept { return d_->backend->field(); }
  const std::vector<std::size_t>& dims() const noexcept { return d_->dims; }
  std::size_t dim(std::size_t vertex) const { return d_->dims.at(vertex); }
  std::size_t dim() const noexcept { return d_->total; }
  /// Offset of a vertex block inside the total carrier.
  std::size_t offset(std::size_t vertex) const { return d_->offsets.at(vertex); }
  const Mat& map(std::size_t arrow) const { return d_->maps.at(arrow); }
  const std::vector<Mat>& maps() const noexcept { return d_->maps; }
  bool is_zero() const noexcept { return d_->total == 0; }

  /// Identity of presentation.
  friend bool operator==(const Obj& a, const Obj& b);

 private:
  struct Data {
    BackendPtr backend;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Mat> maps;
  };
  std::shared_ptr<const Data> d_;
};

/// A morphism: one matrix per vertex. Intertwining is checked on
/// construction.
class Mor {
 public:
  Mor(Obj source, Obj target, std::vector<Mat> components);

  static Mor zero(const Obj& source, const Obj& target);
  static Mor identity(const Obj& object);
  /// Splits a carrier-level matrix (target.dim() x source.dim()) into vertex
  /// components; off-diagonal vertex blocks must vanish.
  static Mor from_total(const Obj& source, const Obj& target, const Mat& total);

  const Obj& source() const noexcept { return source_; }
  const Obj& target() const noexcept { return target_; }
  const Mat& component(std::size_t vertex) const { return components_.at(vertex); }
  const std::vector<Mat>& components() const noexcept { return components_; }
  /// Block-diagonal matrix on the total carriers.
  Mat total() const;

  bool is_zero() const;
  Mor operator+(const Mor& o) const;
  Mor operator-(const Mor& o) const;
  Mor operator-() const;
  Mor scaled(const Scalar& s) const;

  friend bool operator==(const Mor& a, const Mor& b);

 private:
  struct Unchecked {};
  Mor(Unchecked, Obj source, Obj target, std::vector<Mat> components);
  friend Mor compose(const Mor& g, const Mor& f);

  Obj source_;
  Obj target_;
  std::vector<Mat> components_;
};

/// g after f. Throws ComposeError when f's target is not g's source.
Mor compose(const Mor& g, const Mor& f);

/// A subobject: an object with a monomorphism into its parent.
struct SubObj {
  Obj object;
  Mor inclusion;

  const Obj& parent() const noexcept { return inclusion.target(); }
  std::size_t dim() const noexcept { return object.dim(); }
  /// Columns spanning the subspace at a vertex of the parent.
  const Mat& span(std::size_t vertex) const { return inclusion.component(vertex); }
};

/// A quotient object with its projection from the parent.
struct QuotientObj {
  Obj object;
  Mor projection;
};

struct Biproduct {
  Obj sum;
  Mor in1, in2, pr1, pr2;
};

// ---- operations ------------------------------------------------------------

void check_same_backend(const Obj& a, const Obj& b);

/// Basis of Hom(M, N), from the null space of the commutation constraints.
std::vector<Mor> hom_basis(const Obj& m, const Obj& n);

SubObj kernel(const Mor& f);
SubObj image(const Mor& f);
QuotientObj cokernel(const Mor& f);
/// Coimage M / ker f.
QuotientObj coimage(const Mor& f);

/// Subobject with the given per-vertex spanning columns (any spanning set).
/// Throws NotSubobject when the spans are not invariant.
SubObj subobject(const Obj& parent, const std::vector<Mat>& spans);
SubObj zero_subobject(const Obj& parent);
SubObj whole(const Obj& parent);

/// Smallest subobject containing the given carrier vectors (columns of a
/// dim(M) x k matrix).
SubObj spin_submodule(const Obj& m, const Mat& vectors);

SubObj sum(const SubObj& a, const SubObj& b);
SubObj intersection(const SubObj& a, const SubObj& b);
bool contains(const SubObj& outer, const SubObj& inner);
bool same_subobject(const SubObj& a, const SubObj& b);
/// Preimage of a subobject of q.object under q.projection.
SubObj preimage(const QuotientObj& q, const SubObj& sub);
/// Image of a subobject of f.source() under f, as a subobject of f.target().
SubObj push_forward(const Mor& f, const SubObj& sub);
/// sub viewed as a subobject of an intermediate subobject `outer` (sub must
/// lie inside outer).
SubObj restrict_to(const SubObj& outer, const SubObj& sub);

Obj direct_sum(const Obj& m, const Obj& n);
Biproduct biproduct(const Obj& m, const Obj& n);
QuotientObj quotient_object(const Obj& m, const SubObj& s);

/// Carrier vectors at one vertex spanning the sum of all images of the given
/// simple in m (the simple-isotypic part of the socle).
Mat simple_socle(const Obj& m, std::size_t simple);

struct CompositionSeries {
  std::vector<SubObj> chain;         ///< 0 = X0 < X1 < ... < Xn = M
  std::vector<std::size_t> factors;  ///< simple index of X_{i+1}/X_i
};

/// Composition series built by repeatedly splitting off a simple subobject
/// of the current quotient. Simples are tried in inventory order and the
/// first socle vector is used, unless `rng` is given, in which case both
/// choices are randomized.
CompositionSeries composition_series(const Obj& m, std::mt19937_64* rng = nullptr);

/// Multiplicity of every simple (indexed like Backend::simples()).
std::vector<std::size_t> composition_factors(const Obj& m, std::mt19937_64* rng = nullptr);
std::size_t length(const Obj& m);

/// An isomorphism M -> N if one exists, searched inside hom_basis(M, N).
std::optional<Mor> find_isomorphism(const Obj& m, const Obj& n);
bool is_isomorphic(const Obj& m, const Obj& n);

/// Label of a simple object (an object of length one), if it is simple.
std::optional<std::size_t> simple_label(const Obj& m);

}  // namespace qcat
