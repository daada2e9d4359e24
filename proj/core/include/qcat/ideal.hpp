#pragma once

// Two-sided Serre tensor ideals of the tensor backends: recognition, closure,
// the decomposition of the unit, the component grid, classification and the
// quotient model.

#include <optional>
#include <vector>

#include "qcat/abcat.hpp"
#include "qcat/monoidal.hpp"
#include "qcat/serre.hpp"

namespace qcat {

/// Composition factors of S_i (x) S_j for two simples.
std::vector<std::size_t> fusion(const BackendPtr& b, std::size_t i, std::size_t j);

bool is_tensor_ideal(const SerreSpec& c);

/// Smallest tensor ideal containing the given simples.
SerreSpec tensor_ideal_closure(const SerreSpec& seed);

struct UnitSummand {
  Mor idempotent;  ///< primitive idempotent of End(1)
  SubObj image;    ///< 1_i inside the unit
};

/// Primitive orthogonal idempotents of End(1), ordered by the first carrier
/// coordinate on which they are nonzero. Throws BackendContract when End(1)
/// does not split into a product of copies of the field.
std::vector<UnitSummand> unit_decomposition(const BackendPtr& b);

struct ComponentGrid {
  std::size_t size = 0;                          ///< |I|
  std::vector<std::size_t> unit_simple;          ///< simple index of 1_i
  std::vector<std::pair<std::size_t, std::size_t>> cell_of;  ///< per simple
  /// cells[i][j]: simples S with 1_i (x) S (x) 1_j nonzero.
  std::vector<std::vector<std::vector<std::size_t>>> cells;

  bool nonzero(std::size_t i, std::size_t j) const { return !cells[i][j].empty(); }
};

ComponentGrid component_grid(const BackendPtr& b);

struct IdealDescriptor {
  std::vector<std::size_t> J;  ///< sorted unit indices
  SerreSpec serre;
};

/// The Serre subcategory spanned by the cells touching J, if J satisfies the
/// vanishing condition (no nonzero cell joins J to its complement).
std::optional<IdealDescriptor> ideal_from_indices(const ComponentGrid& grid, const BackendPtr& b,
                                                  std::vector<std::size_t> J);
/// Recovers J = {i : 1_i in C} for a tensor ideal; throws NotTensorIdeal.
IdealDescriptor describe_ideal(const SerreSpec& c);

/// Every tensor ideal, sorted lexicographically by J.
std::vector<IdealDescriptor> enumerate_tensor_ideals(const BackendPtr& b);

/// A simple B0 in C with B0* (x) B0 outside C, if any.
std::optional<std::size_t> monoidal_obstruction(const SerreSpec& c);

/// The model of A/C as the sum of the cells outside J x J.
struct QuotientModel {
  BackendPtr source;
  BackendPtr target;
  IdealDescriptor ideal;
  /// New simple index per old simple (absent for simples of C).
  std::vector<std::optional<std::size_t>> simple_map;
  /// New unit-summand index per old one (absent for indices in J).
  std::vector<std::optional<std::size_t>> unit_map;

  /// X' = sum over i, j outside J of 1_i (x) X (x) 1_j, inside the source.
  Obj surviving_part(const Obj& x) const;
  /// X' re-presented in the target backend.
  Obj transport(const Obj& x) const;
  /// A morphism between surviving parts, re-presented in the target.
  Mor transport(const Mor& f) const;
};

QuotientModel build_quotient_backend(const BackendPtr& b, const IdealDescriptor& c);

/// The image of the ideal c2 in the quotient by c1, re-validated there.
IdealDescriptor ideal_image_in_quotient(const QuotientModel& model, const IdealDescriptor& c2);

}  // namespace qcat
