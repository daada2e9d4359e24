#pragma once

// Serre subcategories of a finite-length backend, presented by the set of
// simples they contain.

#include <string>
#include <vector>

#include "qcat/abcat.hpp"

namespace qcat {

struct SerreSpec {
  BackendPtr backend;
  /// Sorted, duplicate-free simple indices.
  std::vector<std::size_t> simples;

  static SerreSpec none(BackendPtr backend);
  static SerreSpec all(BackendPtr backend);
  static SerreSpec from_indices(BackendPtr backend, std::vector<std::size_t> simples);
  /// Throws UnknownObject for a label outside the inventory.
  static SerreSpec from_labels(BackendPtr backend, const std::vector<std::string>& labels);

  bool contains(std::size_t simple) const;
  bool empty() const noexcept { return simples.empty(); }
  bool is_all() const { return backend && simples.size() == backend->simple_count(); }
  std::vector<std::string> labels() const;
  /// "<S2>", "<W1,W2>", or "0" for the zero subcategory.
  std::string describe() const;

  friend bool operator==(const SerreSpec& a, const SerreSpec& b) {
    return same_backend(a.backend, b.backend) && a.simples == b.simples;
  }
};

void check_same_backend(const SerreSpec& c, const Obj& x);

/// True iff every composition factor of x lies in c.
bool member(const SerreSpec& c, const Obj& x);
/// Same test on a multiplicity vector.
bool factors_in(const SerreSpec& c, const std::vector<std::size_t>& multiplicities);

/// Largest subobject of m lying in c.
SubObj torsion_part(const SerreSpec& c, const Obj& m);
/// Smallest subobject of m whose quotient lies in c.
SubObj reject_part(const SerreSpec& c, const Obj& m);

/// Intersection of the kernels of all morphisms from m to simples of c.
SubObj serre_radical(const SerreSpec& c, const Obj& m);
/// Sum of the images of all morphisms from simples of c into m.
SubObj serre_socle(const SerreSpec& c, const Obj& m);

}  // namespace qcat
