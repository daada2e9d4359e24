#pragma once

#include <vector>

#include "oracle/oracle.hpp"
#include "qcat/abcat.hpp"
#include "qcat/random.hpp"
#include "qcat/serre.hpp"

namespace testing_support {

using namespace qcat;

// A2: vertex 1 -> vertex 2, simples S1, S2.
inline BackendPtr a2(Field f = Field::prime(2)) {
  return Backend::path_algebra(f, 2, {{0, 1, ""}});
}

inline BackendPtr a3(Field f = Field::prime(2)) {
  return Backend::path_algebra(f, 3, {{0, 1, ""}, {1, 2, ""}});
}

// k --id--> k
inline Obj m12(const BackendPtr& b) {
  return Obj(b, {1, 1}, {Mat::identity(b->field(), 1)});
}

// Z/2 with W1 the sign and W2 the trivial character.
inline BackendPtr repz2(Field f = Field::rationals()) {
  return Backend::group_algebra(f, {2}, {{"W1", {1}}, {"W2", {0}}});
}

inline SerreSpec serre(const BackendPtr& b, std::vector<std::string> labels) {
  return SerreSpec::from_labels(b, labels);
}

inline std::vector<bool> mask(const SerreSpec& c) {
  std::vector<bool> in(c.backend->simple_count(), false);
  for (auto s : c.simples) in[s] = true;
  return in;
}

// Small finite-field backends used for oracle comparisons.
inline std::vector<BackendPtr> small_backends() {
  const Field f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
  return {
      a2(f2),
      a3(f2),
      a3(f3),
      Backend::path_algebra(f2, 3, {{0, 1, ""}, {0, 2, ""}}),
      Backend::path_algebra(f2, 2, {{0, 1, "a"}, {0, 1, "b"}}),
      Backend::group_algebra(f3, {2}),
      Backend::group_algebra(f5, {4}),
      Backend::group_algebra(f3, {2, 2}),
      Backend::matvec(f2, {2, 1}),
      Backend::matvec(f3, {2}),
  };
}

}  // namespace testing_support
