#pragma once

// The quotient category A/C. A morphism M -> N of A/C is stored at the
// canonical pair: a morphism reject_part(C, M) -> N / torsion_part(C, N).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/abcat.hpp"
#include "qcat/serre.hpp"

namespace qcat {

/// The canonical pair for (M, N).
struct CanonicalSource {
  SubObj reject;  ///< c_C(M) inside M
};
struct CanonicalTarget {
  SubObj torsion;          ///< t_C(N) inside N
  QuotientObj quotient;    ///< N -> N / t_C(N)
};

CanonicalSource canonical_source(const SerreSpec& c, const Obj& m);
CanonicalTarget canonical_target(const SerreSpec& c, const Obj& n);

class QMor {
 public:
  /// `rep` must go from reject_part(c, source) to target/torsion_part(c, target).
  QMor(Obj source, Obj target, SerreSpec c, Mor rep);

  const Obj& source() const noexcept { return source_; }
  const Obj& target() const noexcept { return target_; }
  const SerreSpec& serre() const noexcept { return c_; }
  const Mor& rep() const noexcept { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  QMor operator+(const QMor& o) const;
  QMor operator-(const QMor& o) const;
  QMor operator-() const;
  QMor scaled(const Scalar& s) const;

  friend bool operator==(const QMor& a, const QMor& b);

 private:
  Obj source_;
  Obj target_;
  SerreSpec c_;
  Mor rep_;
};

std::vector<QMor> qhom_basis(const Obj& m, const Obj& n, const SerreSpec& c);

/// The canonical functor T on morphisms.
QMor canonical_map(const Mor& f, const SerreSpec& c);
QMor q_identity(const Obj& m, const SerreSpec& c);
QMor q_zero(const Obj& m, const Obj& n, const SerreSpec& c);

/// g after f.
QMor q_compose(const QMor& g, const QMor& f);

/// Converts an element of the direct system defining Hom_{A/C}(M, W):
/// `phi` goes from a subobject `sub` of M with M/sub in C to W/W', where
/// `w_proj` : W -> W/W' is an epimorphism whose kernel lies in C.
/// Throws BackendContract when (sub, w_proj) is not an index of the system.
QMor from_direct_system(const SerreSpec& c, const SubObj& sub, const Mor& phi,
                        const Mor& w_proj);

struct QClass {
  bool zero = false;
  bool mono = false;
  bool epi = false;

  bool iso() const noexcept { return mono && epi; }
  /// "iso", "zero", "mono", "epi" or "general", in that order of precedence.
  std::string name() const;
};

/// Classification of f's image under T, read off from membership of its
/// image, kernel and cokernel in C.
QClass q_classify(const Mor& f, const SerreSpec& c);
QClass q_classify(const QMor& q);

std::size_t q_length(const Obj& x, const SerreSpec& c);

/// Two-sided inverse of q, if q is invertible in A/C.
std::optional<QMor> q_inverse(const QMor& q);

/// An isomorphism M -> N in A/C together with its inverse, if one exists.
std::optional<std::pair<QMor, QMor>> q_find_iso(const Obj& m, const Obj& n, const SerreSpec& c);
bool q_iso(const Obj& m, const Obj& n, const SerreSpec& c);

}  // namespace qcat
