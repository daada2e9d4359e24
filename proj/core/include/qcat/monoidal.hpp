#pragma once

// Tensor structure on the group-algebra and matvec backends.
//
// Group algebras: diagonal action on the Kronecker product of carriers; the
// associator and unitors are identities. Matvec: (X (x) Y)_{ik} is the direct
// sum over j of X_{ij} (x) Y_{jk}, summands ordered by j; cells of different
// blocks never meet. Unitors are identities, the associator reorders the
// summands of ((X (x) Y) (x) Z)_{il} (k outer, j inner) into those of
// (X (x) (Y (x) Z))_{il} (j outer, k inner).

#include "qcat/abcat.hpp"
#include "qcat/quotient.hpp"
#include "qcat/serre.hpp"

namespace qcat {

bool is_tensor_backend(const Backend& b);
/// Throws RequirementUnmet unless the backend carries a tensor product.
void require_tensor(const Backend& b);

Obj unit(const BackendPtr& b);
Obj tensor(const Obj& x, const Obj& y);
Mor tensor(const Mor& f, const Mor& g);

/// (X (x) Y) (x) Z -> X (x) (Y (x) Z)
Mor associator(const Obj& x, const Obj& y, const Obj& z);
/// X (x) (Y (x) Z) -> (X (x) Y) (x) Z
Mor associator_inverse(const Obj& x, const Obj& y, const Obj& z);
/// 1 (x) X -> X
Mor left_unitor(const Obj& x);
/// X (x) 1 -> X
Mor right_unitor(const Obj& x);

struct DualData {
  Obj dual;
  Mor ev;    ///< left: X* (x) X -> 1      right: X (x) *X -> 1
  Mor coev;  ///< left: 1 -> X (x) X*      right: 1 -> *X (x) X
};

DualData left_dual(const Obj& x);
DualData right_dual(const Obj& x);

/// Zigzag composites; both equal the identity for genuine duality data.
/// Left: (id_X (x) ev) a (coev (x) id_X) on X and
///       (ev (x) id_X*) a^-1 (id_X* (x) coev) on X*.
std::pair<Mor, Mor> left_zigzags(const Obj& x, const DualData& d);
/// Right: (ev (x) id_X) a^-1 (id_X (x) coev) on X and
///        (id_*X (x) ev) a (coev (x) id_*X) on *X.
std::pair<Mor, Mor> right_zigzags(const Obj& x, const DualData& d);

/// Tensor of quotient morphisms: tensor the canonical representatives and
/// convert the result back to canonical form. Throws NotTensorIdeal unless
/// C is a two-sided tensor ideal.
QMor q_tensor(const QMor& a, const QMor& b);

/// The same conversion without the ideal check (the caller has done it).
QMor q_tensor_unchecked(const QMor& a, const QMor& b);

}  // namespace qcat
