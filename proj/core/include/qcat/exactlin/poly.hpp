#pragma once

#include <vector>

#include "qcat/exactlin/matrix.hpp"

namespace qcat::lin {

/// Univariate polynomial, coefficients from the constant term upward.
using Poly = std::vector<Scalar>;

/// Monic minimal polynomial of `a` inside the algebra whose identity is
/// `unit` (for a corner algebra eAe pass e). Found from the first linear
/// dependency among unit, a, a^2, ...
Poly minimal_polynomial(const Mat& a, const Mat& unit);

Scalar evaluate(const Poly& f, const Scalar& x);

/// Distinct roots of f lying in its field, in increasing order of value
/// (rationals) or residue (GF(p)). f must be nonzero.
std::vector<Scalar> roots(const Poly& f);

}  // namespace qcat::lin
