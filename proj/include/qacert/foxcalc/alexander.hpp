#pragma once

#include <vector>

#include "qacert/algebra/laurent.hpp"
#include "qacert/foxcalc/presentation.hpp"

namespace qacert {

/// Fraction-free (Bareiss) determinant over Z[t, 1/t].
LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m);

/// Alexander polynomial of a deficiency-one presentation with an assignment
/// into Z. Normalized to be symmetric under t -> 1/t (when the span allows)
/// with Delta(1) > 0.
LaurentPolynomial alexander_polynomial(const Presentation& p);

/// Symmetrize and fix the sign so that value at 1 is positive (or, when it
/// vanishes, the top coefficient is positive).
LaurentPolynomial normalize_alexander(const LaurentPolynomial& d);

}  // namespace qacert
