#pragma once

#include <vector>

#include "qacert/algebra/group_ring.hpp"
#include "qacert/algebra/laurent.hpp"
#include "qacert/foxcalc/free_group_ring.hpp"
#include "qacert/foxcalc/presentation.hpp"

namespace qacert {

/// Fox free derivative d/da_i of w (generator index 0-based). Works on the
/// word as written; the result does not depend on free reduction.
FreeGroupRingElem fox_derivative(const FreeWord& w, std::size_t generator);

/// Row-major: entry [i][j] = d relator_j / d a_i.
using FoxMatrix = std::vector<std::vector<FreeGroupRingElem>>;
FoxMatrix fox_matrix(const Presentation& p);

/// Image in Q[Z/N] under a finite assignment (modulus N > 0).
GroupRingElem abelianize(const FreeGroupRingElem& x, const Assignment& a);
/// Image in Z[t, 1/t] under an assignment into Z (modulus 0).
LaurentPolynomial abelianize_laurent(const FreeGroupRingElem& x, const Assignment& a);

}  // namespace qacert
