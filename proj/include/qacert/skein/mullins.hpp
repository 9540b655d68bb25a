#pragma once

#include "qacert/algebra/laurent.hpp"
#include "qacert/skein/jones.hpp"

namespace qacert {

struct MullinsResult {
  LaurentPolynomial jones;  // in s = t^(1/2)
  Rational v_at_minus_one;
  Rational derivative_at_minus_one;
  long signature = 0;
  Integer determinant;
  Rational lambda;
};

/// Casson-Walker invariant of the branched double cover,
/// lambda = -V'(-1) / (6 V(-1)) + sigma / 4, normalized so that the Poincare
/// sphere (double cover of T(3,5)) gets -2. Requires det != 0.
MullinsResult mullins_lambda(const LinkDiagram& d, const JonesOptions& opt = {});

}  // namespace qacert
