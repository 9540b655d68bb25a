#pragma once

#include "qacert/algebra/laurent.hpp"
#include "qacert/skein/link_diagram.hpp"

namespace qacert {

enum class BracketMethod { tangle, naive };

struct JonesOptions {
  std::size_t max_crossings = 24;
  BracketMethod method = BracketMethod::tangle;
};

/// Kauffman bracket in A, normalized so that a single circle is 1.
/// A-smoothing of X[a,b,c,d] joins a-b and c-d.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const JonesOptions& opt = {});

/// Jones polynomial as a Laurent polynomial in s = t^(1/2):
/// V = (-A^3)^(-w) <D> with A = t^(-1/4).
LaurentPolynomial jones_polynomial(const LinkDiagram& d, const JonesOptions& opt = {});

/// "t^-4 + ..." with half-integer exponents written k/2.
std::string jones_to_string(const LaurentPolynomial& v_in_s);

/// V(t0) for V given in s = t^(1/2). Odd powers of s are rejected unless t0 = 1.
Rational jones_value_at(const LaurentPolynomial& v_in_s, const Rational& t0);
/// dV/dt at t0, same restriction.
Rational jones_derivative_at(const LaurentPolynomial& v_in_s, const Rational& t0);

}  // namespace qacert
