#include "qacert/skein/mullins.hpp"

#include "qacert/error.hpp"
#include "qacert/skein/goeritz.hpp"

namespace qacert {

MullinsResult mullins_lambda(const LinkDiagram& d, const JonesOptions& opt) {
  MullinsResult r;
  auto g = goeritz_invariants(d);
  r.signature = g.signature;
  r.determinant = g.determinant;
  if (r.determinant == 0) throw DomainError("Casson-Walker formula needs det(L) != 0");
  r.jones = jones_polynomial(d, opt);
  r.v_at_minus_one = jones_value_at(r.jones, -1);
  r.derivative_at_minus_one = jones_derivative_at(r.jones, -1);
  Rational quarter(r.signature, 4);
  quarter.canonicalize();
  r.lambda = -r.derivative_at_minus_one / (6 * r.v_at_minus_one) + quarter;
  r.lambda.canonicalize();
  return r;
}

}  // namespace qacert
