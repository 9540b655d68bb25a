#pragma once

#include <string>
#include <vector>

#include "qacert/algebra/rational.hpp"

namespace qacert {

/// Integer Laurent polynomial  sum_k c_k x^k, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Integer& constant);  // NOLINT: implicit by design of ring literals
  LaurentPolynomial(long constant) : LaurentPolynomial(Integer(constant)) {}  // NOLINT

  static LaurentPolynomial monomial(const Integer& coeff, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long low_degree() const { return low_; }
  long high_degree() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(long exponent) const;

  /// (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<long, Integer>> terms() const;

  LaurentPolynomial shifted(long by) const;
  /// x^k -> x^(k * factor); factor may be negative.
  LaurentPolynomial scale_exponents(long factor) const;
  LaurentPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;

  /// Quotient when `divisor` divides this exactly in Z[x, 1/x]; throws otherwise.
  LaurentPolynomial exact_divide(const LaurentPolynomial& divisor) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "t^-1 - 1 + t"; `denominator` > 1 prints exponents as k/denominator.
  std::string to_string(const std::string& var = "t", long denominator = 1) const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Integer> coeffs_;
};

}  // namespace qacert
