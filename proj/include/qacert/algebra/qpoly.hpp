#pragma once

#include <vector>

#include "qacert/algebra/rational.hpp"

namespace qacert {

/// Dense polynomial over Q, coefficient of x^k at index k; no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws DomainError on a zero divisor.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Returns g = gcd(a, b) (monic) and s, t with s*a + t*b = g.
QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

}  // namespace qacert
