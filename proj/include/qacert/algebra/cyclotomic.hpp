#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qacert/algebra/qpoly.hpp"
#include "qacert/algebra/rational.hpp"

namespace qacert {

/// Q(zeta_d) in the power basis 1, zeta, ..., zeta^(phi(d)-1), i.e. Q[x]/Phi_d.
/// Conductor 1 is Q itself (Phi_1 = x - 1).
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::size_t conductor);

  std::size_t conductor() const { return conductor_; }
  std::size_t degree() const { return static_cast<std::size_t>(phi_.degree()); }
  const QPoly& modulus_polynomial() const { return phi_; }

  /// Reduces an arbitrary-length coefficient vector in x = zeta.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  explicit CyclotomicField(std::size_t conductor);

 private:
  std::size_t conductor_;
  QPoly phi_;
};

/// The d-th cyclotomic polynomial (integer coefficients, monic).
QPoly cyclotomic_polynomial(std::size_t d);

std::size_t euler_phi(std::size_t n);

struct PrimePower {
  std::size_t prime;
  unsigned exponent;
};
/// p^m decomposition of n > 1, or nullopt if n is not a prime power.
std::optional<PrimePower> as_prime_power(std::size_t n);

class CyclotomicNumber {
 public:
  static CyclotomicNumber zero(std::size_t conductor);
  static CyclotomicNumber rational(std::size_t conductor, const Rational& q);
  /// zeta_d^k.
  static CyclotomicNumber zeta_power(std::size_t conductor, std::int64_t k);
  /// sum_k coeffs[k] zeta^k, reduced.
  static CyclotomicNumber from_powers(std::size_t conductor, std::vector<Rational> coeffs);

  std::size_t conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  /// Level j for conductor p^j (0 for conductor 1); throws if not a power of p.
  unsigned level(std::size_t prime) const;

  CyclotomicNumber inverse() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor() == b.conductor() && a.coords_ == b.coords_;
  }

  std::string to_string() const;

 private:
  CyclotomicNumber(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
      : field_(std::move(f)), coords_(std::move(c)) {}

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coords_;  // length == field degree
};

}  // namespace qacert
