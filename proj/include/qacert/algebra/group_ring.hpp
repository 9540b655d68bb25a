#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qacert/algebra/rational.hpp"

namespace qacert {

/// Element of the rational group ring Q[Z/N]; the coefficient of t^k sits at
/// index k. Exponents are always reduced modulo N.
class GroupRingElem {
 public:
  explicit GroupRingElem(std::size_t modulus);
  GroupRingElem(std::size_t modulus, std::vector<Rational> coeffs);

  static GroupRingElem one(std::size_t modulus);
  /// coeff * t^exponent, exponent taken modulo N.
  static GroupRingElem monomial(std::size_t modulus, std::int64_t exponent,
                                const Rational& coeff = 1);
  /// (1/N) * sum of all group elements; the idempotent of the trivial character.
  static GroupRingElem average(std::size_t modulus);

  std::size_t modulus() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t k) const { return coeffs_[k % coeffs_.size()]; }

  /// Sum of coefficients (the image of t -> 1).
  Rational augmentation() const;
  bool is_zero() const;
  bool is_integral() const;

  /// The automorphism t -> t^power (power must be a unit mod N for bijectivity,
  /// though any integer is accepted).
  GroupRingElem substitute_power(std::int64_t power) const;

  GroupRingElem operator-() const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(const Rational& s);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const Rational& s, GroupRingElem a) { return a *= s; }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
};

/// {"modulus": N, "coeffs": ["p/q", ...]}
nlohmann::ordered_json to_json(const GroupRingElem& x);
GroupRingElem group_ring_from_json(const nlohmann::ordered_json& j);

}  // namespace qacert
