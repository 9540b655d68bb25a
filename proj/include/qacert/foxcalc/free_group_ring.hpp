#pragma once

#include <map>
#include <string>

#include "qacert/algebra/rational.hpp"
#include "qacert/foxcalc/free_word.hpp"

namespace qacert {

/// Element of the integral group ring Z[F] of a free group: a finite sum of
/// freely reduced words with nonzero integer coefficients.
class FreeGroupRingElem {
 public:
  FreeGroupRingElem() = default;
  static FreeGroupRingElem one();
  static FreeGroupRingElem from_word(const FreeWord& w, const Integer& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<FreeWord, Integer>& terms() const { return terms_; }
  /// Adds coeff * w (w is reduced first).
  void add_term(const FreeWord& w, const Integer& coeff);

  FreeGroupRingElem operator-() const;
  FreeGroupRingElem& operator+=(const FreeGroupRingElem& o);
  FreeGroupRingElem& operator-=(const FreeGroupRingElem& o);
  friend FreeGroupRingElem operator+(FreeGroupRingElem a, const FreeGroupRingElem& b) { return a += b; }
  friend FreeGroupRingElem operator-(FreeGroupRingElem a, const FreeGroupRingElem& b) { return a -= b; }
  friend FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b);
  friend FreeGroupRingElem operator*(const Integer& s, const FreeGroupRingElem& a);
  friend bool operator==(const FreeGroupRingElem& a, const FreeGroupRingElem& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<FreeWord, Integer> terms_;
};

}  // namespace qacert
