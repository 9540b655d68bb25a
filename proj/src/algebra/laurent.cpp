#include "qacert/algebra/laurent.hpp"

#include <numeric>
#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

LaurentPolynomial::LaurentPolynomial(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coeff, long exponent) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void LaurentPolynomial::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LaurentPolynomial::coefficient(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<long, Integer>> LaurentPolynomial::terms() const {
  std::vector<std::pair<long, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<long>(i), coeffs_[i]);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

LaurentPolynomial LaurentPolynomial::scale_exponents(long factor) const {
  if (factor == 0) {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return LaurentPolynomial(s);
  }
  LaurentPolynomial p;
  for (const auto& [e, c] : terms()) p += monomial(c, e * factor);
  return p;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms())
    if (e != 0) p += monomial(c * e, e - 1);
  return p;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw DomainError("Laurent polynomial evaluated at 0");
  // Horner on the polynomial part, then multiply by x^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  Rational base = low_ >= 0 ? x : Rational(1) / x;
  for (long i = 0; i < std::abs(low_); ++i) acc *= base;
  return acc;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high_degree(), o.high_degree());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPolynomial p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("Laurent division by zero");
  if (is_zero()) return {};
  // Long division from the top degree down on the dense representations.
  std::vector<Integer> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) throw DomainError("Laurent division is not exact");
  std::vector<Integer> q(rem.size() - d.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw DomainError("Laurent division is not exact");
    Integer f = top / d.back();
    q[k] = f;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= f * d[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("Laurent division is not exact");
  LaurentPolynomial out;
  out.low_ = low_ - divisor.low_;
  out.coeffs_ = std::move(q);
  out.trim();
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& var, long denominator) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    long g = std::gcd(std::abs(e), denominator);
    long num = e / g, den = denominator / g;
    if (den == 1) {
      if (num != 1) os << '^' << num;
    } else {
      os << "^(" << num << '/' << den << ')';
    }
  }
  return os.str();
}

}  // namespace qacert
