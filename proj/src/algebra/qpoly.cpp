#include "qacert/algebra/qpoly.hpp"

#include <algorithm>

#include "qacert/error.hpp"

namespace qacert {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rational(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q;
  const std::size_t db = b.c_.size() - 1;
  if (r.size() > db) {
    q.assign(r.size() - db, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = r[k + db] / b.c_.back();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t i = 0; i <= db; ++i) r[k + i] -= f * b.c_[i];
    }
  }
  quotient = QPoly(std::move(q));
  remainder = QPoly(std::move(r));
}

QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0({Rational(1)}), s1;
  QPoly t0, t1({Rational(1)});
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  Rational lead = Rational(1) / r0.coeffs().back();
  s = lead * s0;
  t = lead * t0;
  return lead * r0;
}

}  // namespace qacert
