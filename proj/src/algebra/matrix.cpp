#include "qacert/algebra/matrix.hpp"

#include <sstream>

namespace qacert {

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatMatrix inverse(const IntMatrix& input) {
  if (!input.square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = to_rational(input);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw DomainError("inverse of a singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool is_symmetric(const IntMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!is_symmetric(symmetric)) throw DomainError("inertia of a non-symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        // All remaining diagonal entries vanish; add a row/column with a
        // nonzero off-diagonal entry to make the pivot 2*a(k,j).
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++result.zero;
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0) ++result.positive; else ++result.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return result;
}

bool is_negative_definite(const IntMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    Integer d = determinant(lead);
    if (d == 0 || (d > 0) != (k % 2 == 0)) return false;
  }
  return true;
}

Rational bilinear(const RatVector& x, const RatMatrix& m, const RatVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace qacert
