#include "qacert/foxcalc/alexander.hpp"

#include "qacert/error.hpp"
#include "qacert/foxcalc/fox.hpp"

namespace qacert {

LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  LaurentPolynomial prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_divide(prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& d) {
  if (d.is_zero()) return d;
  // Odd spans cannot be centred; put the extra degree on the positive side.
  long span = d.high_degree() - d.low_degree();
  LaurentPolynomial r = d.shifted(-d.low_degree() - span / 2);
  Rational at1 = r.evaluate(1);
  if (at1 < 0 || (at1 == 0 && r.coefficient(r.high_degree()) < 0)) r = -r;
  return r;
}

LaurentPolynomial alexander_polynomial(const Presentation& p) {
  if (p.deficiency() != 1)
    throw DomainError("alexander_polynomial needs deficiency one, got " +
                      std::to_string(p.deficiency()));
  if (!p.assignment() || !p.assignment()->infinite())
    throw DomainError("alexander_polynomial needs an assignment into Z");
  const Assignment& a = *p.assignment();
  const std::size_t g = p.generators();
  if (g == 1) return 1;  // <a | > : the unknot group

  // Delete the row of a generator with the smallest nonzero image.
  std::size_t drop = g;
  for (std::size_t i = 0; i < g; ++i)
    if (a.images[i] != 0 && (drop == g || abs(a.images[i]) < abs(a.images[drop]))) drop = i;
  if (drop == g) throw DomainError("alexander_polynomial: every generator maps to 0");

  auto fox = fox_matrix(p);
  std::vector<std::vector<LaurentPolynomial>> m;
  for (std::size_t i = 0; i < g; ++i) {
    if (i == drop) continue;
    std::vector<LaurentPolynomial> row;
    for (std::size_t j = 0; j < p.relators().size(); ++j)
      row.push_back(abelianize_laurent(fox[i][j], a));
    m.push_back(std::move(row));
  }
  LaurentPolynomial det = laurent_determinant(std::move(m));
  long e = to_int64(a.images[drop]);
  LaurentPolynomial num = det * (LaurentPolynomial::monomial(1, 1) - 1);
  LaurentPolynomial den = LaurentPolynomial::monomial(1, e) - 1;
  return normalize_alexander(num.exact_divide(den));
}

}  // namespace qacert
