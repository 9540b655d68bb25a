#include "qacert/lattice/characteristic.hpp"

#include "qacert/foxcalc/smith.hpp"

namespace qacert {

namespace {

RatVector as_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

RatVector times(const RatMatrix& m, const RatVector& v) {
  RatVector r(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

Integer round_q(const Rational& q) {
  Rational h = q + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

// Largest chi^2 on chi + 2L. With A = -G and chi - 2 A v ranging over the
// class, -chi^2 = 4 (v - c)^T A (v - c) for c = A^{-1} chi / 2.
CharCoset maximise(const GramLattice& l, const IntVector& chi) {
  const std::size_t n = l.rank();
  CharCoset out{chi, chi, covector_square(l, chi), 0};
  if (n > 0) {
    RatMatrix a = to_rational(l.positive());
    RatVector c = times(l.inverse(), as_rational(chi));
    for (auto& x : c) x = -x / 2;
    // seed with the rounded centre
    IntVector seed(n);
    for (std::size_t i = 0; i < n; ++i) seed[i] = round_q(c[i]);
    Rational best = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) best += (Rational(seed[i]) - c[i]) * a(i, j) * (Rational(seed[j]) - c[j]);
    IntVector arg = seed;
    enumerate_ellipsoid(a, c, best, [&](const IntVector& v, const Rational& q) {
      if (q < best) {
        best = q;
        arg = v;
      }
    });
    IntVector member(n);
    for (std::size_t i = 0; i < n; ++i) {
      member[i] = chi[i];
      for (std::size_t j = 0; j < n; ++j) member[i] -= 2 * l.positive()(i, j) * arg[j];
    }
    out.best = member;
    out.max_square = -4 * best;
  }
  out.value = (out.max_square + Rational(static_cast<long>(n))) / 4;
  out.value.canonicalize();
  return out;
}

}  // namespace

Rational covector_square(const GramLattice& l, const IntVector& chi) {
  if (chi.size() != l.rank()) throw InputError("covector length does not match the rank");
  if (l.rank() == 0) return 0;
  return bilinear(as_rational(chi), l.inverse(), as_rational(chi));
}

bool is_characteristic(const GramLattice& l, const IntVector& chi) {
  if (chi.size() != l.rank()) return false;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (mod_floor(chi[i] - l.gram()(i, i), 2) != 0) return false;
  return true;
}

bool same_class(const GramLattice& l, const IntVector& chi, const IntVector& other) {
  RatVector diff(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    diff[i] = Rational(Integer(chi[i] - other[i]), 2);
    diff[i].canonicalize();
  }
  for (const auto& x : times(l.inverse(), diff))
    if (!is_integral(x)) return false;
  return true;
}

std::vector<CharCoset> char_cosets(const GramLattice& l) {
  const std::size_t n = l.rank();
  if (n == 0) return {maximise(l, {})};
  IntVector base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = mod_floor(l.gram()(i, i), 2);
  // classes are base + 2w for w in Z^n / G Z^n = U^{-1} (+) Z/d_i
  SmithForm s = smith_normal_form(l.gram());
  RatMatrix uinv = inverse(s.left);
  std::vector<Integer> d = s.invariants();
  std::vector<CharCoset> out;
  IntVector k(n, 0);
  while (true) {
    IntVector chi = base;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational w = uinv(i, j) * Rational(k[j]);
        chi[i] += 2 * w.get_num();  // U^{-1} is integral
      }
    out.push_back(maximise(l, chi));
    std::size_t i = 0;
    while (i < n && ++k[i] == abs(d[i])) k[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Rational m_invariant(const GramLattice& l) {
  auto cosets = char_cosets(l);
  Rational m = cosets.front().value;
  for (const auto& c : cosets) m = std::min(m, c.value);
  return m;
}

}  // namespace qacert
