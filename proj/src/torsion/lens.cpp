#include "qacert/torsion/lens.hpp"

#include <numeric>

#include "qacert/error.hpp"

namespace qacert {

namespace {

Rational d_rec(long p, long q, long i) {
  if (p == 1) return 0;
  Rational x(Integer((2 * i + 1 - p - q) * (2 * i + 1 - p - q)), Integer(4 * p * q));
  x.canonicalize();
  return Rational(-1, 4) + x - d_rec(q, p % q, i % q);
}

void check_pq(long p, long q) {
  if (p == 1) return;
  if (p < 1 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw InputError("lens space L(p,q) needs 0 < q < p with gcd(p,q) = 1");
}

// sawtooth ((x)) for x = a/b
Rational saw(long a, long b) {
  long r = ((a % b) + b) % b;
  if (r == 0) return 0;
  Rational x(r, b);
  x.canonicalize();
  return x - Rational(1, 2);
}

}  // namespace

std::vector<Rational> d_lens_oracle(long p, long q) {
  check_pq(p, q);
  std::vector<Rational> d;
  for (long i = 0; i < p; ++i) d.push_back(d_rec(p, p == 1 ? 0 : q, i));
  return d;
}

Rational dedekind_sum(long q, long p) {
  Rational s = 0;
  for (long k = 1; k < p; ++k) s += saw(k, p) * saw(k * q, p);
  return s;
}

Rational lens_casson_walker(long p, long q) {
  check_pq(p, q);
  return p == 1 ? Rational(0) : Rational(-dedekind_sum(q, p));
}

}  // namespace qacert
