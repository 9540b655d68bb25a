#pragma once

#include <random>

#include "qacert/algebra/cyclotomic.hpp"
#include "qacert/algebra/group_ring.hpp"

namespace qacert::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline GroupRingElem random_group_ring(std::mt19937_64& rng, std::size_t n, int span = 9) {
  std::vector<Rational> c(n);
  for (auto& x : c) x = random_rational(rng, span);
  return GroupRingElem(n, std::move(c));
}

inline CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, std::size_t conductor) {
  std::vector<Rational> c(euler_phi(conductor));
  for (auto& x : c) x = random_rational(rng);
  return CyclotomicNumber::from_powers(conductor, std::move(c));
}

}  // namespace qacert::testing
