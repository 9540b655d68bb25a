#include <random>

#include "doctest.h"
#include "qacert/algebra/decomposition.hpp"
#include "qacert/algebra/laurent.hpp"
#include "qacert/algebra/matrix.hpp"
#include "support.hpp"

using namespace qacert;
using qacert::testing::random_cyclotomic;
using qacert::testing::random_group_ring;

namespace {

GroupRingElem t_pow(std::int64_t k, std::size_t n = 25) { return GroupRingElem::monomial(n, k); }

GroupRingElem sigma25() {
  GroupRingElem s(25);
  for (int k = 0; k < 25; k += 5) s += t_pow(k);
  return Rational(2) * s;
}

// Multiplication by expanding in Z[x] without reduction, folding at the end.
GroupRingElem folded_product(const GroupRingElem& a, const GroupRingElem& b) {
  const std::size_t n = a.modulus();
  std::vector<Rational> wide(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) wide[i + j] += a.coeff(i) * b.coeff(j);
  std::vector<Rational> folded(n, Rational(0));
  for (std::size_t k = 0; k < wide.size(); ++k) folded[k % n] += wide[k];
  return GroupRingElem(n, folded);
}

}  // namespace

TEST_CASE("group ring arithmetic reduces exponents modulo N") {
  CHECK(t_pow(24) * t_pow(3) == t_pow(2));
  CHECK(t_pow(-1) == t_pow(24));
  CHECK_THROWS_AS(t_pow(1, 25) + t_pow(1, 5), DomainError);
  CHECK_THROWS_AS(t_pow(1, 25) * t_pow(1, 5), DomainError);
}

TEST_CASE("one is the multiplicative identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto x = random_group_ring(rng, 25);
    CHECK(GroupRingElem::one(25) * x == x);
  }
}

TEST_CASE("sigma squared is ten sigma") {
  const auto s = sigma25();
  CHECK(folded_product(s, s) == Rational(10) * s);
  CHECK(s * s == Rational(10) * s);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1u, 5u, 12u, 25u}) {
    for (int i = 0; i < 15; ++i) {
      auto a = random_group_ring(rng, n), b = random_group_ring(rng, n), c = random_group_ring(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a * b == folded_product(a, b));
    }
  }
}

TEST_CASE("integrality is preserved") {
  GroupRingElem a(25, std::vector<Rational>(25, Rational(3)));
  auto b = t_pow(4) - Rational(7) * t_pow(9);
  CHECK((a + b).is_integral());
  CHECK((a * b).is_integral());
  CHECK_FALSE(GroupRingElem::average(25).is_integral());
}

TEST_CASE("phi components of sigma") {
  const auto s = sigma25();
  CHECK(phi_component(s, 0) == CyclotomicNumber::rational(1, 10));
  CHECK(phi_component(s, 2).is_zero());
  CHECK(phi_component(s, 1) == CyclotomicNumber::rational(5, 10));
  CHECK_THROWS_AS(phi_component(s, 3), DomainError);
  CHECK_THROWS_AS(phi_component(GroupRingElem::one(12), 1), DomainError);
}

TEST_CASE("phi reconstruction") {
  const auto alpha = phi_reconstruct(1, CyclotomicNumber::zero(5), CyclotomicNumber::zero(25), 25);
  CHECK(alpha == GroupRingElem::average(25));
  CHECK(phi_reconstruct(0, CyclotomicNumber::zero(5), CyclotomicNumber::zero(25), 25).is_zero());
  const auto t7 = t_pow(7);
  CHECK(phi_reconstruct(25, {phi_component(t7, 0), phi_component(t7, 1), phi_component(t7, 2)}) == t7);
  CHECK_THROWS_AS(phi_reconstruct(1, CyclotomicNumber::zero(25), CyclotomicNumber::zero(5), 25),
                  DomainError);
}

TEST_CASE("decomposition is a ring isomorphism") {
  std::mt19937_64 rng(13);
  for (std::size_t n : {2u, 9u, 12u, 25u, 27u}) {
    for (int i = 0; i < 10; ++i) {
      auto x = random_group_ring(rng, n), y = random_group_ring(rng, n);
      const auto dx = decompose(x), dy = decompose(y), dxy = decompose(x * y);
      for (std::size_t k = 0; k < dx.size(); ++k) CHECK(dxy[k] == dx[k] * dy[k]);
      CHECK(recompose(n, dx) == x);
      CHECK(dx.front().coords().front() == x.augmentation());
    }
  }
}

TEST_CASE("character idempotents are orthogonal and sum to one") {
  for (std::size_t n : {25u, 12u}) {
    GroupRingElem total(n);
    for (std::size_t d : divisors(n)) {
      auto e = character_idempotent(n, d);
      CHECK(e * e == e);
      total += e;
      for (std::size_t f : divisors(n))
        if (f != d) CHECK((e * character_idempotent(n, f)).is_zero());
    }
    CHECK(total == GroupRingElem::one(n));
  }
}

TEST_CASE("cyclotomic inverses") {
  const auto z = CyclotomicNumber::zeta_power(5, 1);
  const auto one = CyclotomicNumber::rational(5, 1);
  const auto u = z - one;
  CHECK(u.inverse() * u == one);
  CHECK(u.inverse() * u.inverse() * (u * u) == one);
  auto prod = one;
  for (int k = 1; k <= 4; ++k) prod = prod * (CyclotomicNumber::zeta_power(5, k) - one);
  CHECK(prod == CyclotomicNumber::rational(5, 5));
  CHECK_THROWS_AS(CyclotomicNumber::zero(25).inverse(), DomainError);
  CHECK_THROWS_AS(u + CyclotomicNumber::zero(25), DomainError);

  std::mt19937_64 rng(14);
  for (std::size_t d : {5u, 25u}) {
    int done = 0;
    while (done < 200) {
      auto a = random_cyclotomic(rng, d);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == CyclotomicNumber::rational(d, 1));
      ++done;
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(5).coeffs() == std::vector<Rational>(5, Rational(1)));
  CHECK(cyclotomic_polynomial(25).degree() == 20);
  CHECK(cyclotomic_polynomial(12).coeffs() ==
        std::vector<Rational>{1, 0, -1, 0, 1});
  CHECK(euler_phi(25) == 20);
  CHECK(CyclotomicNumber::zeta_power(25, 5) == CyclotomicNumber::from_powers(25, {0, 0, 0, 0, 0, 1}));
}

TEST_CASE("group ring JSON") {
  auto x = Rational(1, 3) * t_pow(2) - t_pow(0);
  auto j = to_json(x);
  CHECK(j["modulus"] == 25);
  CHECK(j["coeffs"][0] == "-1");
  CHECK(j["coeffs"][2] == "1/3");
  CHECK(group_ring_from_json(j) == x);
  nlohmann::ordered_json bad = {{"modulus", 3}, {"coeffs", {"1", "0.5", "2"}}};
  CHECK_THROWS_AS(group_ring_from_json(bad), InputError);
}

TEST_CASE("integer matrices") {
  IntMatrix m{{2, 1}, {1, 3}};
  CHECK(determinant(m) == 5);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  auto inv = inverse(m);
  CHECK(inv(0, 0) == Rational(3, 5));
  CHECK(inertia(IntMatrix{{0, 1}, {1, 0}}).signature() == 0);
  CHECK(inertia(IntMatrix{{-2, 1}, {1, -2}}).signature() == -2);
  CHECK(inertia(IntMatrix{{0, 0}, {0, 0}}).zero == 2);
  CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
  CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 2}, {2, -1}}));
}

TEST_CASE("Laurent polynomials") {
  LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  LaurentPolynomial tinv = LaurentPolynomial::monomial(1, -1);
  auto tre = t - 1 + tinv;
  CHECK(tre.to_string() == "t^-1 - 1 + t");
  CHECK((tre * (t + 1)).exact_divide(t + 1) == tre);
  CHECK_THROWS_AS(tre.exact_divide(t + 1), DomainError);
  CHECK(tre.evaluate(-1) == -3);
  CHECK(tre.derivative().evaluate(2) == Rational(3, 4));
}
