#include <doctest.h>

#include <random>

#include "qacert/error.hpp"
#include "qacert/foxcalc/alexander.hpp"
#include "qacert/foxcalc/fox.hpp"
#include "qacert/foxcalc/smith.hpp"

using namespace qacert;

namespace {

FreeWord w(const char* s) { return FreeWord::parse(s); }
FreeGroupRingElem e(const char* s, long c = 1) { return FreeGroupRingElem::from_word(w(s), c); }

FreeWord random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> letters;
  for (std::size_t k = len(rng); k > 0; --k) letters.push_back({gen(rng), inv(rng) ? -1 : 1});
  return FreeWord(std::move(letters));
}

IntMatrix kanenobu_matrix(long n) {
  return IntMatrix{{-10 * n + 2, 10 * n, 0, -1},
                   {10 * n, -10 * n - 2, 1, 0},
                   {0, 1, 10 * n, -10 * n - 3},
                   {-1, 0, -10 * n - 3, 10 * n + 6}};
}

}  // namespace

TEST_CASE("free words parse, reduce and print") {
  CHECK(w("a1 a1^-1 a2").reduced() == w("a2"));
  CHECK(w("(a1^-1 a2)^2") == w("a1^-1 a2 a1^-1 a2"));
  CHECK(w("(a1^-1 a2)^-1") == w("a2^-1 a1"));
  CHECK(w("a3^3") == w("a3 a3 a3"));
  CHECK(w("1").empty());
  CHECK(w("a1^-1 a2").to_string() == "a1^-1 a2");
  CHECK(FreeWord().to_string() == "1");
  CHECK_THROWS_AS(w("b1"), InputError);
  CHECK_THROWS_AS(w("(a1"), InputError);
}

TEST_CASE("fox derivative basics") {
  CHECK(fox_derivative(w("a1"), 0) == FreeGroupRingElem::one());
  CHECK(fox_derivative(w("a1^-1"), 0) == -e("a1^-1"));
  CHECK(fox_derivative(w("a2"), 0).is_zero());
  // closed form at k = 2: a1^-1 (1 + a2 a1^-1)
  CHECK(fox_derivative(w("(a1^-1 a2)^2"), 1) == e("a1^-1") + e("a1^-1 a2 a1^-1"));
  // <a | a^p> : 1 + a + ... + a^(p-1)
  for (long p = 1; p <= 7; ++p) {
    FreeGroupRingElem expect;
    for (long k = 0; k < p; ++k) expect.add_term(FreeWord::generator(0).power(k), 1);
    CHECK(fox_derivative(FreeWord::generator(0).power(p), 0) == expect);
  }
}

TEST_CASE("fundamental identity and product rule on random words") {
  std::mt19937_64 rng(11);
  const std::size_t g = 4;
  for (int trial = 0; trial < 500; ++trial) {
    FreeWord u = random_word(rng, g, 40);
    FreeGroupRingElem lhs;
    for (std::size_t i = 0; i < g; ++i)
      lhs += fox_derivative(u, i) * (FreeGroupRingElem::from_word(FreeWord::generator(i)) -
                                     FreeGroupRingElem::one());
    CHECK(lhs == FreeGroupRingElem::from_word(u) - FreeGroupRingElem::one());

    FreeWord v = random_word(rng, g, 20);
    for (std::size_t i = 0; i < g; ++i) {
      CHECK(fox_derivative(u * v, i) ==
            fox_derivative(u, i) + FreeGroupRingElem::from_word(u) * fox_derivative(v, i));
      CHECK(fox_derivative(u, i) == fox_derivative(u.reduced(), i));
    }
  }
}

TEST_CASE("abelianize is a ring map and kills relators") {
  Assignment a{{13, 3, 6, 1}, 25};
  CHECK(abelianize(e("a4"), a) == GroupRingElem::monomial(25, 1));
  CHECK(abelianize(e("a1"), a) == GroupRingElem::monomial(25, 13));
  for (long n = 0; n <= 10; ++n) {
    FreeWord b1 = FreeWord::parse("(a1^-1 a2)^" + std::to_string(10 * n) + " a4^-1 a1 a1");
    CHECK(abelianize(FreeGroupRingElem::from_word(b1), a) == GroupRingElem::one(25));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FreeGroupRingElem x, y;
    for (int k = 0; k < 3; ++k) {
      x.add_term(random_word(rng, 4, 8), static_cast<long>(rng() % 7) - 3);
      y.add_term(random_word(rng, 4, 8), static_cast<long>(rng() % 7) - 3);
    }
    CHECK(abelianize(x * y, a) == abelianize(x, a) * abelianize(y, a));
  }
  Assignment partial{{1}, 5};
  CHECK_THROWS_AS(abelianize(e("a2"), partial), DomainError);
}

TEST_CASE("presentation text round trip and matrix") {
  auto p = Presentation::parse("gens 1\na1^5\nassign 1 mod 5\n");
  CHECK(presentation_matrix(p) == IntMatrix{{5}});
  CHECK(p.relators_vanish());
  auto q = Presentation::parse(p.to_text());
  CHECK(q.relators() == p.relators());
  CHECK(presentation_matrix(Presentation::parse("gens 1\na1\n")) == IntMatrix{{1}});
  CHECK_THROWS_AS(Presentation::parse("a1\n"), InputError);
  CHECK_THROWS_AS(Presentation::parse("gens 1\na2\n"), InputError);
  CHECK_THROWS_AS(Presentation::parse("gens 2\na1\nassign 1 mod 5\n"), InputError);
}

TEST_CASE("smith normal form") {
  auto check = [](const IntMatrix& m) {
    auto s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    auto d = s.invariants();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (m.square() && determinant(m) != 0) {
      Integer prod = 1;
      for (auto& x : d) prod *= x;
      CHECK(prod == abs(determinant(m)));
    }
    return d;
  };
  CHECK(check(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(check(IntMatrix{{0}}) == std::vector<Integer>{0});
  for (long n = 0; n <= 5; ++n)
    CHECK(check(kanenobu_matrix(n)) == std::vector<Integer>{1, 1, 1, 25});
  CHECK(cokernel(kanenobu_matrix(3)).to_string() == "Z/25");
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 0}}).to_string() == "Z + Z/2");

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ent(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ent(rng);
    check(m);
  }
}

TEST_CASE("alexander polynomial from Wirtinger presentations") {
  // Unknot: one generator, no relators.
  auto unknot = Presentation::parse("gens 1\nassign 1 mod 0\n");
  CHECK(alexander_polynomial(unknot) == LaurentPolynomial(1));
  // Trefoil: x3 = x1 x2 x1^-1 style relations, one dropped.
  auto trefoil = Presentation::parse(
      "gens 3\n"
      "a1 a2 a1^-1 a3^-1\n"
      "a2 a3 a2^-1 a1^-1\n"
      "assign 1 1 1 mod 0\n");
  auto expect = LaurentPolynomial::monomial(1, 1) - 1 + LaurentPolynomial::monomial(1, -1);
  CHECK(alexander_polynomial(trefoil) == expect);
  auto bad = Presentation::parse("gens 2\na1 a2^-1\na1 a2^-1\nassign 1 1 mod 0\n");
  CHECK_THROWS_AS(alexander_polynomial(bad), DomainError);
}
