#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qacert/covers/kanenobu.hpp"
#include "qacert/error.hpp"
#include "qacert/foxcalc/alexander.hpp"
#include "qacert/skein/builders.hpp"
#include "qacert/skein/goeritz.hpp"
#include "qacert/skein/mullins.hpp"
#include "qacert/skein/pd_io.hpp"
#include "qacert/skein/wirtinger.hpp"

using namespace qacert;

namespace {

// Laurent polynomial in t from (exponent, coefficient) pairs, returned in s = t^(1/2).
LaurentPolynomial in_s(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial v;
  for (auto [e, c] : terms) v += LaurentPolynomial::monomial(c, 2 * e);
  return v;
}

LaurentPolynomial t_poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial v;
  for (auto [e, c] : terms) v += LaurentPolynomial::monomial(c, e);
  return v;
}

// equal after simultaneously permuting rows and columns
bool congruent_by_permutation(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<std::size_t> pi(a.rows());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.rows(); ++i)
      for (std::size_t j = 0; ok && j < a.cols(); ++j) ok = a(pi[i], pi[j]) == b(i, j);
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

const JonesOptions kNaive{24, BracketMethod::naive};

}  // namespace

TEST_CASE("PD parsing and faces") {
  auto d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  CHECK(d.size() == 3);
  CHECK(d.faces().size() == 5);
  CHECK(d.connected());
  CHECK(d.component_count() == 1);
  auto again = parse_pd(format_pd(d));
  CHECK(again.crossings() == d.crossings());
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), InputError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), InputError);
  auto u = parse_pd("");
  CHECK(u.component_count() == 1);
}

TEST_CASE("jones polynomial of small knots") {
  CHECK(jones_polynomial(unknot_diagram()) == LaurentPolynomial(1));
  // closure of sigma_1^3: right-handed
  CHECK(jones_polynomial(trefoil_diagram()) == in_s({{1, 1}, {3, 1}, {4, -1}}));
  // the 3_1 code of the knot tables is the mirror
  auto lh = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  CHECK(jones_polynomial(lh) == in_s({{-4, -1}, {-3, 1}, {-1, 1}}));
  CHECK(jones_polynomial(lh, kNaive) == jones_polynomial(lh));
  CHECK(jones_polynomial(figure_eight_diagram()) == in_s({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  CHECK(jones_to_string(jones_polynomial(trefoil_diagram())) == "t + t^3 - t^4");
  // Hopf link: half-integer powers
  auto hopf = braid_closure(2, {1, 1});
  CHECK(hopf.component_count() == 2);
  CHECK(jones_polynomial(hopf) == LaurentPolynomial::monomial(-1, 1) + LaurentPolynomial::monomial(-1, 5));
  // two-component unlink
  CHECK(jones_polynomial(LinkDiagram({}, {}, 2)) == LaurentPolynomial::monomial(-1, 1) + LaurentPolynomial::monomial(-1, -1));
  CHECK(jones_polynomial(braid_closure(2, {})) == jones_polynomial(LinkDiagram({}, {}, 2)));
}

TEST_CASE("bracket budget") {
  JonesOptions small{5, BracketMethod::tangle};
  CHECK_THROWS_AS(jones_polynomial(torus_3_5_diagram(), small), DomainError);
}

TEST_CASE("Reidemeister invariance on random braids") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::vector<int> w;
    std::size_t len = 1 + rng() % 7;
    for (std::size_t k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    auto v = jones_polynomial(braid_closure(n, w));
    CHECK(v == jones_polynomial(braid_closure(n, w), kNaive));
    // R2: insert sigma_i sigma_i^-1
    auto w2 = w;
    int g = 1 + static_cast<int>(rng() % (n - 1));
    w2.insert(w2.begin() + static_cast<long>(rng() % (w2.size() + 1)), {g, -g});
    CHECK(jones_polynomial(braid_closure(n, w2)) == v);
    // R3: append the two sides of the braid relation (a trivial braid)
    if (n >= 3) {
      auto w3 = w;
      for (int x : {1, 2, 1, -2, -1, -2}) w3.push_back(x);
      CHECK(jones_polynomial(braid_closure(n, w3)) == v);
    }
    // R1 via stabilization: writhe changes, V does not
    for (int s : {1, -1}) {
      auto w1 = w;
      w1.push_back(s * static_cast<int>(n));
      auto d1 = braid_closure(n + 1, w1);
      CHECK(d1.writhe() == braid_closure(n, w).writhe() + s);
      CHECK(jones_polynomial(d1) == v);
    }
    // conjugation moves the closure around the braid axis
    auto wc = w;
    std::rotate(wc.begin(), wc.begin() + 1, wc.end());
    CHECK(jones_polynomial(braid_closure(n, wc)) == v);
  }
}

TEST_CASE("jones derivative") {
  CHECK(jones_derivative_at(LaurentPolynomial(1), -1) == 0);
  CHECK(jones_derivative_at(in_s({{1, 1}}), -1) == 1);
  CHECK(jones_derivative_at(in_s({{-2, 1}}), 2) == Rational(-1, 4));
  CHECK_THROWS_AS(jones_derivative_at(LaurentPolynomial::monomial(1, 1), -1), DomainError);
  CHECK_THROWS_AS(jones_value_at(LaurentPolynomial(1), 0), DomainError);
}

TEST_CASE("goeritz: determinant and signature") {
  auto u = goeritz_invariants(unknot_diagram());
  CHECK(u.determinant == 1);
  CHECK(u.signature == 0);
  for (int c : {0, 1}) {
    auto t = goeritz_invariants(trefoil_diagram(), c);
    CHECK(t.determinant == 3);
    CHECK(t.signature == -2);
    auto f = goeritz_invariants(figure_eight_diagram(), c);
    CHECK(f.determinant == 5);
    CHECK(f.signature == 0);
    auto lh = goeritz_invariants(parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"), c);
    CHECK(lh.signature == 2);
    auto t35 = goeritz_invariants(torus_3_5_diagram(), c);
    CHECK(t35.signature == -8);
    CHECK(t35.determinant == 1);
  }
  CHECK_THROWS_AS(goeritz_invariants(LinkDiagram({}, {}, 2)), DomainError);
}

TEST_CASE("|V(-1)| equals det on assorted diagrams") {
  std::vector<LinkDiagram> corpus{trefoil_diagram(), figure_eight_diagram(), torus_3_5_diagram(),
                                  braid_closure(3, {1, -2, 1, -2}), braid_closure(3, {1, 1, 2, -1, 2}),
                                  braid_closure(4, {1, -2, 3, -2, 1})};
  for (long p = -2; p <= 2; ++p)
    for (long q = -2; q <= 2; ++q) corpus.push_back(kanenobu_diagram(p, q));
  for (const auto& d : corpus) {
    auto v = jones_polynomial(d);
    if (d.component_count() != 1) continue;
    CHECK(abs(jones_value_at(v, -1)) == Rational(goeritz_invariants(d).determinant));
    CHECK(goeritz_invariants(d, 0).signature == goeritz_invariants(d, 1).signature);
  }
}

TEST_CASE("mullins lambda") {
  auto p = mullins_lambda(torus_3_5_diagram());
  CHECK(p.derivative_at_minus_one == 0);
  CHECK(p.signature == -8);
  CHECK(p.lambda == -2);
  CHECK(mullins_lambda(unknot_diagram()).lambda == 0);
  CHECK(mullins_lambda(trefoil_diagram()).lambda == Rational(-1, 18));
  auto m = mullins_lambda(kanenobu_diagram(0, 3));
  CHECK(m.determinant == 25);
  CHECK(m.signature == 0);
  CHECK(abs(m.v_at_minus_one) == 25);
}

TEST_CASE("kanenobu diagrams") {
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q) {
      auto d = kanenobu_diagram(p, q);
      CHECK(d.size() == static_cast<std::size_t>(8 + std::labs(p) + std::labs(q)));
      CHECK(d.component_count() == 1);
      CHECK(d.faces().size() == d.size() + 2);
      auto g = goeritz_invariants(d);
      CHECK(g.determinant == 25);
      CHECK(g.signature == 0);
      // white Goeritz matrix is the presentation matrix of the cover
      CHECK(congruent_by_permutation(g.matrix, presentation_matrix(kanenobu_presentation(p, q).presentation)));
      // |H_1| = det
      CHECK(kanenobu_presentation(p, q).h1.group.order() == g.determinant);
    }
  for (long n = 0; n <= 3; ++n) {
    auto g = goeritz_invariants(kanenobu_diagram(kanenobu_p(n), kanenobu_q(n)));
    CHECK(g.determinant == 25);
    CHECK(g.signature == 0);
  }
}

TEST_CASE("jones equality along the twist chain") {
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q) {
      if (std::labs(p + 1) > 3 || std::labs(q - 1) > 3) continue;
      CHECK(jones_polynomial(kanenobu_diagram(p, q)) == jones_polynomial(kanenobu_diagram(p + 1, q - 1)));
    }
  CHECK(jones_polynomial(kanenobu_diagram(1, -1)) == jones_polynomial(kanenobu_diagram(0, 0)));
}

TEST_CASE("wirtinger presentations and alexander polynomials") {
  CHECK(alexander_polynomial(wirtinger_presentation(unknot_diagram())) == LaurentPolynomial(1));
  CHECK(alexander_polynomial(wirtinger_presentation(trefoil_diagram())) == t_poly({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(alexander_polynomial(wirtinger_presentation(figure_eight_diagram())) == t_poly({{-1, -1}, {0, 3}, {1, -1}}));
  auto t35 = alexander_polynomial(wirtinger_presentation(torus_3_5_diagram()));
  CHECK(t35 == t_poly({{-4, 1}, {-3, -1}, {-1, 1}, {0, -1}, {1, 1}, {3, -1}, {4, 1}}));
  for (long p = -2; p <= 2; ++p)
    for (long q = -2; q <= 3; ++q) {
      auto d = kanenobu_diagram(p, q);
      auto delta = alexander_polynomial(wirtinger_presentation(d));
      CHECK(abs(delta.evaluate(-1)) == 25);
      if (std::labs(p + 2) <= 3) CHECK(delta == alexander_polynomial(wirtinger_presentation(kanenobu_diagram(p + 2, q))));
    }
}
