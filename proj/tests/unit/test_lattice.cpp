#include <doctest.h>

#include <map>
#include <random>

#include "qacert/error.hpp"
#include "qacert/lattice/catalog_io.hpp"
#include "qacert/lattice/characteristic.hpp"
#include "qacert/lattice/enumerate.hpp"
#include "qacert/lattice/verdict.hpp"

using namespace qacert;

namespace {

GramLattice lat(std::initializer_list<std::initializer_list<Integer>> rows) { return GramLattice(IntMatrix(rows)); }

IntMatrix adjugate(const IntMatrix& g) {
  std::size_t n = g.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(j, i) = ((i + j) % 2 ? -1 : 1) * determinant(g.without(i, j));
  return adj;
}

struct BruteForce {
  std::size_t classes = 0;
  Rational m;
  std::map<std::vector<Integer>, Rational> best;  // class key -> largest chi^2
  std::map<std::vector<Integer>, IntVector> member;
};

// Every characteristic covector in [-bound, bound]^r. Two covectors share a
// class iff adj(G)(chi - chi') is divisible by 2 det G.
BruteForce brute_force(const GramLattice& l, long bound) {
  const std::size_t n = l.rank();
  Integer det = determinant(l.gram());
  Integer modulus = 2 * abs(det);
  IntMatrix adj = adjugate(l.gram());
  RatMatrix inv = to_rational(adj);
  BruteForce out;
  IntVector chi(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<Integer> k(n);
      Rational sq = 0;
      for (std::size_t a = 0; a < n; ++a) {
        Integer s = 0;
        for (std::size_t b = 0; b < n; ++b) {
          s += adj(a, b) * chi[b];
          sq += Rational(chi[a] * adj(a, b) * chi[b]);
        }
        k[a] = mod_floor(s, modulus);
      }
      sq /= Rational(det);
      out.member.emplace(k, chi);
      auto [it, fresh] = out.best.emplace(k, sq);
      if (!fresh && sq > it->second) it->second = sq;
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      if ((v - l.gram()(i, i).get_si()) % 2 != 0) continue;
      chi[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  out.classes = out.best.size();
  bool first = true;
  for (auto& [k, sq] : out.best) {
    Rational v = (sq + Rational(static_cast<long>(n))) / 4;
    if (first || v < out.m) out.m = v;
    first = false;
  }
  out.m.canonicalize();
  return out;
}

GramLattice random_lattice(std::mt19937_64& rng, std::size_t n, long max_disc) {
  while (true) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = -1 - static_cast<long>(rng() % 5);
      for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = static_cast<long>(rng() % 5) - 2;
    }
    if (!is_negative_definite(g)) continue;
    if (abs(determinant(g)) > max_disc) continue;
    return GramLattice(g);
  }
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  for (int step = 0; step < 6; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    long c = static_cast<long>(rng() % 5) - 2;
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
    if (rng() % 3 == 0) u.swap_cols(i, j);
  }
  return u;
}

// GL2(Z) classes of positive binary forms [a b; b c] with ac - b^2 = D are
// the reduced triples 0 <= 2b <= a <= c.
std::size_t gauss_count(long d) {
  std::size_t n = 0;
  for (long a = 1; a * a <= 2 * d; ++a)
    for (long b = 0; 2 * b <= a; ++b)
      if ((d + b * b) % a == 0 && (d + b * b) / a >= a) ++n;
  return n;
}

}  // namespace

TEST_CASE("gram lattice validation") {
  CHECK_THROWS_AS(lat({{1}}), InputError);
  CHECK_THROWS_AS(lat({{-1, 1}, {0, -1}}), InputError);
  CHECK_THROWS_AS(lat({{-1, 2}, {2, -1}}), InputError);
  auto l = lat({{-2, 1}, {1, -2}});
  CHECK(l.discriminant() == 3);
  CHECK(GramLattice().discriminant() == 1);
  CHECK(negative_e8().discriminant() == 1);
  CHECK_THROWS_AS(l.transformed(IntMatrix{{2, 0}, {0, 1}}), InputError);
}

TEST_CASE("characteristic cosets") {
  auto one = char_cosets(lat({{-1}}));
  REQUIRE(one.size() == 1);
  CHECK(abs(one[0].best[0]) == 1);
  CHECK(char_cosets(diagonal_unimodular(2)).size() == 1);
  auto c25 = char_cosets(lat({{-25}}));
  CHECK(c25.size() == 25);
  for (std::size_t i = 0; i < c25.size(); ++i) {
    CHECK(is_characteristic(lat({{-25}}), c25[i].representative));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(same_class(lat({{-25}}), c25[i].representative, c25[j].representative));
  }
  // brute force over chi in [-25, 25], odd
  auto bf = brute_force(lat({{-25}}), 25);
  CHECK(bf.classes == 25);
  CHECK(bf.m == m_invariant(lat({{-25}})));
}

TEST_CASE("m invariant anchors") {
  CHECK(m_invariant(GramLattice()) == 0);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(m_invariant(diagonal_unimodular(k)) == 0);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(brute_force(diagonal_unimodular(k), 7).m == 0);
  CHECK(m_invariant(lat({{-2}})) == Rational(-1, 4));
  CHECK(brute_force(lat({{-2}}), 10).m == Rational(-1, 4));
  CHECK(m_invariant(negative_e8()) == 2);
  CHECK(m_invariant(lat({{-2, 1}, {1, -2}})) == brute_force(lat({{-2, 1}, {1, -2}}), 12).m);
}

TEST_CASE("m invariant against brute force on random lattices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto l = random_lattice(rng, n, 25);
    auto cosets = char_cosets(l);
    REQUIRE(Integer(static_cast<unsigned long>(cosets.size())) == l.discriminant());
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      CHECK(is_characteristic(l, cosets[i].best));
      CHECK(same_class(l, cosets[i].best, cosets[i].representative));
      CHECK(covector_square(l, cosets[i].best) == cosets[i].max_square);
      // shifting by 2L stays in the class
      IntVector shifted = cosets[i].representative;
      std::size_t k = rng() % n;
      for (std::size_t a = 0; a < n; ++a) shifted[a] += 2 * l.gram()(a, k);
      CHECK(same_class(l, shifted, cosets[i].representative));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(same_class(l, cosets[i].representative, cosets[j].representative));
    }
    auto bf = brute_force(l, n == 3 ? 13 : 25);
    CHECK(Integer(static_cast<unsigned long>(bf.classes)) == l.discriminant());
    // the search never misses a better covector than the box finds
    for (const auto& [key, sq] : bf.best) {
      std::size_t matches = 0;
      for (const auto& c : cosets)
        if (same_class(l, c.representative, bf.member.at(key))) {
          ++matches;
          CHECK(c.max_square >= sq);
        }
      CHECK(matches == 1);
    }
    CHECK(bf.m == m_invariant(l));
    // orthogonal (-1) summand
    CHECK(m_invariant(direct_sum(l, diagonal_unimodular(1))) == m_invariant(l));
  }
}

TEST_CASE("m invariant is a change-of-basis invariant") {
  std::mt19937_64 rng(5);
  std::vector<GramLattice> corpus{lat({{-2}}), lat({{-25}}), lat({{-2, 1}, {1, -3}}), diagonal_unimodular(3),
                                  lat({{-2, 1, 0}, {1, -2, 1}, {0, 1, -3}})};
  for (int k = 0; k < 4; ++k) corpus.push_back(random_lattice(rng, 2 + k % 3, 25));
  for (const auto& l : corpus) {
    Rational m = m_invariant(l);
    for (int trial = 0; trial < 50; ++trial) {
      auto u = random_unimodular(rng, l.rank());
      if (abs(determinant(u)) != 1) continue;
      auto moved = l.transformed(u);
      CHECK(m_invariant(moved) == m);
      if (trial % 10 == 0) CHECK(isomorphic(l, moved));
    }
  }
}

TEST_CASE("lattice enumeration") {
  CHECK(enumerate_definite_lattices(1, 25) == std::vector<GramLattice>{lat({{-25}})});
  CHECK(enumerate_definite_lattices(1, 1) == std::vector<GramLattice>{lat({{-1}})});
  CHECK(enumerate_definite_lattices(0, 1).size() == 1);
  CHECK(enumerate_definite_lattices(0, 3).empty());
  CHECK(enumerate_definite_lattices(2, 4).size() == 2);
  for (long d = 1; d <= 30; ++d) CHECK(enumerate_definite_lattices(2, d).size() == gauss_count(d));
  for (std::size_t r = 1; r <= 4; ++r) {
    auto u = enumerate_definite_lattices(r, 1);
    REQUIRE(u.size() == 1);
    CHECK(isomorphic(u[0], diagonal_unimodular(r)));
  }
  CHECK_THROWS_AS(enumerate_definite_lattices(5, 2), InputError);
  CHECK_FALSE(isomorphic(lat({{-1, 0}, {0, -4}}), lat({{-2, 0}, {0, -2}})));
}

TEST_CASE("enumeration covers random lattices of rank 3 and 4") {
  std::mt19937_64 rng(3);
  std::map<std::pair<std::size_t, long>, std::vector<GramLattice>> cache;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 2;
    auto l = random_lattice(rng, n, 12).transformed(random_unimodular(rng, n));
    long d = l.discriminant().get_si();
    auto& cat = cache[{n, d}];
    if (cat.empty()) cat = enumerate_definite_lattices(n, d);
    std::size_t hits = 0;
    for (const auto& c : cat) hits += isomorphic(c, l);
    CHECK(hits == 1);
  }
}

TEST_CASE("catalog round trip") {
  auto c = build_catalog(4);
  CHECK(c.complete_ranks == std::set<std::size_t>{0, 1, 2, 3});
  auto back = catalog_from_json(catalog_to_json(c));
  CHECK(back.lattices == c.lattices);
  CHECK(back.complete_ranks.empty());
  CHECK_THROWS_AS(catalog_from_json(nlohmann::json::parse(R"([{"rank": 2, "gram": [[-1]]}])")), InputError);
  CHECK_THROWS_AS(catalog_from_json(nlohmann::json::parse(R"([{"gram": [[1]]}])")), InputError);
  CHECK(catalog_from_json(nlohmann::json::parse(R"([{"rank": 0, "gram": []}])")).lattices.front().rank() == 0);
}

TEST_CASE("C(D) and verdicts") {
  auto b1 = c_bound(1, build_catalog(1));
  CHECK(b1.value == 0);
  CHECK(b1.complete);
  auto b2 = c_bound(2, build_catalog(2));
  CHECK(b2.value == Rational(-1, 4));
  CHECK(b2.complete);
  auto b25 = c_bound(25, build_catalog(25));
  CHECK_FALSE(b25.complete);
  CHECK(b25.missing_ranks.front() == 5);
  // the rank-1 member alone: chi odd, chi = +-1 gives (-1/25 + 1)/4 in its class
  CHECK(b25.value <= m_invariant(lat({{-25}})));

  LatticeCatalog bad;
  bad.lattices.push_back(lat({{-3}}));
  CHECK_THROWS_AS(c_bound(2, bad), InputError);
  LatticeCatalog too_big;
  too_big.lattices.push_back(diagonal_unimodular(1));
  CHECK_THROWS_AS(c_bound(1, too_big), InputError);

  auto unknot = qa_verdict({0}, 1, b1, true);
  CHECK(unknot.kind == VerdictKind::not_obstructed);
  std::vector<Rational> low(25, 0);
  low[3] = -100;
  auto v = qa_verdict(low, 25, b25, false);
  CHECK(v.kind == VerdictKind::conditional);
  CHECK(v.conditions == std::vector<std::string>{"catalog incomplete beyond rank 4", "torsion unit unpinned"});
  auto certified = qa_verdict({Rational(-1)}, 1, b1, true);
  CHECK(certified.kind == VerdictKind::certified);
  CHECK_THROWS_AS(qa_verdict({0, 0}, 1, b1, true), InputError);
  CHECK(v.to_json()["verdict"] == "non-QA conditional");
}
