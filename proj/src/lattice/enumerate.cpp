#include "qacert/lattice/enumerate.hpp"

#include <algorithm>

namespace qacert {

namespace {

// A Minkowski-reduced positive form has a_11 <= ... <= a_rr, |2 a_ij| <= a_ii
// for i < j, and a_11 ... a_rr <= lambda_r det with lambda = 1, 4/3, 2, 4.
// Candidates satisfying these necessary conditions cover every class.
const Rational kProductBound[] = {1, 1, Rational(4, 3), 2, 4};

// ordering key: diagonal first, then the upper triangle row by row
std::vector<Integer> key(const IntMatrix& a) {
  std::vector<Integer> k;
  for (std::size_t i = 0; i < a.rows(); ++i) k.push_back(a(i, i));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.rows(); ++j) k.push_back(a(i, j));
  return k;
}

bool positive_definite(const IntMatrix& a) {
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<GramLattice> enumerate_definite_lattices(std::size_t rank, const Integer& disc) {
  if (rank > kMaxEnumerationRank)
    throw InputError("lattice enumeration is complete only up to rank " + std::to_string(kMaxEnumerationRank));
  if (disc < 1) throw InputError("discriminant must be positive");
  if (rank == 0) return disc == 1 ? std::vector<GramLattice>{GramLattice()} : std::vector<GramLattice>{};
  const Rational limit = kProductBound[rank] * Rational(disc);

  std::vector<IntMatrix> candidates;
  IntMatrix a(rank, rank);
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) off.push_back({i, j});

  std::function<void(std::size_t)> fill_off = [&](std::size_t k) {
    if (k == off.size()) {
      if (positive_definite(a) && determinant(a) == disc) candidates.push_back(a);
      return;
    }
    auto [i, j] = off[k];
    Integer half = a(i, i) / 2;  // |2 a_ij| <= a_ii
    // flipping e_j fixes the sign of a_0j
    Integer lo = i == 0 ? Integer(0) : Integer(-half);
    for (Integer v = lo; v <= half; ++v) {
      a(i, j) = a(j, i) = v;
      fill_off(k + 1);
    }
    a(i, j) = a(j, i) = 0;
  };
  std::function<void(std::size_t, const Integer&, const Integer&)> fill_diag =
      [&](std::size_t i, const Integer& least, const Integer& product) {
        if (i == rank) {
          fill_off(0);
          return;
        }
        // remaining diagonal entries are all >= the current one
        for (Integer v = least;; ++v) {
          Integer p = product * v;
          Integer rest = p;
          for (std::size_t k = i + 1; k < rank; ++k) rest *= v;
          if (Rational(rest) > limit) break;
          a(i, i) = v;
          fill_diag(i + 1, v, p);
        }
      };
  fill_diag(0, 1, 1);

  // one representative per class, the smallest by key
  std::sort(candidates.begin(), candidates.end(), [](const IntMatrix& x, const IntMatrix& y) { return key(x) < key(y); });
  std::vector<GramLattice> out;
  for (const auto& c : candidates) {
    IntMatrix g = c;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) g(i, j) = -g(i, j);
    GramLattice l(std::move(g));
    bool seen = std::any_of(out.begin(), out.end(), [&](const GramLattice& o) { return isomorphic(o, l); });
    if (!seen) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace qacert
