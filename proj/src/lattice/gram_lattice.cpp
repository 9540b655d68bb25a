#include "qacert/lattice/gram_lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qacert {

GramLattice::GramLattice() : disc_(1) {}

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square()) throw InputError("Gram matrix must be square");
  if (!is_symmetric(gram_)) throw InputError("Gram matrix must be symmetric");
  if (!is_negative_definite(gram_)) throw InputError("Gram matrix must be negative definite");
  disc_ = rank() == 0 ? Integer(1) : Integer(abs(determinant(gram_)));
  if (rank() > 0) inverse_ = qacert::inverse(gram_);
}

IntMatrix GramLattice::positive() const {
  IntMatrix a = gram_;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) a(i, j) = -a(i, j);
  return a;
}

GramLattice GramLattice::transformed(const IntMatrix& u) const {
  if (u.rows() != rank() || u.cols() != rank()) throw InputError("change of basis: shape mismatch");
  if (abs(determinant(u)) != 1) throw InputError("change of basis is not unimodular");
  return GramLattice(u.transpose() * gram_ * u);
}

std::string GramLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rank(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < rank(); ++j) os << (j ? ", " : "") << gram_(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return n + m == 0 ? GramLattice() : GramLattice(std::move(g));
}

GramLattice diagonal_unimodular(std::size_t rank) {
  if (rank == 0) return GramLattice();
  IntMatrix g(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) g(i, i) = -1;
  return GramLattice(std::move(g));
}

GramLattice negative_e8() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with 7 attached to 4
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  auto link = [&](std::size_t i, std::size_t j) { g(i, j) = g(j, i) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return GramLattice(std::move(g));
}

namespace {

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

void enumerate_ellipsoid(const RatMatrix& a, const RatVector& centre, const Rational& bound,
                         const std::function<void(const IntVector&, const Rational&)>& visit) {
  const std::size_t n = a.rows();
  if (n == 0) {
    if (bound >= 0) visit({}, 0);
    return;
  }
  // a(y) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2
  RatMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = a(i, i);
    for (std::size_t k = 0; k < i; ++k) d -= q(k, k) * q(k, i) * q(k, i);
    if (d <= 0) throw DomainError("ellipsoid enumeration needs a positive definite form");
    q(i, i) = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = a(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= q(k, k) * q(k, i) * q(k, j);
      q(i, j) = s / d;
    }
  }
  IntVector x(n);
  RatVector y(n);
  std::function<void(std::size_t, const Rational&)> level = [&](std::size_t i, const Rational& spent) {
    Rational shift = 0;
    for (std::size_t j = i + 1; j < n; ++j) shift += q(i, j) * y[j];
    Rational mid = centre[i] - shift;  // optimal real x_i
    Rational room = bound - spent;
    auto try_value = [&](const Integer& v) {
      Rational t = Rational(v) - mid;
      Rational cost = q(i, i) * t * t;
      if (cost > room) return false;
      x[i] = v;
      y[i] = Rational(v) - centre[i];
      if (i == 0)
        visit(x, spent + cost);
      else
        level(i - 1, spent + cost);
      return true;
    };
    Integer start = floor_q(mid);
    for (Integer v = start; try_value(v); --v) {
    }
    for (Integer v = start + 1; try_value(v); ++v) {
    }
  };
  level(n - 1, 0);
}

bool isomorphic(const GramLattice& a, const GramLattice& b) {
  if (a.rank() != b.rank() || a.discriminant() != b.discriminant()) return false;
  const std::size_t n = a.rank();
  if (n == 0) return true;
  IntMatrix pa = a.positive(), pb = b.positive();
  Integer top = 0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, pa(i, i));
  // vectors of b grouped by norm, up to the largest needed
  std::map<Integer, std::vector<IntVector>> by_norm;
  enumerate_ellipsoid(to_rational(pb), RatVector(n, 0), Rational(top), [&](const IntVector& x, const Rational& q) {
    if (q > 0) by_norm[q.get_num()].push_back(x);
  });
  auto dot = [&](const IntVector& u, const IntVector& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += u[i] * pb(i, j) * v[j];
    return s;
  };
  // equal Gram matrices and equal determinants force the images to be a basis
  std::vector<const IntVector*> chosen(n);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    auto it = by_norm.find(pa(i, i));
    if (it == by_norm.end()) return false;
    for (const auto& v : it->second) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < i; ++j) ok = dot(*chosen[j], v) == pa(j, i);
      if (!ok) continue;
      chosen[i] = &v;
      if (extend(i + 1)) return true;
    }
    return false;
  };
  return extend(0);
}

}  // namespace qacert
