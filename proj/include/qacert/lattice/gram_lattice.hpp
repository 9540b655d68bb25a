#pragma once

#include <functional>
#include <string>

#include "qacert/algebra/matrix.hpp"

namespace qacert {

/// Negative-definite integral lattice given by its Gram matrix.
class GramLattice {
 public:
  GramLattice();  // rank 0, discriminant 1
  /// Throws InputError unless `gram` is square, symmetric and negative definite.
  explicit GramLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& discriminant() const { return disc_; }
  const RatMatrix& inverse() const { return inverse_; }
  /// -G, positive definite.
  IntMatrix positive() const;

  /// Gram matrix of the basis given by the columns of `u`, i.e. u^T G u.
  GramLattice transformed(const IntMatrix& u) const;

  std::string to_string() const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  Integer disc_;
  RatMatrix inverse_;
};

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

/// diag(-1, ..., -1).
GramLattice diagonal_unimodular(std::size_t rank);

/// The negative E8 lattice.
GramLattice negative_e8();

/// Calls `visit(x, q)` for every integer vector x with
/// q = (x - centre)^T A (x - centre) <= bound, for A positive definite.
void enumerate_ellipsoid(const RatMatrix& a, const RatVector& centre, const Rational& bound,
                         const std::function<void(const IntVector&, const Rational&)>& visit);

/// True when some unimodular change of basis carries one Gram matrix to the other.
bool isomorphic(const GramLattice& a, const GramLattice& b);

}  // namespace qacert
