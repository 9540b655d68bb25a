#pragma once

#include <vector>

#include "qacert/lattice/gram_lattice.hpp"

namespace qacert {

constexpr std::size_t kMaxEnumerationRank = 4;

/// Every negative-definite lattice of the given rank and discriminant, one
/// Gram matrix per isomorphism class. Throws InputError above rank 4.
std::vector<GramLattice> enumerate_definite_lattices(std::size_t rank, const Integer& discriminant);

}  // namespace qacert
