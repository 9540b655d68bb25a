#pragma once

#include <vector>

#include "qacert/algebra/cyclotomic.hpp"
#include "qacert/algebra/group_ring.hpp"

namespace qacert {

/// Wedderburn decomposition of Q[Z/N] into  (+)_{d | N} Q(zeta_d):
/// the d-component is the image of t -> zeta_d.

/// Ascending list of positive divisors of n.
std::vector<std::size_t> divisors(std::size_t n);

/// Image of x under t -> zeta_d; d must divide the modulus.
CyclotomicNumber character_component(const GroupRingElem& x, std::size_t conductor);

/// All components, one per divisor (ascending).
std::vector<CyclotomicNumber> decompose(const GroupRingElem& x);

/// Inverse of `decompose`: the unique element with the given components.
GroupRingElem recompose(std::size_t modulus, const std::vector<CyclotomicNumber>& components);

/// Primitive central idempotent for the characters of exact order d.
GroupRingElem character_idempotent(std::size_t modulus, std::size_t conductor);

/// Prime-power view for N = p^m: level j is the component at conductor p^j.
/// Throws DomainError if N is not a prime power (N = 1 allows only level 0)
/// or the level exceeds m.
CyclotomicNumber phi_component(const GroupRingElem& x, unsigned level);

/// Inverse for N = p^m from components at levels 0..m (levels[j] must have
/// conductor p^j).
GroupRingElem phi_reconstruct(std::size_t modulus, const std::vector<CyclotomicNumber>& levels);

/// N = p^2 convenience form: (rational, level-1, level-2).
GroupRingElem phi_reconstruct(const Rational& c0, const CyclotomicNumber& c1,
                              const CyclotomicNumber& c2, std::size_t modulus);

}  // namespace qacert
