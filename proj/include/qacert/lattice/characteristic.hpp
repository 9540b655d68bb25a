#pragma once

#include <vector>

#include "qacert/lattice/gram_lattice.hpp"

namespace qacert {

/// One class of Char(L) modulo 2L. Covectors are written in the dual basis:
/// chi_i = chi(e_i), and chi_i = G_ii (mod 2).
struct CharCoset {
  IntVector representative;
  IntVector best;            // a class member of largest square
  Rational max_square;       // chi^T G^{-1} chi at `best` (<= 0)
  Rational value;            // (max_square + rank) / 4
};

/// disc(L) pairwise inequivalent classes, each with its square maximised.
std::vector<CharCoset> char_cosets(const GramLattice& l);

/// chi^T G^{-1} chi.
Rational covector_square(const GramLattice& l, const IntVector& chi);

bool is_characteristic(const GramLattice& l, const IntVector& chi);

/// chi - chi' lies in 2L, i.e. G^{-1}(chi - chi')/2 is integral.
bool same_class(const GramLattice& l, const IntVector& chi, const IntVector& other);

/// Minimum over classes of max (chi^2 + rank)/4.
Rational m_invariant(const GramLattice& l);

}  // namespace qacert
