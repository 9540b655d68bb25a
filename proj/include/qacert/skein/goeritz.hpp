#pragma once

#include "qacert/algebra/matrix.hpp"
#include "qacert/skein/link_diagram.hpp"

namespace qacert {

struct GoeritzResult {
  IntMatrix matrix;        // shaded faces minus one deleted face
  Integer determinant;     // |det|
  long form_signature = 0; // signature of the matrix
  long correction = 0;     // sum of eta over type II crossings
  long signature = 0;      // form_signature - correction
};

/// Crossing sign with respect to a shading: +1 when the shaded corners are
/// {0,2} of X[a,b,c,d], i.e. counterclockwise of the under-strand arms.
int goeritz_eta(const LinkDiagram& d, std::size_t crossing, int colour);

/// Goeritz matrix of the faces of the given colour class (0 contains the
/// outer face, which is the one deleted; for class 1 the largest face is
/// deleted), with the Gordon-Litherland signature correction.
GoeritzResult goeritz_invariants(const LinkDiagram& d, int colour = 0);

}  // namespace qacert
