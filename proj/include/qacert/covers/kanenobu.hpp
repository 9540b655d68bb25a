#pragma once

#include "qacert/covers/branched_cover.hpp"
#include "qacert/covers/white_graph.hpp"

namespace qacert {

/// Reduced white graph of K_{p,q}: four bounded vertices, |p| parallel edges
/// v1-v2 and |q| parallel edges v3-v4 (the twist regions), and 8 further
/// crossings.
WhiteGraph kanenobu_white_graph(long p, long q);

BranchedCoverPresentation kanenobu_presentation(long p, long q);

/// K_n = K_{-10n, 10n+3} and its neighbours K_{-10n-j, 10n+j+3}.
inline long kanenobu_p(long n, long j = 0) { return -10 * n - j; }
inline long kanenobu_q(long n, long j = 0) { return 10 * n + j + 3; }

}  // namespace qacert
