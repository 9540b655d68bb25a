#pragma once

#include <vector>

#include "qacert/covers/white_graph.hpp"
#include "qacert/skein/link_diagram.hpp"

namespace qacert {

LinkDiagram unknot_diagram();

/// Closure of a braid on `strands` strands; generator +i is sigma_i (a
/// positive crossing), -i its inverse. Strands never touched by the word
/// become free loops.
LinkDiagram braid_closure(std::size_t strands, const std::vector<int>& word);

/// Medial diagram of a planar white graph: one crossing per edge, the strand
/// through the south-east and north-west corners passing over when mu = +1
/// (edge drawn from u in the south to v in the north). The region of the
/// boundary vertex becomes the outer face; arcs are numbered along the
/// components.
LinkDiagram diagram_from_white_graph(const WhiteGraph& g);

/// K_{p,q} with 8 + |p| + |q| crossings.
LinkDiagram kanenobu_diagram(long p, long q);

/// Right-handed trefoil (closure of sigma_1^3) and T(3,5) = (sigma_1 sigma_2)^5.
LinkDiagram trefoil_diagram();
LinkDiagram torus_3_5_diagram();
LinkDiagram figure_eight_diagram();

}  // namespace qacert
