#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qacert/algebra/group_ring.hpp"
#include "qacert/covers/white_graph.hpp"
#include "qacert/foxcalc/presentation.hpp"
#include "qacert/foxcalc/smith.hpp"

namespace qacert {

struct Homology {
  AbelianGroup group;
  /// Present when the group is finite cyclic (order 1 included): a_i -> t^k_i
  /// with t the image of the highest-index generator that generates.
  std::optional<Assignment> cyclic_assignment;

  /// "Z/25; a1->t^13 a2->t^3 a3->t^6 a4->t"
  std::string to_string() const;
};

Homology homology(const Presentation& p);

/// Presentation of pi_1 of a branched double cover plus the classes g_i, h_i
/// in Z/N of the dual curves (filled when H_1 is finite cyclic).
struct BranchedCoverPresentation {
  Presentation presentation;  // carries the Z/N assignment when cyclic
  Homology h1;
  std::vector<Integer> g, h;

  static BranchedCoverPresentation from_presentation(Presentation p);
  std::size_t order() const;  // N; throws unless H_1 is finite cyclic
};

/// Relator b_i: product, in the counterclockwise order at v_i, of
/// (a_j^-1 a_i)^mu for an edge to v_j and a_i^mu for an edge to the boundary.
BranchedCoverPresentation white_graph_presentation(const WhiteGraph& g);

/// Determinant of the abelianized Fox matrix with row r and column s deleted
/// (1-based), in Q[Z/N]. Requires H_1 finite cyclic.
GroupRingElem abelianized_minor(const BranchedCoverPresentation& p, std::size_t r, std::size_t s);

/// Laplace expansion over Q[Z/N]; the empty matrix has determinant 1.
GroupRingElem group_ring_determinant(const std::vector<std::vector<GroupRingElem>>& m,
                                     std::size_t modulus);

}  // namespace qacert
