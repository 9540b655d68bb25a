#pragma once

#include <array>
#include <optional>
#include <vector>

namespace qacert {

/// X[a,b,c,d]: arc labels counterclockwise, starting at the incoming
/// under-strand (so the under-strand runs a -> c).
using Crossing = std::array<long, 4>;

/// (crossing index, position 0..3): the region counterclockwise between arm
/// `pos` and arm `pos + 1`.
struct Corner {
  std::size_t crossing;
  int pos;
  bool operator==(const Corner&) const = default;
};

/// Oriented planar diagram given by a PD code.
class LinkDiagram {
 public:
  /// `components`: arcs in traversal order per component (optional; needed
  /// only for components that never pass under). `free_loops` counts
  /// crossingless unknotted components; an empty code defaults to one.
  LinkDiagram(std::vector<Crossing> crossings,
              std::vector<std::vector<long>> components = {},
              std::optional<std::size_t> free_loops = std::nullopt);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  std::size_t free_loops() const { return free_loops_; }
  /// Components with crossings, each as arcs in traversal order.
  const std::vector<std::vector<long>>& components() const { return components_; }
  std::size_t component_count() const { return components_.size() + free_loops_; }

  /// True when the over-strand leaves through position b (arm 1).
  bool over_exits_b(std::size_t x) const { return over_b_out_[x]; }
  /// +1 / -1 by the right-hand rule.
  int sign(std::size_t x) const { return over_b_out_[x] ? 1 : -1; }
  long writhe() const;

  /// Faces as cycles of corners; the diagram must be connected.
  const std::vector<std::vector<Corner>>& faces() const { return faces_; }
  std::size_t face_of(Corner c) const { return face_index_[4 * c.crossing + c.pos]; }
  /// Connected projection (crossing graph connected, no extra free loops).
  bool connected() const;

  /// Two-colouring of the faces: 0 or 1 per face, with class 0 holding the
  /// designated outer face (by default the face with the most corners).
  /// Faces in other split pieces stay -1.
  const std::vector<int>& colouring() const { return colour_; }
  std::size_t outer_face() const { return outer_face_; }
  void set_outer_face(Corner c) { outer_face_ = face_of(c); recolour(); }

  /// Labels of the other occurrence of the arc at (x, pos).
  Corner partner(std::size_t x, int pos) const;

 private:
  void orient(const std::vector<std::vector<long>>& given);
  void build_faces();
  void recolour();

  std::vector<Crossing> crossings_;
  std::vector<std::vector<long>> components_;
  std::size_t free_loops_ = 0;
  std::vector<bool> over_b_out_;
  std::vector<Corner> partner_;  // per (crossing, pos)
  std::vector<std::vector<Corner>> faces_;
  std::vector<std::size_t> face_index_;
  std::vector<int> colour_;
  std::size_t outer_face_ = 0;
};

}  // namespace qacert
