#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

namespace qacert {

/// Edge of a white graph. `v` empty means the edge runs to the discarded
/// vertex of the unbounded region.
struct WhiteEdge {
  std::size_t u;
  std::optional<std::size_t> v;
  int sign;  // crossing sign mu(e) = +1 or -1
};

/// Checkerboard white graph: one vertex per bounded white region, one edge per
/// crossing. Edge e has ends 2e (at u) and 2e+1 (at v, possibly the boundary
/// vertex). `cyclic[i]` lists the end ids at vertex i counterclockwise.
class WhiteGraph {
 public:
  WhiteGraph(std::size_t vertices, std::vector<WhiteEdge> edges,
             std::vector<std::vector<std::size_t>> cyclic,
             std::optional<std::vector<std::size_t>> boundary_cyclic = std::nullopt);

  std::size_t vertices() const { return vertices_; }
  const std::vector<WhiteEdge>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& cyclic() const { return cyclic_; }
  /// Rotation at the boundary vertex: as given, or found by search when the
  /// boundary degree is small. Empty if unknown.
  const std::optional<std::vector<std::size_t>>& boundary_cyclic() const { return boundary_cyclic_; }

  /// Vertex at the far side of an edge end (nullopt = boundary vertex).
  std::optional<std::size_t> far_vertex(std::size_t end) const;
  std::size_t boundary_degree() const;

  /// Number of faces of the embedding given by the rotations (boundary
  /// rotation required).
  std::size_t face_count() const;
  /// Euler characteristic V - E + F equals 2 (counting the boundary vertex).
  bool planar() const;

  /// JSON with 1-based vertices:
  /// {"vertices": k, "edges": [[i, j | "B", sign], ...], "cyclic": [[end ids], ...],
  ///  "boundary_cyclic": [end ids]}  (the last key is optional)
  static WhiteGraph from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

 private:
  std::size_t vertices_;
  std::vector<WhiteEdge> edges_;
  std::vector<std::vector<std::size_t>> cyclic_;
  std::optional<std::vector<std::size_t>> boundary_cyclic_;
};

}  // namespace qacert
