#include "qacert/covers/white_graph.hpp"

#include <algorithm>
#include <numeric>

#include "qacert/error.hpp"

namespace qacert {

namespace {

constexpr std::size_t kBoundarySearchLimit = 8;

std::size_t count_faces(const std::vector<WhiteEdge>& edges,
                        const std::vector<std::vector<std::size_t>>& cyclic,
                        const std::vector<std::size_t>& boundary) {
  const std::size_t darts = 2 * edges.size();
  // successor of each end in the rotation at its vertex
  std::vector<std::size_t> next(darts);
  auto fill = [&](const std::vector<std::size_t>& rot) {
    for (std::size_t k = 0; k < rot.size(); ++k) next[rot[k]] = rot[(k + 1) % rot.size()];
  };
  for (const auto& rot : cyclic) fill(rot);
  fill(boundary);
  std::vector<bool> seen(darts, false);
  std::size_t faces = 0;
  for (std::size_t d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (std::size_t x = d; !seen[x];) {
      seen[x] = true;
      x = next[x ^ 1];  // cross the edge, turn to the next end there
    }
  }
  return faces;
}

}  // namespace

WhiteGraph::WhiteGraph(std::size_t vertices, std::vector<WhiteEdge> edges,
                       std::vector<std::vector<std::size_t>> cyclic,
                       std::optional<std::vector<std::size_t>> boundary_cyclic)
    : vertices_(vertices),
      edges_(std::move(edges)),
      cyclic_(std::move(cyclic)),
      boundary_cyclic_(std::move(boundary_cyclic)) {
  if (cyclic_.size() != vertices_) throw InputError("white graph: one cyclic order per vertex required");
  std::vector<std::vector<std::size_t>> expected(vertices_);
  std::vector<std::size_t> boundary_ends;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.sign != 1 && ed.sign != -1) throw InputError("white graph: edge sign must be +1 or -1");
    if (ed.u >= vertices_ || (ed.v && *ed.v >= vertices_))
      throw InputError("white graph: edge endpoint out of range");
    if (ed.v && *ed.v == ed.u) throw InputError("white graph: loops are not supported");
    expected[ed.u].push_back(2 * e);
    if (ed.v)
      expected[*ed.v].push_back(2 * e + 1);
    else
      boundary_ends.push_back(2 * e + 1);
  }
  for (std::size_t i = 0; i < vertices_; ++i) {
    auto got = cyclic_[i];
    std::sort(got.begin(), got.end());
    if (got != expected[i])
      throw InputError("white graph: cyclic order at vertex " + std::to_string(i + 1) +
                       " is not a permutation of its edge ends");
  }
  if (boundary_cyclic_) {
    auto got = *boundary_cyclic_;
    std::sort(got.begin(), got.end());
    if (got != boundary_ends)
      throw InputError("white graph: boundary cyclic order is not a permutation of its edge ends");
  }

  // Connectivity with the boundary vertex restored (index vertices_).
  std::vector<std::size_t> parent(vertices_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& ed : edges_) parent[find(ed.u)] = find(ed.v ? *ed.v : vertices_);
  for (std::size_t i = 0; i < vertices_; ++i)
    if (find(i) != find(vertices_)) throw InputError("white graph is disconnected");

  if (!boundary_cyclic_ && boundary_ends.size() <= kBoundarySearchLimit && !boundary_ends.empty()) {
    // Fix the first end, permute the rest, keep the first planar rotation.
    std::vector<std::size_t> rest(boundary_ends.begin() + 1, boundary_ends.end());
    do {
      std::vector<std::size_t> rot{boundary_ends[0]};
      rot.insert(rot.end(), rest.begin(), rest.end());
      long chi = static_cast<long>(vertices_ + 1) - static_cast<long>(edges_.size()) +
                 static_cast<long>(count_faces(edges_, cyclic_, rot));
      if (chi == 2) {
        boundary_cyclic_ = std::move(rot);
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else if (!boundary_cyclic_ && boundary_ends.empty()) {
    boundary_cyclic_ = std::vector<std::size_t>{};
  }
}

std::optional<std::size_t> WhiteGraph::far_vertex(std::size_t end) const {
  const auto& ed = edges_.at(end / 2);
  return (end % 2 == 0) ? ed.v : std::optional<std::size_t>(ed.u);
}

std::size_t WhiteGraph::boundary_degree() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const WhiteEdge& e) { return !e.v; }));
}

std::size_t WhiteGraph::face_count() const {
  if (!boundary_cyclic_) throw DomainError("white graph: boundary rotation unknown");
  return count_faces(edges_, cyclic_, *boundary_cyclic_);
}

bool WhiteGraph::planar() const {
  if (!boundary_cyclic_) return false;
  return static_cast<long>(vertices_ + 1) - static_cast<long>(edges_.size()) +
             static_cast<long>(face_count()) == 2;
}

WhiteGraph WhiteGraph::from_json(const nlohmann::json& j) {
  try {
    auto k = j.at("vertices").get<std::size_t>();
    std::vector<WhiteEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("white graph: edges are [i, j|\"B\", sign]");
      auto u = e[0].get<std::size_t>();
      std::optional<std::size_t> v;
      if (e[1].is_string()) {
        if (e[1].get<std::string>() != "B") throw InputError("white graph: unknown vertex tag");
      } else {
        v = e[1].get<std::size_t>();
        if (*v == 0) throw InputError("white graph: vertices are 1-based");
        *v -= 1;
      }
      if (u == 0) throw InputError("white graph: vertices are 1-based");
      edges.push_back({u - 1, v, e[2].get<int>()});
    }
    auto cyclic = j.at("cyclic").get<std::vector<std::vector<std::size_t>>>();
    std::optional<std::vector<std::size_t>> bc;
    if (j.contains("boundary_cyclic")) bc = j["boundary_cyclic"].get<std::vector<std::size_t>>();
    return WhiteGraph(k, std::move(edges), std::move(cyclic), std::move(bc));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("white graph JSON: ") + ex.what());
  }
}

nlohmann::ordered_json WhiteGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = vertices_;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : edges_) {
    nlohmann::ordered_json v = e.v ? nlohmann::ordered_json(*e.v + 1) : nlohmann::ordered_json("B");
    edges.push_back({e.u + 1, v, e.sign});
  }
  j["edges"] = edges;
  j["cyclic"] = cyclic_;
  if (boundary_cyclic_) j["boundary_cyclic"] = *boundary_cyclic_;
  return j;
}

}  // namespace qacert
