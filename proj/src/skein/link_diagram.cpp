#include "qacert/skein/link_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "qacert/error.hpp"

namespace qacert {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<std::vector<long>> components,
                         std::optional<std::size_t> free_loops)
    : crossings_(std::move(crossings)) {
  free_loops_ = free_loops.value_or(crossings_.empty() ? 1 : 0);
  std::map<long, std::vector<Corner>> where;
  for (std::size_t x = 0; x < crossings_.size(); ++x)
    for (int i = 0; i < 4; ++i) where[crossings_[x][i]].push_back({x, i});
  partner_.resize(4 * crossings_.size());
  for (const auto& [label, occ] : where) {
    if (occ.size() != 2)
      throw InputError("PD code: arc " + std::to_string(label) + " appears " +
                       std::to_string(occ.size()) + " times (expected 2)");
    partner_[4 * occ[0].crossing + occ[0].pos] = occ[1];
    partner_[4 * occ[1].crossing + occ[1].pos] = occ[0];
  }
  orient(components);
  build_faces();
  recolour();
}

Corner LinkDiagram::partner(std::size_t x, int pos) const { return partner_[4 * x + pos]; }

long LinkDiagram::writhe() const {
  long w = 0;
  for (std::size_t x = 0; x < size(); ++x) w += sign(x);
  return w;
}

void LinkDiagram::orient(const std::vector<std::vector<long>>& given) {
  const std::size_t n = crossings_.size();
  // dir[4x+i]: +1 the strand enters x through arm i, -1 it leaves, 0 unknown.
  std::vector<int> dir(4 * n, 0);
  std::vector<bool> done(4 * n, false);
  auto walk = [&](Corner start, int start_dir) {
    // start_dir refers to arm `start`; follow the component around.
    std::vector<long> comp;
    Corner c = start;
    int d = start_dir;
    for (;;) {
      std::size_t k = 4 * c.crossing + c.pos;
      if (done[k]) break;
      if (d < 0) {
        // leaving through c: the arc runs to its partner, entering there
        comp.push_back(crossings_[c.crossing][c.pos]);
        Corner p = partner(c.crossing, c.pos);
        dir[k] = -1;
        done[k] = true;
        c = p;
        d = +1;
      } else {
        dir[k] = +1;
        done[k] = true;
        c = Corner{c.crossing, (c.pos + 2) % 4};
        d = -1;
      }
    }
    return comp;
  };

  // Components through an under-strand are oriented by a -> c.
  for (std::size_t x = 0; x < n; ++x)
    if (!done[4 * x]) {
      // start on the arc leaving through c so the list begins with that arc
      auto comp = walk(Corner{x, 2}, -1);
      if (!comp.empty()) components_.push_back(std::move(comp));
    }

  // Remaining components pass only over.
  std::map<long, std::size_t> given_index;
  for (std::size_t k = 0; k < given.size(); ++k)
    for (long a : given[k]) given_index[a] = k;
  for (std::size_t x = 0; x < n; ++x)
    for (int i : {1, 3}) {
      if (done[4 * x + i]) continue;
      long b = crossings_[x][1], d = crossings_[x][3];
      bool d_in;
      auto it = given_index.find(crossings_[x][i]);
      if (it != given_index.end() && given[it->second].size() > 2) {
        // successor of d in the listed order is b iff d enters here
        const auto& lst = given[it->second];
        auto pos = std::find(lst.begin(), lst.end(), d) - lst.begin();
        d_in = lst[(pos + 1) % lst.size()] == b;
      } else {
        d_in = (b == d + 1) || (d - b > 1);
      }
      auto comp = walk(Corner{x, d_in ? 1 : 3}, -1);
      if (!comp.empty()) components_.push_back(std::move(comp));
    }

  over_b_out_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (dir[4 * x] != 1 || dir[4 * x + 2] != -1)
      throw InputError("PD code: crossing " + std::to_string(x + 1) +
                       " is inconsistent with the under-strand orientation");
    if (dir[4 * x + 1] == dir[4 * x + 3])
      throw InputError("PD code: over-strand at crossing " + std::to_string(x + 1) + " is not oriented");
    over_b_out_[x] = dir[4 * x + 1] == -1;
  }

  // Check the given orders against what the under-strands force.
  for (const auto& lst : given) {
    if (lst.size() < 3) continue;
    for (const auto& comp : components_) {
      auto it = std::find(comp.begin(), comp.end(), lst[0]);
      if (it == comp.end()) continue;
      auto idx = static_cast<std::size_t>(it - comp.begin());
      if (comp[(idx + 1) % comp.size()] != lst[1])
        throw InputError("PD code: O[] order contradicts the crossing orientation");
    }
  }
}

void LinkDiagram::build_faces() {
  const std::size_t n = crossings_.size();
  face_index_.assign(4 * n, SIZE_MAX);
  faces_.clear();
  for (std::size_t x = 0; x < n; ++x)
    for (int i = 0; i < 4; ++i) {
      if (face_index_[4 * x + i] != SIZE_MAX) continue;
      std::vector<Corner> face;
      Corner c{x, i};
      while (face_index_[4 * c.crossing + c.pos] == SIZE_MAX) {
        face_index_[4 * c.crossing + c.pos] = faces_.size();
        face.push_back(c);
        c = partner(c.crossing, (c.pos + 1) % 4);
      }
      faces_.push_back(std::move(face));
    }
  outer_face_ = 0;
  for (std::size_t f = 1; f < faces_.size(); ++f)
    if (faces_[f].size() > faces_[outer_face_].size()) outer_face_ = f;
}

void LinkDiagram::recolour() {
  colour_.assign(faces_.size(), -1);
  if (faces_.empty()) return;
  std::vector<std::size_t> stack{outer_face_};
  colour_[outer_face_] = 0;
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    for (const auto& c : faces_[f])
      for (int step : {1, 3}) {
        std::size_t g = face_of({c.crossing, (c.pos + step) % 4});
        int want = 1 - colour_[f];
        if (colour_[g] == -1) {
          colour_[g] = want;
          stack.push_back(g);
        } else if (colour_[g] != want) {
          throw DomainError("diagram faces admit no checkerboard colouring (non-planar PD code?)");
        }
      }
  }
}

bool LinkDiagram::connected() const {
  if (crossings_.empty()) return free_loops_ <= 1;
  if (free_loops_ > 0) return false;
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < size(); ++x)
    for (int i = 0; i < 4; ++i) parent[find(x)] = find(partner(x, i).crossing);
  for (std::size_t x = 1; x < size(); ++x)
    if (find(x) != find(0)) return false;
  return true;
}

}  // namespace qacert
