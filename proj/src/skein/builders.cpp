#include "qacert/skein/builders.hpp"

#include <map>
#include <numeric>

#include "qacert/covers/kanenobu.hpp"
#include "qacert/error.hpp"

namespace qacert {

LinkDiagram unknot_diagram() { return LinkDiagram({}, {}, 1); }

LinkDiagram braid_closure(std::size_t strands, const std::vector<int>& word) {
  if (strands == 0) throw InputError("braid needs at least one strand");
  std::vector<long> cur(strands);
  std::iota(cur.begin(), cur.end(), 1L);
  long next = static_cast<long>(strands) + 1;
  std::vector<Crossing> xs;
  std::map<long, long> succ;
  for (int gen : word) {
    std::size_t i = static_cast<std::size_t>(std::abs(gen));
    if (gen == 0 || i >= strands) throw InputError("braid generator out of range: " + std::to_string(gen));
    long x = cur[i - 1], y = cur[i];
    long u = next++, v = next++;
    if (gen > 0)
      xs.push_back({y, v, u, x});
    else
      xs.push_back({x, y, v, u});
    succ[x] = v;
    succ[y] = u;
    cur[i - 1] = u;
    cur[i] = v;
  }
  // close up: the final label at position k is the initial label k
  std::map<long, long> rename;
  std::size_t free = 0;
  for (std::size_t k = 0; k < strands; ++k) {
    if (cur[k] == static_cast<long>(k + 1)) {
      bool touched = false;
      for (const auto& c : xs)
        for (long a : c) touched = touched || a == cur[k];
      if (!touched) ++free;
    }
    rename[cur[k]] = static_cast<long>(k + 1);
  }
  auto rn = [&](long a) {
    auto it = rename.find(a);
    return it == rename.end() ? a : it->second;
  };
  for (auto& c : xs)
    for (auto& a : c) a = rn(a);
  std::map<long, long> succ2;
  for (auto [a, b] : succ) succ2[rn(a)] = rn(b);
  std::vector<std::vector<long>> comps;
  std::map<long, bool> seen;
  for (auto [a, b] : succ2) {
    if (seen[a]) continue;
    std::vector<long> comp;
    for (long x = a; !seen[x]; x = succ2.count(x) ? succ2[x] : a) {
      seen[x] = true;
      comp.push_back(x);
    }
    comps.push_back(std::move(comp));
  }
  return LinkDiagram(std::move(xs), std::move(comps), free);
}

LinkDiagram diagram_from_white_graph(const WhiteGraph& g) {
  if (!g.planar()) throw DomainError("white graph has no planar boundary rotation");
  const std::size_t ne = g.edges().size();
  if (ne == 0) return unknot_diagram();
  // rotation successor / predecessor of every end, boundary included
  std::vector<std::size_t> nxt(2 * ne), prv(2 * ne);
  auto fill = [&](const std::vector<std::size_t>& rot) {
    for (std::size_t k = 0; k < rot.size(); ++k) {
      nxt[rot[k]] = rot[(k + 1) % rot.size()];
      prv[rot[(k + 1) % rot.size()]] = rot[k];
    }
  };
  for (const auto& rot : g.cyclic()) fill(rot);
  fill(*g.boundary_cyclic());
  // corner starting at end f (f -> nxt[f]) is arc f; arms at crossing e in
  // counterclockwise order SE, NE, NW, SW
  std::vector<std::array<std::size_t, 4>> arm(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    std::size_t fu = 2 * e, fv = 2 * e + 1;
    arm[e] = {prv[fu], fv, prv[fv], fu};
  }
  // arc id -> its two (crossing, arm) slots
  std::vector<std::vector<std::pair<std::size_t, int>>> slots(2 * ne);
  for (std::size_t e = 0; e < ne; ++e)
    for (int k = 0; k < 4; ++k) slots[arm[e][k]].push_back({e, k});
  for (const auto& s : slots)
    if (s.size() != 2) throw DomainError("white graph medial construction: arc without two ends");

  // orient by traversal: leave through an arm, arrive at the partner slot,
  // continue straight through to the opposite arm
  std::vector<std::array<int, 4>> dir(ne, {0, 0, 0, 0});  // +1 in, -1 out
  std::vector<long> number(2 * ne, 0);
  std::vector<std::vector<long>> comps;
  long label = 0;
  for (std::size_t e0 = 0; e0 < ne; ++e0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (dir[e0][k0] != 0) continue;
      std::vector<long> comp;
      std::size_t e = e0;
      int k = k0;
      while (dir[e][k] == 0) {
        dir[e][k] = -1;
        std::size_t a = arm[e][k];
        number[a] = ++label;
        comp.push_back(label);
        auto other = slots[a][0] == std::make_pair(e, k) ? slots[a][1] : slots[a][0];
        dir[other.first][other.second] = +1;
        e = other.first;
        k = (other.second + 2) % 4;
      }
      comps.push_back(std::move(comp));
    }

  std::vector<Crossing> xs(ne);
  std::size_t outer_crossing = SIZE_MAX;
  int outer_pos = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    bool se_over = g.edges()[e].sign > 0;
    // under-strand arms: {1,3} when SE-NW is over, else {0,2}
    int r = se_over ? 1 : 0;
    if (dir[e][r] != 1) r += 2;
    for (int k = 0; k < 4; ++k) xs[e][k] = number[arm[e][(r + k) % 4]];
    if (!g.edges()[e].v && outer_crossing == SIZE_MAX) {
      // the boundary region sits between arms NE (1) and NW (2)
      outer_crossing = e;
      outer_pos = ((1 - r) % 4 + 4) % 4;
    }
  }
  LinkDiagram d(std::move(xs), std::move(comps), 0);
  if (outer_crossing != SIZE_MAX) d.set_outer_face({outer_crossing, outer_pos});
  return d;
}

LinkDiagram kanenobu_diagram(long p, long q) { return diagram_from_white_graph(kanenobu_white_graph(p, q)); }

LinkDiagram trefoil_diagram() { return braid_closure(2, {1, 1, 1}); }

LinkDiagram torus_3_5_diagram() {
  std::vector<int> w;
  for (int k = 0; k < 5; ++k) {
    w.push_back(1);
    w.push_back(2);
  }
  return braid_closure(3, w);
}

LinkDiagram figure_eight_diagram() {
  return LinkDiagram({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
}

}  // namespace qacert
