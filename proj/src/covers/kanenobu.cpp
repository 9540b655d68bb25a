#include "qacert/covers/kanenobu.hpp"

#include <cstdlib>

namespace qacert {

WhiteGraph kanenobu_white_graph(long p, long q) {
  const std::size_t v1 = 0, v2 = 1, v3 = 2, v4 = 3;
  const int sp = p < 0 ? -1 : 1, sq = q < 0 ? -1 : 1;
  std::vector<WhiteEdge> edges;
  auto add = [&](std::size_t u, std::optional<std::size_t> v, int sign) {
    edges.push_back({u, v, sign});
    return edges.size() - 1;
  };
  std::vector<std::size_t> pe, qe;
  for (long k = 0; k < std::labs(p); ++k) pe.push_back(add(v1, v2, sp));
  std::size_t e14 = add(v1, v4, +1);
  std::size_t e23 = add(v2, v3, -1);
  for (long k = 0; k < std::labs(q); ++k) qe.push_back(add(v3, v4, sq));
  std::size_t b1 = add(v1, std::nullopt, +1);
  std::size_t b2 = add(v2, std::nullopt, -1);
  std::size_t b3a = add(v3, std::nullopt, -1), b3b = add(v3, std::nullopt, -1);
  std::size_t b4a = add(v4, std::nullopt, +1), b4b = add(v4, std::nullopt, +1);

  auto at_u = [](std::size_t e) { return 2 * e; };
  auto at_v = [](std::size_t e) { return 2 * e + 1; };
  std::vector<std::vector<std::size_t>> cyc(4);
  for (auto e : pe) cyc[v1].push_back(at_u(e));
  cyc[v1].push_back(at_u(e14));
  cyc[v1].push_back(at_u(b1));

  cyc[v2].push_back(at_u(e23));
  for (auto it = pe.rbegin(); it != pe.rend(); ++it) cyc[v2].push_back(at_v(*it));
  cyc[v2].push_back(at_u(b2));

  for (auto e : qe) cyc[v3].push_back(at_u(e));
  cyc[v3].push_back(at_v(e23));
  cyc[v3].push_back(at_u(b3a));
  cyc[v3].push_back(at_u(b3b));

  cyc[v4].push_back(at_v(e14));
  for (auto it = qe.rbegin(); it != qe.rend(); ++it) cyc[v4].push_back(at_v(*it));
  cyc[v4].push_back(at_u(b4a));
  cyc[v4].push_back(at_u(b4b));

  std::vector<std::size_t> boundary{at_v(b1), at_v(b4b), at_v(b4a), at_v(b3b), at_v(b3a), at_v(b2)};
  return WhiteGraph(4, std::move(edges), std::move(cyc), std::move(boundary));
}

BranchedCoverPresentation kanenobu_presentation(long p, long q) {
  return white_graph_presentation(kanenobu_white_graph(p, q));
}

}  // namespace qacert
