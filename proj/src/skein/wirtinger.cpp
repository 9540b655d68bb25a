#include "qacert/skein/wirtinger.hpp"

#include <map>
#include <numeric>

#include "qacert/error.hpp"

namespace qacert {

Presentation wirtinger_presentation(const LinkDiagram& d) {
  if (d.size() == 0) {
    if (d.free_loops() != 1) throw DomainError("Wirtinger presentation of a split unlink not supported");
    return Presentation(1, {}, Assignment{{1}, 0});
  }
  if (!d.connected()) throw DomainError("Wirtinger presentation needs a connected diagram");
  // over-arcs: labels b and d of one crossing belong to the same over-arc
  std::map<long, long> parent;
  for (const auto& c : d.crossings())
    for (long a : c) parent[a] = a;
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : d.crossings()) parent[find(c[1])] = find(c[3]);
  std::map<long, std::size_t> gen;
  for (const auto& [a, p] : parent) {
    long root = find(a);
    if (!gen.count(root)) {
      std::size_t next = gen.size();
      gen[root] = next;
    }
  }
  auto g = [&](long label) { return gen.at(find(label)); };
  std::vector<FreeWord> rel;
  for (std::size_t x = 0; x + 1 < d.size(); ++x) {
    const auto& c = d.crossings()[x];
    FreeWord o = FreeWord::generator(g(c[1]));
    FreeWord in = FreeWord::generator(g(c[0]));
    FreeWord out = FreeWord::generator(g(c[2]));
    // positive: x_c = x_o^-1 x_a x_o ; negative: x_c = x_o x_a x_o^-1
    FreeWord r = d.sign(x) > 0 ? o.inverse() * in * o * out.inverse() : o * in * o.inverse() * out.inverse();
    rel.push_back(r);
  }
  // Relators of a diagram with k over-arcs: k crossings, keep k - 1.
  Assignment a;
  a.modulus = 0;
  a.images.assign(gen.size(), Integer(1));
  return Presentation(gen.size(), std::move(rel), std::move(a));
}

}  // namespace qacert
