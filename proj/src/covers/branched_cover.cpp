#include "qacert/covers/branched_cover.hpp"

#include <numeric>
#include <sstream>

#include "qacert/error.hpp"
#include "qacert/foxcalc/fox.hpp"

namespace qacert {

std::string Homology::to_string() const {
  std::ostringstream os;
  os << group.to_string();
  if (cyclic_assignment && cyclic_assignment->modulus > 1) {
    os << ';';
    for (std::size_t i = 0; i < cyclic_assignment->images.size(); ++i) {
      const Integer& k = cyclic_assignment->images[i];
      os << " a" << i + 1 << "->";
      if (k == 0)
        os << '1';
      else if (k == 1)
        os << 't';
      else
        os << "t^" << k.get_str();
    }
  }
  return os.str();
}

Homology homology(const Presentation& p) {
  Homology h;
  IntMatrix m = presentation_matrix(p);
  auto snf = smith_normal_form(m);
  auto d = snf.invariants();
  h.group.free_rank = m.rows() - d.size();
  std::optional<std::size_t> slot;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) {
      ++h.group.free_rank;
    } else if (d[i] != 1) {
      h.group.torsion.push_back(d[i]);
      slot = i;
    }
  }
  if (!h.group.finite() || !h.group.cyclic()) return h;

  Assignment a;
  a.modulus = h.group.order();
  a.images.assign(p.generators(), Integer(0));
  if (slot) {
    // x -> U x maps Z^g onto Z^g / D, so a_i lands on column i of U.
    for (std::size_t i = 0; i < p.generators(); ++i)
      a.images[i] = mod_floor(snf.left(*slot, i), a.modulus);
    for (std::size_t i = p.generators(); i-- > 0;) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.images[i].get_mpz_t(), a.modulus.get_mpz_t());
      if (g != 1) continue;
      Integer inv = inverse_mod(a.images[i], a.modulus);
      for (auto& k : a.images) k = mod_floor(k * inv, a.modulus);
      break;
    }
  }
  h.cyclic_assignment = std::move(a);
  return h;
}

BranchedCoverPresentation BranchedCoverPresentation::from_presentation(Presentation p) {
  BranchedCoverPresentation b;
  b.h1 = homology(p);
  if (b.h1.cyclic_assignment) {
    b.presentation = p.with_assignment(*b.h1.cyclic_assignment);
    b.g = b.h = b.h1.cyclic_assignment->images;
  } else {
    b.presentation = std::move(p);
  }
  return b;
}

std::size_t BranchedCoverPresentation::order() const {
  if (!h1.cyclic_assignment) throw DomainError("H_1 is not finite cyclic: " + h1.group.to_string());
  return static_cast<std::size_t>(to_int64(h1.cyclic_assignment->modulus));
}

BranchedCoverPresentation white_graph_presentation(const WhiteGraph& g) {
  std::vector<FreeWord> relators;
  for (std::size_t i = 0; i < g.vertices(); ++i) {
    FreeWord b;
    for (std::size_t end : g.cyclic()[i]) {
      int mu = g.edges()[end / 2].sign;
      auto j = g.far_vertex(end);
      FreeWord piece = j ? FreeWord::generator(*j, -1) * FreeWord::generator(i) : FreeWord::generator(i);
      b = b * piece.power(mu);
    }
    relators.push_back(std::move(b));
  }
  return BranchedCoverPresentation::from_presentation(Presentation(g.vertices(), std::move(relators)));
}

GroupRingElem group_ring_determinant(const std::vector<std::vector<GroupRingElem>>& m,
                                     std::size_t modulus) {
  const std::size_t n = m.size();
  if (n == 0) return GroupRingElem::one(modulus);
  if (n == 1) return m[0][0];
  GroupRingElem det(modulus);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<GroupRingElem>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<GroupRingElem> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    GroupRingElem term = m[0][c] * group_ring_determinant(sub, modulus);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

GroupRingElem abelianized_minor(const BranchedCoverPresentation& p, std::size_t r, std::size_t s) {
  const std::size_t n = p.order();
  const auto& pres = p.presentation;
  if (r == 0 || r > pres.generators() || s == 0 || s > pres.relators().size())
    throw InputError("minor indices out of range");
  auto fox = fox_matrix(pres);
  std::vector<std::vector<GroupRingElem>> m;
  for (std::size_t i = 0; i < pres.generators(); ++i) {
    if (i == r - 1) continue;
    std::vector<GroupRingElem> row;
    for (std::size_t j = 0; j < pres.relators().size(); ++j)
      if (j != s - 1) row.push_back(abelianize(fox[i][j], *pres.assignment()));
    m.push_back(std::move(row));
  }
  if (!m.empty() && m.size() != m[0].size()) throw DomainError("minor of a non-square Fox matrix");
  return group_ring_determinant(m, n);
}

}  // namespace qacert
