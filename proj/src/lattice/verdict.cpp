#include "qacert/lattice/verdict.hpp"

#include <algorithm>

#include "qacert/lattice/characteristic.hpp"

namespace qacert {

nlohmann::ordered_json CBound::to_json() const {
  nlohmann::ordered_json j;
  j["D"] = discriminant.get_str();
  j["value"] = qacert::to_string(value);
  j["complete"] = complete;
  j["lattices"] = lattices;
  j["witness"] = witness ? gram_to_json(witness->gram()) : nlohmann::ordered_json();
  j["missing_ranks"] = missing_ranks;
  return j;
}

CBound c_bound(const Integer& disc, const LatticeCatalog& catalog) {
  if (catalog.lattices.empty()) throw DomainError("c_bound: empty catalog");
  CBound b;
  b.discriminant = disc;
  for (const auto& l : catalog.lattices) {
    if (l.discriminant() != disc)
      throw InputError("catalog lattice " + l.to_string() + " has discriminant " + l.discriminant().get_str());
    if (Integer(static_cast<unsigned long>(l.rank())) >= disc)
      throw InputError("catalog lattice " + l.to_string() + " has rank >= D");
    Rational m = m_invariant(l);
    if (!b.witness || m < b.value) {
      b.value = m;
      b.witness = l;
    }
  }
  b.lattices = catalog.lattices.size();
  for (unsigned long r = 0; Integer(r) < disc; ++r)
    if (!catalog.complete_ranks.count(r)) {
      b.missing_ranks.push_back(r);
      if (b.missing_ranks.size() > 64) break;  // D is huge; the flag is what matters
    }
  b.complete = b.missing_ranks.empty();
  return b;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::certified:
      return "non-QA certified";
    case VerdictKind::conditional:
      return "non-QA conditional";
    case VerdictKind::not_obstructed:
      return "not obstructed";
  }
  return "?";
}

nlohmann::ordered_json Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(kind);
  j["min_d"] = qacert::to_string(min_d);
  j["bound"] = bound.to_json();
  j["conditions"] = conditions;
  return j;
}

Verdict qa_verdict(const std::vector<Rational>& d, const Integer& disc, const CBound& bound, bool unit_pinned) {
  if (Integer(static_cast<unsigned long>(d.size())) != disc)
    throw InputError("verdict: expected " + disc.get_str() + " d-values, got " + std::to_string(d.size()));
  if (bound.discriminant != disc) throw InputError("verdict: bound computed for a different discriminant");
  Verdict v;
  v.bound = bound;
  v.min_d = *std::min_element(d.begin(), d.end());
  if (v.min_d >= bound.value) return v;
  if (!bound.complete) {
    std::size_t first_gap = bound.missing_ranks.front();
    v.conditions.push_back(first_gap == 0 ? std::string("catalog completeness unknown")
                                          : "catalog incomplete beyond rank " + std::to_string(first_gap - 1));
  }
  if (!unit_pinned) v.conditions.push_back(kConditionUnitUnpinned);
  v.kind = v.conditions.empty() ? VerdictKind::certified : VerdictKind::conditional;
  return v;
}

}  // namespace qacert
