#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qacert/lattice/catalog_io.hpp"

namespace qacert {

struct CBound {
  Integer discriminant;
  Rational value;
  bool complete = false;
  std::size_t lattices = 0;
  std::optional<GramLattice> witness;  // a lattice attaining the value
  std::vector<std::size_t> missing_ranks;

  nlohmann::ordered_json to_json() const;
};

/// Minimum of m over the catalog. Throws InputError for a member with the
/// wrong discriminant or rank >= D, DomainError for an empty catalog.
CBound c_bound(const Integer& discriminant, const LatticeCatalog& catalog);

enum class VerdictKind { certified, conditional, not_obstructed };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::not_obstructed;
  Rational min_d;
  CBound bound;
  std::vector<std::string> conditions;  // unmet, only for `conditional`

  nlohmann::ordered_json to_json() const;
};

inline const char* kConditionUnitUnpinned = "torsion unit unpinned";

/// Requires |d_values| = D. `unit_pinned` says whether the d-values carry
/// no torsion unit ambiguity.
Verdict qa_verdict(const std::vector<Rational>& d_values, const Integer& discriminant, const CBound& bound,
                   bool unit_pinned);

}  // namespace qacert
