#pragma once

#include <filesystem>
#include <set>
#include <vector>

#include "json.hpp"
#include "qacert/lattice/gram_lattice.hpp"

namespace qacert {

struct LatticeCatalog {
  std::vector<GramLattice> lattices;
  /// Ranks for which `lattices` is known to hold every isomorphism class.
  std::set<std::size_t> complete_ranks;
};

/// Enumerated catalog with discriminant D and ranks 0..min(D-1, max_rank).
LatticeCatalog build_catalog(const Integer& discriminant, std::size_t max_rank = 4);

/// [{"rank": r, "gram": [[...], ...]}, ...]
nlohmann::ordered_json catalog_to_json(const LatticeCatalog& c);
/// Loaded catalogs claim no completeness.
LatticeCatalog catalog_from_json(const nlohmann::json& j);
LatticeCatalog load_catalog(const std::filesystem::path& path);

nlohmann::ordered_json gram_to_json(const IntMatrix& m);
IntMatrix gram_from_json(const nlohmann::json& j);

}  // namespace qacert
