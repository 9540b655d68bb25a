#include "qacert/lattice/catalog_io.hpp"

#include <fstream>

#include "qacert/lattice/enumerate.hpp"

namespace qacert {

LatticeCatalog build_catalog(const Integer& disc, std::size_t max_rank) {
  if (disc < 1) throw InputError("discriminant must be positive");
  LatticeCatalog c;
  // rank < D
  Integer top_rank = disc - 1;
  std::size_t top = top_rank < Integer(static_cast<unsigned long>(max_rank)) ? top_rank.get_ui() : max_rank;
  for (std::size_t r = 0; r <= top; ++r) {
    for (auto& l : enumerate_definite_lattices(r, disc)) c.lattices.push_back(std::move(l));
    c.complete_ranks.insert(r);
  }
  return c;
}

nlohmann::ordered_json gram_to_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix gram_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("Gram matrix must be a JSON array of rows");
  IntMatrix m(j.size(), j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw InputError("Gram matrix must be square");
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[i][k].is_number_integer()) throw InputError("Gram entries must be integers");
      m(i, k) = Integer(std::to_string(j[i][k].get<long long>()));
    }
  }
  return m;
}

nlohmann::ordered_json catalog_to_json(const LatticeCatalog& c) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& l : c.lattices) {
    nlohmann::ordered_json e;
    e["rank"] = l.rank();
    e["gram"] = gram_to_json(l.gram());
    out.push_back(e);
  }
  return out;
}

LatticeCatalog catalog_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("catalog must be a JSON list");
  LatticeCatalog c;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("gram")) throw InputError("catalog entry needs a \"gram\" field");
    IntMatrix g = gram_from_json(e["gram"]);
    if (e.contains("rank") && e["rank"].get<std::size_t>() != g.rows())
      throw InputError("catalog entry rank does not match its Gram matrix");
    c.lattices.push_back(g.rows() == 0 ? GramLattice() : GramLattice(std::move(g)));
  }
  return c;
}

LatticeCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog " + path.string() + ": " + e.what());
  }
  return catalog_from_json(j);
}

}  // namespace qacert
