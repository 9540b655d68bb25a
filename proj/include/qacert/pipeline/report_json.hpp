#pragma once

#include "json.hpp"
#include "qacert/pipeline/family.hpp"

namespace qacert {

nlohmann::ordered_json homology_to_json(const Homology& h);
nlohmann::ordered_json rationals_to_json(const std::vector<Rational>& v);
nlohmann::ordered_json record_to_json(const FamilyRecord& r);
nlohmann::ordered_json growth_to_json(const GrowthReport& g);
/// Deterministic: keys in insertion order, records by n.
nlohmann::ordered_json report_to_json(const PipelineReport& r);

}  // namespace qacert
