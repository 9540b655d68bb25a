#include "qacert/pipeline/report_json.hpp"

namespace qacert {

using nlohmann::ordered_json;

ordered_json homology_to_json(const Homology& h) {
  ordered_json j;
  j["group"] = h.group.to_string();
  j["order"] = h.group.order().get_str();
  if (h.cyclic_assignment) {
    auto images = ordered_json::array();
    for (const auto& e : h.cyclic_assignment->images) images.push_back(e.get_str());
    j["images"] = images;
  } else {
    j["images"] = nullptr;
  }
  j["text"] = h.to_string();
  return j;
}

ordered_json rationals_to_json(const std::vector<Rational>& v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json record_to_json(const FamilyRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["q"] = r.q;
  j["H1"] = homology_to_json(r.h1);
  j["determinant"] = r.determinant.get_str();
  j["signature"] = r.signature;
  j["minor"] = r.minor ? to_json(*r.minor) : ordered_json();
  j["minor_matches_reference"] = r.minor_matches_reference;
  if (r.tau) {
    j["tau"] = r.tau->to_json();
    j["min_tau"] = to_string(r.tau->min());
    j["d"] = rationals_to_json(r.d);
    j["min_d"] = to_string(*r.min_d);
  } else {
    j["tau"] = nullptr;
    j["min_tau"] = nullptr;
    j["d"] = nullptr;
    j["min_d"] = nullptr;
    j["unavailable"] = "H1 is not cyclic; the single-minor torsion formula does not apply";
  }
  j["verdict"] = r.verdict ? r.verdict->to_json() : ordered_json();
  return j;
}

ordered_json growth_to_json(const GrowthReport& g) {
  ordered_json j;
  j["affine"] = g.affine;
  j["delta"] = rationals_to_json(g.delta);
  j["min_delta"] = to_string(g.min_delta);
  j["min_tau"] = rationals_to_json(g.min_tau);
  j["threshold"] = g.threshold ? ordered_json(*g.threshold) : ordered_json();
  return j;
}

ordered_json report_to_json(const PipelineReport& r) {
  ordered_json j;
  ordered_json fam;
  fam["j"] = r.options.j;
  fam["p"] = r.options.j ? "-10n-" + std::to_string(r.options.j) : std::string("-10n");
  fam["q"] = "10n+" + std::to_string(r.options.j + 3);
  fam["n_max"] = r.options.n_max;
  j["family"] = fam;
  j["epsilon"] = r.options.epsilon.to_string();
  j["lambda"] = to_string(r.lambda);
  j["determinant"] = r.determinant.get_str();
  j["bound"] = r.bound ? r.bound->to_json() : ordered_json();
  auto recs = ordered_json::array();
  for (const auto& rec : r.records) recs.push_back(record_to_json(rec));
  j["records"] = recs;
  j["growth"] = r.growth ? growth_to_json(*r.growth) : ordered_json();
  j["min_d_slope"] = r.min_d_slope ? ordered_json(to_string(*r.min_d_slope)) : ordered_json();
  j["min_d_linear_from"] = r.min_d_linear_from ? ordered_json(*r.min_d_linear_from) : ordered_json();
  return j;
}

}  // namespace qacert
