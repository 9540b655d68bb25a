#include "qacert/pipeline/family.hpp"

#include <algorithm>

#include "qacert/covers/kanenobu.hpp"
#include "qacert/skein/builders.hpp"
#include "qacert/skein/goeritz.hpp"
#include "qacert/skein/mullins.hpp"

namespace qacert {

namespace {

constexpr std::size_t kOrder = 25;

GroupRingElem poly(std::initializer_list<std::pair<long, long>> terms) {
  GroupRingElem x(kOrder);
  for (auto [e, c] : terms) x += GroupRingElem::monomial(kOrder, e, c);
  return x;
}

GroupRingElem minor_n_term(long n) {
  // n sigma (1 + t + t^3), sigma = 2 (1 + t^5 + ... + t^20)
  GroupRingElem sigma = poly({{0, 2}, {5, 2}, {10, 2}, {15, 2}, {20, 2}});
  return Rational(n) * sigma * poly({{0, 1}, {1, 1}, {3, 1}});
}

GroupRingElem minor_constant() {
  return poly({{0, -1}, {2, 1}, {3, -1}, {8, -1}, {9, 1}, {11, -1}, {12, 1},
               {13, -1}, {15, 1}, {16, -1}, {20, -1}, {21, 1}, {23, -1}, {24, 1}});
}

void check(bool ok, const char* anchor, const std::string& detail) {
  if (!ok) throw CheckFailure(anchor, detail);
}

}  // namespace

GroupRingElem minor_reference_form(long n) { return minor_constant() + minor_n_term(n); }
GroupRingElem minor_corrected_form(long n) { return minor_constant() - minor_n_term(n); }

Rational kanenobu_lambda() {
  auto m = mullins_lambda(kanenobu_diagram(0, 3));
  check(m.determinant == 25, "determinant of K_{0,3} is 25", m.determinant.get_str());
  check(abs(m.v_at_minus_one) == 25, "|V(-1)| equals the determinant", to_string(m.v_at_minus_one));
  return m.lambda;
}

CBound kanenobu_bound(const std::optional<std::filesystem::path>& catalog) {
  return c_bound(kOrder, catalog ? load_catalog(*catalog) : build_catalog(kOrder));
}

FamilyRecord family_record(long n, long j, const UnitChoice& eps, const Rational& lambda, const CBound* bound) {
  if (n < 0) throw InputError("n must be non-negative");
  if (j < 0 || j > 9) throw InputError("j must lie in 0..9");
  FamilyRecord r;
  r.n = n;
  r.p = kanenobu_p(n, j);
  r.q = kanenobu_q(n, j);
  auto bc = kanenobu_presentation(r.p, r.q);
  r.h1 = bc.h1;
  check(r.h1.group.order() == 25, "H1 of the branched cover has order 25", r.h1.group.to_string());

  auto g = goeritz_invariants(kanenobu_diagram(r.p, r.q));
  r.determinant = g.determinant;
  r.signature = g.signature;
  check(r.determinant == 25, "determinant 25", r.determinant.get_str());
  check(r.signature == 0, "signature 0", std::to_string(r.signature));
  if (!r.h1.group.cyclic()) return r;  // single-minor torsion needs cyclic H_1

  check(r.h1.group.to_string() == "Z/25", "H1 is Z/25", r.h1.group.to_string());
  r.minor = abelianized_minor(bc, 4, 4);
  if (j == 0) {
    r.minor_matches_reference = *r.minor == minor_reference_form(n);
    check(*r.minor == minor_corrected_form(n), "closed form of the (4,4) minor", r.minor->to_string());
  }
  r.tau = torsion_from_minor(*r.minor, bc.g.at(3), bc.h.at(3), eps);
  r.d = d_invariants(*r.tau, lambda);
  for (std::size_t k = 0; k < r.d.size(); ++k)
    check(r.d[k] == 2 * r.tau->values[k] - lambda, "d = 2 tau - lambda", "at t^" + std::to_string(k));
  r.min_d = *std::min_element(r.d.begin(), r.d.end());
  if (bound) r.verdict = qa_verdict(r.d, kOrder, *bound, eps.pinned);
  return r;
}

PipelineReport run_family(const FamilyOptions& opt) {
  if (opt.n_max < 0) throw InputError("n range is empty");
  PipelineReport rep;
  rep.options = opt;
  rep.lambda = kanenobu_lambda();
  if (opt.with_verdict) rep.bound = kanenobu_bound(opt.catalog);
  for (long n = 0; n <= opt.n_max; ++n)
    rep.records.push_back(family_record(n, opt.j, opt.epsilon, rep.lambda, rep.bound ? &*rep.bound : nullptr));

  bool cyclic = std::all_of(rep.records.begin(), rep.records.end(), [](const FamilyRecord& r) { return r.tau.has_value(); });
  if (cyclic && opt.n_max >= 2) {
    std::vector<TorsionVector> series;
    for (const auto& r : rep.records) series.push_back(*r.tau);
    rep.growth = analyse_growth(std::move(series));
    check(rep.growth->affine, "torsion affine in n", "tau_n != tau_0 + n delta");
    check(std::any_of(rep.growth->delta.begin(), rep.growth->delta.end(), [](const Rational& x) { return x != 0; }),
          "torsion nonconstant in n", "delta = 0");
    rep.min_d_slope = 2 * rep.growth->min_delta;
    // last stretch on which min d moves by exactly the slope
    long from = opt.n_max;
    while (from > 0 && *rep.records[from].min_d - *rep.records[from - 1].min_d == *rep.min_d_slope) --from;
    if (from < opt.n_max) rep.min_d_linear_from = from;
  }
  return rep;
}

}  // namespace qacert
