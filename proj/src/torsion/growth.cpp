#include "qacert/torsion/growth.hpp"

#include <algorithm>

#include "qacert/error.hpp"

namespace qacert {

namespace {

Rational min_at(const std::vector<Rational>& a, const std::vector<Rational>& b, long n) {
  Rational best = a[0] + n * b[0];
  for (std::size_t k = 1; k < a.size(); ++k) best = std::min(best, Rational(a[k] + n * b[k]));
  return best;
}

}  // namespace

GrowthReport analyse_growth(std::vector<TorsionVector> series) {
  if (series.size() < 3) throw InputError("growth analysis needs n_max >= 2");
  GrowthReport r;
  r.n_max = static_cast<long>(series.size()) - 1;
  const auto& t0 = series[0].values;
  const auto& t1 = series[1].values;
  for (std::size_t k = 0; k < t0.size(); ++k) r.delta.push_back(t1[k] - t0[k]);
  r.affine = true;
  for (std::size_t n = 0; n < series.size(); ++n) {
    r.min_tau.push_back(series[n].min());
    for (std::size_t k = 0; k < t0.size() && r.affine; ++k)
      if (series[n].values[k] != t0[k] + static_cast<long>(n) * r.delta[k]) r.affine = false;
  }
  r.min_delta = *std::min_element(r.delta.begin(), r.delta.end());
  if (r.affine && r.min_delta < 0) {
    // f(n) = min_k (a_k + n b_k) is concave; walk to its first strict drop.
    long n = 0;
    while (!(min_at(t0, r.delta, n + 1) < min_at(t0, r.delta, n))) ++n;
    r.threshold = n;
  }
  r.tau = std::move(series);
  return r;
}

GrowthReport torsion_growth(long n_max, const UnitChoice& eps, long j) {
  if (n_max < 2) throw InputError("torsion_growth needs n_max >= 2");
  std::vector<TorsionVector> series;
  for (long n = 0; n <= n_max; ++n) series.push_back(torsion_kanenobu(n, eps, j));
  return analyse_growth(std::move(series));
}

}  // namespace qacert
