#pragma once

#include <optional>
#include <vector>

#include "qacert/torsion/torsion.hpp"

namespace qacert {

struct GrowthReport {
  long n_max = 0;
  std::vector<TorsionVector> tau;   // n = 0..n_max
  std::vector<Rational> min_tau;    // per n
  std::vector<Rational> delta;      // tau_1 - tau_0
  bool affine = false;              // tau_n == tau_0 + n delta for every n
  Rational min_delta;
  /// First n with min tau_{m+1} < min tau_m for every m >= n (the minimum is
  /// concave in n, so one strict drop persists). Empty if delta >= 0.
  std::optional<long> threshold;
};

/// Runs tau_n for n = 0..n_max (n_max >= 2).
GrowthReport torsion_growth(long n_max, const UnitChoice& eps = {}, long j = 0);

/// Same analysis on a precomputed series.
GrowthReport analyse_growth(std::vector<TorsionVector> series);

}  // namespace qacert
