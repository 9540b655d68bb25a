#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "qacert/covers/branched_cover.hpp"
#include "qacert/lattice/verdict.hpp"
#include "qacert/torsion/growth.hpp"

namespace qacert {

/// Reference closed form of the (4,4) minor of K_n, with +n sigma (1 + t + t^3).
GroupRingElem minor_reference_form(long n);
/// The same with the n-linear term negated; this is what the Fox matrix gives.
GroupRingElem minor_corrected_form(long n);

/// Casson-Walker invariant shared by every K_{p,q} with p + q = 3, taken
/// from the 11-crossing diagram of K_{0,3}.
Rational kanenobu_lambda();

/// C(25) from a catalog file, or from the rank <= 4 enumeration.
CBound kanenobu_bound(const std::optional<std::filesystem::path>& catalog = {});

struct FamilyRecord {
  long n = 0;
  long p = 0, q = 0;
  Homology h1;
  Integer determinant;  // Goeritz
  long signature = 0;
  std::optional<GroupRingElem> minor;  // absent when H_1 is not cyclic
  bool minor_matches_reference = false;
  std::optional<TorsionVector> tau;
  std::vector<Rational> d;
  std::optional<Rational> min_d;
  std::optional<Verdict> verdict;
};

struct FamilyOptions {
  long j = 0;
  long n_max = 10;
  UnitChoice epsilon;
  std::optional<std::filesystem::path> catalog;
  bool with_verdict = true;
};

struct PipelineReport {
  FamilyOptions options;
  Rational lambda;
  Integer determinant = 25;
  std::optional<CBound> bound;
  std::vector<FamilyRecord> records;
  std::optional<GrowthReport> growth;  // cyclic H_1 and n_max >= 2
  /// 2 min delta, the eventual per-step change of min d.
  std::optional<Rational> min_d_slope;
  /// First n from which min d drops by exactly min_d_slope at every step.
  std::optional<long> min_d_linear_from;
};

/// One member of the family; checks det = 25, signature 0 and |H_1| = 25,
/// and for j = 0 the corrected closed form of the minor. Throws CheckFailure.
FamilyRecord family_record(long n, long j, const UnitChoice& eps, const Rational& lambda, const CBound* bound);

/// n = 0..n_max; additionally checks affine torsion growth and d = 2 tau - lambda.
PipelineReport run_family(const FamilyOptions& opt);

}  // namespace qacert
