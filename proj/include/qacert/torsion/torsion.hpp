#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qacert/algebra/group_ring.hpp"
#include "qacert/covers/branched_cover.hpp"

namespace qacert {

/// sign * zeta_d^power in the component Q(zeta_d).
struct Unit {
  int sign = 1;
  long power = 0;
  bool operator==(const Unit&) const = default;
};

/// The undetermined factor epsilon in each cyclotomic component. Components
/// are addressed by conductor d; `levels` in the text form refer to p^j for
/// prime-power N.
struct UnitChoice {
  Unit global;
  std::map<unsigned, Unit> per_level;          // conductor p^j for N = p^m
  std::map<std::size_t, Unit> per_conductor;  // takes precedence over levels
  bool pinned = false;  // set when the user supplied a calibration

  /// Unit for the component of conductor d inside Q[Z/N].
  Unit at(std::size_t conductor, std::size_t modulus) const;

  /// "default", a global unit "+k" / "-k" (sign * zeta^k), or a comma list
  /// "L1=+2,L2=-0" (levels) / "C5=+2" (conductors). A leading sign is required.
  static UnitChoice parse(const std::string& text);
  /// Canonical text form; "default" for the unpinned all-ones choice.
  std::string to_string() const;
};

/// tau as a function on Z/N (coefficient of t^k at index k).
struct TorsionVector {
  std::size_t modulus = 0;
  std::vector<Rational> values;
  std::string epsilon = "default";
  std::string note = "defined up to unit";

  GroupRingElem as_element() const { return GroupRingElem(modulus, values); }
  Rational min() const;
  Rational sum() const;
  /// {"N": .., "tau": {"0": "p/q", ...}, "epsilon": .., "note": ..}
  nlohmann::ordered_json to_json() const;
};

/// Component d >= 2: eps_d (chi_d(g) - 1)^-1 (chi_d(h) - 1)^-1 chi_d(Delta),
/// trivial component 0. g, h are exponents of t in Z/N. Throws DomainError
/// naming the conductor when chi_d(g) = 1 or chi_d(h) = 1.
TorsionVector torsion_from_minor(const GroupRingElem& delta, const Integer& g, const Integer& h,
                                 const UnitChoice& eps = {});

/// Torsion from the (r, s) minor (1-based) of a branched-cover presentation.
TorsionVector torsion_of(const BranchedCoverPresentation& p, std::size_t r, std::size_t s,
                         const UnitChoice& eps = {});

/// tau of M_n from the (4,4) minor; j selects K_{-10n-j, 10n+j+3}.
TorsionVector torsion_kanenobu(long n, const UnitChoice& eps = {}, long j = 0);

/// d(t^k) = 2 tau(t^k) - lambda.
std::vector<Rational> d_invariants(const TorsionVector& tau, const Rational& lambda);

}  // namespace qacert
