#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qacert/algebra/matrix.hpp"
#include "qacert/foxcalc/free_word.hpp"

namespace qacert {

/// Homomorphism from the generators to a cyclic group: a_i -> t^images[i] in
/// Z/modulus, or in Z when modulus is 0.
struct Assignment {
  std::vector<Integer> images;
  Integer modulus = 0;

  bool infinite() const { return modulus == 0; }
  /// Image of a word, reduced into [0, modulus) when finite.
  Integer image(const FreeWord& w) const;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::size_t generators, std::vector<FreeWord> relators,
               std::optional<Assignment> assignment = std::nullopt);

  /// Text format:
  ///   gens g
  ///   <relator>            one per line, e.g. "a1^-1 a2 a1^-1 a2 a4^-1 a1 a1"
  ///   assign k1 ... kg mod N   (optional; "mod 0" for Z)
  /// Blank lines and lines starting with '#' are ignored.
  static Presentation parse(std::string_view text);
  std::string to_text() const;

  std::size_t generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  const std::optional<Assignment>& assignment() const { return assignment_; }
  long deficiency() const {
    return static_cast<long>(generators_) - static_cast<long>(relators_.size());
  }

  Presentation with_assignment(Assignment a) const;

  /// True when every relator maps to the identity under the assignment.
  bool relators_vanish() const;

 private:
  std::size_t generators_ = 0;
  std::vector<FreeWord> relators_;
  std::optional<Assignment> assignment_;
};

/// Entry (i, j) is the exponent sum of generator i in relator j.
IntMatrix presentation_matrix(const Presentation& p);

}  // namespace qacert
