#pragma once

#include <vector>

#include "qacert/algebra/matrix.hpp"

namespace qacert {

/// U * M * V = D with U, V unimodular and D diagonal (nonnegative entries,
/// each dividing the next).
struct SmithForm {
  IntMatrix left;      // U
  IntMatrix right;     // V
  IntMatrix diagonal;  // D, same shape as M
  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Abelian group Z^rank (+) Z/t_1 (+) ... with every t_i > 1.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool finite() const { return free_rank == 0; }
  bool cyclic() const { return free_rank + torsion.size() <= 1; }
  Integer order() const;  // 0 if infinite
  /// "Z/25", "Z + Z/3", "0".
  std::string to_string() const;
};

/// Cokernel of the map Z^cols -> Z^rows given by m.
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace qacert
