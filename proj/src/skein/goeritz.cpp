#include "qacert/skein/goeritz.hpp"

#include "qacert/error.hpp"

namespace qacert {

int goeritz_eta(const LinkDiagram& d, std::size_t x, int colour) {
  return d.colouring()[d.face_of({x, 0})] == colour ? 1 : -1;
}

GoeritzResult goeritz_invariants(const LinkDiagram& d, int colour) {
  if (colour != 0 && colour != 1) throw InputError("colour class must be 0 or 1");
  if (!d.connected()) throw DomainError("Goeritz matrix needs a connected diagram");
  GoeritzResult r;
  if (d.size() == 0) {
    r.determinant = 1;
    return r;
  }
  const auto& col = d.colouring();
  std::size_t deleted = d.outer_face();
  if (colour == 1) {
    deleted = SIZE_MAX;
    for (std::size_t f = 0; f < d.faces().size(); ++f)
      if (col[f] == 1 && (deleted == SIZE_MAX || d.faces()[f].size() > d.faces()[deleted].size()))
        deleted = f;
  }
  std::vector<long> index(d.faces().size(), -1);
  long k = 0;
  for (std::size_t f = 0; f < d.faces().size(); ++f)
    if (col[f] == colour && f != deleted) index[f] = k++;
  r.matrix = IntMatrix(k, k);
  for (std::size_t x = 0; x < d.size(); ++x) {
    int eta = goeritz_eta(d, x, colour);
    int first = eta > 0 ? 0 : 1;
    std::size_t f = d.face_of({x, first}), g = d.face_of({x, first + 2});
    // oriented smoothing merges corners {1,3} when the over-strand exits via b
    bool merged_odd = d.over_exits_b(x);
    bool shaded_odd = first == 1;
    if (merged_odd != shaded_odd) r.correction += eta;
    if (f == g) continue;
    long i = index[f], j = index[g];
    if (i >= 0) r.matrix(i, i) += eta;
    if (j >= 0) r.matrix(j, j) += eta;
    if (i >= 0 && j >= 0) {
      r.matrix(i, j) -= eta;
      r.matrix(j, i) -= eta;
    }
  }
  r.determinant = k == 0 ? Integer(1) : Integer(abs(determinant(r.matrix)));
  r.form_signature = k == 0 ? 0 : inertia(r.matrix).signature();
  r.signature = r.form_signature - r.correction;
  return r;
}

}  // namespace qacert
