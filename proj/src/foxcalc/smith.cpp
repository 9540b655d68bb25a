#include "qacert/foxcalc/smith.hpp"

#include <optional>
#include <sstream>

namespace qacert {

namespace {

struct Work {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += f * u(j, c);
  }
  // col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += f * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

// Smallest nonzero |entry| in the lower-right block starting at t.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer m = abs(a(i, j));
      if (!best || m < best_abs) {
        best = {i, j};
        best_abs = m;
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
    d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Work w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto piv = min_pivot(w.a, t);
      if (!piv) break;
      w.swap_rows(t, piv->first);
      w.swap_cols(t, piv->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a(i, t) == 0) continue;
        w.add_row(i, t, -floor_div(w.a(i, t), w.a(t, t)));
        if (w.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a(t, j) == 0) continue;
        w.add_col(j, t, -floor_div(w.a(t, j), w.a(t, t)));
        if (w.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pull an offending row into row t and go again.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < w.a.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < w.a.cols(); ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      w.add_row(t, *bad, 1);
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.u), std::move(w.v), std::move(w.a)};
}

Integer AbelianGroup::order() const {
  if (free_rank) return 0;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << 'Z';
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
  AbelianGroup g;
  auto d = smith_normal_form(m).invariants();
  g.free_rank = m.rows() - d.size();
  for (const auto& x : d) {
    if (x == 0)
      ++g.free_rank;
    else if (x != 1)
      g.torsion.push_back(x);
  }
  return g;
}

}  // namespace qacert
