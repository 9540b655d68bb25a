#include "qacert/skein/jones.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "qacert/error.hpp"

namespace qacert {

namespace {

const LaurentPolynomial& loop_value() {
  // -A^2 - A^-2
  static const LaurentPolynomial d =
      LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  return d;
}

LaurentPolynomial loop_power(std::size_t k) {
  LaurentPolynomial r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * loop_value();
  return r;
}

// Open arc ends of a partial state: each open label is paired with the label
// at the far end of its strand.
using Pairing = std::map<long, long>;

// Adds a smoothing segment u-v; returns the number of closed loops.
int add_segment(Pairing& open, long u, long v) {
  if (u == v) return 1;  // both ends of one arc at this smoothing
  auto iu = open.find(u), iv = open.find(v);
  bool uo = iu != open.end(), vo = iv != open.end();
  if (uo && vo && iu->second == v) {
    open.erase(iu);
    open.erase(v);
    return 1;
  }
  long eu = uo ? iu->second : u;
  long ev = vo ? iv->second : v;
  if (uo) open.erase(u);
  if (vo) open.erase(v);
  open[eu] = ev;
  open[ev] = eu;
  return 0;
}

std::vector<std::size_t> greedy_order(const LinkDiagram& d) {
  const std::size_t n = d.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;
  std::map<long, int> seen;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_score = -1;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      int score = 0;
      for (long a : d.crossings()[x]) score += seen.count(a) ? 1 : 0;
      if (score > best_score) {
        best = x;
        best_score = score;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (long a : d.crossings()[best]) ++seen[a];
  }
  return order;
}

LaurentPolynomial bracket_tangle(const LinkDiagram& d) {
  std::map<std::vector<std::pair<long, long>>, LaurentPolynomial> states;
  states[{}] = 1;
  const LaurentPolynomial a = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial ainv = LaurentPolynomial::monomial(1, -1);
  for (std::size_t x : greedy_order(d)) {
    const auto& c = d.crossings()[x];
    std::map<std::vector<std::pair<long, long>>, LaurentPolynomial> next;
    for (const auto& [key, coeff] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        Pairing open;
        for (auto [p, q] : key) {
          open[p] = q;
          open[q] = p;
        }
        int loops = 0;
        if (smoothing == 0) {
          loops += add_segment(open, c[0], c[1]);
          loops += add_segment(open, c[2], c[3]);
        } else {
          loops += add_segment(open, c[0], c[3]);
          loops += add_segment(open, c[1], c[2]);
        }
        std::vector<std::pair<long, long>> nk;
        for (auto [p, q] : open)
          if (p < q) nk.emplace_back(p, q);
        LaurentPolynomial term = coeff * (smoothing == 0 ? a : ainv) * loop_power(loops);
        auto [it, inserted] = next.try_emplace(std::move(nk), term);
        if (!inserted) it->second += term;
      }
    }
    states.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) states.emplace(k, std::move(v));
  }
  if (states.empty()) return 0;
  if (states.size() != 1 || !states.begin()->first.empty())
    throw DomainError("bracket: open strands remain after all crossings");
  return states.begin()->second;
}

LaurentPolynomial bracket_naive(const LinkDiagram& d) {
  const std::size_t n = d.size();
  LaurentPolynomial total;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Pairing open;
    int loops = 0;
    long a_count = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const auto& c = d.crossings()[x];
      if (mask >> x & 1) {
        loops += add_segment(open, c[0], c[3]);
        loops += add_segment(open, c[1], c[2]);
        --a_count;
      } else {
        loops += add_segment(open, c[0], c[1]);
        loops += add_segment(open, c[2], c[3]);
        ++a_count;
      }
    }
    total += LaurentPolynomial::monomial(1, a_count) * loop_power(loops);
  }
  return total;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const JonesOptions& opt) {
  if (d.size() > opt.max_crossings)
    throw DomainError("bracket: " + std::to_string(d.size()) + " crossings exceed the budget of " +
                      std::to_string(opt.max_crossings) +
                      "; reduce (p,q) with the Jones-equality chain K_{p,q} -> K_{p+1,q-1} first");
  if (d.size() > 62 && opt.method == BracketMethod::naive)
    throw DomainError("bracket: naive state sum limited to 62 crossings");
  if (d.size() == 0) return loop_power(d.free_loops() - 1);
  LaurentPolynomial raw = opt.method == BracketMethod::tangle ? bracket_tangle(d) : bracket_naive(d);
  return (raw * loop_power(d.free_loops())).exact_divide(loop_value());
}

LaurentPolynomial jones_polynomial(const LinkDiagram& d, const JonesOptions& opt) {
  long w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  LaurentPolynomial v = kauffman_bracket(d, opt) * LaurentPolynomial::monomial(w % 2 ? -1 : 1, -3 * w);
  // A^k = t^(-k/4) = s^(-k/2)
  LaurentPolynomial out;
  for (const auto& [k, c] : v.terms()) {
    if (k % 2 != 0) throw DomainError("bracket exponents have unexpected parity");
    out += LaurentPolynomial::monomial(c, -k / 2);
  }
  return out;
}

std::string jones_to_string(const LaurentPolynomial& v) {
  bool integral = true;
  for (const auto& [k, c] : v.terms())
    if (k % 2) integral = false;
  if (!integral) return v.to_string("t", 2);
  LaurentPolynomial w;
  for (const auto& [k, c] : v.terms()) w += LaurentPolynomial::monomial(c, k / 2);
  return w.to_string("t");
}

Rational jones_value_at(const LaurentPolynomial& v, const Rational& t0) {
  if (t0 == 0) throw DomainError("Jones polynomial evaluated at t = 0");
  Rational sum = 0;
  for (const auto& [k, c] : v.terms()) {
    if (k % 2) {
      if (t0 != 1) throw DomainError("half-integer powers of t need t0 = 1 here");
      sum += c;
      continue;
    }
    Rational p = 1;
    Rational base = k >= 0 ? t0 : Rational(1 / t0);
    for (long i = 0; i < std::labs(k / 2); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

Rational jones_derivative_at(const LaurentPolynomial& v, const Rational& t0) {
  // d/dt t^(k/2) = (k/2) t^(k/2 - 1)
  if (t0 == 0) throw DomainError("Jones derivative evaluated at t = 0");
  Rational sum = 0;
  for (const auto& [k, c] : v.terms()) {
    if (k % 2 && t0 != 1) throw DomainError("half-integer powers of t need t0 = 1 here");
    Rational half(Integer(k), Integer(2));
    half.canonicalize();
    Rational coef = Rational(c) * half;
    if (k % 2) {
      sum += coef;
      continue;
    }
    long e = k / 2 - 1;
    Rational p = 1;
    Rational base = e >= 0 ? t0 : Rational(1 / t0);
    for (long i = 0; i < std::labs(e); ++i) p *= base;
    sum += coef * p;
  }
  return sum;
}

}  // namespace qacert
