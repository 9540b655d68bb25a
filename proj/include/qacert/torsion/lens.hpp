#pragma once

#include <vector>

#include "qacert/algebra/rational.hpp"

namespace qacert {

/// Correction terms d(L(p,q), i), i = 0..p-1, from the recursion
/// d(p,q,i) = -1/4 + (2i+1-p-q)^2/(4pq) - d(q, p mod q, i mod q), d(1,0,0) = 0.
/// Requires p = 1, or 0 < q < p with gcd(p, q) = 1.
std::vector<Rational> d_lens_oracle(long p, long q);

/// Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
Rational dedekind_sum(long q, long p);

/// Casson-Walker invariant of L(p,q) normalized so that it is -s(q,p).
Rational lens_casson_walker(long p, long q);

}  // namespace qacert
