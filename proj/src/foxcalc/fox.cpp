#include "qacert/foxcalc/fox.hpp"

#include "qacert/error.hpp"

namespace qacert {

FreeGroupRingElem fox_derivative(const FreeWord& w, std::size_t generator) {
  FreeGroupRingElem result;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    FreeWord letter({l});
    if (l.generator == generator) {
      if (l.exponent > 0)
        result.add_term(prefix, 1);
      else
        result.add_term(reduced_product(prefix, letter), -1);
    }
    prefix = reduced_product(prefix, letter);
  }
  return result;
}

FoxMatrix fox_matrix(const Presentation& p) {
  FoxMatrix m(p.generators(), std::vector<FreeGroupRingElem>(p.relators().size()));
  for (std::size_t i = 0; i < p.generators(); ++i)
    for (std::size_t j = 0; j < p.relators().size(); ++j)
      m[i][j] = fox_derivative(p.relators()[j], i);
  return m;
}

GroupRingElem abelianize(const FreeGroupRingElem& x, const Assignment& a) {
  if (a.infinite()) throw DomainError("abelianize: assignment into Z needs abelianize_laurent");
  const auto n = static_cast<std::size_t>(to_int64(a.modulus));
  std::vector<Rational> c(n);
  for (const auto& [w, k] : x.terms()) {
    auto e = static_cast<std::size_t>(to_int64(a.image(w)));
    c[e] += Rational(k);
  }
  return GroupRingElem(n, std::move(c));
}

LaurentPolynomial abelianize_laurent(const FreeGroupRingElem& x, const Assignment& a) {
  if (!a.infinite()) throw DomainError("abelianize_laurent: assignment must be into Z");
  LaurentPolynomial r;
  for (const auto& [w, k] : x.terms()) r += LaurentPolynomial::monomial(k, to_int64(a.image(w)));
  return r;
}

}  // namespace qacert
