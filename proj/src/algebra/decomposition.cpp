#include "qacert/algebra/decomposition.hpp"

#include "qacert/error.hpp"

namespace qacert {

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace {

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Average over the subgroup generated by t^e; projects onto the characters
// whose order divides e.
GroupRingElem subgroup_average(std::size_t modulus, std::size_t e) {
  std::vector<Rational> c(modulus, Rational(0));
  const Rational w(Integer(static_cast<unsigned long>(e)), Integer(static_cast<unsigned long>(modulus)));
  for (std::size_t k = 0; k < modulus; k += e) c[k] = w;
  return GroupRingElem(modulus, std::move(c));
}

std::size_t level_conductor(std::size_t modulus, unsigned level) {
  if (modulus == 1) {
    if (level != 0) throw DomainError("level " + std::to_string(level) + " exceeds 0 for N = 1");
    return 1;
  }
  auto pp = as_prime_power(modulus);
  if (!pp) throw DomainError("modulus " + std::to_string(modulus) + " is not a prime power");
  if (level > pp->exponent)
    throw DomainError("level " + std::to_string(level) + " exceeds " +
                      std::to_string(pp->exponent) + " for N = " + std::to_string(modulus));
  std::size_t d = 1;
  for (unsigned j = 0; j < level; ++j) d *= pp->prime;
  return d;
}

}  // namespace

CyclotomicNumber character_component(const GroupRingElem& x, std::size_t conductor) {
  if (conductor == 0 || x.modulus() % conductor != 0)
    throw DomainError("conductor " + std::to_string(conductor) + " does not divide " +
                      std::to_string(x.modulus()));
  return CyclotomicNumber::from_powers(conductor, x.coeffs());
}

std::vector<CyclotomicNumber> decompose(const GroupRingElem& x) {
  std::vector<CyclotomicNumber> out;
  for (std::size_t d : divisors(x.modulus())) out.push_back(character_component(x, d));
  return out;
}

GroupRingElem character_idempotent(std::size_t modulus, std::size_t conductor) {
  if (conductor == 0 || modulus % conductor != 0)
    throw DomainError("conductor " + std::to_string(conductor) + " does not divide " +
                      std::to_string(modulus));
  GroupRingElem e(modulus);
  for (std::size_t f : divisors(conductor)) {
    int mu = moebius(conductor / f);
    if (mu == 0) continue;
    e += Rational(mu) * subgroup_average(modulus, f);
  }
  return e;
}

GroupRingElem recompose(std::size_t modulus, const std::vector<CyclotomicNumber>& components) {
  const auto divs = divisors(modulus);
  if (components.size() != divs.size())
    throw DomainError("expected " + std::to_string(divs.size()) + " components for N = " +
                      std::to_string(modulus));
  GroupRingElem x(modulus);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (components[i].conductor() != divs[i])
      throw DomainError("component " + std::to_string(i) + " has conductor " +
                        std::to_string(components[i].conductor()) + ", expected " +
                        std::to_string(divs[i]));
    if (components[i].is_zero()) continue;
    // Any lift of the component works: the idempotent kills the other characters.
    std::vector<Rational> lift(modulus, Rational(0));
    const auto& c = components[i].coords();
    for (std::size_t k = 0; k < c.size(); ++k) lift[k] = c[k];
    x += character_idempotent(modulus, divs[i]) * GroupRingElem(modulus, std::move(lift));
  }
  return x;
}

CyclotomicNumber phi_component(const GroupRingElem& x, unsigned level) {
  return character_component(x, level_conductor(x.modulus(), level));
}

GroupRingElem phi_reconstruct(std::size_t modulus, const std::vector<CyclotomicNumber>& levels) {
  std::vector<CyclotomicNumber> comps;
  unsigned m = 0;
  if (modulus > 1) {
    auto pp = as_prime_power(modulus);
    if (!pp) throw DomainError("modulus " + std::to_string(modulus) + " is not a prime power");
    m = pp->exponent;
  }
  if (levels.size() != m + 1)
    throw DomainError("expected " + std::to_string(m + 1) + " levels for N = " + std::to_string(modulus));
  for (unsigned j = 0; j <= m; ++j) {
    if (levels[j].conductor() != level_conductor(modulus, j))
      throw DomainError("level " + std::to_string(j) + " has conductor " +
                        std::to_string(levels[j].conductor()));
    comps.push_back(levels[j]);
  }
  return recompose(modulus, comps);
}

GroupRingElem phi_reconstruct(const Rational& c0, const CyclotomicNumber& c1,
                              const CyclotomicNumber& c2, std::size_t modulus) {
  auto pp = as_prime_power(modulus);
  if (!pp || pp->exponent != 2) throw DomainError("three-level reconstruction needs N = p^2");
  return phi_reconstruct(modulus, {CyclotomicNumber::rational(1, c0), c1, c2});
}

}  // namespace qacert
