#include "qacert/algebra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::optional<PrimePower> as_prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p) ++p;
  if (n % p) p = n;
  unsigned m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, m};
}

QPoly cyclotomic_polynomial(std::size_t d) {
  if (d == 0) throw DomainError("cyclotomic polynomial of conductor 0");
  // x^d - 1 divided by Phi_e for every proper divisor e of d.
  QPoly num = QPoly::monomial(1, d) - QPoly({Rational(1)});
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e) continue;
    QPoly q, r;
    QPoly::divmod(num, cyclotomic_polynomial(e), q, r);
    num = q;
  }
  return num;
}

CyclotomicField::CyclotomicField(std::size_t conductor)
    : conductor_(conductor), phi_(cyclotomic_polynomial(conductor)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::size_t conductor) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const CyclotomicField>> cache;
  if (conductor == 0) throw DomainError("cyclotomic field of conductor 0");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, f);
  return f;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> coeffs) const {
  // First fold exponents modulo the conductor (zeta^d = 1), then reduce mod Phi_d.
  std::vector<Rational> folded(std::min(coeffs.size(), conductor_), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % conductor_] += coeffs[k];
  QPoly q, r;
  QPoly::divmod(QPoly(std::move(folded)), phi_, q, r);
  std::vector<Rational> out(degree(), Rational(0));
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) out[k] = r.coeffs()[k];
  return out;
}

CyclotomicNumber CyclotomicNumber::zero(std::size_t conductor) {
  auto f = CyclotomicField::get(conductor);
  return CyclotomicNumber(f, std::vector<Rational>(f->degree(), Rational(0)));
}

CyclotomicNumber CyclotomicNumber::rational(std::size_t conductor, const Rational& q) {
  CyclotomicNumber z = zero(conductor);
  z.coords_[0] = q;
  return z;
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::size_t conductor, std::int64_t k) {
  auto n = static_cast<std::int64_t>(conductor);
  std::vector<Rational> c(static_cast<std::size_t>(mod_floor(k, n)) + 1, Rational(0));
  c.back() = 1;
  return from_powers(conductor, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_powers(std::size_t conductor, std::vector<Rational> coeffs) {
  auto f = CyclotomicField::get(conductor);
  auto reduced = f->reduce(std::move(coeffs));
  return CyclotomicNumber(f, std::move(reduced));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

unsigned CyclotomicNumber::level(std::size_t prime) const {
  std::size_t d = conductor();
  unsigned j = 0;
  while (d % prime == 0) {
    d /= prime;
    ++j;
  }
  if (d != 1)
    throw DomainError("conductor " + std::to_string(conductor()) + " is not a power of " +
                      std::to_string(prime));
  return j;
}

namespace {
void require_same(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() != b.conductor())
    throw DomainError("cyclotomic level mismatch: conductor " + std::to_string(a.conductor()) +
                      " vs " + std::to_string(b.conductor()));
}
}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber z = *this;
  for (auto& c : z.coords_) c = -c;
  return z;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same(a, b);
  CyclotomicNumber z = a;
  for (std::size_t i = 0; i < z.coords_.size(); ++i) z.coords_[i] += b.coords_[i];
  return z;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same(a, b);
  CyclotomicNumber z = a;
  for (std::size_t i = 0; i < z.coords_.size(); ++i) z.coords_[i] -= b.coords_[i];
  return z;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same(a, b);
  QPoly prod = QPoly(a.coords_) * QPoly(b.coords_);
  return CyclotomicNumber::from_powers(a.conductor(), prod.coeffs());
}

CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a) {
  CyclotomicNumber z = a;
  for (auto& c : z.coords_) c *= s;
  return z;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  QPoly s, t;
  QPoly g = extended_gcd(QPoly(coords_), field_->modulus_polynomial(), s, t);
  // Phi_d is irreducible, so a nonzero reduced element is coprime to it.
  if (g.degree() != 0) throw DomainError("cyclotomic inverse: non-unit gcd");
  return from_powers(conductor(), s.coeffs());
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << qacert::to_string(coords_[k]) << ')';
    if (k) os << "*z" << conductor() << '^' << k;
  }
  return first ? "0" : os.str();
}

}  // namespace qacert
