#include "qacert/algebra/rational.hpp"

#include <cctype>

#include "qacert/error.hpp"

namespace qacert {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not an exact rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer mm = abs(m);
  if (mm == 0) throw DomainError("mod_floor: zero modulus");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  if (m == 0) throw DomainError("mod_floor: zero modulus");
  if (m < 0) m = -m;
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer too large: " + z.get_str());
  return z.get_si();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError(a.get_str() + " is not invertible modulo " + m.get_str());
  return mod_floor(inv, m);
}

}  // namespace qacert
