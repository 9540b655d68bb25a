#include "qacert/algebra/group_ring.hpp"

#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

namespace {
void require_same(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.modulus() != b.modulus())
    throw DomainError("group ring modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()));
}
}  // namespace

GroupRingElem::GroupRingElem(std::size_t modulus) : coeffs_(modulus, Rational(0)) {
  if (modulus == 0) throw DomainError("group ring modulus must be positive");
}

GroupRingElem::GroupRingElem(std::size_t modulus, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw DomainError("group ring modulus must be positive");
  if (coeffs_.size() != modulus)
    throw DomainError("group ring element needs exactly " + std::to_string(modulus) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) c.canonicalize();
}

GroupRingElem GroupRingElem::one(std::size_t modulus) { return monomial(modulus, 0); }

GroupRingElem GroupRingElem::monomial(std::size_t modulus, std::int64_t exponent,
                                      const Rational& coeff) {
  GroupRingElem x(modulus);
  x.coeffs_[static_cast<std::size_t>(mod_floor(exponent, static_cast<std::int64_t>(modulus)))] = coeff;
  return x;
}

GroupRingElem GroupRingElem::average(std::size_t modulus) {
  GroupRingElem x(modulus);
  for (auto& c : x.coeffs_) c = Rational(Integer(1), Integer(static_cast<unsigned long>(modulus)));
  for (auto& c : x.coeffs_) c.canonicalize();
  return x;
}

Rational GroupRingElem::augmentation() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool GroupRingElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool GroupRingElem::is_integral() const {
  for (const auto& c : coeffs_)
    if (!qacert::is_integral(c)) return false;
  return true;
}

GroupRingElem GroupRingElem::substitute_power(std::int64_t power) const {
  const auto n = static_cast<std::int64_t>(modulus());
  GroupRingElem x(modulus());
  for (std::int64_t k = 0; k < n; ++k)
    x.coeffs_[static_cast<std::size_t>(mod_floor(k * power, n))] += coeffs_[static_cast<std::size_t>(k)];
  return x;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  require_same(a, b);
  const std::size_t n = a.modulus();
  GroupRingElem c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      c.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return c;
}

std::string GroupRingElem::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << qacert::to_string(mag);
      continue;
    }
    if (mag != 1) os << qacert::to_string(mag) << '*';
    os << var;
    if (k != 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

nlohmann::ordered_json to_json(const GroupRingElem& x) {
  nlohmann::ordered_json j;
  j["modulus"] = x.modulus();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : x.coeffs()) arr.push_back(to_string(c));
  j["coeffs"] = std::move(arr);
  return j;
}

GroupRingElem group_ring_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("coeffs"))
    throw InputError("group ring JSON needs 'modulus' and 'coeffs'");
  if (!j["modulus"].is_number_unsigned()) throw InputError("'modulus' must be a positive integer");
  const auto n = j["modulus"].get<std::size_t>();
  const auto& arr = j["coeffs"];
  if (!arr.is_array()) throw InputError("'coeffs' must be an array");
  std::vector<Rational> c;
  for (const auto& e : arr) {
    if (!e.is_string()) throw InputError("coefficients must be rational strings");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  if (n == 0 || c.size() != n) throw InputError("'coeffs' length must equal 'modulus'");
  return GroupRingElem(n, std::move(c));
}

}  // namespace qacert
