#include "qacert/torsion/torsion.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qacert/algebra/decomposition.hpp"
#include "qacert/covers/kanenobu.hpp"
#include "qacert/error.hpp"

namespace qacert {

namespace {

Unit parse_unit(const std::string& s) {
  if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
    throw InputError("epsilon unit must look like +k or -k, got '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("epsilon unit must look like +k or -k, got '" + s + "'");
  return Unit{s[0] == '+' ? 1 : -1, std::stol(s.substr(1))};
}

std::string unit_string(const Unit& u) { return (u.sign > 0 ? "+" : "-") + std::to_string(u.power); }

CyclotomicNumber unit_value(std::size_t d, const Unit& u) {
  return Rational(u.sign) * CyclotomicNumber::zeta_power(d, u.power);
}

}  // namespace

Unit UnitChoice::at(std::size_t conductor, std::size_t modulus) const {
  if (auto it = per_conductor.find(conductor); it != per_conductor.end()) return it->second;
  if (auto pp = as_prime_power(modulus); pp && !per_level.empty()) {
    unsigned level = 0;
    for (std::size_t x = conductor; x > 1; x /= pp->prime) ++level;
    if (auto it = per_level.find(level); it != per_level.end()) return it->second;
  }
  return global;
}

UnitChoice UnitChoice::parse(const std::string& text) {
  UnitChoice u;
  if (text.empty() || text == "default") return u;
  u.pinned = true;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      u.global = parse_unit(item);
      continue;
    }
    std::string key = item.substr(0, eq);
    Unit val = parse_unit(item.substr(eq + 1));
    if (key.size() < 2 || (key[0] != 'L' && key[0] != 'C'))
      throw InputError("epsilon key must be L<level> or C<conductor>, got '" + key + "'");
    std::size_t idx = 0;
    try {
      idx = std::stoul(key.substr(1));
    } catch (const std::exception&) {
      throw InputError("bad epsilon key '" + key + "'");
    }
    if (key[0] == 'L') {
      if (idx < 1) throw InputError("epsilon level must be >= 1");
      u.per_level[static_cast<unsigned>(idx)] = val;
    } else {
      if (idx < 2) throw InputError("epsilon conductor must be >= 2");
      u.per_conductor[idx] = val;
    }
  }
  return u;
}

std::string UnitChoice::to_string() const {
  if (!pinned && per_level.empty() && per_conductor.empty() && global == Unit{}) return "default";
  std::vector<std::string> parts;
  if (!(global == Unit{}) || (per_level.empty() && per_conductor.empty()))
    parts.push_back(unit_string(global));
  for (const auto& [j, v] : per_level) parts.push_back("L" + std::to_string(j) + "=" + unit_string(v));
  for (const auto& [d, v] : per_conductor) parts.push_back("C" + std::to_string(d) + "=" + unit_string(v));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

Rational TorsionVector::min() const { return *std::min_element(values.begin(), values.end()); }

Rational TorsionVector::sum() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

nlohmann::ordered_json TorsionVector::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = modulus;
  nlohmann::ordered_json tau = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < values.size(); ++k) tau[std::to_string(k)] = qacert::to_string(values[k]);
  j["tau"] = tau;
  j["epsilon"] = epsilon;
  j["note"] = note;
  return j;
}

TorsionVector torsion_from_minor(const GroupRingElem& delta, const Integer& g, const Integer& h,
                                 const UnitChoice& eps) {
  const std::size_t n = delta.modulus();
  std::vector<CyclotomicNumber> comps;
  for (std::size_t d : divisors(n)) {
    if (d == 1) {
      comps.push_back(CyclotomicNumber::zero(1));
      continue;
    }
    Integer dd(static_cast<unsigned long>(d));
    auto check = [&](const Integer& x, const char* name) {
      if (mod_floor(x, dd) == 0)
        throw DomainError("character of conductor " + std::to_string(d) + " sends " + name + " = t^" +
                          mod_floor(x, Integer(static_cast<unsigned long>(n))).get_str() + " to 1");
    };
    check(g, "g_r");
    check(h, "h_s");
    Unit u = eps.at(d, n);
    auto one = CyclotomicNumber::rational(d, 1);
    auto zg = CyclotomicNumber::zeta_power(d, to_int64(mod_floor(g, dd))) - one;
    auto zh = CyclotomicNumber::zeta_power(d, to_int64(mod_floor(h, dd))) - one;
    comps.push_back(unit_value(d, u) * zg.inverse() * zh.inverse() * character_component(delta, d));
  }
  TorsionVector t;
  t.modulus = n;
  t.values = recompose(n, comps).coeffs();
  t.epsilon = eps.to_string();
  t.note = eps.pinned ? "unit supplied by user" : "defined up to unit";
  return t;
}

TorsionVector torsion_of(const BranchedCoverPresentation& p, std::size_t r, std::size_t s,
                         const UnitChoice& eps) {
  return torsion_from_minor(abelianized_minor(p, r, s), p.g.at(r - 1), p.h.at(s - 1), eps);
}

TorsionVector torsion_kanenobu(long n, const UnitChoice& eps, long j) {
  if (n < 0) throw InputError("n must be non-negative");
  return torsion_of(kanenobu_presentation(kanenobu_p(n, j), kanenobu_q(n, j)), 4, 4, eps);
}

std::vector<Rational> d_invariants(const TorsionVector& tau, const Rational& lambda) {
  std::vector<Rational> d;
  d.reserve(tau.values.size());
  for (const auto& v : tau.values) d.push_back(2 * v - lambda);
  return d;
}

}  // namespace qacert
