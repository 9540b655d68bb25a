#include "qacert/foxcalc/free_group_ring.hpp"

#include <sstream>

namespace qacert {

FreeGroupRingElem FreeGroupRingElem::one() { return from_word(FreeWord()); }

FreeGroupRingElem FreeGroupRingElem::from_word(const FreeWord& w, const Integer& coeff) {
  FreeGroupRingElem x;
  x.add_term(w, coeff);
  return x;
}

void FreeGroupRingElem::add_term(const FreeWord& w, const Integer& coeff) {
  if (coeff == 0) return;
  FreeWord key = w.is_reduced() ? w : w.reduced();
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeGroupRingElem FreeGroupRingElem::operator-() const {
  FreeGroupRingElem x = *this;
  for (auto& [w, c] : x.terms_) c = -c;
  return x;
}

FreeGroupRingElem& FreeGroupRingElem::operator+=(const FreeGroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeGroupRingElem& FreeGroupRingElem::operator-=(const FreeGroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b) {
  FreeGroupRingElem x;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) x.add_term(reduced_product(u, v), cu * cv);
  return x;
}

FreeGroupRingElem operator*(const Integer& s, const FreeGroupRingElem& a) {
  if (s == 0) return {};
  FreeGroupRingElem x = a;
  for (auto& [w, c] : x.terms_) c *= s;
  return x;
}

std::string FreeGroupRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << '[' << w.to_string() << ']';
  }
  return os.str();
}

}  // namespace qacert
