#include "qacert/foxcalc/presentation.hpp"

#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

Integer Assignment::image(const FreeWord& w) const {
  Integer s = 0;
  for (const auto& l : w.letters()) {
    if (l.generator >= images.size())
      throw DomainError("generator a" + std::to_string(l.generator + 1) + " has no assigned image");
    s += l.exponent * images[l.generator];
  }
  return infinite() ? s : mod_floor(s, modulus);
}

Presentation::Presentation(std::size_t generators, std::vector<FreeWord> relators,
                           std::optional<Assignment> assignment)
    : generators_(generators), relators_(std::move(relators)), assignment_(std::move(assignment)) {
  for (std::size_t j = 0; j < relators_.size(); ++j)
    if (relators_[j].generator_bound() > generators_)
      throw InputError("relator " + std::to_string(j + 1) + " uses a generator beyond a" +
                       std::to_string(generators_));
  if (assignment_ && assignment_->images.size() != generators_)
    throw InputError("assignment needs one image per generator");
  if (assignment_ && assignment_->modulus < 0) throw InputError("assignment modulus must be >= 0");
}

Presentation Presentation::with_assignment(Assignment a) const {
  return Presentation(generators_, relators_, std::move(a));
}

bool Presentation::relators_vanish() const {
  if (!assignment_) throw DomainError("presentation has no assignment");
  for (const auto& r : relators_)
    if (assignment_->image(r) != 0) return false;
  return true;
}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> gens;
  std::vector<FreeWord> rels;
  std::optional<Assignment> assign;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "gens") {
      long g = -1;
      if (!(words >> g) || g < 0) throw InputError("bad 'gens' line: " + line);
      gens = static_cast<std::size_t>(g);
    } else if (head == "assign") {
      Assignment a;
      std::string tok;
      bool saw_mod = false;
      while (words >> tok) {
        if (tok == "mod") {
          std::string m;
          if (!(words >> m)) throw InputError("missing modulus in: " + line);
          a.modulus = Integer(parse_rational(m).get_num());
          saw_mod = true;
          break;
        }
        a.images.push_back(parse_rational(tok).get_num());
      }
      if (!saw_mod) throw InputError("'assign' line needs 'mod N': " + line);
      assign = std::move(a);
    } else {
      if (!gens) throw InputError("presentation must start with 'gens g'");
      rels.push_back(FreeWord::parse(line));
    }
  }
  if (!gens) throw InputError("presentation must start with 'gens g'");
  return Presentation(*gens, std::move(rels), std::move(assign));
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens " << generators_ << '\n';
  for (const auto& r : relators_) os << r.to_string() << '\n';
  if (assignment_) {
    os << "assign";
    for (const auto& k : assignment_->images) os << ' ' << k.get_str();
    os << " mod " << assignment_->modulus.get_str() << '\n';
  }
  return os.str();
}

IntMatrix presentation_matrix(const Presentation& p) {
  IntMatrix m(p.generators(), p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    auto sums = p.relators()[j].exponent_sums(p.generators());
    for (std::size_t i = 0; i < p.generators(); ++i) m(i, j) = sums[i];
  }
  return m;
}

}  // namespace qacert
