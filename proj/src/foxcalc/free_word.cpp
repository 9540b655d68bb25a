#include "qacert/foxcalc/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent != 1 && l.exponent != -1)
      throw InputError("free word letters carry exponent +1 or -1");
}

FreeWord FreeWord::generator(std::size_t g, int exponent) {
  return FreeWord({Letter{g, exponent}});
}

namespace {

long parse_long(std::string_view s, std::string_view context) {
  if (s.empty()) throw InputError("missing exponent in '" + std::string(context) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw InputError("bad exponent in '" + std::string(context) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw InputError("bad exponent in '" + std::string(context) + "'");
  return std::stol(std::string(s));
}

// Splits "(", ")" and ")^k" off as their own tokens.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(') {
      flush();
      tokens.emplace_back("(");
    } else if (c == ')') {
      flush();
      std::string tok = ")";
      if (i + 1 < text.size() && text[i + 1] == '^') {
        std::size_t j = i + 2;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                                   text[j] == '-' || text[j] == '+'))
          ++j;
        tok += std::string(text.substr(i + 1, j - i - 1));
        i = j - 1;
      }
      tokens.push_back(tok);
    } else {
      cur += c;
    }
  }
  flush();
  return tokens;
}

}  // namespace

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<std::vector<Letter>> stack(1);
  for (const auto& tok : tokenize(text)) {
    if (tok == "(") {
      stack.emplace_back();
      continue;
    }
    if (tok[0] == ')') {
      if (stack.size() < 2) throw InputError("unbalanced ')' in '" + std::string(text) + "'");
      long k = tok.size() > 1 ? parse_long(std::string_view(tok).substr(2), text) : 1;
      FreeWord group(std::move(stack.back()));
      stack.pop_back();
      const auto p = group.power(k).letters();
      stack.back().insert(stack.back().end(), p.begin(), p.end());
      continue;
    }
    if (tok == "1") continue;
    if (tok[0] != 'a') throw InputError("bad letter '" + tok + "' (expected a<index>)");
    std::size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InputError("bad generator index in '" + tok + "'");
    long g = std::stol(idx);
    if (g < 1) throw InputError("generators are numbered from a1: '" + tok + "'");
    long k = caret == std::string::npos ? 1 : parse_long(std::string_view(tok).substr(caret + 1), tok);
    const auto p = FreeWord::generator(static_cast<std::size_t>(g - 1)).power(k).letters();
    stack.back().insert(stack.back().end(), p.begin(), p.end());
  }
  if (stack.size() != 1) throw InputError("unbalanced '(' in '" + std::string(text) + "'");
  return FreeWord(std::move(stack.front()));
}

FreeWord FreeWord::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].generator == letters_[i - 1].generator &&
        letters_[i].exponent == -letters_[i - 1].exponent)
      return false;
  return true;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::power(long k) const {
  const FreeWord base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(std::abs(k)));
  for (long i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return FreeWord(std::move(out));
}

std::vector<long> FreeWord::exponent_sums(std::size_t generators) const {
  std::vector<long> sums(generators, 0);
  for (const auto& l : letters_) {
    if (l.generator >= generators) throw InputError("letter a" + std::to_string(l.generator + 1) + " out of range");
    sums[l.generator] += l.exponent;
  }
  return sums;
}

std::size_t FreeWord::generator_bound() const {
  std::size_t b = 0;
  for (const auto& l : letters_) b = std::max(b, l.generator + 1);
  return b;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord reduced_product(const FreeWord& a, const FreeWord& b) {
  const auto& x = a.letters();
  const auto& y = b.letters();
  std::size_t cancel = 0;
  while (cancel < x.size() && cancel < y.size()) {
    const Letter& l = x[x.size() - 1 - cancel];
    const Letter& r = y[cancel];
    if (l.generator != r.generator || l.exponent != -r.exponent) break;
    ++cancel;
  }
  std::vector<Letter> out(x.begin(), x.end() - static_cast<long>(cancel));
  out.insert(out.end(), y.begin() + static_cast<long>(cancel), y.end());
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'a' << letters_[i].generator + 1;
    if (letters_[i].exponent < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace qacert
