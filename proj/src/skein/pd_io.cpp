#include "qacert/skein/pd_io.hpp"

#include <cctype>
#include <sstream>

#include "qacert/error.hpp"

namespace qacert {

namespace {

std::vector<long> parse_numbers(std::string_view body, std::string_view context) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      long v = std::stol(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("PD code: bad number '" + cur + "' in " + std::string(context));
    }
    cur.clear();
  };
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::string clean;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      clean += line + '\n';
    }
  }
  std::vector<Crossing> xs;
  std::vector<std::vector<long>> comps;
  std::size_t i = 0;
  while (i < clean.size()) {
    char c = clean[i];
    if ((c == 'X' || c == 'O') && i + 1 < clean.size() && clean[i + 1] == '[') {
      auto close = clean.find(']', i);
      if (close == std::string::npos) throw InputError("PD code: unterminated " + std::string(1, c) + "[");
      std::string body = clean.substr(i + 2, close - i - 2);
      if (c == 'X') {
        auto v = parse_numbers(body, "X[" + body + "]");
        if (v.size() != 4) throw InputError("PD code: X[...] needs four labels, got X[" + body + "]");
        xs.push_back({v[0], v[1], v[2], v[3]});
      } else {
        auto colon = body.find(':');
        if (colon == std::string::npos) throw InputError("PD code: O[...] needs 'component: arcs'");
        comps.push_back(parse_numbers(body.substr(colon + 1), "O[" + body + "]"));
      }
      i = close + 1;
    } else if (clean.compare(i, 3, "PD[") == 0) {
      i += 3;
    } else if (c == ']' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InputError(std::string("PD code: unexpected character '") + c + "'");
    }
  }
  return LinkDiagram(std::move(xs), std::move(comps));
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (std::size_t x = 0; x < d.size(); ++x) {
    const auto& c = d.crossings()[x];
    os << (x ? ", " : "") << "X[" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ']';
  }
  os << '\n';
  for (std::size_t k = 0; k < d.components().size(); ++k) {
    os << "O[" << k + 1 << ':';
    for (std::size_t i = 0; i < d.components()[k].size(); ++i)
      os << (i ? ", " : " ") << d.components()[k][i];
    os << "]\n";
  }
  return os.str();
}

}  // namespace qacert
