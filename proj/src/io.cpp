#include "powerful/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace powerful {

namespace {

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_multiplicity(const std::string& tok, int line) {
  if (tok.size() < 2 || tok[0] != 'x')
    throw ParseError(line, "expected multiplicity 'x<m>', got '" + tok + "'");
  std::uint64_t m = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError(line, "bad multiplicity '" + tok + "'");
    m = checked_add(m * 10, static_cast<std::uint64_t>(tok[i] - '0'));
  }
  if (m == 0) throw ParseError(line, "multiplicity must be positive");
  return m;
}

}  // namespace

Indicator read_system(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = -1;

  // Header: first meaningful line must be n=<k>.
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("n=", 0) != 0)
      throw ParseError(line, "expected header 'n=<k>', got '" + s + "'");
    try {
      std::size_t pos = 0;
      n = std::stoi(s.substr(2), &pos);
      if (pos != s.size() - 2) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ParseError(line, "bad ground set size in '" + s + "'");
    }
    if (n < 0 || n > kMaxGround)
      throw ParseError(line, "ground set size " + std::to_string(n) +
                                 " outside [0, " + std::to_string(kMaxGround) + "]");
    break;
  }
  if (n < 0) throw ParseError(line, "missing header 'n=<k>'");

  Indicator f(n);
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;

    std::uint64_t mult = 1;
    std::string bits = s;
    if (const auto sp = s.find_first_of(" \t"); sp != std::string::npos) {
      bits = s.substr(0, sp);
      const std::string rest = strip(s.substr(sp));
      mult = parse_multiplicity(rest, line);
    }

    Mask x = 0;
    if (n == 0) {
      // No bit characters exist; the line is just the multiplicity.
      mult = parse_multiplicity(bits, line);
    } else {
      if (static_cast<int>(bits.size()) != n)
        throw ParseError(line, "member line has " + std::to_string(bits.size()) +
                                   " characters, expected " + std::to_string(n));
      for (int j = 0; j < n; ++j) {
        if (bits[j] == '1')
          x |= Mask{1} << j;
        else if (bits[j] != '0')
          throw ParseError(line, std::string("bad character '") + bits[j] +
                                     "' in member line");
      }
    }
    f.add(x, mult);
  }
  return f;
}

Indicator read_system_string(const std::string& text) {
  std::istringstream in(text);
  return read_system(in);
}

void write_system(std::ostream& out, const Indicator& f,
                  const std::vector<int>* labels) {
  const int n = f.order();
  out << "n=" << n << '\n';
  if (labels != nullptr) {
    out << "# ground:";
    for (int l : *labels) out << ' ' << l;
    out << '\n';
  }
  for (Mask x = 0; x < f.table_size(); ++x) {
    const std::uint64_t m = f[x];
    if (m == 0) continue;
    if (n == 0) {
      out << 'x' << m << '\n';
      continue;
    }
    for (int j = 0; j < n; ++j) out << ((x >> j & 1u) ? '1' : '0');
    if (m > 1) out << " x" << m;
    out << '\n';
  }
}

std::string write_system_string(const Indicator& f,
                                const std::vector<int>* labels) {
  std::ostringstream out;
  write_system(out, f, labels);
  return out.str();
}

}  // namespace powerful
