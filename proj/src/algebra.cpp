#include "egz/algebra.hpp"

#include <istream>
#include <sstream>

namespace egz {

Element add(const Element& a, const Element& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("add: dimension mismatch");
  return Element(a.dim(), a.bits() ^ b.bits());
}

Element seq_sum(const ZSequence& s) {
  std::uint64_t acc = 0;
  for (std::uint64_t b : s.raw()) acc ^= b;
  return Element(s.dim(), acc);
}

bool is_zero_sum(const ZSequence& s) { return seq_sum(s).is_zero(); }

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string strip_cr(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t'))
    line.pop_back();
  return line;
}

}  // namespace

ZSequence parse_sequence(std::istream& in) {
  std::string line;
  int lineno = 0;
  int d = -1;

  // Header: first meaningful line must be d=<dim>.
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    line = strip_cr(line);
    if (line.rfind("d=", 0) != 0)
      throw ParseError(lineno, "expected header 'd=<dim>'");
    try {
      std::size_t pos = 0;
      d = std::stoi(line.substr(2), &pos);
      if (pos != line.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed dimension in header");
    }
    break;
  }
  if (d == -1) throw ParseError(lineno, "missing header 'd=<dim>'");
  if (d < 1 || d > Dimension::kMax)
    throw ParseError(lineno, "dimension out of supported range");

  ZSequence s{Dimension(d)};
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    line = strip_cr(line);
    if (static_cast<int>(line.size()) != d)
      throw ParseError(lineno, "expected a bitstring of length " +
                                   std::to_string(d));
    std::uint64_t bits = 0;
    for (int i = 0; i < d; ++i) {
      char c = line[static_cast<std::size_t>(i)];
      if (c == '1')
        bits |= std::uint64_t{1} << i;  // leftmost char = coordinate 1
      else if (c != '0')
        throw ParseError(lineno, "invalid character in bitstring");
    }
    s.push_back_bits(bits);
  }
  return s;
}

ZSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

std::string render_element(const Element& e) {
  const int d = e.dim().value();
  std::string out(static_cast<std::size_t>(d), '0');
  for (int i = 0; i < d; ++i)
    if ((e.bits() >> i) & 1) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::string render_sequence(const ZSequence& s) {
  std::string out = "d=" + std::to_string(s.dim().value()) + "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += render_element(s.at(i));
    out += '\n';
  }
  return out;
}

}  // namespace egz
