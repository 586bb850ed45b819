#include "sttilt/ffla/text_io.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>

#include "sttilt/error.hpp"

namespace sttilt::ffla {

namespace {

std::string next_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') return line;
  }
  throw ParseError("unexpected end of input", 0);
}

}  // namespace

const Field& parse_field_header(const std::string& line) {
  static const std::regex re(R"(\s*GF\((\d+)\^(\d+)\)\s+mod\s+([0-9,\s]+))");
  std::smatch m;
  if (!std::regex_match(line, m, re)) throw ParseError("bad field header: " + line, 0);
  const int p = std::stoi(m[1]);
  const int deg = std::stoi(m[2]);
  std::vector<int> mod;
  std::stringstream ss(m[3].str());
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (tok.find_first_not_of(" \t") != std::string::npos) mod.push_back(std::stoi(tok));
  if (static_cast<int>(mod.size()) != deg + 1) throw ParseError("modulus degree does not match header", 0);
  return Field::get(p, mod);
}

void write_matrix_body(std::ostream& os, const Matrix& a) {
  os << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a(i, j);
    }
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const Matrix& a) {
  os << a.field().header() << '\n';
  write_matrix_body(os, a);
}

Matrix read_matrix_body(std::istream& is, const Field& f) {
  std::istringstream dims(next_line(is));
  std::size_t r = 0, c = 0;
  if (!(dims >> r >> c)) throw ParseError("expected 'rows cols'", 0);
  std::vector<Elt> data;
  data.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    std::istringstream row(next_line(is));
    long long v;
    std::size_t n = 0;
    while (row >> v) {
      if (v < 0 || v >= f.size()) throw ParseError("element code out of range", i);
      data.push_back(static_cast<Elt>(v));
      ++n;
    }
    if (n != c) throw ParseError("row has wrong length", i);
  }
  return Matrix(f, r, c, std::move(data));
}

Matrix read_matrix(std::istream& is) {
  const Field& f = parse_field_header(next_line(is));
  return read_matrix_body(is, f);
}

void write_poly(std::ostream& os, const Poly& f) {
  os << f.field().header() << '\n' << f.degree() << '\n';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << f.coeffs()[i];
  }
  os << '\n';
}

Poly read_poly(std::istream& is) {
  const Field& f = parse_field_header(next_line(is));
  const int deg = std::stoi(next_line(is));
  std::vector<Elt> c;
  if (deg >= 0) {
    std::istringstream row(next_line(is));
    long long v;
    while (row >> v) c.push_back(static_cast<Elt>(v));
    if (static_cast<int>(c.size()) != deg + 1) throw ParseError("polynomial length does not match degree", 0);
  }
  return Poly(f, std::move(c));
}

}  // namespace sttilt::ffla
