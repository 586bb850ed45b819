#include "sttilt/rep/module_io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "sttilt/error.hpp"
#include "sttilt/ffla/text_io.hpp"

namespace sttilt::rep {

std::string group_spec(const grp::Group& g) {
  std::string out = "perm:" + std::to_string(g.degree()) + ":";
  for (std::size_t k = 0; k < g.num_generators(); ++k) {
    if (k) out += ",";
    out += g.describe(g.generators()[k]);
  }
  return out;
}

void write_module(std::ostream& os, const GModule& m) {
  os << "module " << group_spec(*m.group()) << "\n" << m.field().header() << "\n";
  for (const auto& g : m.generators()) ffla::write_matrix_body(os, g);
}

GModule read_module(std::istream& is, const GroupPtr& g) {
  std::string line;
  while (std::getline(is, line) && (line.empty() || line[0] == '#')) {
  }
  if (line.rfind("module ", 0) != 0) throw ParseError("expected 'module <group>'", 0);
  if (line.substr(7) != group_spec(*g)) throw MismatchError("module file is for group " + line.substr(7));
  std::string header;
  while (std::getline(is, header) && (header.empty() || header[0] == '#')) {
  }
  const Field& f = ffla::parse_field_header(header);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < g->num_generators(); ++k) gens.push_back(ffla::read_matrix_body(is, f));
  return GModule(g, f, std::move(gens));
}

}  // namespace sttilt::rep
