#include "sttilt/grp/builtin.hpp"

#include <algorithm>

#include "sttilt/error.hpp"

namespace sttilt::grp {

namespace {

Perm cycle(int degree, std::vector<int> pts) {
  Perm p = perm_identity(degree);
  for (std::size_t k = 0; k < pts.size(); ++k) p[pts[k]] = static_cast<std::uint16_t>(pts[(k + 1) % pts.size()]);
  return p;
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i < b; ++i) v.push_back(i);
  return v;
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GroupPtr builtin(const std::string& name, int n, std::size_t cap) {
  std::vector<Perm> gens;
  std::string label;
  int degree = n;
  if (name == "cyclic") {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    gens.push_back(cycle(n, range(0, n)));
    label = "C" + std::to_string(n);
  } else if (name == "symmetric") {
    if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
    if (n >= 2) gens.push_back(cycle(n, {0, 1}));
    if (n >= 3) gens.push_back(cycle(n, range(0, n)));
    label = "S" + std::to_string(n);
  } else if (name == "alternating") {
    if (n < 1) throw std::invalid_argument("alternating group needs n >= 1");
    for (int k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
    label = "A" + std::to_string(n);
  } else if (name == "dihedral") {
    // symmetries of the n-gon, order 2n
    if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
    gens.push_back(cycle(n, range(0, n)));
    Perm s = perm_identity(n);
    for (int i = 0; i < n; ++i) s[i] = static_cast<std::uint16_t>((n - i) % n);
    gens.push_back(s);
    label = "D" + std::to_string(2 * n);
  } else if (name == "klein4") {
    degree = 4;
    gens.push_back(parse_cycles("(1 2)(3 4)", 4));
    gens.push_back(parse_cycles("(1 3)(2 4)", 4));
    label = "V4";
  } else {
    throw ParseError("unknown builtin group '" + name + "'", 0);
  }
  return Group::from_generators(degree, std::move(gens), label, cap);
}

GroupPtr parse_group(const std::string& spec, std::size_t cap) {
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) throw ParseError("group spec needs 'builtin:' or 'perm:'", 0);
  const std::string kind = spec.substr(0, c1);
  const auto c2 = spec.find(':', c1 + 1);
  if (kind == "builtin") {
    const std::string name = spec.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
    int n = 4;
    if (c2 != std::string::npos) {
      try {
        n = std::stoi(spec.substr(c2 + 1));
      } catch (const std::exception&) {
        throw ParseError("bad builtin size", c2 + 1);
      }
    } else if (name != "klein4") {
      throw ParseError("builtin group needs a size", spec.size());
    }
    return builtin(name, n, cap);
  }
  if (kind == "perm") {
    if (c2 == std::string::npos) throw ParseError("perm spec needs 'perm:<degree>:<generators>'", c1 + 1);
    int degree = 0;
    try {
      degree = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::exception&) {
      throw ParseError("bad degree", c1 + 1);
    }
    if (degree < 1) throw ParseError("degree must be positive", c1 + 1);
    std::vector<Perm> gens;
    std::size_t offset = c2 + 1;
    for (const auto& part : split_top_level(spec.substr(c2 + 1))) {
      try {
        gens.push_back(parse_cycles(part, degree));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad cycle notation '") + part + "'", offset + e.position());
      }
      offset += part.size() + 1;
    }
    return Group::from_generators(degree, std::move(gens), spec, cap);
  }
  throw ParseError("unknown group kind '" + kind + "'", 0);
}

}  // namespace sttilt::grp
