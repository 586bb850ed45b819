#include "sttilt/taut/export.hpp"

#include <sstream>

#include <json.hpp>

namespace sttilt::taut {

namespace {

const std::vector<std::string>& markers_of(const Markers& mk, int v) {
  static const std::vector<std::string> none;
  auto it = mk.find(v);
  return it == mk.end() ? none : it->second;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Scope& s, const SttPoset& poset, const Markers& markers, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << escape(title) << "\" {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < poset.size(); ++v) {
    const auto& mk = markers_of(markers, static_cast<int>(v));
    os << "  n" << v << " [label=\"" << escape(s.describe(poset.nodes[v])) << "\"";
    if (!mk.empty()) {
      std::string cls;
      for (const auto& m : mk) cls += (cls.empty() ? "" : " ") + m;
      os << ", class=\"" << cls << "\"";
      std::string style;
      for (const auto& m : mk) {
        if (m == "invariant") style += (style.empty() ? "" : ",") + std::string("bold");
        if (m == "star") style += (style.empty() ? "" : ",") + std::string("rounded");
      }
      if (!style.empty()) os << ", style=\"" << style << "\"";
    }
    os << "];\n";
  }
  for (auto [a, b] : poset.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Scope& s, const SttPoset& poset, const Markers& markers) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t v = 0; v < poset.size(); ++v) {
    nlohmann::json node;
    node["id"] = v;
    node["summands"] = nlohmann::json::array();
    for (int x : poset.nodes[v].m) node["summands"].push_back(s.catalog().name(x));
    node["projPart"] = nlohmann::json::array();
    for (auto i : poset.nodes[v].p) node["projPart"].push_back("P" + s.algebra().label(i));
    node["markers"] = markers_of(markers, static_cast<int>(v));
    doc["nodes"].push_back(node);
  }
  doc["edges"] = nlohmann::json::array();
  for (auto [a, b] : poset.edges) doc["edges"].push_back({a, b});
  return doc.dump(2) + "\n";
}

std::string to_text(const Scope& s, const SttPoset& poset, const Markers& markers) {
  std::ostringstream os;
  os << poset.size() << " nodes, " << poset.edges.size() << " edges\n";
  for (std::size_t v = 0; v < poset.size(); ++v) {
    os << "  [" << v << "] " << s.describe(poset.nodes[v]);
    for (const auto& m : markers_of(markers, static_cast<int>(v))) os << " {" << m << "}";
    os << "\n";
  }
  for (auto [a, b] : poset.edges) os << "  " << a << " -> " << b << "\n";
  return os.str();
}

}  // namespace sttilt::taut
