#include "sttilt/harness/inspect.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "sttilt/blk/block.hpp"
#include "sttilt/error.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/harness/scenario.hpp"
#include "sttilt/rep/build.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/taut/pair.hpp"
#include "sttilt/vtx/vertex.hpp"

namespace sttilt::harness {

using rep::GModule;

namespace {

struct Node {
  enum Kind { call, word, text } kind = word;
  std::string name;  // identifier, number or string contents
  std::size_t pos = 0;
  std::vector<Node> args;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Node parse() {
    Node n = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return n;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  Node expr() {
    skip();
    Node n;
    n.pos = i_;
    if (i_ >= s_.size()) throw ParseError("expression ends early", i_);
    if (s_[i_] == '"') {
      const auto end = s_.find('"', i_ + 1);
      if (end == std::string::npos) throw ParseError("unterminated string", i_);
      n.kind = Node::text;
      n.name = s_.substr(i_ + 1, end - i_ - 1);
      i_ = end + 1;
      return n;
    }
    if (!word_char(s_[i_])) throw ParseError("expected a name, number or string", i_);
    while (i_ < s_.size() && word_char(s_[i_])) n.name += s_[i_++];
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      n.kind = Node::call;
      ++i_;
      skip();
      if (i_ < s_.size() && s_[i_] == ')') {
        ++i_;
        return n;
      }
      for (;;) {
        n.args.push_back(expr());
        skip();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        if (i_ < s_.size() && s_[i_] == ')') {
          ++i_;
          break;
        }
        throw ParseError("expected ',' or ')'", i_);
      }
    }
    return n;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

struct GroupInfo {
  grp::GroupPtr group;
  std::shared_ptr<rep::GroupAlgebra> alg;
  std::shared_ptr<taut::Catalog> catalog;
  std::optional<std::vector<blk::Block>> blocks;
};

/// Which argument positions of a call name groups.
std::vector<std::size_t> group_args(const std::string& f) {
  if (f == "triv" || f == "regular") return {0};
  if (f == "ind" || f == "restrict" || f == "conj") return {0, 1};
  return {};
}

grp::GroupPtr builtin_shorthand(const std::string& name, std::size_t pos) {
  if (name == "V4") return grp::builtin("klein4", 4);
  if (name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const int n = std::stoi(name.substr(1));
    switch (name[0]) {
      case 'S': return grp::builtin("symmetric", n);
      case 'A': return grp::builtin("alternating", n);
      case 'C': return grp::builtin("cyclic", n);
      case 'D':
        if (n % 2 || n < 4) throw ParseError("dihedral order must be even and at least 4", pos);
        return grp::builtin("dihedral", n / 2);
      default: break;
    }
  }
  throw ParseError("unknown group '" + name + "'", pos);
}

class Evaluator {
 public:
  Evaluator(const Node& root, const InspectOptions& opt) : opt_(opt) {
    collect(root);
    if (groups_.empty()) {
      if (!opt.scenario) throw ParseError("the expression names no group", 0);
      names_.push_back("G");
      resolve_group("G", 0);
    }
    // the largest group hosts the default and carries the prime
    default_ = *std::max_element(names_.begin(), names_.end(), [&](const auto& a, const auto& b) {
      return groups_.at(a).group->order() < groups_.at(b).group->order();
    });
    if (opt.scenario) {
      field_ = &opt.scenario->field();
    } else {
      const int m = opt.field_degree ? opt.field_degree
                                     : ffla::splitting_degree(opt.p, groups_.at(default_).group->exponent());
      field_ = &ffla::Field::get(opt.p, m);
    }
    for (auto& [name, info] : groups_) {
      if (info.alg) continue;
      rep::AlgebraOptions ao;
      if (names_.size() > 1 && name == default_) ao.suffix = "'";
      info.alg = std::make_shared<rep::GroupAlgebra>(info.group, *field_, ao);
    }
  }

  const std::string& default_group() const { return default_; }

  /// Group of the module an expression denotes, if it says.
  std::optional<std::string> result_group(const Node& n) const {
    if (n.kind != Node::call || n.args.empty()) return std::nullopt;
    const std::string& f = n.name;
    if (f == "triv" || f == "regular" || f == "conj") return n.args[0].name;
    if (f == "ind" || f == "restrict") return n.args.size() > 1 ? std::optional(n.args[1].name) : std::nullopt;
    if (f == "sum" || f == "tensor" || f == "dual" || f == "omega" || f == "tau") {
      for (const auto& a : n.args)
        if (auto g = result_group(a)) return g;
      return std::nullopt;
    }
    if (f == "block" && n.args.size() > 1) return result_group(n.args[1]);
    return std::nullopt;
  }
  GroupInfo& info(const std::string& g) { return groups_.at(g); }
  const ffla::Field& field() const { return *field_; }

  GModule eval(const Node& n, const std::string& g) {
    const rep::GroupAlgebra& a = *groups_.at(g).alg;
    if (n.kind == Node::text) throw ParseError("a string is not a module", n.pos);
    if (n.kind == Node::word) {
      if (n.name.rfind("simple", 0) == 0 && n.name.size() > 6) return a.simple(label(a, n.name.substr(6), n.pos));
      throw ParseError("unknown module '" + n.name + "'", n.pos);
    }
    const std::string& f = n.name;
    auto want = [&](std::size_t k) {
      if (n.args.size() != k) throw ParseError(f + " takes " + std::to_string(k) + " arguments", n.pos);
    };
    if (f == "triv" || f == "regular") {
      want(1);
      const auto& h = n.args[0].name;
      check_same(h, g, n.pos);
      return f == "triv" ? a.trivial() : a.regular();
    }
    if (f == "simple" || f == "proj") {
      want(1);
      const std::size_t i = label(a, n.args[0].name, n.args[0].pos);
      return f == "simple" ? a.simple(i) : a.pim(i);
    }
    if (f == "stack") {
      if (n.args.empty()) throw ParseError("stack needs at least one layer", n.pos);
      std::vector<std::size_t> layers;
      for (const auto& x : n.args) layers.push_back(label(a, x.name, x.pos));
      return rep::stack(a, layers);
    }
    if (f == "sum") {
      if (n.args.empty()) throw ParseError("sum needs at least one argument", n.pos);
      std::vector<GModule> parts;
      for (const auto& x : n.args) parts.push_back(eval(x, g));
      return rep::direct_sum(parts);
    }
    if (f == "tensor") {
      want(2);
      return rep::tensor(eval(n.args[0], g), eval(n.args[1], g));
    }
    if (f == "dual" || f == "omega" || f == "tau") {
      want(1);
      const GModule x = eval(n.args[0], g);
      if (f == "dual") return rep::dual(x);
      return f == "omega" ? a.syzygy(x) : a.tau(x);
    }
    if (f == "ind") {
      want(3);
      const auto &h = n.args[0].name, &big = n.args[1].name;
      check_same(big, g, n.args[1].pos);
      return rep::induce(eval(n.args[2], h), embed(big, h, n.pos));
    }
    if (f == "restrict") {
      want(3);
      const auto &big = n.args[0].name, &h = n.args[1].name;
      check_same(h, g, n.args[1].pos);
      return rep::restrict(eval(n.args[2], big), embed(big, h, n.pos));
    }
    if (f == "conj") {
      want(4);
      const auto &h = n.args[0].name, &big = n.args[1].name;
      check_same(h, g, n.args[0].pos);
      const grp::Subgroup sub = embed(big, h, n.pos);
      if (!grp::is_normal(sub)) throw MismatchError(h + " is not normal in " + big);
      if (n.args[2].kind != Node::text) throw ParseError("conj needs a quoted element", n.args[2].pos);
      grp::Perm x;
      try {
        x = grp::parse_cycles(n.args[2].name, sub.parent->degree());
      } catch (const ParseError& e) {
        throw ParseError(e.what(), n.args[2].pos + 1 + e.position());
      }
      const int xi = sub.parent->index_of(x);
      if (xi < 0) throw ParseError(n.args[2].name + " is not in " + big, n.args[2].pos);
      return rep::conjugate(eval(n.args[3], h), sub, xi);
    }
    if (f == "block") {
      want(2);
      const auto& bs = blocks(g);
      for (const auto& b : bs)
        if (b.name == n.args[0].name) return blk::project(b, eval(n.args[1], g));
      throw ParseError("no block '" + n.args[0].name + "' over " + g, n.args[0].pos);
    }
    throw ParseError("unknown function '" + f + "'", n.pos);
  }

  const std::vector<blk::Block>& blocks(const std::string& g) {
    auto& i = groups_.at(g);
    if (!i.blocks) i.blocks = blk::blocks(*i.alg);
    return *i.blocks;
  }

  taut::Catalog& catalog(const std::string& g) {
    auto& i = groups_.at(g);
    if (!i.catalog) i.catalog = std::make_shared<taut::Catalog>(i.alg);
    return *i.catalog;
  }

 private:
  void collect(const Node& n) {
    if (n.kind != Node::call) return;
    for (auto k : group_args(n.name)) {
      if (k >= n.args.size()) continue;
      const Node& a = n.args[k];
      if (a.kind != Node::word) throw ParseError("expected a group name", a.pos);
      resolve_group(a.name, a.pos);
    }
    for (const auto& a : n.args) collect(a);
  }

  void resolve_group(const std::string& name, std::size_t pos) {
    if (groups_.count(name)) return;
    GroupInfo info;
    if ((name == "G" || name == "N") && opt_.scenario) {
      const Context& c = *opt_.scenario;
      info.group = name == "G" ? c.big_group() : c.normal().group;
      info.alg = name == "G" ? c.big_ptr() : c.small_ptr();
    } else {
      info.group = builtin_shorthand(name, pos);
    }
    groups_.emplace(name, std::move(info));
    names_.push_back(name);
  }

  void check_same(const std::string& named, const std::string& expected, std::size_t pos) const {
    if (named != expected && groups_.at(named).group != groups_.at(expected).group)
      throw MismatchError("module over " + named + " used where a module over " + expected + " is expected (offset " +
                          std::to_string(pos) + ")");
  }

  grp::Subgroup embed(const std::string& big, const std::string& h, std::size_t pos) {
    try {
      return grp::embed_group(groups_.at(big).group, groups_.at(h).group);
    } catch (const Error& e) {
      throw MismatchError(h + " does not embed in " + big + " (offset " + std::to_string(pos) + "): " + e.what());
    }
  }

  static std::size_t label(const rep::GroupAlgebra& a, const std::string& l, std::size_t pos) {
    int i = a.find_label(l);
    if (i < 0) i = a.find_label(l + a.options().suffix);
    if (i < 0 && !l.empty() && l.back() == '\'') i = a.find_label(l.substr(0, l.size() - 1));
    if (i < 0) throw ParseError("no simple module labelled '" + l + "'", pos);
    return static_cast<std::size_t>(i);
  }

  const InspectOptions& opt_;
  std::map<std::string, GroupInfo> groups_;
  std::vector<std::string> names_;
  std::string default_;
  const ffla::Field* field_ = nullptr;
};

std::string vertex_generators(const grp::Subgroup& v) {
  std::string s;
  for (int g : v.group->generators()) {
    const std::string c = v.parent->describe(v.embed[g]);
    if (c != "()") s += (s.empty() ? "" : ", ") + c;
  }
  return s.empty() ? "" : "<" + s + ">";
}

}  // namespace

std::string InspectReport::decomposition() const {
  if (summands.empty()) return "0";
  std::string s;
  for (const auto& x : summands)
    for (std::size_t k = 0; k < x.multiplicity; ++k) s += (s.empty() ? "" : " + ") + x.stack;
  return s;
}

std::string InspectReport::to_text() const {
  std::ostringstream os;
  os << "expression: " << expression << "\n"
     << "group: " << group << " over " << field << "\n"
     << "dim: " << dim << "\n"
     << "radical layers: " << (stack.empty() ? "0" : stack) << "\n"
     << "decomposition: " << decomposition() << "\n"
     << "projective: " << (projective ? "yes" : "no") << "\n"
     << "tau-rigid: " << (tau_rigid ? "yes" : "no") << "\n";
  for (const auto& x : summands) {
    os << "summand " << x.stack;
    if (x.multiplicity > 1) os << " (x" << x.multiplicity << ")";
    os << ": dim " << x.dim << ", block " << x.block << ", vertex of order " << x.vertex_order << (x.vertex.empty() ? "" : " ") << x.vertex
       << (x.projective ? ", projective" : "") << "\n";
  }
  return os.str();
}

InspectReport inspect(const std::string& expression, const InspectOptions& opt) {
  const Node root = Parser(expression).parse();
  Evaluator ev(root, opt);
  const std::string g = ev.result_group(root).value_or(ev.default_group());
  const GModule m = ev.eval(root, g);
  const auto& a = *ev.info(g).alg;

  InspectReport r;
  r.expression = expression;
  r.group = ev.info(g).group->name();
  r.field = ev.field().header();
  r.module = m;
  r.dim = m.dim();
  if (m.dim() == 0) {
    r.projective = r.tau_rigid = true;
    return r;
  }
  r.stack = a.stack_name(m);
  r.projective = a.is_projective(m);
  taut::Catalog& cat = ev.catalog(g);
  r.tau_rigid = taut::Scope(ev.info(g).catalog).is_tau_rigid(m);
  const auto& bs = ev.blocks(g);
  std::map<int, std::size_t> seen;  // catalog id -> summand index
  for (int id : cat.classify(m)) {
    if (seen.count(id)) {
      ++r.summands[seen[id]].multiplicity;
      continue;
    }
    const GModule& s = cat.module(id);
    InspectSummand x;
    x.stack = a.stack_name(s);
    x.dim = s.dim();
    x.projective = a.is_projective(s);
    x.block = bs[blk::block_of(bs, s)].name;
    const auto v = vtx::vertex(s);
    x.vertex_order = v.vertex.order();
    x.vertex = vertex_generators(v.vertex);
    seen[id] = r.summands.size();
    r.summands.push_back(std::move(x));
  }
  return r;
}

}  // namespace sttilt::harness
