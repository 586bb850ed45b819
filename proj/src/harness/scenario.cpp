#include "sttilt/harness/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sttilt/error.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/rep/functors.hpp"

namespace sttilt::harness {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v, std::size_t offset) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size() || x < 0) throw std::invalid_argument(v);
    return static_cast<T>(x);
  } catch (const std::exception&) {
    throw ParseError("bad value for '" + key + "'", offset);
  }
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"modules", "tilting", "blocks", "vertices", "audits"};
  return s;
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    const std::string body = trim(line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", here);
    const std::string key = trim(body.substr(0, eq));
    const std::string v = trim(body.substr(eq + 1));
    const std::size_t at = here + line.find('=') + 1;
    if (key == "name") {
      s.name = v;
    } else if (key == "p") {
      s.p = parse_number<int>(key, v, at);
    } else if (key == "field_degree") {
      s.field_degree = parse_number<int>(key, v, at);
    } else if (key == "group") {
      s.group = v;
    } else if (key == "normal") {
      s.normal = v;
    } else if (key == "block") {
      s.block = v;
    } else if (key == "suites") {
      s.suites.clear();
      std::istringstream ws(v);
      for (std::string w; ws >> w;) {
        if (std::find(all_suites().begin(), all_suites().end(), w) == all_suites().end())
          throw ParseError("unknown suite '" + w + "'", at);
        s.suites.push_back(w);
      }
    } else if (key == "seed") {
      s.seed = parse_number<std::uint64_t>(key, v, at);
    } else if (key == "cap") {
      s.cap = parse_number<std::size_t>(key, v, at);
    } else if (key == "instances") {
      s.instances = parse_number<int>(key, v, at);
    } else {
      throw ParseError("unknown key '" + key + "'", here);
    }
  }
  if (s.group.empty()) throw ParseError("scenario needs a group", offset);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read scenario file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

std::string to_text(const Scenario& s) {
  std::ostringstream o;
  o << "name = " << s.name << "\n"
    << "p = " << s.p << "\n"
    << "field_degree = " << s.field_degree << "\n"
    << "group = " << s.group << "\n"
    << "normal = " << s.normal << "\n"
    << "block = " << s.block << "\n"
    << "suites =";
  for (const auto& x : s.suites) o << " " << x;
  o << "\n"
    << "seed = " << s.seed << "\n"
    << "cap = " << s.cap << "\n"
    << "instances = " << s.instances << "\n";
  return o.str();
}

Context::Context(Scenario s) : sc_(std::move(s)) {
  if (!ffla::is_prime(sc_.p)) throw MismatchError("p must be prime");
  big_group_ = grp::parse_group(sc_.group);
  if (sc_.field_degree == 0) sc_.field_degree = ffla::splitting_degree(sc_.p, big_group_->exponent());
  field_ = &ffla::Field::get(sc_.p, sc_.field_degree);
  normal_ = sc_.normal.empty() ? grp::whole(big_group_) : grp::embed_group(big_group_, grp::parse_group(sc_.normal));
  if (!grp::is_normal(normal_)) throw MismatchError("'" + sc_.normal + "' is not normal in '" + sc_.group + "'");
  reps_ = grp::coset_reps(normal_);
  rep::AlgebraOptions big_opt;
  big_opt.seed = sc_.seed;
  rep::AlgebraOptions small_opt = big_opt;
  // primes mark the overgroup's simples when there are two groups
  if (normal_.order() < big_group_->order()) big_opt.suffix = "'";
  big_alg_ = std::make_shared<rep::GroupAlgebra>(big_group_, *field_, big_opt);
  small_alg_ = normal_.order() < big_group_->order()
                   ? std::make_shared<rep::GroupAlgebra>(normal_.group, *field_, small_opt)
                   : big_alg_;
  big_scope_ = std::make_unique<taut::Scope>(std::make_shared<taut::Catalog>(big_alg_));
  small_scope_ = small_alg_ == big_alg_ ? std::make_unique<taut::Scope>(*big_scope_)
                                        : std::make_unique<taut::Scope>(std::make_shared<taut::Catalog>(small_alg_));
}

const taut::SttPoset& Context::big_poset() {
  if (!big_poset_) big_poset_ = taut::enumerate(*big_scope_, {sc_.cap, true});
  return *big_poset_;
}

const taut::SttPoset& Context::small_poset() {
  if (small_alg_ == big_alg_) return big_poset();
  if (!small_poset_) small_poset_ = taut::enumerate(*small_scope_, {sc_.cap, true});
  return *small_poset_;
}

const std::vector<blk::Block>& Context::big_blocks() {
  if (!big_blocks_) big_blocks_ = blk::blocks(*big_alg_);
  return *big_blocks_;
}

const std::vector<blk::Block>& Context::small_blocks() {
  if (!small_blocks_) small_blocks_ = blk::blocks(*small_alg_);
  return *small_blocks_;
}

std::vector<std::size_t> Context::selected_small_blocks() {
  const auto& bs = small_blocks();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (sc_.block.empty() || bs[i].name == sc_.block) out.push_back(i);
  if (out.empty()) throw MismatchError("no block named '" + sc_.block + "'");
  return out;
}

const taut::Scope& Context::block_scope(bool big, std::size_t b) {
  auto& scopes = block_scopes_[big ? 1 : 0];
  const auto& bs = big ? big_blocks() : small_blocks();
  if (scopes.empty()) {
    scopes.resize(bs.size());
    block_posets_[big ? 1 : 0].resize(bs.size());
  }
  if (!scopes[b]) {
    const taut::Scope& whole = big ? *big_scope_ : *small_scope_;
    scopes[b] = std::make_unique<taut::Scope>(whole.catalog_ptr(), bs.at(b).simples);
  }
  return *scopes[b];
}

const taut::SttPoset& Context::block_poset(bool big, std::size_t b) {
  const taut::Scope& s = block_scope(big, b);
  auto& slot = block_posets_[big ? 1 : 0][b];
  if (!slot) slot = taut::enumerate(s, {sc_.cap, true});
  return *slot;
}

const std::vector<rep::GModule>& Context::quotient_simples() {
  if (!quotient_simples_) {
    quotient_simples_.emplace();
    const auto q = grp::quotient(normal_);
    rep::GroupAlgebra qa(q.group, *field_);
    for (std::size_t i = 0; i < qa.num_simples(); ++i) quotient_simples_->push_back(rep::inflate(qa.simple(i), q));
  }
  return *quotient_simples_;
}

const taut::InductionReport& Context::induction() {
  if (!induction_) {
    taut::Induction in;
    in.small = small_scope_.get();
    in.small_poset = &small_poset();
    in.big = big_scope_.get();
    in.big_poset = &big_poset();
    in.normal = normal_;
    in.invariance = reps_;
    in.quotient_simples = quotient_simples();
    induction_ = taut::analyse_induction(in);
  }
  return *induction_;
}

bool Context::p_power_index() const {
  std::size_t i = index();
  while (i % sc_.p == 0) i /= sc_.p;
  return i == 1;
}

}  // namespace sttilt::harness
