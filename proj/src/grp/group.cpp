#include "sttilt/grp/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sttilt/error.hpp"

namespace sttilt::grp {

namespace {

std::string key_of(const Perm& p) { return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(p[0])); }

constexpr std::size_t kTableLimit = 4096;

}  // namespace

std::string perm_to_cycles(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      first = false;
      os << j + 1;
      j = p[j];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint16_t>(x);
  return r;
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty permutation", 0);
  while (i < text.size()) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a point number", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw ParseError("point out of range", i);
      if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end()) throw ParseError("repeated point in cycle", i);
      cyc.push_back(v - 1);
    }
    // cycles compose right to left: apply this cycle after the ones to its right
    Perm c = perm_identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()]);
    p = perm_compose(p, c);
  }
  return p;
}

GroupPtr Group::from_generators(int degree, std::vector<Perm> gens, std::string name, std::size_t cap) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw MismatchError("generator has the wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw MismatchError("generator is not a permutation");
      hit[x] = 1;
    }
  }
  // modules carry one matrix per generator, so keep one even for the trivial group
  if (gens.empty()) gens.push_back(perm_identity(degree));
  auto grp = std::shared_ptr<Group>(new Group());
  grp->name_ = std::move(name);
  grp->degree_ = degree;
  grp->elements_.push_back(perm_identity(degree));
  grp->parent_.push_back(-1);
  grp->via_.push_back(-1);
  grp->lookup_.emplace(key_of(grp->elements_[0]), 0);
  for (std::size_t head = 0; head < grp->elements_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm next = perm_compose(gens[k], grp->elements_[head]);
      auto key = key_of(next);
      if (grp->lookup_.count(key)) continue;
      if (grp->elements_.size() >= cap)
        throw CapExceededError("group order exceeds the cap of " + std::to_string(cap));
      grp->lookup_.emplace(std::move(key), static_cast<int>(grp->elements_.size()));
      grp->elements_.push_back(std::move(next));
      grp->parent_.push_back(static_cast<int>(head));
      grp->via_.push_back(static_cast<int>(k));
    }
  }
  for (const auto& g : gens) grp->gens_.push_back(grp->lookup_.at(key_of(g)));

  const std::size_t n = grp->elements_.size();
  grp->inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) grp->inv_[i] = grp->lookup_.at(key_of(perm_inverse(grp->elements_[i])));
  if (n <= kTableLimit) {
    grp->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) grp->table_[a * n + b] = grp->mul_slow(static_cast<int>(a), static_cast<int>(b));
  }

  grp->class_of_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (grp->class_of_[x] >= 0) continue;
    const int id = static_cast<int>(grp->classes_.size());
    std::vector<int> cls{static_cast<int>(x)};
    grp->class_of_[x] = id;
    for (std::size_t h = 0; h < cls.size(); ++h)
      for (int g : grp->gens_) {
        const int y = grp->conj(g, cls[h]);
        if (grp->class_of_[y] < 0) {
          grp->class_of_[y] = id;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    grp->classes_.push_back(std::move(cls));
  }
  return grp;
}

int Group::mul_slow(int a, int b) const { return lookup_.at(key_of(perm_compose(elements_[a], elements_[b]))); }

int Group::index_of(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return -1;
  auto it = lookup_.find(key_of(p));
  return it == lookup_.end() ? -1 : it->second;
}

int Group::element_order(int i) const {
  int k = 1;
  int x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

long long Group::exponent() const {
  long long e = 1;
  for (std::size_t i = 0; i < order(); ++i) e = std::lcm(e, static_cast<long long>(element_order(static_cast<int>(i))));
  return e;
}

bool Group::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace sttilt::grp
