#include "sttilt/grp/subgroup.hpp"

#include <algorithm>
#include <set>

#include "sttilt/error.hpp"

namespace sttilt::grp {

namespace {

Subgroup from_group(const GroupPtr& parent, const GroupPtr& sub) {
  Subgroup s;
  s.parent = parent;
  s.group = sub;
  s.member.assign(parent->order(), -1);
  s.embed.resize(sub->order());
  for (std::size_t i = 0; i < sub->order(); ++i) {
    Perm p = sub->element(static_cast<int>(i));
    p.resize(parent->degree());
    for (int x = sub->degree(); x < parent->degree(); ++x) p[x] = static_cast<std::uint16_t>(x);
    const int j = parent->index_of(p);
    if (j < 0) throw MismatchError("element " + perm_to_cycles(p) + " is not in the parent group");
    s.embed[i] = j;
    s.member[j] = static_cast<int>(i);
  }
  return s;
}

// Closure of a set of parent elements under multiplication.
std::vector<int> closure(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elts{0};
  in[0] = 1;
  for (std::size_t h = 0; h < elts.size(); ++h)
    for (int x : gens) {
      const int y = g.mul(x, elts[h]);
      if (!in[y]) {
        in[y] = 1;
        elts.push_back(y);
      }
    }
  std::sort(elts.begin(), elts.end());
  return elts;
}

std::vector<int> conjugate_set(const Group& g, const std::vector<int>& s, int x) {
  std::vector<int> r;
  r.reserve(s.size());
  for (int y : s) r.push_back(g.conj(x, y));
  std::sort(r.begin(), r.end());
  return r;
}

std::string subgroup_name(const GroupPtr& parent, std::size_t order) {
  return (parent->name().empty() ? std::string("G") : parent->name()) + "_sub" + std::to_string(order);
}

}  // namespace

Subgroup make_subgroup(const GroupPtr& parent, const std::vector<int>& gens, std::string name) {
  // drop generators already in the span of the earlier ones
  std::vector<int> kept;
  std::vector<int> span{0};
  for (int x : gens) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    kept.push_back(x);
    span = closure(*parent, kept);
  }
  std::vector<Perm> perms;
  for (int x : kept) perms.push_back(parent->element(x));
  if (name.empty()) name = subgroup_name(parent, span.size());
  auto sub = Group::from_generators(parent->degree(), std::move(perms), std::move(name), parent->order());
  return from_group(parent, sub);
}

Subgroup embed_group(const GroupPtr& parent, const GroupPtr& sub) {
  if (sub->degree() > parent->degree()) throw MismatchError("subgroup acts on more points than its parent");
  if (sub->degree() == parent->degree()) return from_group(parent, sub);
  std::vector<Perm> gens;
  for (int x : sub->generators()) {
    Perm p = sub->element(x);
    for (int k = sub->degree(); k < parent->degree(); ++k) p.push_back(static_cast<std::uint16_t>(k));
    gens.push_back(std::move(p));
  }
  auto padded = Group::from_generators(parent->degree(), std::move(gens), sub->name(), parent->order());
  return from_group(parent, padded);
}

Subgroup whole(const GroupPtr& g) { return from_group(g, g); }

Subgroup trivial_subgroup(const GroupPtr& g) { return make_subgroup(g, {}, subgroup_name(g, 1)); }

bool is_normal(const Subgroup& h) {
  for (int g : h.parent->generators())
    for (int x : h.group->generators())
      if (!h.contains(h.parent->conj(g, h.embed[x]))) return false;
  return true;
}

std::vector<int> elements_of(const Subgroup& h) {
  std::vector<int> e = h.embed;
  std::sort(e.begin(), e.end());
  return e;
}

Cosets left_cosets(const Subgroup& h) {
  const Group& g = *h.parent;
  Cosets c;
  c.coset_of.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] >= 0) continue;
    const int id = static_cast<int>(c.reps.size());
    c.reps.push_back(static_cast<int>(x));
    for (int y : h.embed) c.coset_of[g.mul(static_cast<int>(x), y)] = id;
  }
  return c;
}

std::vector<int> coset_reps(const Subgroup& h) { return left_cosets(h).reps; }

Quotient quotient(const Subgroup& n) {
  if (!is_normal(n)) throw MismatchError("quotient by a subgroup that is not normal");
  const Group& g = *n.parent;
  const Cosets c = left_cosets(n);
  const int k = static_cast<int>(c.reps.size());
  auto action = [&](int x) {
    Perm p(k);
    for (int i = 0; i < k; ++i) p[i] = static_cast<std::uint16_t>(c.coset_of[g.mul(x, c.reps[i])]);
    return p;
  };
  std::vector<Perm> gens;
  for (int x : g.generators()) gens.push_back(action(x));
  Quotient q;
  q.kernel = n;
  q.group = Group::from_generators(k, std::move(gens),
                                   (g.name().empty() ? "G" : g.name()) + "/" + n.group->name(), g.order());
  q.projection.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) q.projection[x] = q.group->index_of(action(static_cast<int>(x)));
  return q;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const auto& classes = g->conjugacy_classes();
  const std::size_t nc = classes.size();
  if (nc > 24) throw CapExceededError("too many conjugacy classes for normal subgroup search");
  std::set<std::vector<int>> found;
  std::vector<Subgroup> out;
  // class 0 is the identity class; every normal subgroup contains it
  const std::size_t combos = std::size_t{1} << (nc - 1);
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> elts = classes[0];
    for (std::size_t c = 1; c < nc; ++c)
      if (mask >> (c - 1) & 1) elts.insert(elts.end(), classes[c].begin(), classes[c].end());
    if (g->order() % elts.size() != 0) continue;
    std::sort(elts.begin(), elts.end());
    std::vector<char> in(g->order(), 0);
    for (int x : elts) in[x] = 1;
    bool closed = true;
    for (int a : elts) {
      for (int b : elts)
        if (!in[g->mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed || !found.insert(elts).second) continue;
    out.push_back(make_subgroup(g, elts));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return elements_of(a) < elements_of(b);
  });
  return out;
}

Subgroup sylow(const GroupPtr& g, int p) {
  std::size_t target = 1;
  {
    std::size_t n = g->order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  std::vector<int> gens;
  std::vector<int> elts{0};
  while (elts.size() < target) {
    std::vector<char> in(g->order(), 0);
    for (int x : elts) in[x] = 1;
    bool grown = false;
    // an element of the normalizer outside P whose p-th power lies in P
    for (std::size_t x = 0; x < g->order() && !grown; ++x) {
      if (in[x]) continue;
      bool normalizes = true;
      for (int y : gens)
        if (!in[g->conj(static_cast<int>(x), y)]) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      int pw = 0;
      for (int k = 0; k < p; ++k) pw = g->mul(pw, static_cast<int>(x));
      if (!in[pw]) continue;
      gens.push_back(static_cast<int>(x));
      elts = closure(*g, gens);
      grown = true;
    }
    if (!grown) throw ConsistencyError("Sylow search stalled");
  }
  return make_subgroup(g, gens, (g->name().empty() ? "G" : g->name()) + "_Syl" + std::to_string(p));
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const Subgroup& h) {
  const Group& g = *h.parent;
  // every subgroup is a join of cyclic ones; close the cyclic subgroups
  // under pairwise joins
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int x : h.embed) {
    auto c = closure(g, {x});
    if (all.insert(c).second) queue.push_back(c);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t limit = queue.size();
    for (std::size_t j = 0; j < limit; ++j) {
      std::vector<int> gens = queue[i];
      gens.insert(gens.end(), queue[j].begin(), queue[j].end());
      auto c = closure(g, gens);
      if (all.insert(c).second) queue.push_back(c);
    }
  }
  // one representative per parent-conjugacy class: the least conjugate
  std::set<std::vector<int>> canon;
  std::vector<std::vector<int>> reps;
  for (const auto& s : all) {
    std::vector<int> best = s;
    for (std::size_t x = 0; x < g.order(); ++x) best = std::min(best, conjugate_set(g, s, static_cast<int>(x)));
    if (canon.insert(best).second) reps.push_back(s);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  for (const auto& s : reps) out.push_back(make_subgroup(h.parent, s));
  return out;
}

bool conjugate_in_parent(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  const auto eb = elements_of(b);
  const auto ea = elements_of(a);
  for (std::size_t x = 0; x < a.parent->order(); ++x)
    if (conjugate_set(*a.parent, ea, static_cast<int>(x)) == eb) return true;
  return false;
}

Subgroup conjugate_subgroup(const Subgroup& h, int x) {
  std::vector<int> gens;
  for (int y : h.group->generators()) gens.push_back(h.parent->conj(x, h.embed[y]));
  return make_subgroup(h.parent, gens, h.group->name() + "^x");
}

}  // namespace sttilt::grp
