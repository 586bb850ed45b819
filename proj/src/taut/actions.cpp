#include "sttilt/taut/actions.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/rep/functors.hpp"

namespace sttilt::taut {

std::optional<SttPair> map_pair(const Scope& from, const SttPair& t, const Scope& to, const ModuleMap& f) {
  Catalog& src = from.catalog();
  Catalog& dst = to.catalog();
  SttPair out;
  for (int x : t.m) {
    const GModule y = f(src.module(x));
    if (y.dim() == 0) continue;
    for (int id : dst.basic(y)) out.m.push_back(id);
  }
  for (auto i : t.p) {
    const GModule y = f(from.algebra().pim(i));
    if (y.dim() == 0) continue;
    for (int id : dst.basic(y)) {
      const auto top = dst.projective_top(id);
      if (!top) return std::nullopt;
      out.p.push_back(*top);
    }
  }
  std::sort(out.m.begin(), out.m.end());
  out.m.erase(std::unique(out.m.begin(), out.m.end()), out.m.end());
  std::sort(out.p.begin(), out.p.end());
  out.p.erase(std::unique(out.p.begin(), out.p.end()), out.p.end());
  return out;
}

NodeMap map_nodes(const Scope& from, const SttPoset& src, const std::vector<int>& nodes, const Scope& to,
                  const SttPoset& dst, const ModuleMap& f) {
  NodeMap out;
  for (int v : nodes) {
    const auto t = map_pair(from, src.nodes[v], to, f);
    out.push_back(t ? dst.find(*t) : -1);
  }
  return out;
}

namespace {

std::vector<int> all_nodes(const SttPoset& p) {
  std::vector<int> v(p.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

NodeMap conjugation_twist(const Scope& s, const SttPoset& poset, const grp::Subgroup& normal, int g) {
  return map_nodes(s, poset, all_nodes(poset), s, poset,
                   [&](const GModule& m) { return rep::conjugate(m, normal, g); });
}

NodeMap tensor_twist(const Scope& s, const SttPoset& poset, const GModule& l, const ModuleMap& project) {
  return map_nodes(s, poset, all_nodes(poset), s, poset, [&](const GModule& m) {
    GModule t = rep::tensor(l, m);
    return project ? project(t) : t;
  });
}

bool is_automorphism(const SttPoset& poset, const NodeMap& map) {
  const std::size_t n = poset.size();
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (v < 0 || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (poset.reach[a][b] != poset.reach[map[a]][map[b]]) return false;
  return true;
}

std::vector<int> invariant_nodes(const Scope& s, const SttPoset& poset, const grp::Subgroup& normal,
                                 const std::vector<int>& elements) {
  std::vector<char> fixed(poset.size(), 1);
  for (int g : elements) {
    const NodeMap m = conjugation_twist(s, poset, normal, g);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != static_cast<int>(i)) fixed[i] = 0;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i]) out.push_back(static_cast<int>(i));
  return out;
}

InductionReport analyse_induction(const Induction& in) {
  InductionReport r;
  const Scope& small = *in.small;
  const Scope& big = *in.big;
  const SttPoset& sp = *in.small_poset;
  const SttPoset& bp = *in.big_poset;
  const ModuleMap project = in.project_big ? in.project_big : [](const GModule& m) { return m; };
  const ModuleMap ind = [&](const GModule& m) { return project(rep::induce(m, in.normal)); };
  const ModuleMap ind_res = [&](const GModule& m) { return project(rep::induce(rep::restrict(m, in.normal), in.normal)); };

  r.invariant = invariant_nodes(small, sp, in.normal, in.invariance);
  r.induced = map_nodes(small, sp, r.invariant, big, bp, ind);
  for (std::size_t i = 0; i < r.induced.size(); ++i)
    if (r.induced[i] < 0) r.problems.push_back("induced module of " + small.describe(sp.nodes[r.invariant[i]]) +
                                               " is not a support tau-tilting pair");

  std::vector<int> image(r.induced);
  std::sort(image.begin(), image.end());
  r.injective = std::adjacent_find(image.begin(), image.end()) == image.end() &&
                std::find(image.begin(), image.end(), -1) == image.end();
  r.order_embedding = r.injective;
  for (std::size_t a = 0; a < r.induced.size() && r.order_embedding; ++a)
    for (std::size_t b = 0; b < r.induced.size(); ++b)
      if (sp.below(r.invariant[b], r.invariant[a]) != bp.below(r.induced[b], r.induced[a])) {
        r.order_embedding = false;
        break;
      }

  Catalog& bc = big.catalog();
  const std::size_t n = bp.size();
  r.cond_induced.assign(n, 0);
  r.cond_relative.assign(n, 0);
  r.cond_tensor.assign(n, 0);
  for (int v : r.induced)
    if (v >= 0) r.cond_induced[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& m = bp.nodes[v].m;
    auto inside = [&](const std::vector<int>& ids) {
      return std::all_of(ids.begin(), ids.end(), [&](int id) { return std::binary_search(m.begin(), m.end(), id); });
    };
    bool rel = true, tens = true;
    for (int x : m) {
      const GModule& mx = bc.module(x);
      const auto ir = bc.basic(ind_res(mx));
      rel = rel && inside(ir) && std::binary_search(ir.begin(), ir.end(), x);
      for (const auto& s : in.quotient_simples) {
        const GModule t = project(rep::tensor(s, mx));
        if (t.dim() > 0) tens = tens && inside(bc.basic(t));
      }
    }
    r.cond_relative[v] = rel;
    r.cond_tensor[v] = tens;
    if (r.cond_induced[v] != r.cond_relative[v] || r.cond_relative[v] != r.cond_tensor[v])
      r.problems.push_back("conditions disagree on " + big.describe(bp.nodes[v]) + ": induced " +
                           std::to_string(r.cond_induced[v]) + ", relative " + std::to_string(r.cond_relative[v]) +
                           ", tensor " + std::to_string(r.cond_tensor[v]));
    if (r.cond_induced[v]) r.star.push_back(static_cast<int>(v));
  }
  std::vector<int> img_nodes;
  for (int v : image)
    if (v >= 0) img_nodes.push_back(v);
  r.image_is_star = img_nodes == r.star;
  return r;
}

}  // namespace sttilt::taut
