#include "sttilt/harness/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "sttilt/blk/covering.hpp"
#include "sttilt/error.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/rep/build.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/submodule.hpp"
#include "sttilt/taut/mutation.hpp"
#include "sttilt/vtx/vertex.hpp"

namespace sttilt::harness {

using rep::GModule;
using taut::SttPair;

void Outcome::fail(const std::string& w) {
  status = Status::fail;
  if (witnesses.size() < 8) witnesses.push_back(w);
}

GModule random_module(const rep::GroupAlgebra& a, rep::Rng& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> pick_simple(0, a.num_simples() - 1);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::size_t i = pick_simple(rng);
    const GModule& p = a.pim(i);
    const rep::Sub rad = rep::submodule(p, a.radical(p));
    GModule m;
    switch (rng() % 4) {
      case 0: m = rep::random_cyclic_quotient(p, rng); break;
      case 1: m = rep::random_cyclic_submodule(rad.module, rng); break;
      case 2: m = rep::random_cyclic_quotient(rep::random_cyclic_submodule(rad.module, rng), rng); break;
      default: m = rep::direct_sum({a.simple(pick_simple(rng)), rep::random_cyclic_quotient(p, rng)}); break;
    }
    if (m.dim() > 0 && m.dim() <= max_dim) return m;
  }
  return a.simple(pick_simple(rng));
}

namespace {

rep::Rng check_rng(const Context& c, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  return rep::Rng(c.scenario().seed ^ h);
}

int instances(const Context& c) { return std::max(1, c.scenario().instances); }

GModule ind(Context& c, const GModule& m) { return rep::induce(m, c.normal()); }
GModule res(Context& c, const GModule& m) { return rep::restrict(m, c.normal()); }

std::string name_of(const rep::GroupAlgebra& a, const GModule& m) {
  if (m.dim() == 0) return "0";
  std::string out;
  for (const auto& s : a.decompose(m)) out += (out.empty() ? "" : " + ") + a.stack_name(s.module);
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::all_of(a.begin(), a.end(), [&](int x) { return std::binary_search(b.begin(), b.end(), x); });
}

bool has_normal_of_index(const grp::GroupPtr& g, std::size_t index) {
  for (const auto& n : grp::normal_subgroups(g))
    if (n.order() * index == g->order()) return true;
  return false;
}

/// Distinct summand ids over all nodes.
std::vector<int> node_summands(const taut::SttPoset& poset) {
  std::set<int> ids;
  for (const auto& t : poset.nodes) ids.insert(t.m.begin(), t.m.end());
  return {ids.begin(), ids.end()};
}

/// All distinct nonempty sets of summands of a single node.
std::vector<std::vector<int>> node_subsets(const taut::SttPoset& poset) {
  std::set<std::vector<int>> out;
  for (const auto& t : poset.nodes) {
    const std::size_t n = t.m.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(t.m[i]);
      out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

/// Indecomposable tau-rigid summands of random modules, registered in the catalog.
std::vector<int> random_tau_rigid(Context& c, rep::Rng& rng, int count) {
  std::set<int> out;
  taut::Catalog& cat = c.big_scope().catalog();
  for (int t = 0; t < count; ++t) {
    const GModule m = random_module(c.big(), rng);
    for (int id : cat.basic(m))
      if (c.big_scope().is_tau_rigid(std::vector<int>{id})) out.insert(id);
  }
  // random cyclic modules are rarely rigid; syzygies and translates of
  // simples and their quotients reach the rest
  for (std::size_t i = 0; i < c.big().num_simples(); ++i) {
    std::vector<GModule> seeds{c.big().simple(i), rep::dual(c.big().simple(i))};
    const GModule& p = c.big().pim(i);
    seeds.push_back(c.big().top(p));
    seeds.push_back(rep::quotient(p, c.big().socle(p)).module);
    for (const auto& s : seeds) {
      GModule m = s;
      for (int k = 0; k < 3 && m.dim() > 0 && m.dim() <= 16; ++k) {
        for (int id : cat.basic(m))
          if (c.big_scope().is_tau_rigid(std::vector<int>{id})) out.insert(id);
        m = k % 2 ? c.big().tau(m) : c.big().syzygy(m);
      }
    }
  }
  // P_i modulo the trace of a set of projectives in rad P_i
  const std::size_t n = c.big().num_simples();
  for (std::size_t i = 0; n <= 5 && i < n; ++i) {
    const GModule& p = c.big().pim(i);
    const rep::Sub rad = rep::submodule(p, c.big().radical(p));
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<GModule> gens;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) gens.push_back(c.big().pim(j));
      const auto rows = rep::map_rows(rad.inclusion, c.big().trace(rep::direct_sum(gens), rad.module));
      for (int id : cat.basic(rep::quotient(p, rows).module))
        if (c.big_scope().is_tau_rigid(std::vector<int>{id})) out.insert(id);
    }
  }
  return {out.begin(), out.end()};
}

// -------------------------------------------------------------- modules

Outcome transitivity(Context& c) {
  Outcome o;
  const grp::Subgroup& g = c.normal();
  const grp::Subgroup h_in_g = grp::make_subgroup(g.group, {g.group->generators()[0]});
  const grp::Subgroup h_in_big = grp::embed_group(c.big_group(), h_in_g.group);
  rep::GroupAlgebra ha(h_in_g.group, c.field());
  auto rng = check_rng(c, "transitivity");
  for (int t = 0; t < instances(c); ++t) {
    const GModule u = random_module(c.big(), rng);
    if (!ha.is_isomorphic(rep::restrict(u, h_in_big), rep::restrict(rep::restrict(u, g), h_in_g)))
      o.fail("restriction in two steps differs for " + name_of(c.big(), u));
    const GModule v = random_module(ha, rng, 4);
    if (!c.big().is_isomorphic(rep::induce(v, h_in_big), rep::induce(rep::induce(v, h_in_g), g)))
      o.fail("induction in two steps differs for " + name_of(ha, v));
  }
  o.note("intermediate subgroup of order " + std::to_string(h_in_g.order()));
  return o;
}

Outcome tensor_identity(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "tensor_identity");
  for (int t = 0; t < instances(c); ++t) {
    const GModule v = random_module(c.small(), rng, 4);
    const GModule u = random_module(c.big(), rng, 4);
    if (!c.big().is_isomorphic(ind(c, rep::tensor(v, res(c, u))), rep::tensor(ind(c, v), u)))
      o.fail("Ind(V (x) Res U) differs from Ind V (x) U for V = " + name_of(c.small(), v) + ", U = " +
             name_of(c.big(), u));
  }
  return o;
}

Outcome frobenius(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "frobenius_reciprocity");
  for (int t = 0; t < instances(c); ++t) {
    const GModule u = random_module(c.big(), rng);
    const GModule v = random_module(c.small(), rng);
    const GModule iv = ind(c, v), ru = res(c, u);
    if (rep::hom_dim(u, iv) != rep::hom_dim(ru, v)) o.fail("Hom(U, Ind V) for U = " + name_of(c.big(), u));
    if (rep::hom_dim(iv, u) != rep::hom_dim(v, ru)) o.fail("Hom(Ind V, U) for U = " + name_of(c.big(), u));
  }
  return o;
}

Outcome projectives(Context& c) {
  Outcome o;
  for (std::size_t i = 0; i < c.big().num_simples(); ++i)
    if (!c.small().is_projective(res(c, c.big().pim(i)))) o.fail("Res P" + c.big().label(i) + " is not projective");
  for (std::size_t i = 0; i < c.small().num_simples(); ++i)
    if (!c.big().is_projective(ind(c, c.small().pim(i)))) o.fail("Ind P" + c.small().label(i) + " is not projective");
  if (!c.big().is_isomorphic(ind(c, c.small().regular()), c.big().regular()))
    o.fail("Ind of the regular module is not free");
  std::vector<GModule> copies(c.index(), c.small().regular());
  if (!c.small().is_isomorphic(res(c, c.big().regular()), rep::direct_sum(copies)))
    o.fail("Res of the regular module is not free");
  return o;
}

Outcome mackey(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "mackey");
  for (int t = 0; t < instances(c); ++t) {
    const GModule m = random_module(c.small(), rng);
    std::vector<GModule> parts;
    for (int x : c.coset_reps()) parts.push_back(rep::conjugate(m, c.normal(), x));
    if (!c.small().is_isomorphic(res(c, ind(c, m)), rep::direct_sum(parts)))
      o.fail("Res Ind M is not the sum of conjugates for M = " + name_of(c.small(), m));
  }
  return o;
}

Outcome eckmann_shapiro(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "eckmann_shapiro");
  for (int t = 0; t < instances(c); ++t) {
    const GModule m = random_module(c.small(), rng);
    const GModule n = random_module(c.big(), rng);
    if (c.small().ext1_dim(m, res(c, n)) != c.big().ext1_dim(ind(c, m), n))
      o.fail("Ext^1 differs for M = " + name_of(c.small(), m) + ", N = " + name_of(c.big(), n));
  }
  return o;
}

Outcome induction_syzygy(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "induction_commutes_with_syzygy");
  for (int t = 0; t < instances(c); ++t) {
    const GModule m = random_module(c.small(), rng);
    const GModule im = ind(c, m);
    if (!c.big().is_isomorphic(ind(c, c.small().syzygy(m)), c.big().syzygy(im)))
      o.fail("Ind Omega M differs from Omega Ind M for M = " + name_of(c.small(), m));
    if (!c.big().is_isomorphic(ind(c, c.small().tau(m)), c.big().tau(im)))
      o.fail("Ind tau M differs from tau Ind M for M = " + name_of(c.small(), m));
  }
  return o;
}

Outcome restriction_invariant(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "restriction_is_invariant");
  for (int t = 0; t < instances(c); ++t) {
    const GModule r = res(c, random_module(c.big(), rng));
    for (int x : c.coset_reps())
      if (!c.small().is_isomorphic(r, rep::conjugate(r, c.normal(), x)))
        o.fail("a restricted module is not invariant: " + name_of(c.small(), r));
  }
  return o;
}

Outcome restriction_syzygy(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "restriction_commutes_with_syzygy");
  int tested = 0, random_hits = 0;
  for (int t = 0; t < instances(c); ++t) {
    GModule m = random_module(c.big(), rng);
    if (t % 2 == 0 || !vtx::is_rel_projective(m, c.normal())) {
      m = ind(c, random_module(c.small(), rng, 4));
    } else {
      ++random_hits;
    }
    ++tested;
    const GModule rm = res(c, m);
    if (!c.small().is_isomorphic(res(c, c.big().syzygy(m)), c.small().syzygy(rm)))
      o.fail("Res Omega M differs from Omega Res M for M = " + name_of(c.big(), m));
    if (!c.small().is_isomorphic(res(c, c.big().tau(m)), c.small().tau(rm)))
      o.fail("Res tau M differs from tau Res M for M = " + name_of(c.big(), m));
  }
  o.note(std::to_string(tested) + " relatively projective modules, " + std::to_string(random_hits) +
         " of them drawn directly");
  return o;
}

// -------------------------------------------------------------- tilting

Outcome restriction_rigidity(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  int applicable = 0;
  for (const auto& ids : node_subsets(c.big_poset())) {
    const GModule m = cat.sum(ids);
    if (!subset(cat.basic(ind(c, res(c, m))), ids)) continue;
    ++applicable;
    const GModule r = res(c, m);
    if (!c.small_scope().is_tau_rigid(r)) o.fail("Res of " + name_of(c.big(), m) + " is not tau-rigid");
    if (c.big().ext1_dim(m, m) == 0 && c.small().ext1_dim(r, r) != 0)
      o.fail("Res of the rigid module " + name_of(c.big(), m) + " is not rigid");
  }
  o.note(std::to_string(applicable) + " tau-rigid modules satisfy the hypothesis");
  return o;
}

Outcome restriction_of_star(Context& c) {
  Outcome o;
  const auto& r = c.induction();
  const auto& bp = c.big_poset();
  const auto& sp = c.small_poset();
  std::map<int, int> image;
  for (std::size_t v = 0; v < bp.size(); ++v) {
    if (!r.cond_relative[v]) continue;
    const auto t = taut::map_pair(c.big_scope(), bp.nodes[v], c.small_scope(), [&](const GModule& m) { return res(c, m); });
    const int w = t ? sp.find(*t) : -1;
    if (w < 0) {
      o.fail("restriction of " + c.big_scope().describe(bp.nodes[v]) + " is not a support tau-tilting pair");
      continue;
    }
    image[static_cast<int>(v)] = w;
  }
  for (auto [a, ra] : image)
    for (auto [b, rb] : image)
      if (bp.below(b, a) && !sp.below(rb, ra))
        o.fail("restriction does not preserve " + c.big_scope().describe(bp.nodes[b]) + " <= " +
               c.big_scope().describe(bp.nodes[a]));
  o.note(std::to_string(image.size()) + " nodes restricted");
  return o;
}

Outcome completion_criterion(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  auto rng = check_rng(c, "completion_criterion");
  std::set<int> pool_set;
  for (int id : random_tau_rigid(c, rng, instances(c))) pool_set.insert(id);
  for (int id : node_summands(c.big_poset())) pool_set.insert(id);
  const std::vector<int> pool(pool_set.begin(), pool_set.end());
  for (const auto& t : c.big_poset().nodes) {
    if (!c.big_scope().is_stt_pair(t)) o.fail(c.big_scope().describe(t) + " is not a support tau-tilting pair");
    for (int x : pool) {
      if (std::binary_search(t.m.begin(), t.m.end(), x)) continue;
      bool fits = true;
      for (auto i : t.p) fits = fits && cat.hom_dim(cat.pim(i), x) == 0;
      for (int y : t.m) fits = fits && cat.hom_to_tau(y, x) == 0 && cat.hom_to_tau(x, y) == 0;
      if (fits) o.fail(cat.name(x) + " is compatible with " + c.big_scope().describe(t) + " but not a summand");
    }
  }
  o.note(std::to_string(pool.size()) + " tau-rigid indecomposables tested against every node");
  return o;
}

Outcome completable(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "tau_rigid_completable");
  const auto pool = random_tau_rigid(c, rng, instances(c));
  const auto in_nodes = node_summands(c.big_poset());
  for (int x : pool)
    if (!std::binary_search(in_nodes.begin(), in_nodes.end(), x))
      o.fail(c.big_scope().catalog().name(x) + " is tau-rigid but no node has it as a summand");
  o.note(std::to_string(pool.size()) + " tau-rigid indecomposables found");
  return o;
}

/// The tensor statement for one rigid module m and one module l; `project`
/// is the block projection (identity for the whole algebra).  Returns
/// whether the hypothesis held.
bool tensor_split(Context& c, const GModule& m, const std::vector<int>& ids, const GModule& l,
                  const std::function<GModule(const GModule&)>& project, Outcome& o) {
  taut::Catalog& cat = c.big_scope().catalog();
  const auto mults = c.big().composition_mults(l);
  std::vector<GModule> parts;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (!mults[i]) continue;
    const GModule st = project(rep::tensor(c.big().simple(i), m));
    if (st.dim() > 0 && !subset(cat.basic(st), ids)) return false;
    for (std::size_t k = 0; k < mults[i]; ++k) parts.push_back(st);
  }
  if (!c.big().is_isomorphic(project(rep::tensor(l, m)), rep::direct_sum(parts)))
    o.fail("L (x) M does not split over composition factors for M = " + name_of(c.big(), m) + ", L = " +
           name_of(c.big(), l));
  return true;
}

Outcome tensor_decomposition(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  auto rng = check_rng(c, "tensor_decomposition");
  std::vector<GModule> ls{rep::coset_module(c.normal(), c.field())};
  for (int t = 0; t < std::max(1, instances(c) / 10); ++t) ls.push_back(random_module(c.big(), rng, 4));
  const auto id = [](const GModule& x) { return x; };
  int applicable = 0;
  for (const auto& t : c.big_poset().nodes) {
    const GModule m = cat.sum(t.m);
    for (const auto& l : ls) applicable += tensor_split(c, m, t.m, l, id, o);
  }
  o.note(std::to_string(applicable) + " (node, L) pairs satisfy the hypothesis");
  return o;
}

Outcome relative_tensor(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  const auto& qs = c.quotient_simples();
  std::size_t count = 0, holding = 0;
  for (const auto& ids : node_subsets(c.big_poset())) {
    bool rel = true, tens = true;
    for (int x : ids) {
      const auto ir = cat.basic(ind(c, res(c, cat.module(x))));
      rel = rel && subset(ir, ids) && std::binary_search(ir.begin(), ir.end(), x);
      for (const auto& s : qs) tens = tens && subset(cat.basic(rep::tensor(s, cat.module(x))), ids);
    }
    ++count;
    holding += rel;
    if (rel != tens)
      o.fail("conditions differ on " + name_of(c.big(), cat.sum(ids)) + ": relative " + std::to_string(rel) +
             ", tensor " + std::to_string(tens));
  }
  o.note(std::to_string(count) + " rigid modules, " + std::to_string(holding) + " satisfying both conditions");
  return o;
}

Outcome star_conditions(Context& c) {
  Outcome o;
  const auto& r = c.induction();
  for (const auto& p : r.problems)
    if (p.rfind("conditions disagree", 0) == 0) o.fail(p);
  std::string star;
  for (int v : r.star) star += (star.empty() ? "" : ", ") + c.big_scope().describe(c.big_poset().nodes[v]);
  o.note(std::to_string(r.star.size()) + " of " + std::to_string(c.big_poset().size()) + " nodes: " + star);
  return o;
}

Outcome induced_isomorphism(Context& c) {
  Outcome o;
  const auto& r = c.induction();
  for (const auto& p : r.problems)
    if (p.rfind("conditions disagree", 0) != 0) o.fail(p);
  if (!r.injective) o.fail("induction is not injective on invariant nodes");
  if (!r.order_embedding) o.fail("induction does not reflect the order");
  if (!r.image_is_star) o.fail("the image of induction is not the subset cut out by the conditions");
  o.note(std::to_string(r.invariant.size()) + " invariant nodes map onto " + std::to_string(r.star.size()) + " nodes");
  return o;
}

Outcome p_power_isomorphism(Context& c) {
  Outcome o;
  if (!c.p_power_index()) {
    o.skip("index " + std::to_string(c.index()) + " is not a power of p");
    return o;
  }
  const auto& r = c.induction();
  if (r.star.size() != c.big_poset().size()) o.fail("some node of the overgroup is not induced");
  if (!r.injective || !r.order_embedding || !r.image_is_star) o.fail("induction is not a poset isomorphism");
  o.note(std::to_string(r.invariant.size()) + " invariant nodes, " + std::to_string(c.big_poset().size()) +
         " nodes over the overgroup");
  return o;
}

Outcome not_monomorphic(Context& c) {
  Outcome o;
  const auto& r = c.induction();
  const auto& sp = c.small_poset();
  std::map<int, int> image_of_invariant;
  for (std::size_t i = 0; i < r.invariant.size(); ++i) image_of_invariant[r.induced[i]] = r.invariant[i];
  std::size_t collisions = 0;
  for (std::size_t v = 0; v < sp.size(); ++v) {
    if (std::binary_search(r.invariant.begin(), r.invariant.end(), static_cast<int>(v))) continue;
    const auto t = taut::map_pair(c.small_scope(), sp.nodes[v], c.big_scope(), [&](const GModule& m) { return ind(c, m); });
    if (!t || t->m.empty()) continue;
    // compare M parts only: add Ind M against add Ind N
    for (const auto& [w, u] : image_of_invariant) {
      if (w < 0 || c.big_poset().nodes[w].m != t->m) continue;
      ++collisions;
      o.note("Ind(" + c.small_scope().describe(sp.nodes[v]) + ") =add Ind(" + c.small_scope().describe(sp.nodes[u]) +
             ") =add " + c.big_scope().describe(c.big_poset().nodes[w]));
    }
  }
  if (!collisions) o.skip("induction is injective on all nodes whose image is a node");
  return o;
}

Outcome trivial_rigidity(Context& c) {
  Outcome o;
  auto one = [&](const grp::GroupPtr& g, const taut::Scope& s) {
    const bool rigid = s.is_tau_rigid(s.algebra().trivial());
    const bool normal = has_normal_of_index(g, static_cast<std::size_t>(c.scenario().p));
    o.note(g->name() + ": trivial module " + (rigid ? "" : "not ") + "tau-rigid, " + (normal ? "" : "no ") +
           "normal subgroup of index p");
    if (rigid == normal) o.fail("biconditional fails for " + g->name());
  };
  one(c.big_group(), c.big_scope());
  if (c.normal().order() < c.big_group()->order()) one(c.normal().group, c.small_scope());
  return o;
}

// -------------------------------------------------------------- vertices

Outcome vertex_theorem(Context& c) {
  Outcome o;
  auto one = [&](const grp::GroupPtr& g) {
    const auto r = vtx::verify_vertex_theorem(g, c.field());
    std::string rows;
    for (const auto& row : r.rows) rows += (rows.empty() ? "" : ", ") + row.name + ":" + std::to_string(row.vertex_order);
    o.note(g->name() + ": all vertices proper " + std::to_string(r.all_proper) + ", p-power normal subgroup " +
           std::to_string(r.has_p_normal) + " (" + rows + ")");
    if (!r.agree()) o.fail("biconditional fails for " + g->name());
  };
  one(c.big_group());
  if (c.normal().order() < c.big_group()->order()) one(c.normal().group);
  return o;
}

Outcome relative_projectivity(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  std::size_t rel = 0;
  const auto ids = node_summands(c.big_poset());
  for (int id : ids) {
    const GModule& m = cat.module(id);
    const bool a = vtx::is_rel_projective(m, c.normal());
    if (a != vtx::higman_rel_projective(m, c.normal())) o.fail("summand and trace criteria differ on " + cat.name(id));
    if (c.p_power_index() && !a) o.fail(cat.name(id) + " is tau-rigid but not relatively projective");
    rel += a;
  }
  o.note(std::to_string(rel) + " of " + std::to_string(ids.size()) + " tau-rigid indecomposables are relatively projective");
  return o;
}

Outcome vertex_projectivity(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  for (int id : node_summands(c.big_poset())) {
    const auto v = vtx::vertex(cat.module(id));
    if ((v.vertex.order() == 1) != c.big().is_projective(cat.module(id)))
      o.fail(cat.name(id) + " has vertex of order " + std::to_string(v.vertex.order()));
  }
  return o;
}

// -------------------------------------------------------------- blocks

std::string block_list(const std::vector<blk::Block>& bs, const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + bs[i].name;
  return s;
}

std::vector<std::size_t> covering(Context& c, std::size_t b) {
  std::vector<std::size_t> out;
  const auto& bb = c.big_blocks();
  for (std::size_t i = 0; i < bb.size(); ++i)
    if (blk::covers(c.normal(), c.big(), bb[i], c.small_blocks()[b])) out.push_back(i);
  return out;
}

/// Indecomposable modules of a block used as test inputs: simples,
/// projectives and indecomposable summands of projected random modules.
std::vector<GModule> block_modules(Context& c, std::size_t b, rep::Rng& rng) {
  const auto& blk = c.small_blocks()[b];
  std::vector<GModule> out;
  for (auto i : blk.simples) {
    out.push_back(c.small().simple(i));
    out.push_back(c.small().pim(i));
  }
  for (int t = 0; t < std::max(1, instances(c) / 10); ++t) {
    const GModule m = blk::project(blk, random_module(c.small(), rng));
    for (const auto& s : c.small().decompose(m)) out.push_back(s.module);
  }
  return out;
}

Outcome block_idempotents(Context& c) {
  Outcome o;
  const std::string a = blk::audit_blocks(c.big(), c.big_blocks());
  if (!a.empty()) o.fail(c.big_group()->name() + ": " + a);
  const std::string b = blk::audit_blocks(c.small(), c.small_blocks());
  if (!b.empty()) o.fail(c.normal().group->name() + ": " + b);
  o.note(std::to_string(c.big_blocks().size()) + " blocks over the overgroup, " +
         std::to_string(c.small_blocks().size()) + " over the normal subgroup");
  return o;
}

Outcome covering_criteria(Context& c) {
  Outcome o;
  const auto& bb = c.big_blocks();
  const auto& sb = c.small_blocks();
  const auto& g = *c.big_group();
  // conjugates of each small block, as block indices
  std::vector<std::set<std::size_t>> conj(sb.size());
  for (std::size_t b = 0; b < sb.size(); ++b) {
    const auto e = blk::algebra_embed(c.normal(), sb[b].idempotent);
    for (int x : c.coset_reps()) {
      const auto ex = blk::algebra_conj(g, e, x);
      for (std::size_t d = 0; d < sb.size(); ++d)
        if (blk::algebra_embed(c.normal(), sb[d].idempotent) == ex) conj[b].insert(d);
    }
  }
  for (std::size_t bt = 0; bt < bb.size(); ++bt) {
    std::vector<GModule> tests;
    for (auto i : bb[bt].simples) {
      tests.push_back(c.big().simple(i));
      tests.push_back(c.big().pim(i));
    }
    for (std::size_t b = 0; b < sb.size(); ++b) {
      const bool cov = blk::covers(c.normal(), c.big(), bb[bt], sb[b]);
      for (const auto& u : tests) {
        bool has = false;
        for (const auto& s : c.small().decompose(res(c, u))) {
          const std::size_t d = blk::block_of(sb, s.module);
          has = has || d == b;
          if (cov && !conj[b].count(d))
            o.fail("a summand of a restricted " + bb[bt].name + "-module lies in " + sb[d].name +
                   ", not a conjugate of " + sb[b].name);
        }
        if (has != cov)
          o.fail(bb[bt].name + (cov ? " covers " : " does not cover ") + sb[b].name +
                 " but the restriction test disagrees");
      }
    }
  }
  return o;
}

Outcome principal_inertia(Context& c) {
  Outcome o;
  const auto cov = covering(c, 0);
  const auto& bb = c.big_blocks();
  if (std::find(cov.begin(), cov.end(), 0) == cov.end()) o.fail("the principal block does not cover the principal block");
  for (std::size_t b = 1; b < c.small_blocks().size(); ++b)
    if (blk::covers(c.normal(), c.big(), bb[0], c.small_blocks()[b]))
      o.fail("the principal block also covers " + c.small_blocks()[b].name);
  if (blk::inertia(c.normal(), c.small_blocks()[0]).order() != c.big_group()->order())
    o.fail("the principal block is not stable under conjugation");
  return o;
}

Outcome induced_summands(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "induced_summands_cover");
  const auto& bb = c.big_blocks();
  for (auto b : c.selected_small_blocks()) {
    const auto cov = covering(c, b);
    for (const auto& u : block_modules(c, b, rng)) {
      const GModule iu = ind(c, u);
      for (auto bt : cov) {
        const GModule x = blk::project(bb[bt], iu);
        if (x.dim() == 0) o.fail(bb[bt].name + " Ind U vanishes for U = " + name_of(c.small(), u));
        bool found = false;
        for (const auto& s : c.small().decompose(res(c, x)))
          found = found || c.small().is_isomorphic(s.module, u);
        if (!found) o.fail("U is not a summand of Res " + bb[bt].name + " Ind U for U = " + name_of(c.small(), u));
      }
      for (const auto& s : c.big().decompose(iu)) {
        const auto d = blk::block_of(bb, s.module);
        if (std::find(cov.begin(), cov.end(), d) == cov.end())
          o.fail("a summand of Ind U lies in " + bb[d].name + ", which does not cover " + c.small_blocks()[b].name);
      }
    }
  }
  return o;
}

Outcome unique_cover(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "unique_covering_block");
  for (auto b : c.selected_small_blocks()) {
    const auto cov = covering(c, b);
    const auto& name = c.small_blocks()[b].name;
    o.note(name + " is covered by " + block_list(c.big_blocks(), cov));
    if (c.p_power_index() && cov.size() != 1) o.fail(name + " has several covering blocks under p-power index");
    for (const auto& x : block_modules(c, b, rng)) {
      if (!rep::is_indecomposable(ind(c, x))) continue;
      if (cov.size() != 1) o.fail("Ind " + name_of(c.small(), x) + " is indecomposable but " + name + " has " +
                                  std::to_string(cov.size()) + " covering blocks");
      break;
    }
  }
  return o;
}

Outcome fong_reynolds(Context& c) {
  Outcome o;
  const auto& bb = c.big_blocks();
  for (auto b : c.selected_small_blocks()) {
    const auto& blk = c.small_blocks()[b];
    const auto cov = covering(c, b);
    std::set<std::size_t> betas;
    std::size_t inertia_blocks_covering = 0;
    for (auto bt : cov) {
      const auto d = blk::fong_correspondent(c.normal(), c.small(), blk, c.big(), bb[bt]);
      if (!betas.insert(d.beta).second) o.fail("two blocks covering " + blk.name + " share a correspondent");
      if (inertia_blocks_covering == 0)
        for (const auto& beta : d.inertia_blocks)
          inertia_blocks_covering += blk::covers(d.normal_in_inertia, *d.inertia_algebra, beta, blk);
      const auto m = blk::verify_fong_morita(d, c.big());
      for (const auto& p : m.problems) o.fail(bb[bt].name + ": " + p);
      o.note(blk.name + " -> " + bb[bt].name + ": inertia of order " + std::to_string(d.inertia.order()) + ", " +
             std::to_string(m.checked) + " modules round-tripped");
    }
    if (inertia_blocks_covering != cov.size())
      o.fail("correspondence for " + blk.name + " is not a bijection: " + std::to_string(inertia_blocks_covering) +
             " blocks of the inertial group, " + std::to_string(cov.size()) + " of the overgroup");
  }
  return o;
}

Outcome fong_identity(Context& c) {
  Outcome o;
  auto rng = check_rng(c, "fong_induction_identity");
  const auto& bb = c.big_blocks();
  for (auto b : c.selected_small_blocks()) {
    const auto& blk = c.small_blocks()[b];
    for (auto bt : covering(c, b)) {
      const auto d = blk::fong_correspondent(c.normal(), c.small(), blk, c.big(), bb[bt]);
      const auto& beta = d.inertia_blocks[d.beta];
      for (const auto& u : block_modules(c, b, rng)) {
        const GModule lhs = blk::block_induce(bb[bt], u, c.normal());
        const GModule rhs = rep::induce(blk::project(beta, rep::induce(u, d.normal_in_inertia)), d.inertia);
        if (!c.big().is_isomorphic(lhs, rhs))
          o.fail(bb[bt].name + " Ind U differs from Ind beta Ind U for U = " + name_of(c.small(), u));
      }
    }
  }
  return o;
}

/// Everything the block theorems say about one pair B, Bt.
struct BlockAnalysis {
  blk::FongDatum datum;
  taut::InductionReport direct;  // B -> Bt through Bt Ind, I-invariance
  taut::InductionReport local;   // B -> beta through beta Ind, I-invariance
  std::unique_ptr<taut::Scope> beta_scope;
  taut::SttPoset beta_poset;
  taut::NodeMap to_big;    // beta node -> Bt node through Ind
  taut::NodeMap to_beta;   // Bt node -> beta node through beta Res
};

BlockAnalysis analyse_block(Context& c, std::size_t b, std::size_t bt) {
  BlockAnalysis a;
  const auto& sblk = c.small_blocks()[b];
  const auto& bblk = c.big_blocks()[bt];
  a.datum = blk::fong_correspondent(c.normal(), c.small(), sblk, c.big(), bblk);
  const auto& d = a.datum;
  const auto& beta = d.inertia_blocks[d.beta];

  const taut::Scope& ss = c.block_scope(false, b);
  const taut::Scope& bs = c.block_scope(true, bt);
  const auto& sp = c.block_poset(false, b);
  const auto& bp = c.block_poset(true, bt);

  taut::Induction direct;
  direct.small = &ss;
  direct.small_poset = &sp;
  direct.big = &bs;
  direct.big_poset = &bp;
  direct.normal = c.normal();
  direct.invariance = d.inertia.embed;
  direct.project_big = [&](const GModule& m) { return blk::project(bblk, m); };
  direct.quotient_simples = c.quotient_simples();
  a.direct = taut::analyse_induction(direct);

  a.beta_scope = std::make_unique<taut::Scope>(std::make_shared<taut::Catalog>(d.inertia_algebra), beta.simples);
  a.beta_poset = taut::enumerate(*a.beta_scope, {c.scenario().cap, true});
  taut::Induction local;
  local.small = &ss;
  local.small_poset = &sp;
  local.big = a.beta_scope.get();
  local.big_poset = &a.beta_poset;
  local.normal = d.normal_in_inertia;
  for (std::size_t x = 0; x < d.inertia.order(); ++x) local.invariance.push_back(static_cast<int>(x));
  local.project_big = [&](const GModule& m) { return blk::project(beta, m); };
  {
    const auto q = grp::quotient(d.normal_in_inertia);
    rep::GroupAlgebra qa(q.group, c.field());
    for (std::size_t i = 0; i < qa.num_simples(); ++i) local.quotient_simples.push_back(rep::inflate(qa.simple(i), q));
  }
  a.local = taut::analyse_induction(local);

  std::vector<int> all_beta(a.beta_poset.size()), all_big(bp.size());
  for (std::size_t i = 0; i < all_beta.size(); ++i) all_beta[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < all_big.size(); ++i) all_big[i] = static_cast<int>(i);
  a.to_big = taut::map_nodes(*a.beta_scope, a.beta_poset, all_beta, bs, bp,
                             [&](const GModule& m) { return rep::induce(m, d.inertia); });
  a.to_beta = taut::map_nodes(bs, bp, all_big, *a.beta_scope, a.beta_poset,
                              [&](const GModule& m) { return blk::block_restrict(beta, m, d.inertia); });
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> block_pairs(Context& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto b : c.selected_small_blocks())
    for (auto bt : covering(c, b)) out.emplace_back(b, bt);
  return out;
}

std::string pair_name(Context& c, std::pair<std::size_t, std::size_t> p) {
  return c.small_blocks()[p.first].name + "/" + c.big_blocks()[p.second].name;
}

Outcome block_star(Context& c) {
  Outcome o;
  for (auto pr : block_pairs(c)) {
    const auto a = analyse_block(c, pr.first, pr.second);
    const std::string tag = pair_name(c, pr);
    const auto& bp = c.block_poset(true, pr.second);
    const bool stable = a.datum.inertia.order() == c.big_group()->order();
    // with I = Gt the conditions can be read directly over Bt
    if (stable)
      for (const auto& p : a.direct.problems) o.fail(tag + ": " + p);
    for (const auto& p : a.local.problems) o.fail(tag + " (inertial group): " + p);
    // general form: conditions on beta Res M against induction from I-invariant B-modules
    for (std::size_t v = 0; v < bp.size(); ++v) {
      const int w = a.to_beta[v];
      if (w < 0) {
        o.fail(tag + ": beta Res of " + c.block_scope(true, pr.second).describe(bp.nodes[v]) + " is not a node");
        continue;
      }
      if (a.direct.cond_induced[v] != a.local.cond_relative[w] || a.local.cond_relative[w] != a.local.cond_tensor[w])
        o.fail(tag + ": conditions disagree on " + c.block_scope(true, pr.second).describe(bp.nodes[v]));
    }
    if (!a.direct.injective || !a.direct.order_embedding) o.fail(tag + ": Bt Ind is not a poset embedding");
    if (!a.direct.image_is_star) o.fail(tag + ": image of Bt Ind is not the subset cut out by the conditions");
    o.note(tag + ": " + std::to_string(a.direct.invariant.size()) + " invariant nodes, " +
           std::to_string(a.direct.star.size()) + " of " + std::to_string(bp.size()) + " nodes in the image");
  }
  return o;
}

Outcome block_restriction(Context& c) {
  Outcome o;
  for (auto pr : block_pairs(c)) {
    const auto a = analyse_block(c, pr.first, pr.second);
    const auto& d = a.datum;
    const auto& beta = d.inertia_blocks[d.beta];
    const taut::Scope& bs = c.block_scope(true, pr.second);
    const taut::Scope& ss = c.block_scope(false, pr.first);
    const auto& bp = c.block_poset(true, pr.second);
    const auto& sp = c.block_poset(false, pr.first);
    std::map<int, int> image;
    for (int v : a.direct.star) {
      const auto t = taut::map_pair(bs, bp.nodes[v], ss, [&](const GModule& m) {
        return rep::restrict(blk::block_restrict(beta, m, d.inertia), d.normal_in_inertia);
      });
      const int w = t ? sp.find(*t) : -1;
      if (w < 0) o.fail(pair_name(c, pr) + ": restriction of " + bs.describe(bp.nodes[v]) + " is not a node");
      else image[v] = w;
    }
    for (auto [x, rx] : image)
      for (auto [y, ry] : image)
        if (bp.below(y, x) && !sp.below(ry, rx)) o.fail(pair_name(c, pr) + ": restriction does not preserve the order");
    o.note(pair_name(c, pr) + ": " + std::to_string(image.size()) + " nodes restricted");
  }
  return o;
}

Outcome block_morita_posets(Context& c) {
  Outcome o;
  for (auto pr : block_pairs(c)) {
    const auto a = analyse_block(c, pr.first, pr.second);
    const auto& bp = c.block_poset(true, pr.second);
    std::vector<int> img(a.to_big);
    std::sort(img.begin(), img.end());
    bool bij = a.beta_poset.size() == bp.size() && std::adjacent_find(img.begin(), img.end()) == img.end() &&
               (img.empty() || img.front() >= 0);
    if (!bij) o.fail(pair_name(c, pr) + ": Ind from the inertial group is not a bijection of posets");
    for (std::size_t x = 0; bij && x < a.to_big.size(); ++x)
      for (std::size_t y = 0; y < a.to_big.size(); ++y)
        if (a.beta_poset.below(static_cast<int>(y), static_cast<int>(x)) != bp.below(a.to_big[y], a.to_big[x]))
          o.fail(pair_name(c, pr) + ": Ind from the inertial group changes the order");
    for (std::size_t v = 0; v < a.to_beta.size(); ++v)
      if (a.to_beta[v] < 0 || a.to_big[a.to_beta[v]] != static_cast<int>(v))
        o.fail(pair_name(c, pr) + ": beta Res is not inverse to Ind on nodes");
    // Bt Ind equals Ind beta Ind on the invariant nodes
    for (std::size_t i = 0; i < a.direct.invariant.size(); ++i) {
      const auto it = std::find(a.local.invariant.begin(), a.local.invariant.end(), a.direct.invariant[i]);
      if (it == a.local.invariant.end()) continue;
      const int via = a.local.induced[it - a.local.invariant.begin()];
      if (via < 0 || a.to_big[via] != a.direct.induced[i])
        o.fail(pair_name(c, pr) + ": Bt Ind differs from Ind beta Ind on a node");
    }
    o.note(pair_name(c, pr) + ": " + std::to_string(a.beta_poset.size()) + " nodes on both sides");
  }
  return o;
}

Outcome block_p_extension(Context& c) {
  Outcome o;
  bool any = false;
  for (auto pr : block_pairs(c)) {
    const auto a = analyse_block(c, pr.first, pr.second);
    std::size_t i = a.datum.inertia.order() / c.normal().order();
    while (i % c.scenario().p == 0) i /= c.scenario().p;
    if (i != 1) continue;
    any = true;
    const auto& bp = c.block_poset(true, pr.second);
    if (a.direct.star.size() != bp.size() || !a.direct.injective || !a.direct.order_embedding)
      o.fail(pair_name(c, pr) + ": Bt Ind is not a poset isomorphism onto all nodes");
    o.note(pair_name(c, pr) + ": " + std::to_string(a.direct.invariant.size()) + " invariant nodes, " +
           std::to_string(bp.size()) + " nodes");
  }
  if (!any) o.skip("no covered block has inertial quotient a p-group");
  return o;
}

Outcome block_tensor(Context& c) {
  Outcome o;
  taut::Catalog& cat = c.big_scope().catalog();
  auto rng = check_rng(c, "block_tensor_decomposition");
  const auto& qs = c.quotient_simples();
  for (std::size_t bt = 0; bt < c.big_blocks().size(); ++bt) {
    const auto& bblk = c.big_blocks()[bt];
    const auto project = [&](const GModule& m) { return blk::project(bblk, m); };
    std::vector<GModule> ls{rep::coset_module(c.normal(), c.field()), random_module(c.big(), rng, 4)};
    for (const auto& t : c.block_poset(true, bt).nodes) {
      const GModule m = cat.sum(t.m);
      for (const auto& l : ls) tensor_split(c, m, t.m, l, project, o);
      bool rel = true, tens = true;
      for (int x : t.m) {
        const auto ir = cat.basic(project(ind(c, res(c, cat.module(x)))));
        rel = rel && subset(ir, t.m) && std::binary_search(ir.begin(), ir.end(), x);
        for (const auto& s : qs) {
          const GModule st = project(rep::tensor(s, cat.module(x)));
          tens = tens && (st.dim() == 0 || subset(cat.basic(st), t.m));
        }
      }
      if (rel != tens) o.fail(bblk.name + ": conditions differ on " + c.block_scope(true, bt).describe(t));
    }
  }
  return o;
}

// -------------------------------------------------------------- audits

Outcome order_audit(Context& c) {
  Outcome o;
  taut::audit_order(c.big_scope(), c.big_poset());
  taut::audit_order(c.small_scope(), c.small_poset());
  for (std::size_t b = 0; b < c.big_blocks().size(); ++b) taut::audit_order(c.block_scope(true, b), c.block_poset(true, b));
  o.note("Fac order equals reachability on " + std::to_string(c.big_poset().size()) + " and " +
         std::to_string(c.small_poset().size()) + " nodes");
  return o;
}

Outcome maximality(Context& c) {
  Outcome o;
  for (const taut::Scope* s : {&c.big_scope(), &c.small_scope()}) {
    const auto& poset = s == &c.big_scope() ? c.big_poset() : c.small_poset();
    std::vector<int> all(s->catalog().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    for (const auto& t : poset.nodes)
      if (!s->maximality_check(t, all)) o.fail(s->describe(t) + " is not maximal");
  }
  return o;
}

Outcome twists(Context& c) {
  Outcome o;
  const auto& sp = c.small_poset();
  for (int x : c.coset_reps())
    if (!taut::is_automorphism(sp, taut::conjugation_twist(c.small_scope(), sp, c.normal(), x)))
      o.fail("conjugation by " + c.big_group()->describe(x) + " is not an automorphism");
  const auto& bp = c.big_poset();
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.big().num_simples(); ++i) {
    if (c.big().simple(i).dim() != 1) continue;
    ++count;
    if (!taut::is_automorphism(bp, taut::tensor_twist(c.big_scope(), bp, c.big().simple(i))))
      o.fail("tensoring with " + c.big().label(i) + " is not an automorphism");
  }
  o.note(std::to_string(c.coset_reps().size()) + " conjugations, " + std::to_string(count) + " one-dimensional twists");
  return o;
}

Outcome involution(Context& c) {
  Outcome o;
  for (const taut::Scope* s : {&c.big_scope(), &c.small_scope()}) {
    const auto& poset = s == &c.big_scope() ? c.big_poset() : c.small_poset();
    std::set<std::pair<int, int>> edges(poset.edges.begin(), poset.edges.end());
    for (std::size_t v = 0; v < poset.size(); ++v) {
      const auto& t = poset.nodes[v];
      for (std::size_t i = 0; i < s->rank(); ++i) {
        const SttPair u = taut::mutate(*s, t, i);
        const int w = poset.find(u);
        if (w < 0) {
          o.fail("mutation of " + s->describe(t) + " leaves the poset");
          continue;
        }
        if (!edges.count({static_cast<int>(v), w}) && !edges.count({w, static_cast<int>(v)}))
          o.fail("mutation of " + s->describe(t) + " is not a Hasse arrow");
        // the mutated summand sits at a new position; mutating it returns
        std::size_t back = s->rank();
        for (std::size_t j = 0; j < u.m.size(); ++j)
          if (!std::binary_search(t.m.begin(), t.m.end(), u.m[j])) back = j;
        for (std::size_t j = 0; j < u.p.size(); ++j)
          if (!std::binary_search(t.p.begin(), t.p.end(), u.p[j])) back = u.m.size() + j;
        if (back == s->rank() || taut::mutate(*s, u, back) != t) o.fail("mutation of " + s->describe(t) + " is not an involution");
      }
    }
  }
  return o;
}

Outcome poset_product(Context& c) {
  Outcome o;
  std::size_t prod = 1;
  for (std::size_t b = 0; b < c.big_blocks().size(); ++b) prod *= c.block_poset(true, b).size();
  if (prod != c.big_poset().size())
    o.fail("block posets multiply to " + std::to_string(prod) + ", not " + std::to_string(c.big_poset().size()));
  std::size_t sprod = 1;
  for (std::size_t b = 0; b < c.small_blocks().size(); ++b) sprod *= c.block_poset(false, b).size();
  if (sprod != c.small_poset().size())
    o.fail("block posets of the normal subgroup multiply to " + std::to_string(sprod));
  return o;
}

}  // namespace

const std::vector<CheckSpec>& manifest() {
  static const std::vector<CheckSpec> m{
      {"transitivity", "modules", "Res and Ind through an intermediate subgroup compose", transitivity},
      {"tensor_identity", "modules", "Ind(V (x) Res U) = Ind V (x) U", tensor_identity},
      {"frobenius_reciprocity", "modules", "Hom(U, Ind V) = Hom(Res U, V) and Hom(Ind V, U) = Hom(V, Res U)", frobenius},
      {"projectives_preserved", "modules", "Res and Ind send free and projective modules to such", projectives},
      {"mackey", "modules", "Res Ind M is the sum of the conjugates xM", mackey},
      {"eckmann_shapiro", "modules", "Ext^1(M, Res N) = Ext^1(Ind M, N)", eckmann_shapiro},
      {"induction_commutes_with_syzygy", "modules", "Ind Omega = Omega Ind and Ind tau = tau Ind", induction_syzygy},
      {"restriction_is_invariant", "modules", "restricted modules are invariant under the overgroup", restriction_invariant},
      {"restriction_commutes_with_syzygy", "modules", "Res Omega = Omega Res and Res tau = tau Res on relatively projective modules", restriction_syzygy},
      {"restriction_preserves_rigidity", "tilting", "if Ind Res M is in add M, Res of a (tau-)rigid M is (tau-)rigid", restriction_rigidity},
      {"completion_criterion", "tilting", "a tau-rigid X compatible with a support tau-tilting pair lies in add M", completion_criterion},
      {"restriction_of_star_nodes", "tilting", "Res of a node satisfying the conditions is a node, and Res is monotone", restriction_of_star},
      {"tensor_decomposition", "tilting", "L (x) M splits over the composition factors of L when each S (x) M is in add M", tensor_decomposition},
      {"relative_tensor_equivalence", "tilting", "for rigid M: Ind Res M in add M and relatively projective iff S (x) M in add M", relative_tensor},
      {"star_conditions_agree", "tilting", "induced from an invariant node, relative condition and tensor condition agree", star_conditions},
      {"induced_poset_isomorphism", "tilting", "Ind is a poset isomorphism from invariant nodes onto the conditioned nodes", induced_isomorphism},
      {"p_power_index_isomorphism", "tilting", "for p-power index Ind is an isomorphism onto all nodes", p_power_isomorphism},
      {"induction_not_monomorphic", "tilting", "Ind on all nodes can identify a non-invariant node with an invariant one", not_monomorphic},
      {"trivial_module_rigidity", "tilting", "the trivial module is tau-rigid iff there is no normal subgroup of index p", trivial_rigidity},
      {"tau_rigid_completable", "tilting", "every tau-rigid indecomposable is a summand of some node", completable},
      {"vertex_characterization", "vertices", "all tau-rigid vertices are proper iff a normal subgroup of p-power index exists", vertex_theorem},
      {"relative_projectivity", "vertices", "summand and trace criteria agree; p-power index makes tau-rigid modules relatively projective", relative_projectivity},
      {"vertex_projectivity", "vertices", "the vertex is trivial iff the module is projective", vertex_projectivity},
      {"block_idempotents", "blocks", "block idempotents are central, orthogonal, complete and sum to the regular dimension", block_idempotents},
      {"covering_criteria", "blocks", "covering by idempotents agrees with summands of restrictions", covering_criteria},
      {"principal_block_inertia", "blocks", "the principal block covers only the principal block and is stable", principal_inertia},
      {"induced_summands_cover", "blocks", "Res Bt Ind U has U as a summand; summands of Ind U lie in covering blocks", induced_summands},
      {"unique_covering_block", "blocks", "an indecomposable induced module, or p-power index, forces a unique covering block", unique_cover},
      {"fong_reynolds", "blocks", "blocks over the inertial group correspond to covering blocks through Morita equivalences", fong_reynolds},
      {"fong_induction_identity", "blocks", "Bt Ind U = Ind beta Ind U", fong_identity},
      {"block_restriction_of_star_nodes", "blocks", "restriction through beta sends conditioned block nodes to block nodes", block_restriction},
      {"block_star_conditions", "blocks", "the block conditions agree and Bt Ind embeds invariant block nodes onto them", block_star},
      {"block_morita_posets", "blocks", "Ind from the inertial group is a poset isomorphism and factors Bt Ind", block_morita_posets},
      {"block_p_extension", "blocks", "inertial quotient a p-group makes Bt Ind an isomorphism onto all block nodes", block_p_extension},
      {"block_tensor_decomposition", "blocks", "projected tensor splitting and the projected relative-tensor equivalence", block_tensor},
      {"order_audit", "audits", "the Fac order agrees with mutation reachability", order_audit},
      {"maximality", "audits", "no discovered indecomposable can be added to any node", maximality},
      {"twist_automorphisms", "audits", "conjugation and one-dimensional tensor twists are poset automorphisms", twists},
      {"mutation_involution", "audits", "mutation follows Hasse arrows and is an involution", involution},
      {"block_poset_product", "audits", "block posets multiply to the whole poset", poset_product},
  };
  return m;
}

VerificationReport run_checks(Context& ctx, const std::vector<std::string>& only) {
  VerificationReport r;
  r.header = to_text(ctx.scenario()) + "field = " + ctx.field().header() + "\n";
  const auto& suites = ctx.scenario().suites;
  for (const auto& spec : manifest()) {
    if (std::find(suites.begin(), suites.end(), spec.suite) == suites.end()) continue;
    if (!only.empty() && std::find(only.begin(), only.end(), spec.name) == only.end()) continue;
    CheckResult res;
    res.name = spec.name;
    res.suite = spec.suite;
    res.statement = spec.statement;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = spec.run(ctx);
      res.status = o.status;
      res.witnesses = std::move(o.witnesses);
    } catch (const InconclusiveError& e) {
      res.status = Status::inconclusive;
      res.witnesses.push_back(e.what());
    } catch (const std::exception& e) {
      res.status = Status::fail;
      res.witnesses.push_back(std::string("error: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(std::move(res));
  }
  return r;
}

}  // namespace sttilt::harness
