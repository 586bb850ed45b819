// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sttilt/blk/covering.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/harness/checks.hpp"
#include "sttilt/rep/build.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/vtx/vertex.hpp"

using namespace sttilt;
using namespace sttilt::harness;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scenario scenario(const std::string& text) { return parse_scenario(text); }

const char* kA4inS4 = "group = builtin:symmetric:4\nnormal = builtin:alternating:4\n";
const char* kV4inA4 = "group = builtin:alternating:4\nnormal = builtin:klein4\n";

std::vector<Scenario> shipped() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(STTILT_SCENARIO_DIR))
    if (e.path().extension() == ".scn") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Scenario> out;
  for (const auto& f : files) out.push_back(load_scenario(f.string()));
  return out;
}

void criterion1(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx(scenario("group = builtin:symmetric:4\n"));
  const auto& poset = ctx.big_poset();
  const auto [longest, shortest] = poset.chain_lengths();
  const double secs = seconds_since(t0);
  v.detail << poset.size() << " nodes, " << poset.edges.size() << " edges, " << poset.count_maximal_chains()
           << " maximal chains of length " << shortest << ".." << longest << ", " << secs << "s";
  v.require(ctx.field().size() == 4, "field GF(4)");
  v.require(poset.size() == 8, "8 nodes");
  v.require(poset.edges.size() == 8, "8 edges");
  v.require(poset.count_maximal_chains() == 2, "2 maximal chains");
  v.require(longest == 4 && shortest == 4, "chains of length 4");
  v.require(poset.nodes[poset.top()] == ctx.big_scope().top(), "top is (kS4, 0)");
  v.require(poset.nodes[poset.bottom()] == ctx.big_scope().bottom(), "bottom is (0, kS4)");
  v.require(secs < 10, "under 10 s");
}

void criterion2(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx(scenario("group = builtin:alternating:4\n"));
  const auto& poset = ctx.big_poset();
  const double secs = seconds_since(t0);
  // every pair has one mutation per simple, so the exchange graph is 3-regular
  std::vector<int> degree(poset.size());
  for (auto [a, b] : poset.edges) ++degree[a], ++degree[b];
  v.detail << poset.size() << " nodes, " << poset.edges.size() << " edges, " << secs << "s";
  v.require(poset.size() == 32, "32 nodes");
  v.require(poset.edges.size() == 32 * 3 / 2, "48 edges");
  v.require(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }), "3-regular");
  v.require(secs < 60, "under 60 s");
}

void criterion3(Verdict& v) {
  Context ctx(scenario(kA4inS4));
  const auto& sp = ctx.small_poset();
  // fixed points of the twist by a transposition, counted directly
  const int t = ctx.big_group()->index_of(grp::parse_cycles("(1 2)", 4));
  const auto twist = taut::conjugation_twist(ctx.small_scope(), sp, ctx.normal(), t);
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < twist.size(); ++i) fixed += twist[i] == static_cast<int>(i);
  const auto& r = ctx.induction();
  std::set<int> image(r.induced.begin(), r.induced.end());
  v.detail << fixed << " fixed nodes, " << r.invariant.size() << " invariant, " << image.size() << " distinct images of "
           << ctx.big_poset().size();
  v.require(fixed == 8, "8 fixed nodes");
  v.require(r.invariant.size() == 8, "8 invariant nodes");
  v.require(image.size() == 8 && !image.count(-1) && ctx.big_poset().size() == 8, "bijection onto kS4 nodes");
  v.require(r.injective && r.order_embedding, "order isomorphism");
}

void criterion4(Verdict& v) {
  Context ctx(scenario(kA4inS4));
  const auto& a4 = ctx.small();
  const auto& s4 = ctx.big();
  auto& small_cat = ctx.small_scope().catalog();
  auto& big_cat = ctx.big_scope().catalog();
  const int l2 = a4.find_label("2"), l3 = a4.find_label("3");
  const auto one = a4.simple(0);
  const auto one_two = rep::stack(a4, {0, static_cast<std::size_t>(l2)});
  const auto one_three = rep::stack(a4, {0, static_cast<std::size_t>(l3)});

  // M = 1 + 1/2 completes to a support tau-tilting pair with the remaining projective
  taut::SttPair m{small_cat.basic(rep::direct_sum({one, one_two})), {}};
  for (std::size_t i = 0; i < a4.num_simples(); ++i)
    if (static_cast<int>(i) != l2 && i != 0) m.p.push_back(i);
  const int node = ctx.small_poset().find(m);
  v.require(ctx.small_scope().is_stt_pair(m) && node >= 0, "1 + 1/2 is support tau-tilting");

  const auto& r = ctx.induction();
  v.require(std::find(r.invariant.begin(), r.invariant.end(), node) == r.invariant.end(), "not invariant");
  const int t = ctx.big_group()->index_of(grp::parse_cycles("(1 2)", 4));
  v.require(!small_cat.basic(rep::conjugate(rep::direct_sum({one, one_two}), ctx.normal(), t)).empty() &&
                small_cat.basic(rep::conjugate(rep::direct_sum({one, one_two}), ctx.normal(), t)) != m.m,
            "conjugate differs");

  const auto ind = [&](const rep::GModule& x) { return big_cat.basic(rep::induce(x, ctx.normal())); };
  const auto lhs = ind(rep::direct_sum({one, one_two}));
  const auto mid = ind(rep::direct_sum({one, one_two, one_three}));
  const auto l2p = static_cast<std::size_t>(s4.find_label("2'"));
  const auto rhs = big_cat.basic(rep::direct_sum({rep::stack(s4, {0, 0}), rep::stack(s4, {0, 0, l2p})}));
  std::string names;
  for (int id : lhs) names += (names.empty() ? "" : " + ") + big_cat.name(id);
  v.detail << "Ind(1 + 1/2) =add " << names;
  v.require(lhs == mid, "Ind M =add Ind(1 + 1/2 + 1/3)");
  v.require(mid == rhs, "=add 1'/1' + 1'/1'/2'");
}

void criterion5(Verdict& v) {
  for (const char* text : {kA4inS4, kV4inA4}) {
    Context ctx(scenario(text));
    const auto& r = ctx.induction();
    const auto& bp = ctx.big_poset();
    std::size_t agree = 0;
    for (std::size_t i = 0; i < bp.size(); ++i)
      agree += r.cond_induced[i] == r.cond_relative[i] && r.cond_relative[i] == r.cond_tensor[i];
    v.detail << ctx.normal().group->name() << " in " << ctx.big_group()->name() << ": " << agree << "/" << bp.size()
             << " agree, star " << r.star.size() << "; ";
    v.require(agree == bp.size(), "conditions agree on every node");
    if (ctx.big_group()->name() == "A4") {
      const std::vector<int> ends{bp.top(), bp.bottom()};
      std::vector<int> star = r.star;
      std::sort(star.begin(), star.end());
      v.require(star == ends || star == std::vector<int>{ends[1], ends[0]}, "star is {top, bottom}");
    }
  }
}

void criterion6(Verdict& v) {
  const std::set<std::string> wanted{"frobenius_reciprocity", "mackey", "eckmann_shapiro",
                                     "induction_commutes_with_syzygy", "restriction_commutes_with_syzygy",
                                     "tensor_identity"};
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t runs = 0;
  for (Scenario s : shipped()) {
    s.instances = 50;
    s.suites = {"modules"};
    Context ctx(s);
    const auto r = run_checks(ctx, {wanted.begin(), wanted.end()});
    for (const auto& c : r.checks) {
      ++runs;
      v.require(c.status == Status::pass, s.name + ": " + c.name);
    }
  }
  const double secs = seconds_since(t0);
  v.detail << runs << " identity runs x 50 instances, " << secs << "s";
  v.require(runs == wanted.size() * shipped().size(), "every identity ran");
  v.require(secs < 300, "under 5 min");
}

void criterion7(Verdict& v) {
  // groups with a normal subgroup of index 2 and of index 3, worked out by hand
  const std::map<std::string, std::pair<bool, bool>> index_p{
      {"C2", {true, false}}, {"C3", {false, true}}, {"C4", {true, false}}, {"V4", {true, false}},
      {"D8", {true, false}}, {"S3", {true, false}}, {"A4", {false, true}}, {"S4", {true, false}}};
  const std::vector<std::pair<std::string, grp::GroupPtr>> battery{
      {"C2", grp::builtin("cyclic", 2)},   {"C3", grp::builtin("cyclic", 3)},
      {"C4", grp::builtin("cyclic", 4)},   {"V4", grp::builtin("klein4", 4)},
      {"D8", grp::builtin("dihedral", 4)}, {"S3", grp::builtin("symmetric", 3)},
      {"A4", grp::builtin("alternating", 4)}, {"S4", grp::builtin("symmetric", 4)}};
  std::size_t agree = 0;
  for (int p : {2, 3})
    for (const auto& [name, g] : battery) {
      const auto& f = ffla::Field::get(p, ffla::splitting_degree(p, g->exponent()));
      auto alg = std::make_shared<rep::GroupAlgebra>(g, f);
      taut::Scope s(std::make_shared<taut::Catalog>(alg));
      const bool rigid = s.is_tau_rigid(alg->trivial());
      bool scan = false;
      for (const auto& n : grp::normal_subgroups(g)) scan = scan || n.order() * p == g->order();
      const bool expected = p == 2 ? index_p.at(name).first : index_p.at(name).second;
      const bool ok = rigid == !scan && scan == expected;
      agree += ok;
      v.require(ok, name + " p=" + std::to_string(p));
    }
  v.detail << agree << "/16 group/prime pairs";
}

void criterion8(Verdict& v) {
  const auto& f = ffla::Field::get(2, 2);
  const auto s4 = vtx::verify_vertex_theorem(grp::builtin("symmetric", 4), f);
  std::size_t largest = 0;
  for (const auto& row : s4.rows) largest = std::max(largest, row.vertex_order);
  v.require(largest <= 4, "S4 vertices of order at most 4");
  v.require(s4.all_proper && s4.has_p_normal && s4.agree(), "S4 verdicts");

  const auto a4g = grp::builtin("alternating", 4);
  const auto a4 = vtx::verify_vertex_theorem(a4g, f);
  auto alg = std::make_shared<rep::GroupAlgebra>(a4g, f);
  taut::Scope scope(std::make_shared<taut::Catalog>(alg));
  const auto triv = vtx::vertex(alg->trivial());
  v.require(scope.is_tau_rigid(alg->trivial()), "A4 trivial module tau-rigid");
  v.require(triv.vertex.order() == 4 && triv.sylow_order == 4, "vertex of the A4 trivial module is the Sylow V4");
  v.require(!a4.all_proper && !a4.has_p_normal && a4.agree(), "A4 verdicts");
  v.detail << "S4: " << s4.rows.size() << " tau-rigid indecomposables, largest vertex " << largest
           << "; A4: trivial vertex of order " << triv.vertex.order();
}

void criterion9(Verdict& v) {
  Context ctx(scenario("group = builtin:symmetric:3\nnormal = builtin:cyclic:3\n"));
  const auto& sb = ctx.small_blocks();
  const auto& bb = ctx.big_blocks();
  v.require(sb.size() == 3, "kC3 has 3 blocks");
  v.require(bb.size() == 2, "kS3 has 2 blocks");
  const blk::Block* dz = nullptr;
  for (const auto& b : bb)
    if (b.defect_zero && !b.principal) dz = &b;
  v.require(dz != nullptr, "kS3 has a defect-zero block");
  std::size_t round_trips = 0, nodes_ok = 0;
  for (std::size_t b = 1; dz && b < sb.size(); ++b) {
    v.require(blk::covers(ctx.normal(), ctx.big(), *dz, sb[b]), "covers " + sb[b].name);
    v.require(blk::inertia(ctx.normal(), sb[b]).order() == 3, "inertia of " + sb[b].name + " is C3");
    const auto d = blk::fong_correspondent(ctx.normal(), ctx.small(), sb[b], ctx.big(), *dz);
    const auto m = blk::verify_fong_morita(d, ctx.big());
    round_trips += m.checked;
    v.require(m.ok(), "Fong-Reynolds round trip for " + sb[b].name);
  }
  for (std::size_t b = 0; b < sb.size(); ++b)
    nodes_ok += ctx.block_poset(false, b).size() == 2;
  for (std::size_t b = 0; b < bb.size(); ++b)
    nodes_ok += ctx.block_poset(true, b).size() == 2;
  v.require(nodes_ok == sb.size() + bb.size(), "2 nodes on each side");
  const auto r = run_checks(ctx, {"block_p_extension", "block_star_conditions", "fong_reynolds"});
  for (const auto& c : r.checks) v.require(c.status == Status::pass, c.name);
  v.detail << sb.size() << " and " << bb.size() << " blocks, " << round_trips << " modules round-tripped";
}

void criterion10(Verdict& v) {
  std::size_t runs = 0;
  for (Scenario s : shipped()) {
    s.suites = {"audits"};
    Context ctx(s);
    for (const auto& c : run_checks(ctx).checks) {
      ++runs;
      v.require(c.status == Status::pass, s.name + ": " + c.name);
    }
  }
  v.detail << runs << " audits over " << shipped().size() << " scenarios";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"kS4 poset: 8 nodes, 8 edges, two chains of length 4", criterion1},
      {"kA4 poset: 32 nodes", criterion2},
      {"S4-invariant kA4 nodes induce onto kS4", criterion3},
      {"induction is not a monomorphism on 1 + 1/2", criterion4},
      {"the three star conditions agree", criterion5},
      {"module identities on 50 random instances", criterion6},
      {"trivial module rigidity on the battery", criterion7},
      {"vertices of tau-rigid modules", criterion8},
      {"blocks of C3 in S3", criterion9},
      {"consistency audits on shipped scenarios", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail.str()
              << std::endl;
  }
  return failed ? 1 : 0;
}
