#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "sttilt/error.hpp"
#include "sttilt/harness/checks.hpp"
#include "sttilt/harness/commands.hpp"
#include "sttilt/harness/inspect.hpp"
#include "sttilt/taut/mutation.hpp"

#include <json.hpp>

using namespace sttilt;
using namespace sttilt::harness;

namespace {

Scenario small_scenario(int instances = 4) {
  Scenario s = parse_scenario("group = builtin:symmetric:3\nnormal = builtin:cyclic:3\n");
  s.instances = instances;
  return s;
}

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("manifest covers every statement exactly once") {
  // each statement under test, by check name; a missing or extra check fails here
  const std::vector<std::string> expected{
      "transitivity", "tensor_identity", "frobenius_reciprocity", "projectives_preserved", "mackey",
      "eckmann_shapiro", "induction_commutes_with_syzygy", "restriction_is_invariant",
      "restriction_commutes_with_syzygy", "restriction_preserves_rigidity", "completion_criterion",
      "restriction_of_star_nodes", "tensor_decomposition", "relative_tensor_equivalence", "star_conditions_agree",
      "induced_poset_isomorphism", "p_power_index_isomorphism", "induction_not_monomorphic",
      "trivial_module_rigidity", "tau_rigid_completable", "vertex_characterization", "relative_projectivity",
      "vertex_projectivity", "block_idempotents", "covering_criteria", "principal_block_inertia",
      "induced_summands_cover", "unique_covering_block", "fong_reynolds", "fong_induction_identity",
      "block_restriction_of_star_nodes", "block_star_conditions", "block_morita_posets", "block_p_extension",
      "block_tensor_decomposition", "order_audit", "maximality", "twist_automorphisms", "mutation_involution",
      "block_poset_product"};
  std::vector<std::string> names;
  for (const auto& c : manifest()) {
    names.push_back(c.name);
    CHECK(std::find(all_suites().begin(), all_suites().end(), c.suite) != all_suites().end());
    CHECK(!c.statement.empty());
  }
  CHECK(names == expected);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("selected suites appear exactly once in the report") {
  Scenario s = small_scenario();
  s.suites = {"audits", "vertices"};
  Context ctx(s);
  const auto r = run_checks(ctx);
  std::vector<std::string> got, want;
  for (const auto& c : r.checks) got.push_back(c.name);
  for (const auto& c : manifest())
    if (c.suite == "audits" || c.suite == "vertices") want.push_back(c.name);
  CHECK(got == want);
  CHECK(r.ok());
}

TEST_CASE("scenario files") {
  const Scenario s = parse_scenario("# comment\nname = x\np = 3\ngroup = builtin:symmetric:3  # trailing\nseed = 7\n");
  CHECK(s.p == 3);
  CHECK(s.seed == 7);
  CHECK(s.group == "builtin:symmetric:3");
  CHECK(parse_scenario(to_text(s)).seed == 7);
  CHECK(to_text(parse_scenario(to_text(s))) == to_text(s));

  CHECK(parse_error_position("group = builtin:cyclic:2\nnonsense\n") == 25);
  CHECK(parse_error_position("group = builtin:cyclic:2\np = two\n") == 28);
  CHECK(parse_error_position("group = builtin:cyclic:2\nsuites = modules bogus\n") == 33);
  CHECK(parse_error_position("group = builtin:cyclic:2\ncolour = red\n") == 25);
  CHECK_THROWS_AS(parse_scenario("p = 2\n"), ParseError);

  CHECK_THROWS_AS(Context(parse_scenario("group = builtin:symmetric:3\nnormal = perm:3:(1 2)\n")), MismatchError);
  CHECK_THROWS_AS(Context(parse_scenario("p = 4\ngroup = builtin:cyclic:2\n")), MismatchError);
  // defaults are spelled out after resolution
  Context ctx(parse_scenario("group = builtin:symmetric:4\n"));
  CHECK(ctx.scenario().field_degree == 2);
}

TEST_CASE("inspect") {
  const auto tau = inspect("tau(triv(S4))");
  CHECK(tau.dim == 9);
  CHECK(!tau.tau_rigid);
  CHECK(tau.summands.size() == 1);
  CHECK(tau.summands[0].vertex_order == 8);

  const auto ind = inspect("ind(A4,S4, sum(simple1, stack(1,2)))");
  CHECK(ind.group == "S4");
  CHECK(ind.decomposition() == "1'/1'/2' + 1'/1'");
  CHECK(ind.tau_rigid);

  const auto res = inspect("restrict(S4,A4, proj(1'))");
  CHECK(res.group == "A4");
  CHECK(res.projective);
  CHECK(res.summands.size() == 1);
  CHECK(res.summands[0].multiplicity == 2);
  CHECK(res.summands[0].vertex_order == 1);

  const auto conj = inspect("conj(A4,S4,\"(1 2)\",stack(1,2))");
  CHECK(conj.decomposition() == "1/3");
  CHECK(inspect("block(B1, regular(S3))").decomposition() == "2 + 2");
  const auto twist = inspect("tensor(dual(simple2), sum(simple2, triv(C3)))");
  CHECK(twist.dim == 2);
  CHECK(twist.summands.size() == 2);
  CHECK(twist.projective);
}

TEST_CASE("inspect errors carry positions") {
  auto pos = [](const std::string& e) -> long {
    try {
      inspect(e);
    } catch (const ParseError& x) {
      return static_cast<long>(x.position());
    } catch (const MismatchError&) {
      return -2;
    }
    return -1;
  };
  CHECK(pos("sum(simple1, ") == 13);
  CHECK(pos("tensor(simple2, simple3") == 23);
  CHECK(pos("triv(Q8)") == 5);
  CHECK(pos("proj(7, triv(S3))") == 0);
  CHECK(pos("simple(9)") == 0);
  CHECK(pos("conj(A4,S4,\"(1 5)\",triv(A4))") == 16);  // just past the bad point
  CHECK(pos("ind(C2,C4,triv(C2))") == -2);
}

TEST_CASE("reports and artifacts are deterministic") {
  auto run = [] {
    Context ctx(small_scenario());
    const auto r = run_checks(ctx);
    return r.to_text() + r.to_json();
  };
  const std::string a = run();
  CHECK(a == run());
  CommandOptions o;
  o.scenario = small_scenario();
  o.format = "dot";
  std::ostringstream x, y;
  CHECK(cmd_stt(o, x) == kExitOk);
  CHECK(cmd_stt(o, y) == kExitOk);
  CHECK(x.str() == y.str());
  CHECK(x.str().find("digraph") != std::string::npos);
}

TEST_CASE("verify report on C3 in S3") {
  Context ctx(small_scenario());
  const auto r = run_checks(ctx);
  CHECK(r.ok());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.status != Status::fail, c.name);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["checks"].size() == manifest().size());
  CHECK(r.to_text().find("field = GF(2^2)") != std::string::npos);
}

TEST_CASE("a failing check is reported, not thrown") {
  Outcome o;
  for (int i = 0; i < 20; ++i) o.fail("w" + std::to_string(i));
  CHECK(o.status == Status::fail);
  CHECK(o.witnesses.size() == 8);

  VerificationReport r;
  r.checks.push_back({"x", "audits", "s", Status::fail, {"why"}});
  CHECK(!r.ok());
  CHECK(r.to_text().find("FAILED 0/1") != std::string::npos);
  r.checks[0].status = Status::skipped;
  CHECK(r.ok());
}

TEST_CASE("mutation is an involution on kS4") {
  Context ctx(parse_scenario("group = builtin:symmetric:4\n"));
  const auto& s = ctx.big_scope();
  const auto& poset = ctx.big_poset();
  for (const auto& t : poset.nodes)
    for (std::size_t i = 0; i < s.rank(); ++i) {
      const auto u = taut::mutate(s, t, i);
      CHECK(poset.find(u) >= 0);
      CHECK(u != t);
      // position of the new summand in u, counting P after M
      std::size_t back = s.rank();
      for (std::size_t j = 0; j < u.m.size(); ++j)
        if (!std::binary_search(t.m.begin(), t.m.end(), u.m[j])) back = j;
      for (std::size_t j = 0; j < u.p.size(); ++j)
        if (!std::binary_search(t.p.begin(), t.p.end(), u.p[j])) back = u.m.size() + j;
      REQUIRE(back < s.rank());
      CHECK(taut::mutate(s, u, back) == t);
    }
}

TEST_CASE("maximality fails for a non-maximal pair") {
  Context ctx(parse_scenario("group = builtin:symmetric:4\n"));
  const auto& s = ctx.big_scope();
  const auto& poset = ctx.big_poset();
  std::vector<int> all(s.catalog().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  for (const auto& t : poset.nodes) {
    CHECK(s.maximality_check(t, all));
    if (t.m.size() < 2) continue;
    // dropping a summand leaves room for it
    taut::SttPair smaller = t;
    smaller.m.pop_back();
    CHECK(!s.maximality_check(smaller, all));
  }
}
