#include <iostream>

#include <CLI11.hpp>

#include "sttilt/error.hpp"
#include "sttilt/harness/commands.hpp"

using namespace sttilt;
using namespace sttilt::harness;

int main(int argc, char** argv) {
  CLI::App app{"support tau-tilting posets of group algebras under normal inclusions"};
  app.require_subcommand(1);

  CommandOptions opt;
  std::string scenario_file;
  std::optional<int> p, field_degree;
  std::optional<std::string> group, normal, block, suites;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  std::optional<int> instances;

  auto common = [&](CLI::App* c) {
    c->add_option("--scenario", scenario_file, "scenario file (flags override its values)");
    c->add_option("--p", p, "characteristic");
    c->add_option("--field-degree", field_degree, "field GF(p^m); 0 picks a splitting field");
    c->add_option("--group", group, "overgroup, e.g. builtin:symmetric:4 or perm:4:(1 2),(1 2 3 4)");
    c->add_option("--normal", normal, "normal subgroup in the same notation");
    c->add_option("--block", block, "block of the normal subgroup, e.g. B1");
    c->add_option("--seed", seed, "random seed");
    c->add_option("--cap", cap, "maximum number of poset nodes");
    c->add_option("--out-dir", opt.out_dir, "write artifacts here");
    c->add_option("--format", opt.format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
    c->add_flag("--timings", opt.timings, "include timings in reports");
  };

  auto* stt = app.add_subcommand("stt", "enumerate the posets and write diagrams");
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  auto* blocks = app.add_subcommand("blocks", "blocks, covering and the block suite");
  auto* vertex = app.add_subcommand("vertex", "vertices of tau-rigid modules and the vertex suite");
  auto* insp = app.add_subcommand("inspect", "evaluate a module expression");
  for (auto* c : {stt, verify, blocks, vertex, insp}) common(c);
  verify->add_option("--suite", suites, "space separated suites to run");
  verify->add_option("--check", opt.only, "run only these checks");
  verify->add_option("--instances", instances, "random instances per identity");
  insp->add_option("expression", opt.expression, "module expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!scenario_file.empty()) opt.scenario = load_scenario(scenario_file);
    auto& s = opt.scenario;
    if (p) s.p = *p;
    if (field_degree) s.field_degree = *field_degree;
    if (group) s.group = *group;
    if (normal) s.normal = *normal;
    if (block) s.block = *block;
    if (seed) s.seed = *seed;
    if (cap) s.cap = *cap;
    if (instances) s.instances = *instances;
    if (suites) s.suites = parse_scenario("suites = " + *suites).suites;
    if (!insp->parsed() && s.group.empty()) {
      std::cerr << "a group is required (--group or --scenario)\n";
      return kExitUsage;
    }
    if (stt->parsed()) return cmd_stt(opt, std::cout);
    if (verify->parsed()) return cmd_verify(opt, std::cout);
    if (blocks->parsed()) return cmd_blocks(opt, std::cout);
    if (vertex->parsed()) return cmd_vertex(opt, std::cout);
    return cmd_inspect(opt, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
