#include "sttilt/harness/commands.hpp"

#include <filesystem>
#include <fstream>
#include <memory>

#include "sttilt/blk/covering.hpp"
#include "sttilt/error.hpp"
#include "sttilt/harness/checks.hpp"
#include "sttilt/harness/inspect.hpp"
#include "sttilt/taut/export.hpp"
#include "sttilt/vtx/vertex.hpp"

namespace sttilt::harness {

namespace {

std::string extension(const std::string& format) { return format == "dot" ? ".dot" : format == "json" ? ".json" : ".txt"; }

std::string render(const std::string& format, const taut::Scope& s, const taut::SttPoset& p, const taut::Markers& mk,
                   const std::string& title) {
  if (format == "dot") return taut::to_dot(s, p, mk, title);
  if (format == "json") return taut::to_json(s, p, mk) + "\n";
  return "# " + title + "\n" + taut::to_text(s, p, mk);
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
  if (!f) throw Error("cannot write " + name + " in " + dir);
  f << body;
}

std::string slug(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

/// Prints a report of the given suite and returns its exit code.
int run_suite(Context& ctx, const CommandOptions& o, const std::string& suite, std::ostream& out) {
  Scenario s = ctx.scenario();
  s.suites = {suite};
  Context scoped(s);
  const auto r = run_checks(scoped, o.only);
  out << (o.format == "json" ? r.to_json(o.timings) + "\n" : r.to_text(o.timings));
  return r.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int cmd_stt(const CommandOptions& o, std::ostream& out) {
  Context ctx(o.scenario);
  const bool proper = ctx.normal().order() < ctx.big_group()->order();
  taut::Markers big_mk, small_mk;
  if (proper) {
    const auto& r = ctx.induction();
    for (std::size_t i = 0; i < r.invariant.size(); ++i) {
      const std::string tag = "pair" + std::to_string(i);
      small_mk[r.invariant[i]] = {"invariant", tag};
      if (r.induced[i] >= 0) big_mk[r.induced[i]].push_back(tag);
    }
    for (int v : r.star) big_mk[v].insert(big_mk[v].begin(), "star");
  }

  struct Item {
    std::string file;
    std::string title;
    const taut::Scope* scope;
    const taut::SttPoset* poset;
    taut::Markers markers;
  };
  std::vector<Item> items;
  const std::string base = slug(o.scenario.name);
  items.push_back({base + "_overgroup", ctx.big_group()->name(), &ctx.big_scope(), &ctx.big_poset(), big_mk});
  if (proper) items.push_back({base + "_normal", ctx.normal().group->name(), &ctx.small_scope(), &ctx.small_poset(), small_mk});
  if (ctx.big_blocks().size() > 1)
    for (std::size_t b = 0; b < ctx.big_blocks().size(); ++b)
      items.push_back({base + "_overgroup_" + ctx.big_blocks()[b].name, ctx.big_group()->name() + " " + ctx.big_blocks()[b].name,
                       &ctx.block_scope(true, b), &ctx.block_poset(true, b), {}});
  if (proper && ctx.small_blocks().size() > 1)
    for (auto b : ctx.selected_small_blocks())
      items.push_back({base + "_normal_" + ctx.small_blocks()[b].name, ctx.normal().group->name() + " " + ctx.small_blocks()[b].name,
                       &ctx.block_scope(false, b), &ctx.block_poset(false, b), {}});

  for (const auto& it : items) {
    const auto [longest, shortest] = it.poset->chain_lengths();
    out << it.title << ": " << it.poset->size() << " nodes, " << it.poset->edges.size() << " edges, "
        << it.poset->count_maximal_chains() << " maximal chains of length " << shortest;
    if (longest != shortest) out << " to " << longest;
    out << "\n";
    const std::string body = render(o.format, *it.scope, *it.poset, it.markers, it.title);
    if (o.out_dir.empty()) {
      if (&it == &items.front()) out << body;
    } else {
      write_file(o.out_dir, it.file + extension(o.format), body);
    }
  }
  if (proper) {
    const auto& r = ctx.induction();
    out << r.invariant.size() << " invariant nodes, " << r.star.size() << " star nodes\n";
  }
  return kExitOk;
}

int cmd_verify(const CommandOptions& o, std::ostream& out) {
  Context ctx(o.scenario);
  const auto r = run_checks(ctx, o.only);
  const std::string body = o.format == "json" ? r.to_json(o.timings) + "\n" : r.to_text(o.timings);
  out << body;
  if (!o.out_dir.empty())
    write_file(o.out_dir, slug(o.scenario.name) + "_report" + (o.format == "json" ? ".json" : ".txt"), body);
  return r.ok() ? kExitOk : kExitFailed;
}

int cmd_blocks(const CommandOptions& o, std::ostream& out) {
  Context ctx(o.scenario);
  auto list = [&](const std::string& g, const rep::GroupAlgebra& a, const std::vector<blk::Block>& bs) {
    for (const auto& b : bs) {
      out << g << " " << b.name << ": dim " << b.dim << ", simples";
      for (auto i : b.simples) out << " " << a.label(i);
      if (b.principal) out << ", principal";
      if (b.defect_zero) out << ", defect zero";
      out << "\n";
    }
  };
  list(ctx.big_group()->name(), ctx.big(), ctx.big_blocks());
  list(ctx.normal().group->name(), ctx.small(), ctx.small_blocks());
  for (auto b : ctx.selected_small_blocks()) {
    const auto& sb = ctx.small_blocks()[b];
    out << sb.name << ": inertia of order " << blk::inertia(ctx.normal(), sb).order() << ", covered by";
    for (const auto& bt : ctx.big_blocks())
      if (blk::covers(ctx.normal(), ctx.big(), bt, sb)) {
        const auto d = blk::fong_correspondent(ctx.normal(), ctx.small(), sb, ctx.big(), bt);
        out << " " << bt.name << " (correspondent " << d.inertia_blocks[d.beta].name << ")";
      }
    out << "\n";
  }
  return run_suite(ctx, o, "blocks", out);
}

int cmd_vertex(const CommandOptions& o, std::ostream& out) {
  Context ctx(o.scenario);
  auto show = [&](const grp::GroupPtr& g) {
    const auto r = vtx::verify_vertex_theorem(g, ctx.field());
    out << g->name() << " (Sylow order " << grp::sylow(g, r.p).order() << ")\n";
    for (const auto& row : r.rows)
      out << "  " << row.name << ": dim " << row.dim << ", vertex of order " << row.vertex_order
          << (row.proper ? "" : ", full") << "\n";
    out << "  every vertex proper: " << (r.all_proper ? "yes" : "no")
        << "; normal subgroup of p-power index: " << (r.has_p_normal ? "yes" : "no") << "\n";
  };
  show(ctx.big_group());
  if (ctx.normal().order() < ctx.big_group()->order()) show(ctx.normal().group);
  return run_suite(ctx, o, "vertices", out);
}

int cmd_inspect(const CommandOptions& o, std::ostream& out) {
  InspectOptions io;
  io.p = o.scenario.p;
  io.field_degree = o.scenario.field_degree;
  std::unique_ptr<Context> ctx;
  if (!o.scenario.group.empty()) {
    ctx = std::make_unique<Context>(o.scenario);
    io.scenario = ctx.get();
  }
  out << inspect(o.expression, io).to_text();
  return kExitOk;
}

}  // namespace sttilt::harness
