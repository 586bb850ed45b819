#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sttilt/harness/scenario.hpp"

namespace sttilt::harness {

struct CommandOptions {
  Scenario scenario;
  std::string format = "text";  // dot | json | text
  std::string out_dir;          // empty: print to the stream only
  std::vector<std::string> only;  // verify: restrict to these check names
  bool timings = false;
  std::string expression;       // inspect
};

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Posets of the overgroup, the normal subgroup and their blocks, with
/// invariant nodes, star nodes and matching "pairK" classes marked.
int cmd_stt(const CommandOptions& o, std::ostream& out);
/// The verification report of the selected suites.
int cmd_verify(const CommandOptions& o, std::ostream& out);
/// Blocks, covering, inertia and Fong-Reynolds data, then the block suite.
int cmd_blocks(const CommandOptions& o, std::ostream& out);
/// Vertices of the tau-rigid indecomposables on both groups, then the vertex suite.
int cmd_vertex(const CommandOptions& o, std::ostream& out);
int cmd_inspect(const CommandOptions& o, std::ostream& out);

}  // namespace sttilt::harness
