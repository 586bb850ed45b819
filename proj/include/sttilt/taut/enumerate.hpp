#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sttilt/taut/pair.hpp"

namespace sttilt::taut {

/// Support tau-tilting pairs of a scope with the Hasse arrows given by left
/// mutation (from the larger to the smaller pair).  Node 0 is the top.
struct SttPoset {
  std::vector<SttPair> nodes;
  std::vector<std::pair<int, int>> edges;
  /// reach[a][b]: b can be reached from a along arrows (so b <= a).
  std::vector<std::vector<char>> reach;

  int find(const SttPair& t) const;
  std::size_t size() const { return nodes.size(); }
  int top() const { return 0; }
  int bottom() const;
  bool below(int b, int a) const { return reach[a][b] != 0; }
  /// Longest and shortest arrow counts from top to bottom.
  std::pair<std::size_t, std::size_t> chain_lengths() const;
  /// Number of maximal chains from top to bottom.
  std::size_t count_maximal_chains() const;

  std::map<SttPair, int> index;
};

struct EnumerateOptions {
  std::size_t cap = 100000;
  /// Compare the Fac order with reachability on every pair of nodes.
  bool audit_order = true;
};

/// Breadth-first closure of the top pair under left mutation.  Mutations of a
/// frontier are computed in parallel; new summands are registered serially in
/// a fixed order, so node numbering does not depend on scheduling.
SttPoset enumerate(const Scope& s, const EnumerateOptions& opt = {});

/// Throws ConsistencyError naming the first pair on which the Fac order and
/// reachability disagree.
void audit_order(const Scope& s, const SttPoset& poset);

}  // namespace sttilt::taut
