#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sttilt/rep/module.hpp"

namespace sttilt::harness {

class Context;

/// Expression language for single modules:
///   triv(G) regular(G) simpleN simple(label) proj(label) stack(l1,l2,...)
///   sum(x,...) tensor(x,y) dual(x) omega(x) tau(x)
///   ind(H,G,x) restrict(G,H,x) conj(H,G,"(1 2)",x) block(B1,x)
/// Groups are Sn, An, Cn, Dn (order n), V4, and G / N for the overgroup and
/// normal subgroup of a scenario.  Atoms without a group take it from the
/// enclosing call, or from the largest group named anywhere.  With more
/// than one group named, the largest one's labels carry a prime.
struct InspectOptions {
  int p = 2;
  int field_degree = 0;            // 0 picks a splitting field for the largest group
  const Context* scenario = nullptr;  // supplies G and N; its field wins
};

struct InspectSummand {
  std::string stack;
  std::size_t dim = 0;
  std::size_t multiplicity = 1;
  bool projective = false;
  std::string block;
  std::size_t vertex_order = 0;
  std::string vertex;  // generators of the vertex, in cycle notation
};

struct InspectReport {
  std::string expression;
  std::string group;
  std::string field;
  rep::GModule module;
  std::size_t dim = 0;
  std::string stack;
  std::vector<InspectSummand> summands;
  bool projective = false;
  bool tau_rigid = false;

  /// Summands joined by " + ", repeated by multiplicity.
  std::string decomposition() const;
  std::string to_text() const;
};

/// Throws ParseError (with the offending offset) on malformed input and
/// MismatchError on modules over the wrong group.
InspectReport inspect(const std::string& expression, const InspectOptions& opt = {});

}  // namespace sttilt::harness
