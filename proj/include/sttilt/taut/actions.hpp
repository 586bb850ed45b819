#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sttilt/grp/subgroup.hpp"
#include "sttilt/taut/enumerate.hpp"

namespace sttilt::taut {

using ModuleMap = std::function<GModule(const GModule&)>;
/// Node i goes to node map[i], or -1 when the image is not a node.
using NodeMap = std::vector<int>;

/// Image of a pair under an additive functor between scopes: the distinct
/// summands of F(M), and the projective covers whose sum is F(P).  Returns
/// nothing if F(P) is not projective.
std::optional<SttPair> map_pair(const Scope& from, const SttPair& t, const Scope& to, const ModuleMap& f);

NodeMap map_nodes(const Scope& from, const SttPoset& src, const std::vector<int>& nodes, const Scope& to,
                  const SttPoset& dst, const ModuleMap& f);

/// M -> gM for g in the overgroup of a normal subgroup carrying the scope.
NodeMap conjugation_twist(const Scope& s, const SttPoset& poset, const grp::Subgroup& normal, int g);
/// M -> basic(L (x) M) followed by `project` (identity for the whole algebra).
NodeMap tensor_twist(const Scope& s, const SttPoset& poset, const GModule& l, const ModuleMap& project = {});

/// A bijection of the nodes preserving the order in both directions.
bool is_automorphism(const SttPoset& poset, const NodeMap& map);

/// Nodes fixed by conjugation with every listed element.
std::vector<int> invariant_nodes(const Scope& s, const SttPoset& poset, const grp::Subgroup& normal,
                                 const std::vector<int>& elements);

/// Data for comparing a scope over kG with one over an overgroup through
/// (projected) induction.
struct Induction {
  const Scope* small = nullptr;
  const SttPoset* small_poset = nullptr;
  const Scope* big = nullptr;
  const SttPoset* big_poset = nullptr;
  grp::Subgroup normal;         // G inside the overgroup
  std::vector<int> invariance;  // overgroup elements defining invariance
  ModuleMap project_big;        // block projection on the big side, or empty
  std::vector<GModule> quotient_simples;  // simples of the quotient, inflated
};

struct InductionReport {
  std::vector<int> invariant;  // small nodes
  NodeMap induced;             // per invariant node
  bool injective = false;
  bool order_embedding = false;  // a <= b iff Ind a <= Ind b
  // per big node: equivalent conditions of the main theorem
  std::vector<char> cond_induced, cond_relative, cond_tensor;
  std::vector<int> star;
  bool image_is_star = false;
  std::vector<std::string> problems;
};

/// Evaluates invariance, the induced map and all three conditions on every
/// node; records disagreements in `problems` instead of throwing.
InductionReport analyse_induction(const Induction& in);

}  // namespace sttilt::taut
