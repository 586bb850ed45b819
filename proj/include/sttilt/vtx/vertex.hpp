#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sttilt/grp/subgroup.hpp"
#include "sttilt/rep/module.hpp"

namespace sttilt::vtx {

using rep::GModule;

/// x is isomorphic to a direct summand of y, for indecomposable x: some
/// composite x -> y -> x of basis homomorphisms is invertible.
bool is_summand(const GModule& x, const GModule& y);

/// Every indecomposable summand of M is a summand of Ind_H Res_H M.
bool is_rel_projective(const GModule& m, const grp::Subgroup& h);
/// Higman's criterion: id_M is a relative trace Tr_H^G of some kH-endomorphism.
bool higman_rel_projective(const GModule& m, const grp::Subgroup& h);

struct VertexReport {
  GModule module;
  grp::Subgroup vertex;
  std::size_t sylow_order = 0;
  bool proper = false;  // |vertex| < |Sylow|
};

/// Smallest subgroup of a Sylow p-subgroup (up to conjugacy) over which the
/// indecomposable m is relatively projective.
VertexReport vertex(const GModule& m);

struct VertexTheoremReport {
  int p = 0;
  // left: every indecomposable tau-rigid module has a proper vertex
  bool all_proper = false;
  // right: a normal subgroup of p-power index > 1 exists
  bool has_p_normal = false;
  std::optional<grp::Subgroup> normal_witness;
  std::optional<std::string> full_vertex_witness;  // stack name of a module
  struct Row {
    std::string name;
    std::size_t dim = 0;
    std::size_t vertex_order = 0;
    bool proper = false;
  };
  std::vector<Row> rows;
  bool agree() const { return all_proper == has_p_normal; }
};

/// Evaluates both sides of the vertex characterization of tau-rigid modules
/// over kG, using the enumerated support tau-tilting poset.
VertexTheoremReport verify_vertex_theorem(const grp::GroupPtr& g, const ffla::Field& f);

}  // namespace sttilt::vtx
