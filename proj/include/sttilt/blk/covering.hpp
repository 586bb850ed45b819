#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sttilt/blk/block.hpp"

namespace sttilt::blk {

/// 1_B 1_Bt != 0 in the group algebra of the overgroup.
bool covers(const grp::Subgroup& normal, const GroupAlgebra& big, const Block& bt, const Block& b);

/// Stabilizer of 1_B under conjugation by the overgroup.
grp::Subgroup inertia(const grp::Subgroup& normal, const Block& b);

/// B (over G), a block Bt over the overgroup covering it, the inertial
/// group I and the block beta of kI with sum_x x 1_beta x^-1 = 1_Bt.
struct FongDatum {
  grp::Subgroup normal;           // G in the overgroup
  grp::Subgroup inertia;          // I in the overgroup
  grp::Subgroup normal_in_inertia;  // G in I, sharing G's group object
  std::shared_ptr<const GroupAlgebra> inertia_algebra;
  std::vector<Block> inertia_blocks;
  std::size_t beta = 0;
  Block b;
  Block bt;
};

FongDatum fong_correspondent(const grp::Subgroup& normal, const GroupAlgebra& small, const Block& b,
                             const GroupAlgebra& big, const Block& bt);

/// Bt Ind M
GModule block_induce(const Block& bt, const GModule& m, const grp::Subgroup& normal);
/// beta Res_I Mt
GModule block_restrict(const Block& beta, const GModule& mt, const grp::Subgroup& inertia);

struct MoritaReport {
  std::size_t checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Round trips Ind_I and beta Res_I on the simples and projectives of beta
/// and of Bt, and compares Hom dimensions on both sides.
MoritaReport verify_fong_morita(const FongDatum& d, const GroupAlgebra& big);

}  // namespace sttilt::blk
