#pragma once

#include <string>
#include <vector>

#include "sttilt/grp/subgroup.hpp"
#include "sttilt/rep/algebra.hpp"

namespace sttilt::blk {

using ffla::Elt;
using rep::GModule;
using rep::GroupAlgebra;

/// Elements of kG as coefficient vectors over the group's element table.
using AlgebraElement = std::vector<Elt>;

AlgebraElement algebra_one(const grp::Group& g);
AlgebraElement algebra_mul(const grp::Group& g, const ffla::Field& f, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_add(const ffla::Field& f, const AlgebraElement& a, const AlgebraElement& b);
/// x a x^-1
AlgebraElement algebra_conj(const grp::Group& g, const AlgebraElement& a, int x);
/// Image of an element of kH in kG for a subgroup H.
AlgebraElement algebra_embed(const grp::Subgroup& h, const AlgebraElement& a);
bool algebra_is_zero(const AlgebraElement& a);

struct Block {
  AlgebraElement idempotent;
  std::vector<std::size_t> simples;  // indices into the algebra's simples
  std::size_t dim = 0;               // dimension of the two-sided ideal
  bool principal = false;
  bool defect_zero = false;
  std::string name;                  // "B0", "B1", ...
};

/// Central primitive idempotents of kG, principal block first.  Splits the
/// identity by the primary decomposition of multiplication by class sums.
std::vector<Block> blocks(const GroupAlgebra& a);

/// Checks centrality, idempotency, orthogonality, completeness and
/// Sum dim = |G|; returns a description of the first failure or "".
std::string audit_blocks(const GroupAlgebra& a, const std::vector<Block>& bs);

/// The summand e M.
GModule project(const Block& b, const GModule& m);
/// Index of the block acting as the identity on an indecomposable module;
/// throws MismatchError if there is none.
std::size_t block_of(const std::vector<Block>& bs, const GModule& m);

}  // namespace sttilt::blk
