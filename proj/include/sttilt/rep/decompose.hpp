#pragma once

#include <cstdint>
#include <vector>

#include "sttilt/rep/meataxe.hpp"

namespace sttilt::rep {

struct Summand {
  GModule module;
  Matrix inclusion;   // m.dim x k
  Matrix projection;  // k x m.dim, projection * inclusion = id
};

/// Endomorphism ring of an indecomposable module together with its Jacobson
/// radical.  residue_degree is [End/J : k].
struct LocalEnd {
  std::vector<Matrix> basis;
  std::vector<Matrix> radical;
  std::size_t residue_degree = 1;
};

/// Either a nontrivial splitting of m into submodules (rows), or a
/// certificate that End(m) is local.
struct EndSplit {
  std::vector<Matrix> components;
  LocalEnd local;
  bool split() const { return components.size() > 1; }
};
EndSplit split_or_certify(const GModule& m, Rng& rng, int budget = kDefaultBudget);

/// Krull-Schmidt decomposition.  The inclusions together form an invertible
/// change of basis; the projections are the matching rows of its inverse.
std::vector<Summand> decompose(const GModule& m, std::uint64_t seed = 1, int budget = kDefaultBudget);

bool is_indecomposable(const GModule& m, std::uint64_t seed = 1);

/// Indecomposable modules x, y are isomorphic iff some element of a basis of
/// Hom(x, y) is invertible (the non-isomorphisms form a proper subspace).
bool isomorphic_indecomposables(const GModule& x, const GModule& y);

}  // namespace sttilt::rep
