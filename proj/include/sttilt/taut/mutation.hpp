#pragma once

#include <optional>

#include "sttilt/taut/pair.hpp"

namespace sttilt::taut {

/// The module-level half of a left mutation at summand `index` of M: the
/// cokernel of a minimal left add(M/X)-approximation of X, decomposed but not
/// yet registered.  Safe to compute concurrently.
struct MutationDraft {
  bool applicable = false;  // X is not in Fac(M/X)
  std::vector<int> kept;
  std::vector<GModule> cokernel_summands;
  std::optional<std::size_t> new_projective;
};
MutationDraft draft_left_mutation(const Scope& s, const SttPair& t, std::size_t index);

/// Registers the new summands and validates the result as a support
/// tau-tilting pair; a failed validation throws ConsistencyError.
SttPair finish_mutation(const Scope& s, const SttPair& t, const MutationDraft& d);

/// Left mutation at summand `index` of M, if X is not in Fac(M/X).
std::optional<SttPair> left_mutate(const Scope& s, const SttPair& t, std::size_t index);

/// Indices of the simples of the contragredient duals of the simples in s.
Scope dual_scope(const Scope& s);

/// The duality between pairs and pairs over the opposite algebra (realised
/// for kG through contragredient duals): (M, P) goes to
/// ((tau M_np)^* + P^*, (M_pr)^*).  The result lives in dual_scope(s).
SttPair dagger(const Scope& s, const SttPair& t);

/// Mutation at summand `index`: indices below |M| refer to M, the rest to P.
/// Left when that summand is not generated by the others, right otherwise
/// (computed as a left mutation of the dagger).
SttPair mutate(const Scope& s, const SttPair& t, std::size_t index);

}  // namespace sttilt::taut
