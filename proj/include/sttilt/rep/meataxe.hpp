#pragma once

#include <optional>
#include <random>
#include <vector>

#include "sttilt/rep/module.hpp"

namespace sttilt::rep {

using Rng = std::mt19937_64;

inline constexpr int kDefaultBudget = 200;

/// A random element of the group algebra acting on m.
Matrix random_algebra_element(const GModule& m, Rng& rng);

/// Proper nonzero submodule (RREF rows), or nothing if m is irreducible.
/// Irreducibility is certified by the Holt-Rees form of Norton's test; throws
/// InconclusiveError once `budget` random elements have been drawn.
std::optional<Matrix> find_submodule(const GModule& m, Rng& rng, int budget = kDefaultBudget);

bool is_irreducible(const GModule& m, Rng& rng, int budget = kDefaultBudget);

/// Composition factors with repetition, bottom to top of one series.
std::vector<GModule> composition_factors(const GModule& m, Rng& rng, int budget = kDefaultBudget);

}  // namespace sttilt::rep
