#pragma once

#include <vector>

#include "sttilt/rep/algebra.hpp"

namespace sttilt::rep {

/// Uniserial module with the given simple indices as radical layers, top
/// first: P(a) modulo the kernel of a surjection rad P(a) -> stack(rest).
/// Throws MismatchError if no such module exists.
GModule stack(const GroupAlgebra& a, const std::vector<std::size_t>& layers);

/// Cyclic submodule of m spun from a random vector.
GModule random_cyclic_submodule(const GModule& m, Rng& rng);
/// Quotient of m by a random cyclic submodule.
GModule random_cyclic_quotient(const GModule& m, Rng& rng);

}  // namespace sttilt::rep
