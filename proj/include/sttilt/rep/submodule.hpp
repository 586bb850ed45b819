#pragma once

#include "sttilt/rep/module.hpp"

namespace sttilt::rep {

// Subspaces of a module are matrices whose rows span them (see ffla/linalg).

/// Smallest submodule containing the given row vectors, as an RREF basis.
Matrix spin(const GModule& m, const Matrix& rows);
bool is_invariant(const GModule& m, const Matrix& rows);

struct Sub {
  GModule module;
  Matrix inclusion;  // m.dim x k, columns are the basis
};
/// Module structure on an invariant subspace.
Sub submodule(const GModule& m, const Matrix& rows);

struct Quo {
  GModule module;
  Matrix projection;  // (m.dim - k) x m.dim
};
Quo quotient(const GModule& m, const Matrix& rows);

/// Row basis of the column space of h.
Matrix image_rows(const Matrix& h);
/// Row basis of the null space of h.
Matrix kernel_rows(const Matrix& h);

/// Image of a submodule (given by rows in the coordinates of a module X)
/// under a linear map h: X -> Y, as rows.
Matrix map_rows(const Matrix& h, const Matrix& rows);

}  // namespace sttilt::rep
