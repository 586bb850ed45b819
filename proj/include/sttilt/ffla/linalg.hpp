#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sttilt/ffla/matrix.hpp"

namespace sttilt::ffla {

struct Echelon {
  Matrix rref;                       // rank x cols, reduced, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Rows form a basis of {x : a x = 0}.
Matrix kernel(const Matrix& a);

struct Solution {
  std::optional<std::vector<Elt>> particular;
  Matrix kernel;  // rows form a basis of the kernel of A
};
/// Solve a x = b.
Solution solve(const Matrix& a, const std::vector<Elt>& b);

/// Some X with a X = b, if one exists.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);
bool invertible(const Matrix& a);

// Subspaces of F^n are carried as matrices whose rows span them.

/// Reduced basis: RREF with zero rows dropped.
Matrix reduce_basis(const Matrix& rows);
/// Reduce v against an RREF basis; returns the residue.
std::vector<Elt> reduce_vector(const Echelon& e, std::vector<Elt> v);
bool in_span(const Echelon& e, const std::vector<Elt>& v);
/// Coefficients c with sum c_i rows_i = v, if v lies in the row span.
std::optional<std::vector<Elt>> coordinates(const Matrix& rows, const std::vector<Elt>& v);

Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersect(const Matrix& a, const Matrix& b);
/// Unit vectors completing an RREF basis to F^n (the non-pivot coordinates).
Matrix complement(const Echelon& e);
bool subspace_contains(const Matrix& big, const Matrix& small);

}  // namespace sttilt::ffla
