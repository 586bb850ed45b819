#pragma once

#include <vector>

#include "sttilt/rep/module.hpp"

namespace sttilt::rep {

/// Basis of Hom_kG(M, N) as N.dim x M.dim matrices.
std::vector<Matrix> hom_space(const GModule& m, const GModule& n);
std::size_t hom_dim(const GModule& m, const GModule& n);

/// rho_N(g) h = h rho_M(g) for every generator.
bool is_hom(const Matrix& h, const GModule& m, const GModule& n);

/// Flatten a list of equally shaped matrices to the rows of one matrix.
Matrix flatten(const std::vector<Matrix>& ms, std::size_t rows, std::size_t cols);
/// Inverse of flatten for one row.
Matrix unflatten(const Field& f, const Elt* row, std::size_t rows, std::size_t cols);

}  // namespace sttilt::rep
