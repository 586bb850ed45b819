#pragma once

#include <cstddef>
#include <vector>

#include "sttilt/ffla/matrix.hpp"

namespace sttilt::ffla {

// Hot loops in two flavours.  The serial versions are the reference the
// parallel ones are tested against; the rest of the library calls the
// parallel ones, which fall back to serial below a size threshold.

/// c = a * b
void gemm_serial(const Matrix& a, const Matrix& b, Matrix& c);
void gemm_omp(const Matrix& a, const Matrix& b, Matrix& c);

/// In-place reduced row echelon form.  Returns the pivot columns; rows past
/// the rank are zero.
std::vector<std::size_t> rref_serial(Matrix& a);
std::vector<std::size_t> rref_omp(Matrix& a);

/// Work size (multiply-adds) above which the parallel kernels fork.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

}  // namespace sttilt::ffla
