#include "sttilt/ffla/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include "sttilt/error.hpp"

namespace sttilt::ffla {

namespace {

void check_gemm(const Matrix& a, const Matrix& b, Matrix& c) {
  if (a.cols() != b.rows()) throw MismatchError("gemm shape mismatch");
  require_same_field(a, b);
  if (c.rows() != a.rows() || c.cols() != b.cols() || c.field_ptr() != a.field_ptr())
    c = Matrix(a.field(), a.rows(), b.cols());
}

inline void gemm_row(const Field& f, const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  Elt* out = c.row(i);
  std::fill(out, out + c.cols(), Elt{0});
  const Elt* ar = a.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (ar[k] != 0) f.axpy(out, b.row(k), ar[k], b.cols());
}

// Eliminate column `col` from row r using the normalized pivot row.
inline void eliminate(const Field& f, Matrix& a, std::size_t r, std::size_t prow, std::size_t col) {
  const Elt x = a(r, col);
  if (x != 0) f.axpy(a.row(r) + col, a.row(prow) + col, f.neg(x), a.cols() - col);
}

template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const Field& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.row(piv) + col, a.row(piv) + cols, a.row(r) + col);
    f.scale(a.row(r) + col, f.inv(a(r, col)), cols - col);
    const bool fork = Parallel && rows * (cols - col) >= kParallelThreshold;
    const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (fork)
    for (std::int64_t i = 0; i < n; ++i)
      if (static_cast<std::size_t>(i) != r) eliminate(f, a, static_cast<std::size_t>(i), r, col);
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

void gemm_serial(const Matrix& a, const Matrix& b, Matrix& c) {
  check_gemm(a, b, c);
  if (c.empty()) return;
  for (std::size_t i = 0; i < a.rows(); ++i) gemm_row(a.field(), a, b, c, i);
}

void gemm_omp(const Matrix& a, const Matrix& b, Matrix& c) {
  check_gemm(a, b, c);
  if (c.empty()) return;
  const bool fork = a.rows() * a.cols() * b.cols() >= kParallelThreshold;
  const auto n = static_cast<std::int64_t>(a.rows());
  const Field& f = a.field();
#pragma omp parallel for schedule(static) if (fork)
  for (std::int64_t i = 0; i < n; ++i) gemm_row(f, a, b, c, static_cast<std::size_t>(i));
}

std::vector<std::size_t> rref_serial(Matrix& a) { return rref_impl<false>(a); }
std::vector<std::size_t> rref_omp(Matrix& a) { return rref_impl<true>(a); }

}  // namespace sttilt::ffla
