#include "sttilt/ffla/linalg.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/kernels.hpp"

namespace sttilt::ffla {

Echelon echelon(const Matrix& a) {
  Matrix r = a;
  auto piv = rref_omp(r);
  Echelon e;
  e.rref = r.block(0, 0, piv.size(), a.cols());
  e.pivots = std::move(piv);
  return e;
}

std::size_t rank(const Matrix& a) {
  Matrix r = a;
  return rref_omp(r).size();
}

Matrix kernel(const Matrix& a) {
  const Field& f = a.field();
  const Echelon e = echelon(a);
  const std::size_t n = a.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  Matrix k(f, n - e.rank(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(row, free) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) k(row, e.pivots[i]) = f.neg(e.rref(i, free));
    ++row;
  }
  return k;
}

Solution solve(const Matrix& a, const std::vector<Elt>& b) {
  if (b.size() != a.rows()) throw MismatchError("solve: right-hand side length does not match rows");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix aug = Matrix::hstack({a, Matrix::column(f, b)});
  auto piv = rref_omp(aug);
  Solution s;
  s.kernel = kernel(a);
  if (!piv.empty() && piv.back() == n) return s;  // 0 = 1 row
  std::vector<Elt> x(n, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, n);
  s.particular = std::move(x);
  return s;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw MismatchError("solve: right-hand side rows do not match");
  const std::size_t n = a.cols();
  Matrix aug = Matrix::hstack({a, b});
  auto piv = rref_omp(aug);
  if (!piv.empty() && piv.back() >= n) return std::nullopt;
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw MismatchError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug = Matrix::hstack({a, Matrix::identity(a.field(), n)});
  auto piv = rref_omp(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

bool invertible(const Matrix& a) { return a.square() && rank(a) == a.rows(); }

Matrix reduce_basis(const Matrix& rows) { return echelon(rows).rref; }

std::vector<Elt> reduce_vector(const Echelon& e, std::vector<Elt> v) {
  const Field& f = e.rref.field();
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Elt x = v[e.pivots[i]];
    if (x != 0) f.axpy(v.data(), e.rref.row(i), f.neg(x), v.size());
  }
  return v;
}

bool in_span(const Echelon& e, const std::vector<Elt>& v) {
  if (e.rank() == 0) {
    for (Elt x : v)
      if (x) return false;
    return true;
  }
  auto r = reduce_vector(e, v);
  for (Elt x : r)
    if (x) return false;
  return true;
}

std::optional<std::vector<Elt>> coordinates(const Matrix& rows, const std::vector<Elt>& v) {
  auto s = solve(rows.transpose(), v);
  return s.particular;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return reduce_basis(b);
  if (b.rows() == 0) return reduce_basis(a);
  return reduce_basis(Matrix::vstack({a, b}));
}

Matrix subspace_intersect(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  if (a.rows() == 0 || b.rows() == 0) return Matrix(f, 0, a.cols());
  // x a = y b  <=>  [x | y] [a; -b] = 0
  Matrix stacked = Matrix::vstack({a, b.scaled(f.neg(1))});
  Matrix k = kernel(stacked.transpose());
  if (k.rows() == 0) return Matrix(f, 0, a.cols());
  Matrix xs = k.block(0, 0, k.rows(), a.rows());
  return reduce_basis(xs * a);
}

Matrix complement(const Echelon& e) {
  const std::size_t n = e.rref.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  Matrix c(e.rref.field(), n - e.rank(), n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) c(r++, j) = 1;
  return c;
}

bool subspace_contains(const Matrix& big, const Matrix& small) {
  if (small.rows() == 0) return true;
  const Echelon e = echelon(big);
  for (std::size_t i = 0; i < small.rows(); ++i)
    if (!in_span(e, small.row_vector(i))) return false;
  return true;
}

}  // namespace sttilt::ffla
