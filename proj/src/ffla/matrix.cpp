#include "sttilt/ffla/matrix.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/ffla/kernels.hpp"

namespace sttilt::ffla {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elt> data)
    : field_(&f), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw MismatchError("matrix data length does not match shape");
  for (Elt e : data_)
    if (e >= f.size()) throw MismatchError("matrix entry outside the field");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Field& f, const std::vector<Elt>& v) { return Matrix(f, v.size(), 1, v); }

std::vector<Elt> Matrix::row_vector(std::size_t r) const {
  return std::vector<Elt>(row(r), row(r) + cols_);
}

std::vector<Elt> Matrix::col_vector(std::size_t c) const {
  std::vector<Elt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elt e) { return e == 0; });
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
         (empty() || field_ == o.field_);
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field_ptr() != b.field_ptr()) throw MismatchError("matrices over different fields");
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
  Matrix c(*field_, rows_, o.cols_);
  gemm_omp(*this, o, c);
  return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MismatchError("matrix sum shape mismatch");
  Matrix c = *this;
  field_->axpy(c.data_.data(), o.data_.data(), 1, data_.size());
  return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MismatchError("matrix difference shape mismatch");
  Matrix c = *this;
  field_->axpy(c.data_.data(), o.data_.data(), field_->neg(1), data_.size());
  return c;
}

Matrix Matrix::scaled(Elt c) const {
  Matrix r = *this;
  if (c == 0) {
    std::fill(r.data_.begin(), r.data_.end(), 0);
  } else {
    field_->scale(r.data_.data(), c, r.data_.size());
  }
  return r;
}

std::vector<Elt> Matrix::apply(const std::vector<Elt>& v) const {
  if (v.size() != cols_) throw MismatchError("matrix-vector shape mismatch");
  std::vector<Elt> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elt s = 0;
    const Elt* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) s = field_->add(s, field_->mul(r[j], v[j]));
    out[i] = s;
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw MismatchError("block out of range");
  Matrix b(*field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) std::copy_n(row(r0 + i) + c0, nc, b.row(i));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw MismatchError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) std::copy_n(b.row(i), b.cols_, row(r0 + i) + c0);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix s(*field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]), cols_, s.row(i));
  return s;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix s(*field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
  return s;
}

Matrix Matrix::hstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw MismatchError("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& m : ms) {
    if (m.rows_ != ms[0].rows_) throw MismatchError("hstack row mismatch");
    cols += m.cols_;
  }
  Matrix out(*ms[0].field_, ms[0].rows_, cols);
  std::size_t c = 0;
  for (const auto& m : ms) {
    out.set_block(0, c, m);
    c += m.cols_;
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw MismatchError("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols_ != ms[0].cols_) throw MismatchError("vstack column mismatch");
    rows += m.rows_;
  }
  Matrix out(*ms[0].field_, rows, ms[0].cols_);
  std::size_t r = 0;
  for (const auto& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows_;
  }
  return out;
}

Matrix Matrix::diag_sum(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw MismatchError("diagonal sum of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& m : ms) {
    rows += m.rows_;
    cols += m.cols_;
  }
  Matrix out(*ms[0].field_, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& m : ms) {
    out.set_block(r, c, m);
    r += m.rows_;
    c += m.cols_;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elt x = a(i, j);
      if (x == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        Elt* dst = k.row(i * b.rows() + r) + j * b.cols();
        f.axpy(dst, b.row(r), x, b.cols());
      }
    }
  return k;
}

}  // namespace sttilt::ffla
