#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sttilt/ffla/field.hpp"

namespace sttilt::ffla {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elt> data);

  static Matrix identity(const Field& f, std::size_t n);
  /// Single column from a vector.
  static Matrix column(const Field& f, const std::vector<Elt>& v);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elt* row(std::size_t r) { return data_.data() + r * cols_; }
  const Elt* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<Elt>& data() const { return data_; }
  std::vector<Elt>& data() { return data_; }

  std::vector<Elt> row_vector(std::size_t r) const;
  std::vector<Elt> col_vector(std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elt c) const;
  std::vector<Elt> apply(const std::vector<Elt>& v) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  static Matrix hstack(const std::vector<Matrix>& ms);
  static Matrix vstack(const std::vector<Matrix>& ms);
  static Matrix diag_sum(const std::vector<Matrix>& ms);

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> data_;
};

/// Kronecker product, (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

void require_same_field(const Matrix& a, const Matrix& b);

}  // namespace sttilt::ffla
