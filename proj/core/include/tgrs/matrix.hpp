#ifndef TGRS_MATRIX_HPP
#define TGRS_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tgrs/galois.hpp"

namespace tgrs {

// Dense row-major matrix over a shared field.  Desk-scale dimensions; all
// operations are exact and pure.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Gf>>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  Gf operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Gf& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Gf> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Gf> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && *field_ == *o.field_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Gf> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Gauss-Jordan elimination.  Pivot selection is the first nonzero entry
// scanning top-to-bottom per column, columns left-to-right, so the reduced
// form is bit-reproducible.
RrefResult rref(const Matrix& m);

// Rows span {x : M x^T = 0}; returned in reduced form with cols-rank rows.
Matrix nullspace(const Matrix& m);

Gf det(const Matrix& m);  // NotSquare unless square

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// G * G^T, the Gram matrix of the rows.
Matrix gram(const Matrix& g);

bool is_zero(const Matrix& m);

// True iff the RREFs coincide after dropping zero rows.
bool row_space_equal(const Matrix& a, const Matrix& b);

// True iff v lies in the row space of basis.
bool row_space_contains(const Matrix& basis, std::span<const Gf> v);

}  // namespace tgrs

#endif
