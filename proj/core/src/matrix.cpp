#include "tgrs/matrix.hpp"

#include <algorithm>

namespace tgrs {

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Gf>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(std::move(field), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Errc::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RrefResult rref(const Matrix& in) {
  const Field& f = *in.field();
  Matrix m = in;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    Gf s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Gf factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

Matrix nullspace(const Matrix& in) {
  const FieldPtr& fp = in.field();
  const Field& f = *fp;
  auto [red, rank, pivots] = rref(in);
  std::size_t n = in.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix basis(fp, n - rank, n);
  std::size_t row = 0;
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    basis(row, freec) = 1;
    for (std::size_t pr = 0; pr < rank; ++pr)
      basis(row, pivots[pr]) = f.neg(red(pr, freec));
    ++row;
  }
  // canonical form
  auto rr = rref(basis);
  Matrix out(fp, n - rank, n);
  for (std::size_t i = 0; i < n - rank; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rr.reduced(i, j);
  return out;
}

Gf det(const Matrix& in) {
  if (in.rows() != in.cols()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  const Field& f = *in.field();
  Matrix m = in;
  std::size_t n = m.rows();
  Gf d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    Gf s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Gf factor = f.mul(m(i, c), s);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(*a.field(), *b.field());
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "inner dimensions disagree");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Gf aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Matrix gram(const Matrix& g) { return matmul(g, transpose(g)); }

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

namespace {

Matrix nonzero_rref_rows(const Matrix& m) {
  auto [red, rank, pivots] = rref(m);
  Matrix out(m.field(), rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = red(i, j);
  return out;
}

}  // namespace

bool row_space_equal(const Matrix& a, const Matrix& b) {
  require_same_field(*a.field(), *b.field());
  if (a.cols() != b.cols()) fail(Errc::DimensionMismatch, "row spaces live in different lengths");
  return nonzero_rref_rows(a) == nonzero_rref_rows(b);
}

bool row_space_contains(const Matrix& basis, std::span<const Gf> v) {
  if (v.size() != basis.cols()) fail(Errc::DimensionMismatch, "vector length mismatch");
  Matrix ext(basis.field(), basis.rows() + 1, basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) ext(i, j) = basis(i, j);
  for (std::size_t j = 0; j < basis.cols(); ++j) ext(basis.rows(), j) = v[j];
  return rref(ext).rank == rref(basis).rank;
}

}  // namespace tgrs
