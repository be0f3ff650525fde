#include "hermilat/matrix.hpp"

#include "hermilat/error.hpp"

#include <limits>
#include <utility>

namespace hermilat {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::LengthMismatch, "matrix data size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::LengthMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_codes(const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::NonSquareGram, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = elem(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::col_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<std::vector<std::uint32_t>> Matrix::to_codes() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = code((*this)(i, j));
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x != kZero) return false;
  return true;
}

Matrix add(const InvolutiveField& f, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

Matrix sub(const InvolutiveField& f, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

Matrix neg(const InvolutiveField& f, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.neg(a(i, j));
  return r;
}

Matrix mul(const InvolutiveField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::LengthMismatch, "matrix product shape");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem x = a(i, k);
      if (x == kZero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  return r;
}

Matrix scale(const InvolutiveField& f, FieldElem s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.mul(s, a(i, j));
  return r;
}

Vector apply(const InvolutiveField& f, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::LengthMismatch, "matrix-vector shape");
  Vector r(a.rows(), kZero);
  for (std::size_t i = 0; i < a.rows(); ++i) r[i] = dot(f, a.row(i), v);
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

Matrix star_transpose(const InvolutiveField& f, const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = f.star(a(i, j));
  return r;
}

Matrix conjugate(const InvolutiveField& f, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.star(a(i, j));
  return r;
}

FieldElem dot(const InvolutiveField& f, std::span<const FieldElem> u, std::span<const FieldElem> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "dot product lengths");
  FieldElem s = kZero;
  for (std::size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

Vector add(const InvolutiveField& f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector scale(const InvolutiveField& f, FieldElem s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(s, v[i]);
  return r;
}

bool is_zero(const Vector& v) {
  for (auto x : v)
    if (x != kZero) return false;
  return true;
}

Echelon rref(const InvolutiveField& f, const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == kZero) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const FieldElem s = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == kZero) continue;
      const FieldElem t = f.neg(m(i, c));
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(t, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const InvolutiveField& f, const Matrix& a) { return rref(f, a).pivots.size(); }

Matrix kernel(const InvolutiveField& f, const Matrix& a) {
  const std::size_t n = a.cols();
  Echelon e = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, kZero);
    v[free] = kOne;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return rref(f, Matrix::from_rows(basis, n)).reduced;
}

std::optional<Matrix> inverse(const InvolutiveField& f, const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = kOne;
  }
  Echelon e = rref(f, aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  const std::size_t cols = a.rows() > 0 ? a.cols() : b.cols();
  Matrix r(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Vector vector_from_index(const InvolutiveField& f, std::uint64_t idx, std::size_t n) {
  Vector v(n, kZero);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = elem(static_cast<std::uint32_t>(idx % f.order()));
    idx /= f.order();
  }
  return v;
}

Matrix matrix_from_index(const InvolutiveField& f, std::uint64_t idx, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, vector_from_index(f, idx, rows * cols));
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

}  // namespace hermilat
