#pragma once

#include "hermilat/field.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hermilat {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix of field codes. Arithmetic lives in free functions
/// that take the field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, kZero) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_codes(const std::vector<std::vector<std::uint32_t>>& rows);
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const FieldElem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
  Vector col_vector(std::size_t j) const;
  const std::vector<FieldElem>& data() const noexcept { return data_; }

  std::vector<std::vector<std::uint32_t>> to_codes() const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

Matrix add(const InvolutiveField& f, const Matrix& a, const Matrix& b);
Matrix sub(const InvolutiveField& f, const Matrix& a, const Matrix& b);
Matrix neg(const InvolutiveField& f, const Matrix& a);
Matrix mul(const InvolutiveField& f, const Matrix& a, const Matrix& b);
Matrix scale(const InvolutiveField& f, FieldElem s, const Matrix& a);
Vector apply(const InvolutiveField& f, const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);
/// Entrywise involution followed by transpose.
Matrix star_transpose(const InvolutiveField& f, const Matrix& a);
/// Entrywise application of the field involution.
Matrix conjugate(const InvolutiveField& f, const Matrix& a);

/// u^T v without any involution.
FieldElem dot(const InvolutiveField& f, std::span<const FieldElem> u, std::span<const FieldElem> v);
Vector add(const InvolutiveField& f, const Vector& a, const Vector& b);
Vector scale(const InvolutiveField& f, FieldElem s, const Vector& v);
bool is_zero(const Vector& v);

struct Echelon {
  Matrix reduced;                    // nonzero rows only, reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon rref(const InvolutiveField& f, const Matrix& a);
std::size_t rank(const InvolutiveField& f, const Matrix& a);

/// Basis (as rows, in RREF) of {x : a x = 0}.
Matrix kernel(const InvolutiveField& f, const Matrix& a);

std::optional<Matrix> inverse(const InvolutiveField& f, const Matrix& a);

/// Stacks the rows of a over the rows of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

/// Deterministic lexicographic enumeration helper: the idx-th vector of
/// length n over the field, most significant coordinate first.
Vector vector_from_index(const InvolutiveField& f, std::uint64_t idx, std::size_t n);
Matrix matrix_from_index(const InvolutiveField& f, std::uint64_t idx, std::size_t rows, std::size_t cols);

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e);

}  // namespace hermilat
