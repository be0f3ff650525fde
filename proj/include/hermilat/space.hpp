#pragma once

#include "hermilat/field.hpp"
#include "hermilat/matrix.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace hermilat {

/// A subspace of F^n stored by its reduced row-echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const InvolutiveField& f, const Matrix& rows);
  static Subspace span(const InvolutiveField& f, const std::vector<Vector>& vectors, std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(Matrix(0, n), n); }
  static Subspace whole(std::size_t n) { return Subspace(Matrix::identity(n), n); }
  /// Wraps a matrix already in RREF with no zero rows (not re-checked).
  static Subspace from_rref(Matrix basis, std::size_t n) { return Subspace(std::move(basis), n); }

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const InvolutiveField& f, const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Dimension first, then lexicographic on the RREF entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    auto c = a.basis_.data() <=> b.basis_.data();
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Subspace(Matrix basis, std::size_t n) : basis_(std::move(basis)), n_(n) {}

  Matrix basis_;
  std::size_t n_ = 0;
};

Subspace sum(const InvolutiveField& f, const Subspace& u, const Subspace& w);
Subspace meet(const InvolutiveField& f, const Subspace& u, const Subspace& w);
bool is_subspace_of(const InvolutiveField& f, const Subspace& u, const Subspace& w);

/// Number of subspaces of F_q^n (sum of Gaussian binomials), saturating.
std::uint64_t count_subspaces(std::uint64_t q, std::size_t n);

/// Every subspace of F^n once, ordered by dimension then RREF entries.
/// Throws EnumerationCap above 20000 subspaces unless caps are forced.
std::vector<Subspace> enumerate_subspaces(const InvolutiveField& f, std::size_t n);

struct SpaceClass {
  bool nondegenerate = false;
  std::optional<FieldElem> epsilon;
  bool hermitian = false;
  bool skew_symmetric = false;
  bool alternate = false;
  bool anisotropic = false;
  bool orthosymmetric = false;
};

/// Classification by direct search: epsilon from the Gram entries, the other
/// predicates by scanning vectors (orthosymmetry over vector pairs when
/// q^(2n) is small, otherwise by comparing the left and right orthogonal
/// functionals of every vector).
SpaceClass classify_gram(const InvolutiveField& f, const Matrix& gram);

/// Brute-force orthosymmetry: every pair (u, v) with <u,v> = 0 has <v,u> = 0.
bool orthosymmetric_by_pairs(const InvolutiveField& f, const Matrix& gram);
/// Per-vector test: the functionals v -> <u,v> and v -> <v,u>^* have equal
/// kernels for every u. Linear in q^n instead of quadratic.
bool orthosymmetric_by_functionals(const InvolutiveField& f, const Matrix& gram);

/// A finite-dimensional sesquilinear space <u,v> = u^{*T} G v.
class GramSpace {
 public:
  static GramSpace make(const InvolutiveField& f, const Matrix& gram);

  const InvolutiveField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  const SpaceClass& classification() const noexcept { return class_; }

  bool nondegenerate() const noexcept { return class_.nondegenerate; }

  friend bool operator==(const GramSpace& a, const GramSpace& b) {
    return a.field_ == b.field_ && a.gram_ == b.gram_;
  }

 private:
  GramSpace(InvolutiveField f, Matrix gram, SpaceClass c)
      : field_(std::move(f)), gram_(std::move(gram)), class_(c) {}

  InvolutiveField field_;
  Matrix gram_;
  SpaceClass class_;
};

FieldElem inner(const GramSpace& s, const Vector& u, const Vector& v);
inline const SpaceClass& classify(const GramSpace& s) { return s.classification(); }

/// {v : <u,v> = 0 for all u in U}. Rejects degenerate spaces.
Subspace orthogonal(const GramSpace& s, const Subspace& u);

struct RadicalReport {
  Subspace radical;
  bool closed = false;
  bool summand = false;
};

RadicalReport radical_report(const GramSpace& s, const Subspace& u);

/// Smallest-effort summand containing W: repeatedly pair the first radical
/// vector with the first vector (in enumeration order) it is not orthogonal to.
Subspace extend_to_summand(const GramSpace& s, const Subspace& w);

/// U / rad U realized on a complement of the radical inside U.
GramSpace subquotient(const GramSpace& s, const Subspace& u);

GramSpace scale(const GramSpace& s, FieldElem mu);
GramSpace orthogonal_sum(const GramSpace& a, const GramSpace& b);

/// Exhaustive search for T invertible, mu != 0 with G_B = mu T^{*T} G_A T.
/// Same field only; throws Infeasible when q^(n^2) exceeds 10^6.
bool is_similar(const GramSpace& a, const GramSpace& b);

}  // namespace hermilat
