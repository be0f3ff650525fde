#pragma once

#include "hermilat/field.hpp"
#include "hermilat/matrix.hpp"
#include "hermilat/space.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hermilat {

/// A ring element as a flat list of field coordinates: row-major entries for
/// matrix rings, concatenated components for products.
using RingElem = std::vector<FieldElem>;

enum class RingKind { Matrix, Product, Generated };

/// A finite ring with involution. Carriers are listed in lexicographic order
/// of the coordinate lists and materialized lazily (at most 2^20 elements).
class StarRing {
 public:
  virtual ~StarRing() = default;

  virtual RingKind kind() const noexcept = 0;
  virtual std::size_t width() const noexcept = 0;
  virtual std::uint64_t size() const = 0;
  virtual std::string describe() const = 0;

  virtual RingElem zero() const { return RingElem(width(), kZero); }
  virtual RingElem one() const = 0;
  virtual RingElem add(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem neg(const RingElem& a) const = 0;
  virtual RingElem mul(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem star(const RingElem& a) const = 0;
  /// Action of the prime subfield: n * a.
  virtual RingElem scalar(std::int64_t n, const RingElem& a) const = 0;

  RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }
  bool is_zero(const RingElem& a) const { return a == zero(); }

  /// Throws EnumerationCap above 2^20 elements unless caps are forced.
  const std::vector<RingElem>& carrier() const;
  /// Position of a in the carrier (binary search), or nullopt.
  std::optional<std::size_t> index_of(const RingElem& a) const;
  bool contains(const RingElem& a) const { return index_of(a).has_value(); }

  /// Some x with a x a = a. The default scans the carrier in order and
  /// throws NotRegularElement when none exists.
  virtual RingElem quasi_inverse(const RingElem& a) const;

 protected:
  virtual std::vector<RingElem> build_carrier() const = 0;

 private:
  mutable std::once_flag carrier_once_;
  mutable std::vector<RingElem> carrier_;
};

using RingPtr = std::shared_ptr<const StarRing>;

/// End(V) with the adjoint A* = G^{-1} A^{*T} G of a non-degenerate space.
class MatrixRing final : public StarRing {
 public:
  static std::shared_ptr<const MatrixRing> make(const GramSpace& space);

  RingKind kind() const noexcept override { return RingKind::Matrix; }
  std::size_t width() const noexcept override { return n_ * n_; }
  std::uint64_t size() const override;
  std::string describe() const override;

  RingElem one() const override;
  RingElem add(const RingElem& a, const RingElem& b) const override;
  RingElem neg(const RingElem& a) const override;
  RingElem mul(const RingElem& a, const RingElem& b) const override;
  RingElem star(const RingElem& a) const override;
  RingElem scalar(std::int64_t n, const RingElem& a) const override;
  /// Rank factorization A = BC; returns C^R B^L.
  RingElem quasi_inverse(const RingElem& a) const override;

  const GramSpace& space() const noexcept { return space_; }
  const InvolutiveField& field() const noexcept { return space_.field(); }
  std::size_t n() const noexcept { return n_; }

  Matrix to_matrix(const RingElem& a) const { return Matrix(n_, n_, a); }
  RingElem from_matrix(const Matrix& m) const { return m.data(); }

 protected:
  std::vector<RingElem> build_carrier() const override;

 private:
  MatrixRing(GramSpace space, Matrix gram_inv)
      : space_(std::move(space)), gram_inv_(std::move(gram_inv)), n_(space_.dim()) {}

  GramSpace space_;
  Matrix gram_inv_;
  std::size_t n_;
};

/// Direct product with componentwise operations.
class ProductRing final : public StarRing {
 public:
  static std::shared_ptr<const ProductRing> make(std::vector<RingPtr> factors);

  RingKind kind() const noexcept override { return RingKind::Product; }
  std::size_t width() const noexcept override { return width_; }
  std::uint64_t size() const override;
  std::string describe() const override;

  RingElem one() const override;
  RingElem add(const RingElem& a, const RingElem& b) const override;
  RingElem neg(const RingElem& a) const override;
  RingElem mul(const RingElem& a, const RingElem& b) const override;
  RingElem star(const RingElem& a) const override;
  RingElem scalar(std::int64_t n, const RingElem& a) const override;
  RingElem quasi_inverse(const RingElem& a) const override;

  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  RingElem component(const RingElem& a, std::size_t i) const;
  RingElem join(const std::vector<RingElem>& parts) const;

 protected:
  std::vector<RingElem> build_carrier() const override;

 private:
  explicit ProductRing(std::vector<RingPtr> factors);

  template <class F>
  RingElem componentwise(const RingElem& a, F&& f) const;
  template <class F>
  RingElem componentwise(const RingElem& a, const RingElem& b, F&& f) const;

  std::vector<RingPtr> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
};

/// Least subring of a parent containing the generators, 0 and 1, closed
/// under +, * and the involution. The carrier is computed at construction.
class GeneratedRing final : public StarRing {
 public:
  static std::shared_ptr<const GeneratedRing> make(RingPtr parent, const std::vector<RingElem>& generators);

  RingKind kind() const noexcept override { return RingKind::Generated; }
  std::size_t width() const noexcept override { return parent_->width(); }
  std::uint64_t size() const override { return elements_.size(); }
  std::string describe() const override;

  RingElem one() const override { return parent_->one(); }
  RingElem add(const RingElem& a, const RingElem& b) const override { return parent_->add(a, b); }
  RingElem neg(const RingElem& a) const override { return parent_->neg(a); }
  RingElem mul(const RingElem& a, const RingElem& b) const override { return parent_->mul(a, b); }
  RingElem star(const RingElem& a) const override { return parent_->star(a); }
  RingElem scalar(std::int64_t n, const RingElem& a) const override { return parent_->scalar(n, a); }

  const RingPtr& parent() const noexcept { return parent_; }

 protected:
  std::vector<RingElem> build_carrier() const override { return elements_; }

 private:
  GeneratedRing(RingPtr parent, std::vector<RingElem> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}

  RingPtr parent_;
  std::vector<RingElem> elements_;
};

RingPtr product_ring(std::vector<RingPtr> factors);
RingPtr generated_subring(RingPtr parent, const std::vector<RingElem>& generators);

/// The adjoint G^{-1} A^{*T} G. Rejects degenerate spaces.
Matrix adjoint(const GramSpace& space, const Matrix& a);

/// a x for a quasi-inverse x: an idempotent with aR = eR.
RingElem idempotent_generator(const StarRing& ring, const RingElem& a);

/// The projection e = e^2 = e* with eR = aR. Matrix rings use the
/// orthogonal projection onto im a; other rings scan their carrier.
RingElem projection_generator(const StarRing& ring, const RingElem& a);

/// Idempotent e in aR + bR with ea = a and eb = b.
RingElem common_left_unit(const StarRing& ring, const RingElem& a, const RingElem& b);

/// pi = U H^{-1} U^{*T} G with H = U^{*T} G U; throws NotASummand.
Matrix orthogonal_projection(const GramSpace& space, const Subspace& u);

/// Every e with e = e^2 = e*, in carrier order.
std::vector<RingElem> projections(const StarRing& ring);

/// Sorted carrier indices of aR.
std::vector<std::size_t> right_ideal(const StarRing& ring, const RingElem& a);

struct RegularityReport {
  bool regular = false;
  bool proper = false;
  bool star_regular = false;
  bool has_rank1_projection = false;
  std::optional<RingElem> improper_witness;     // r != 0 with r* r = 0
  std::optional<RingElem> irregular_witness;    // element without quasi-inverse
  std::optional<RingElem> rank1_projection;
};

RegularityReport regularity_report(const StarRing& ring);

/// A ring map given by a function on coordinates.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::function<RingElem(const RingElem&)> map;

  RingElem operator()(const RingElem& a) const { return map(a); }

  static RingHom identity(RingPtr ring);
  static RingHom projection(std::shared_ptr<const ProductRing> ring, std::size_t component);
  /// From explicit (source, target) pairs; elements missing from the table
  /// map to nothing and make hom_check throw NotAHom.
  static RingHom from_table(RingPtr source, RingPtr target,
                            std::vector<std::pair<RingElem, RingElem>> table);
};

struct HomReport {
  bool is_star_hom = false;
  bool injective = false;
  bool exhaustive = false;       // all pairs checked rather than a sample
  std::vector<RingElem> kernel;  // preimage of 0, carrier order
  std::string failure;           // first violated law, empty when none
};

/// Checks +, *, *, 1 and the prime-field action on the source carrier.
/// Pairs are exhaustive when |R|^2 <= 2^24, otherwise every element is
/// paired with a fixed seeded sample. Throws NotAHom when the map is not
/// total into the target.
HomReport hom_check(const RingHom& hom);

/// d with c d c = c and hom(d) = b, from u = a quasi-inverse of c - cyc
/// inside the kernel: d = u - ucy - ycu + ycucy + y.
RingElem lift_quasi_inverse(const RingHom& hom, const RingElem& a, const RingElem& b,
                            const RingElem& c, const RingElem& y);

enum class ReconstructionCase { Projection, Alternate };

struct Reconstruction {
  GramSpace space;
  ReconstructionCase which;
  std::vector<RingElem> basis;  // chosen basis of the left ideal Re
  RingHom rep;                  // r -> left multiplication on Re
  bool rep_verified = false;    // multiplicative, unital, *-preserving, injective
};

/// Rebuilds a space from a rank-one idempotent e of End(V): the left ideal
/// Re with <v,w> = kappa(v* w) when e = e*, or kappa(psi* v* w) with psi the
/// first nonzero e E_ij e* when e e* = 0 = e* e (there e v* w vanishes).
/// kappa reads lambda off lambda e.
Reconstruction reconstruct_space(std::shared_ptr<const MatrixRing> ring, const RingElem& e);

/// First rank-one projection in the rank-one scan, if any.
std::optional<RingElem> find_rank1_projection(const MatrixRing& ring);
/// First rank-one idempotent with e e* = 0 = e* e, if any.
std::optional<RingElem> find_rank1_null_idempotent(const MatrixRing& ring);

}  // namespace hermilat
