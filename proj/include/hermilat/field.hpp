#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermilat {

/// An element of GF(p^k), encoded as the integer whose base-p digits are the
/// coefficients of its polynomial-basis representation (little-endian).
enum class FieldElem : std::uint32_t {};

constexpr std::uint32_t code(FieldElem x) noexcept { return static_cast<std::uint32_t>(x); }
constexpr FieldElem elem(std::uint32_t c) noexcept { return FieldElem{c}; }

inline constexpr FieldElem kZero = FieldElem{0};
inline constexpr FieldElem kOne = FieldElem{1};

enum class InvolutionKind { Identity, FrobeniusHalf };

std::string_view to_string(InvolutionKind kind);
InvolutionKind involution_from_string(std::string_view name);

enum class FieldOp { Add, Sub, Mul, Neg, Inv };

/// GF(p^k) with a designated involution: either the identity or
/// x -> x^(p^(k/2)). Cheap to copy; the arithmetic tables are shared.
class InvolutiveField {
 public:
  /// Validates p, k, the modulus and the involution. An empty `modulus`
  /// selects the built-in default for (p, k).
  static InvolutiveField make(std::uint32_t p, std::uint32_t k,
                              std::vector<std::uint32_t> modulus = {},
                              InvolutionKind involution = InvolutionKind::Identity);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  InvolutionKind involution_kind() const noexcept { return involution_; }

  bool is_valid(FieldElem x) const noexcept { return code(x) < q_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const { return elem(t_->neg[code(a)]); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == kZero || b == kZero) return kZero;
    std::uint32_t s = t_->log[code(a)] + t_->log[code(b)];
    if (s >= q_ - 1) s -= q_ - 1;
    return elem(t_->exp[s]);
  }
  /// Throws DivisionByZero on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem star(FieldElem a) const { return elem(t_->star[code(a)]); }

  /// Generic entry point mirroring the tagged arithmetic interface.
  FieldElem arith(FieldOp op, FieldElem a, FieldElem b = kZero) const;

  /// The class of x in the polynomial basis (needs k >= 2; for k = 1 it is 0).
  FieldElem generator_x() const noexcept { return k_ >= 2 ? elem(p_) : kZero; }
  /// Integer n reduced into the prime field.
  FieldElem from_int(std::int64_t n) const;
  /// Coefficients (little-endian, length k) of x.
  std::vector<std::uint32_t> digits(FieldElem x) const;
  FieldElem from_digits(const std::vector<std::uint32_t>& d) const;

  bool operator==(const InvolutiveField& o) const noexcept {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_ && involution_ == o.involution_;
  }

  std::string describe() const;

 private:
  struct Tables {
    std::vector<std::uint32_t> exp, log, neg, star, add;  // add empty when q is large
  };

  InvolutiveField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  InvolutionKind involution_ = InvolutionKind::Identity;
  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint32_t n);

/// Monic polynomial over GF(p), little-endian coefficients.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Built-in modulus for (p, k): the fixed table, x for k = 1, otherwise the
/// lexicographically least monic irreducible of degree k.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

}  // namespace hermilat
