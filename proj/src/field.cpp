#include "hermilat/field.hpp"

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hermilat {

std::string_view to_string(InvolutionKind kind) {
  return kind == InvolutionKind::Identity ? "identity" : "frobenius_half";
}

InvolutionKind involution_from_string(std::string_view name) {
  if (name == "identity") return InvolutionKind::Identity;
  if (name == "frobenius_half") return InvolutionKind::FrobeniusHalf;
  throw Error(ErrorCode::ParseError, "unknown involution '" + std::string(name) + "'");
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2).
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero b over GF(p).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint32_t f = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - f) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  struct Entry {
    std::uint32_t p, k;
    Poly mod;
  };
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}}, {3, 2, {1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {5, 2, {2, 0, 1}}, {3, 3, {1, 2, 0, 1}},
      {7, 2, {1, 0, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.k == k) return e.mod;
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(k + 1, 0);
    g[k] = 1;
    std::uint64_t r = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      g[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    if (is_irreducible(g, p)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");
}

InvolutiveField InvolutiveField::make(std::uint32_t p, std::uint32_t k,
                                      std::vector<std::uint32_t> modulus,
                                      InvolutionKind involution) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::BadModulus, "degree must be positive");
  if (involution == InvolutionKind::FrobeniusHalf && k % 2 != 0)
    throw Error(ErrorCode::OddDegreeFrobenius,
                "frobenius_half needs even degree, got k=" + std::to_string(k));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
  }
  if (modulus.empty()) modulus = default_modulus(p, k);
  if (modulus.size() != k + 1 || modulus.back() != 1)
    throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(k));
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
  if (!is_irreducible(modulus, p))
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");

  InvolutiveField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = modulus;
  f.involution_ = involution;

  auto t = std::make_shared<Tables>();
  const std::uint32_t qq = f.q_;

  // Schoolbook product of codes reduced by the modulus; only used to seed
  // the log tables.
  auto to_poly = [&](std::uint32_t c) {
    Poly a(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      a[i] = c % p;
      c /= p;
    }
    return a;
  };
  auto from_poly = [&](const Poly& a) {
    std::uint32_t c = 0;
    for (std::size_t i = a.size(); i-- > 0;) c = c * p + a[i];
    return c;
  };
  auto slow_mul = [&](std::uint32_t x, std::uint32_t y) {
    Poly a = to_poly(x), b = to_poly(y);
    Poly r(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    Poly rem = poly_rem(r, modulus, p);
    rem.resize(k, 0);
    return from_poly(rem);
  };

  t->neg.resize(qq);
  for (std::uint32_t c = 0; c < qq; ++c) {
    Poly a = to_poly(c);
    for (auto& d : a) d = (p - d) % p;
    t->neg[c] = from_poly(a);
  }

  t->exp.assign(qq, 0);
  t->log.assign(qq, 0);
  if (qq == 2) {
    t->exp[0] = 1;
  } else {
    for (std::uint32_t g = 2; g < qq; ++g) {
      std::uint32_t x = 1, n = 0;
      do {
        t->exp[n++] = x;
        x = slow_mul(x, g);
      } while (x != 1 && n < qq);
      if (n == qq - 1) break;
    }
  }
  for (std::uint32_t i = 0; i + 1 < qq; ++i) t->log[t->exp[i]] = i;

  if (p != 2 && static_cast<std::uint64_t>(qq) * qq <= (1u << 20)) {
    t->add.resize(static_cast<std::size_t>(qq) * qq);
    for (std::uint32_t a = 0; a < qq; ++a)
      for (std::uint32_t b = 0; b < qq; ++b) {
        Poly x = to_poly(a), y = to_poly(b);
        for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
        t->add[static_cast<std::size_t>(a) * qq + b] = from_poly(x);
      }
  }

  f.t_ = t;
  t->star.resize(qq);
  std::uint64_t e = 1;
  if (involution == InvolutionKind::FrobeniusHalf)
    for (std::uint32_t i = 0; i < k / 2; ++i) e *= p;
  for (std::uint32_t c = 0; c < qq; ++c) t->star[c] = code(f.pow(elem(c), e));

  // The involution must be an automorphism of order <= 2. Every nonzero
  // element is a power of the primitive root, and the prime field plus the
  // powers of x span the field, so these O(q) checks are exhaustive.
  const FieldElem g = elem(t->exp[qq == 2 ? 0 : 1]);
  const FieldElem xg = f.generator_x();
  for (std::uint32_t c = 0; c < qq; ++c) {
    if (t->star[t->star[c]] != c) throw std::logic_error("involution is not of order 2");
  }
  for (std::uint32_t i = 0; i + 1 < qq; ++i) {
    if (f.star(elem(t->exp[i])) != f.pow(f.star(g), i))
      throw std::logic_error("involution is not multiplicative");
  }
  for (std::uint32_t c = 0; c < qq; ++c) {
    auto d = f.digits(elem(c));
    FieldElem acc = kZero, xp = kOne, sx = f.star(xg);
    for (std::uint32_t i = 0; i < k; ++i) {
      acc = f.add(acc, f.mul(f.from_int(d[i]), xp));
      xp = f.mul(xp, sx);
    }
    if (acc != f.star(elem(c))) throw std::logic_error("involution is not additive");
  }
  return f;
}

FieldElem InvolutiveField::add(FieldElem a, FieldElem b) const {
  if (p_ == 2) return elem(code(a) ^ code(b));
  if (!t_->add.empty()) return elem(t_->add[static_cast<std::size_t>(code(a)) * q_ + code(b)]);
  std::uint32_t x = code(a), y = code(b), r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return elem(r);
}

FieldElem InvolutiveField::inv(FieldElem a) const {
  if (a == kZero) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!is_valid(a)) throw Error(ErrorCode::InvalidElement, "code out of range");
  const std::uint32_t l = t_->log[code(a)];
  return elem(t_->exp[l == 0 ? 0 : q_ - 1 - l]);
}

FieldElem InvolutiveField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = kOne, b = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

FieldElem InvolutiveField::arith(FieldOp op, FieldElem a, FieldElem b) const {
  if (!is_valid(a) || !is_valid(b)) throw Error(ErrorCode::InvalidElement, "code out of range");
  switch (op) {
    case FieldOp::Add: return add(a, b);
    case FieldOp::Sub: return sub(a, b);
    case FieldOp::Mul: return mul(a, b);
    case FieldOp::Neg: return neg(a);
    case FieldOp::Inv: return inv(a);
  }
  return kZero;
}

FieldElem InvolutiveField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return elem(static_cast<std::uint32_t>(r));
}

std::vector<std::uint32_t> InvolutiveField::digits(FieldElem x) const {
  std::vector<std::uint32_t> d(k_, 0);
  std::uint32_t c = code(x);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = c % p_;
    c /= p_;
  }
  return d;
}

FieldElem InvolutiveField::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i] % p_;
  return elem(c);
}

std::string InvolutiveField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_;
  os << ")";
  if (involution_ == InvolutionKind::FrobeniusHalf) os << " frobenius_half";
  return os.str();
}

}  // namespace hermilat
