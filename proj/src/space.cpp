#include "hermilat/space.hpp"

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <algorithm>

namespace hermilat {

Subspace Subspace::span(const InvolutiveField& f, const Matrix& rows) {
  return Subspace(rref(f, rows).reduced, rows.cols());
}

Subspace Subspace::span(const InvolutiveField& f, const std::vector<Vector>& vectors, std::size_t n) {
  return span(f, Matrix::from_rows(vectors, n));
}

bool Subspace::contains(const InvolutiveField& f, const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::LengthMismatch, "vector length");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t piv = 0;
    while (basis_(i, piv) == kZero) ++piv;
    const FieldElem c = r[piv];
    if (c == kZero) continue;
    const FieldElem t = f.neg(c);
    for (std::size_t j = 0; j < n_; ++j) r[j] = f.add(r[j], f.mul(t, basis_(i, j)));
  }
  return is_zero(r);
}

Subspace sum(const InvolutiveField& f, const Subspace& u, const Subspace& w) {
  return Subspace::span(f, vstack(u.basis(), w.basis()));
}

Subspace meet(const InvolutiveField& f, const Subspace& u, const Subspace& w) {
  // Annihilators under the plain dot product: U ∩ W = ann(ann U + ann W).
  const std::size_t n = u.ambient_dim();
  auto ann = [&](const Matrix& rows) {
    if (rows.rows() == 0) return Matrix::identity(n);
    return kernel(f, rows);
  };
  Matrix both = vstack(ann(u.basis()), ann(w.basis()));
  return Subspace::span(f, ann(both));
}

bool is_subspace_of(const InvolutiveField& f, const Subspace& u, const Subspace& w) {
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!w.contains(f, u.basis_vector(i))) return false;
  return true;
}

std::uint64_t count_subspaces(std::uint64_t q, std::size_t n) {
  // Gaussian binomial [n choose r]_q via the recurrence on r.
  std::uint64_t total = 0;
  const std::uint64_t sat = ~std::uint64_t{0};
  std::vector<std::uint64_t> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    next[0] = next[m] = 1;
    for (std::size_t r = 1; r < m; ++r) {
      // [m,r] = [m-1,r-1] + q^r [m-1,r]
      const std::uint64_t qr = saturating_pow(q, r);
      const std::uint64_t b = row[r];
      std::uint64_t prod = (b != 0 && qr > sat / b) ? sat : qr * b;
      next[r] = (row[r - 1] > sat - prod) ? sat : row[r - 1] + prod;
    }
    row = std::move(next);
  }
  for (auto x : row) total = (total > sat - x) ? sat : total + x;
  return total;
}

std::vector<Subspace> enumerate_subspaces(const InvolutiveField& f, std::size_t n) {
  const std::uint64_t count = count_subspaces(f.order(), n);
  if (!within_cap(count, kMaxSubspaces, "subspace count"))
    throw Error(ErrorCode::EnumerationCap,
                std::to_string(count) + " subspaces exceed the cap of " + std::to_string(kMaxSubspaces));
  std::vector<Subspace> out;
  out.reserve(count);
  const std::uint32_t q = f.order();
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<Subspace> level;
    // Pivot sets as increasing index tuples.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_piv(n, false);
      for (auto p : piv) is_piv[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
      const std::uint64_t combos = saturating_pow(q, free_pos.size());
      for (std::uint64_t idx = 0; idx < combos; ++idx) {
        Matrix b(r, n);
        for (std::size_t i = 0; i < r; ++i) b(i, piv[i]) = kOne;
        std::uint64_t x = idx;
        for (std::size_t t = free_pos.size(); t-- > 0;) {
          b(free_pos[t].first, free_pos[t].second) = elem(static_cast<std::uint32_t>(x % q));
          x /= q;
        }
        level.push_back(Subspace::from_rref(std::move(b), n));
      }
      // Next pivot combination.
      if (r == 0) break;
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(level.begin(), level.end());
    for (auto& s : level) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Gv for every vector v, plus conj(v), indexed by enumeration order.
struct VectorTable {
  std::vector<Vector> vec, gv, conj;
};

VectorTable build_table(const InvolutiveField& f, const Matrix& gram) {
  const std::size_t n = gram.rows();
  const std::uint64_t total = saturating_pow(f.order(), n);
  VectorTable t;
  t.vec.reserve(total);
  t.gv.reserve(total);
  t.conj.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    Vector v = vector_from_index(f, i, n);
    t.gv.push_back(apply(f, gram, v));
    Vector c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = f.star(v[j]);
    t.conj.push_back(std::move(c));
    t.vec.push_back(std::move(v));
  }
  return t;
}

// Two row vectors are proportional with the same zero pattern of their kernels.
bool same_kernel(const InvolutiveField& f, const Vector& a, const Vector& b) {
  const bool za = is_zero(a), zb = is_zero(b);
  if (za || zb) return za == zb;
  std::size_t i = 0;
  while (a[i] == kZero) ++i;
  if (b[i] == kZero) return false;
  const FieldElem ratio = f.div(b[i], a[i]);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (f.mul(ratio, a[j]) != b[j]) return false;
  return true;
}

}  // namespace

bool orthosymmetric_by_pairs(const InvolutiveField& f, const Matrix& gram) {
  VectorTable t = build_table(f, gram);
  const std::size_t total = t.vec.size();
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      const bool uv = dot(f, t.conj[i], t.gv[j]) == kZero;
      const bool vu = dot(f, t.conj[j], t.gv[i]) == kZero;
      if (uv != vu) return false;
    }
  return true;
}

bool orthosymmetric_by_functionals(const InvolutiveField& f, const Matrix& gram) {
  // u ⊥ v  <=>  (u^{*T} G) v = 0 and v ⊥ u  <=>  (G u)^{*T} v = 0, so the
  // relation is symmetric iff these two functionals share a kernel for
  // every u.
  const std::size_t n = gram.rows();
  VectorTable t = build_table(f, gram);
  const Matrix gt = transpose(gram);
  for (std::size_t i = 0; i < t.vec.size(); ++i) {
    Vector left = apply(f, gt, t.conj[i]);
    Vector right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = f.star(t.gv[i][j]);
    if (!same_kernel(f, left, right)) return false;
  }
  return true;
}

SpaceClass classify_gram(const InvolutiveField& f, const Matrix& gram) {
  const std::size_t n = gram.rows();
  SpaceClass c;
  c.nondegenerate = inverse(f, gram).has_value();

  // epsilon with G_ji = eps * (G_ij)^* for all i, j.
  std::optional<FieldElem> eps;
  for (std::size_t i = 0; i < n && !eps; ++i)
    for (std::size_t j = 0; j < n && !eps; ++j)
      if (gram(i, j) != kZero) eps = f.div(gram(j, i), f.star(gram(i, j)));
  if (eps) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (gram(j, i) != f.mul(*eps, f.star(gram(i, j)))) eps.reset();
  }
  c.epsilon = eps;
  c.hermitian = eps && *eps == kOne;
  c.skew_symmetric = eps && *eps == f.neg(kOne) && f.involution_kind() == InvolutionKind::Identity;

  VectorTable t = build_table(f, gram);
  c.alternate = true;
  c.anisotropic = true;
  for (std::size_t i = 0; i < t.vec.size(); ++i) {
    const bool iso = dot(f, t.conj[i], t.gv[i]) == kZero;
    if (!iso) c.alternate = false;
    if (iso && i != 0) c.anisotropic = false;
  }

  const std::uint64_t pairs = saturating_pow(f.order(), 2 * n);
  c.orthosymmetric = pairs <= (1u << 22) ? orthosymmetric_by_pairs(f, gram) : orthosymmetric_by_functionals(f, gram);
  return c;
}

GramSpace GramSpace::make(const InvolutiveField& f, const Matrix& gram) {
  if (!gram.is_square()) throw Error(ErrorCode::NonSquareGram, "Gram matrix must be square");
  if (gram.rows() > kMaxDimension && !within_cap(gram.rows(), kMaxDimension, "dimension"))
    throw Error(ErrorCode::DimensionCap, "dimension " + std::to_string(gram.rows()) + " exceeds 8");
  for (auto x : gram.data())
    if (!f.is_valid(x)) throw Error(ErrorCode::InvalidElement, "Gram entry out of range");
  const std::uint64_t vectors = saturating_pow(f.order(), gram.rows());
  if (!within_cap(vectors, kMaxVectorScan, "vectors to classify"))
    throw Error(ErrorCode::EnumerationCap, "q^n = " + std::to_string(vectors) + " too large to classify");
  return GramSpace(f, gram, classify_gram(f, gram));
}

FieldElem inner(const GramSpace& s, const Vector& u, const Vector& v) {
  if (u.size() != s.dim() || v.size() != s.dim())
    throw Error(ErrorCode::LengthMismatch, "vector length does not match dimension");
  const auto& f = s.field();
  Vector gv = apply(f, s.gram(), v);
  FieldElem r = kZero;
  for (std::size_t i = 0; i < u.size(); ++i) r = f.add(r, f.mul(f.star(u[i]), gv[i]));
  return r;
}

namespace {

void require_nondegenerate(const GramSpace& s) {
  if (!s.nondegenerate()) throw Error(ErrorCode::DegenerateSpace, "operation needs a non-degenerate space");
}

void require_orthosymmetric(const GramSpace& s) {
  if (!s.classification().orthosymmetric)
    throw Error(ErrorCode::NotOrthosymmetric, "operation needs an orthosymmetric space");
}

}  // namespace

Subspace orthogonal(const GramSpace& s, const Subspace& u) {
  require_nondegenerate(s);
  const auto& f = s.field();
  if (u.dim() == 0) return Subspace::whole(s.dim());
  return Subspace::span(f, kernel(f, mul(f, conjugate(f, u.basis()), s.gram())));
}

RadicalReport radical_report(const GramSpace& s, const Subspace& u) {
  const auto& f = s.field();
  Subspace perp = orthogonal(s, u);
  RadicalReport r;
  r.radical = meet(f, u, perp);
  r.closed = orthogonal(s, perp) == u;
  r.summand = r.radical.dim() == 0;
  return r;
}

Subspace extend_to_summand(const GramSpace& s, const Subspace& w) {
  require_nondegenerate(s);
  require_orthosymmetric(s);
  const auto& f = s.field();
  const std::uint64_t total = saturating_pow(f.order(), s.dim());
  Subspace u = w;
  while (true) {
    Subspace rad = radical_report(s, u).radical;
    if (rad.dim() == 0) return u;
    const Vector v = rad.basis_vector(0);
    bool extended = false;
    for (std::uint64_t i = 1; i < total; ++i) {
      Vector x = vector_from_index(f, i, s.dim());
      if (inner(s, v, x) != kZero) {
        u = sum(f, u, Subspace::span(f, std::vector<Vector>{x}, s.dim()));
        extended = true;
        break;
      }
    }
    if (!extended) throw Error(ErrorCode::DegenerateSpace, "radical vector orthogonal to everything");
  }
}

GramSpace subquotient(const GramSpace& s, const Subspace& u) {
  require_nondegenerate(s);
  require_orthosymmetric(s);
  const auto& f = s.field();
  Subspace rad = radical_report(s, u).radical;
  std::vector<Vector> complement;
  Subspace acc = rad;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vector b = u.basis_vector(i);
    if (acc.contains(f, b)) continue;
    complement.push_back(b);
    acc = sum(f, acc, Subspace::span(f, std::vector<Vector>{b}, s.dim()));
  }
  const std::size_t m = complement.size();
  Matrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = inner(s, complement[i], complement[j]);
  return GramSpace::make(f, g);
}

GramSpace scale(const GramSpace& s, FieldElem mu) {
  if (mu == kZero) throw Error(ErrorCode::ZeroScale, "scaling by zero");
  return GramSpace::make(s.field(), hermilat::scale(s.field(), mu, s.gram()));
}

GramSpace orthogonal_sum(const GramSpace& a, const GramSpace& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "orthogonal sum over different fields");
  const std::size_t n = a.dim() + b.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
  return GramSpace::make(a.field(), g);
}

bool is_similar(const GramSpace& a, const GramSpace& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "similarity across fields is not searched");
  if (a.dim() != b.dim()) return false;
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t total = saturating_pow(f.order(), n * n);
  if (!within_cap(total, kMaxSimilaritySearch, "similarity search"))
    throw Error(ErrorCode::Infeasible, "q^(n^2) = " + std::to_string(total) + " exceeds 10^6");
  const Matrix& gb = b.gram();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix t = matrix_from_index(f, idx, n, n);
    Matrix m = mul(f, mul(f, star_transpose(f, t), a.gram()), t);
    // G_B = mu M for some nonzero mu; T must be invertible.
    std::optional<FieldElem> mu;
    bool ok = true;
    for (std::size_t k = 0; k < n * n && ok; ++k) {
      const FieldElem x = m.data()[k], y = gb.data()[k];
      if (x == kZero || y == kZero) {
        ok = (x == y);
        continue;
      }
      const FieldElem r = f.div(y, x);
      if (!mu) mu = r;
      else if (*mu != r) ok = false;
    }
    if (!ok) continue;
    if (!inverse(f, t)) continue;
    return true;
  }
  return false;
}

}  // namespace hermilat
