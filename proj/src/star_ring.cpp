#include "hermilat/star_ring.hpp"

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hermilat {

// ---------------------------------------------------------------- StarRing

const std::vector<RingElem>& StarRing::carrier() const {
  std::call_once(carrier_once_, [this] {
    const std::uint64_t s = size();
    if (!within_cap(s, kMaxCarrier, "ring carrier"))
      throw Error(ErrorCode::EnumerationCap,
                  "carrier of " + describe() + " has " + std::to_string(s) + " elements (cap 2^20)");
    carrier_ = build_carrier();
  });
  return carrier_;
}

std::optional<std::size_t> StarRing::index_of(const RingElem& a) const {
  const auto& c = carrier();
  auto it = std::lower_bound(c.begin(), c.end(), a);
  if (it == c.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - c.begin());
}

RingElem StarRing::quasi_inverse(const RingElem& a) const {
  for (const auto& x : carrier())
    if (mul(mul(a, x), a) == a) return x;
  throw Error(ErrorCode::NotRegularElement, "no quasi-inverse in " + describe());
}

// -------------------------------------------------------------- MatrixRing

std::shared_ptr<const MatrixRing> MatrixRing::make(const GramSpace& space) {
  auto inv = inverse(space.field(), space.gram());
  if (!inv) throw Error(ErrorCode::DegenerateSpace, "matrix ring needs a non-degenerate space");
  return std::shared_ptr<const MatrixRing>(new MatrixRing(space, std::move(*inv)));
}

std::uint64_t MatrixRing::size() const { return saturating_pow(field().order(), n_ * n_); }

std::string MatrixRing::describe() const {
  return "End(" + field().describe() + "^" + std::to_string(n_) + ")";
}

RingElem MatrixRing::one() const { return Matrix::identity(n_).data(); }

RingElem MatrixRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field().add(a[i], b[i]);
  return r;
}

RingElem MatrixRing::neg(const RingElem& a) const {
  RingElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field().neg(a[i]);
  return r;
}

RingElem MatrixRing::mul(const RingElem& a, const RingElem& b) const {
  return hermilat::mul(field(), to_matrix(a), to_matrix(b)).data();
}

RingElem MatrixRing::star(const RingElem& a) const {
  const auto& f = field();
  return hermilat::mul(f, hermilat::mul(f, gram_inv_, star_transpose(f, to_matrix(a))), space_.gram()).data();
}

RingElem MatrixRing::scalar(std::int64_t n, const RingElem& a) const {
  const FieldElem s = field().from_int(n);
  RingElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field().mul(s, a[i]);
  return r;
}

RingElem MatrixRing::quasi_inverse(const RingElem& a) const {
  const auto& f = field();
  const Matrix m = to_matrix(a);
  Echelon e = rref(f, m);
  const std::size_t r = e.pivots.size();
  if (r == 0) return zero();
  // A = B C with B the pivot columns of A and C the nonzero RREF rows.
  Matrix b(n_, r);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = m(i, e.pivots[j]);
  // C C^R = I: C has identity columns at the pivots.
  Matrix cr(n_, r);
  for (std::size_t j = 0; j < r; ++j) cr(e.pivots[j], j) = kOne;
  // B^L B = I: invert an r x r block of independent rows of B.
  std::vector<std::size_t> rows = rref(f, transpose(b)).pivots;
  Matrix bs(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) bs(i, j) = b(rows[i], j);
  Matrix bs_inv = *inverse(f, bs);
  Matrix bl(r, n_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) bl(i, rows[j]) = bs_inv(i, j);
  return hermilat::mul(f, cr, bl).data();
}

std::vector<RingElem> MatrixRing::build_carrier() const {
  std::vector<RingElem> out;
  const std::uint64_t total = size();
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(vector_from_index(field(), i, n_ * n_));
  return out;
}

// ------------------------------------------------------------- ProductRing

ProductRing::ProductRing(std::vector<RingPtr> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    offsets_.push_back(width_);
    width_ += f->width();
  }
}

std::shared_ptr<const ProductRing> ProductRing::make(std::vector<RingPtr> factors) {
  return std::shared_ptr<const ProductRing>(new ProductRing(std::move(factors)));
}

std::uint64_t ProductRing::size() const {
  std::uint64_t s = 1;
  for (const auto& f : factors_) {
    const std::uint64_t k = f->size();
    s = (k != 0 && s > ~std::uint64_t{0} / k) ? ~std::uint64_t{0} : s * k;
  }
  return s;
}

std::string ProductRing::describe() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i]->describe();
  return factors_.empty() ? "0-fold product" : s;
}

RingElem ProductRing::component(const RingElem& a, std::size_t i) const {
  return RingElem(a.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  a.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + factors_[i]->width()));
}

RingElem ProductRing::join(const std::vector<RingElem>& parts) const {
  RingElem r;
  r.reserve(width_);
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

template <class F>
RingElem ProductRing::componentwise(const RingElem& a, F&& f) const {
  std::vector<RingElem> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(f(*factors_[i], component(a, i)));
  return join(parts);
}

template <class F>
RingElem ProductRing::componentwise(const RingElem& a, const RingElem& b, F&& f) const {
  std::vector<RingElem> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    parts.push_back(f(*factors_[i], component(a, i), component(b, i)));
  return join(parts);
}

RingElem ProductRing::one() const {
  std::vector<RingElem> parts;
  for (const auto& f : factors_) parts.push_back(f->one());
  return join(parts);
}

RingElem ProductRing::add(const RingElem& a, const RingElem& b) const {
  return componentwise(a, b, [](const StarRing& r, const RingElem& x, const RingElem& y) { return r.add(x, y); });
}

RingElem ProductRing::neg(const RingElem& a) const {
  return componentwise(a, [](const StarRing& r, const RingElem& x) { return r.neg(x); });
}

RingElem ProductRing::mul(const RingElem& a, const RingElem& b) const {
  return componentwise(a, b, [](const StarRing& r, const RingElem& x, const RingElem& y) { return r.mul(x, y); });
}

RingElem ProductRing::star(const RingElem& a) const {
  return componentwise(a, [](const StarRing& r, const RingElem& x) { return r.star(x); });
}

RingElem ProductRing::scalar(std::int64_t n, const RingElem& a) const {
  return componentwise(a, [n](const StarRing& r, const RingElem& x) { return r.scalar(n, x); });
}

RingElem ProductRing::quasi_inverse(const RingElem& a) const {
  return componentwise(a, [](const StarRing& r, const RingElem& x) { return r.quasi_inverse(x); });
}

std::vector<RingElem> ProductRing::build_carrier() const {
  std::vector<const std::vector<RingElem>*> cs;
  for (const auto& f : factors_) cs.push_back(&f->carrier());
  std::vector<RingElem> out;
  out.reserve(size());
  std::vector<std::size_t> idx(factors_.size(), 0);
  for (const auto* c : cs)
    if (c->empty()) return out;
  // Mixed-radix counter, first factor most significant.
  while (true) {
    std::vector<RingElem> parts;
    for (std::size_t i = 0; i < cs.size(); ++i) parts.push_back((*cs[i])[idx[i]]);
    out.push_back(join(parts));
    std::size_t i = cs.size();
    while (i > 0) {
      --i;
      if (++idx[i] < cs[i]->size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (cs.empty()) return out;
  }
}

// ----------------------------------------------------------- GeneratedRing

std::shared_ptr<const GeneratedRing> GeneratedRing::make(RingPtr parent, const std::vector<RingElem>& generators) {
  std::set<RingElem> seen;
  std::vector<RingElem> elems;
  auto push = [&](RingElem x) {
    if (seen.insert(x).second) {
      elems.push_back(std::move(x));
      if (!within_cap(elems.size(), kMaxCarrier, "generated subring"))
        throw Error(ErrorCode::EnumerationCap, "generated subring exceeds 2^20 elements");
    }
  };
  push(parent->zero());
  push(parent->one());
  for (const auto& g : generators) {
    if (g.size() != parent->width()) throw Error(ErrorCode::LengthMismatch, "generator width");
    push(g);
  }
  // Each new element is combined with everything seen before it.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    push(parent->star(elems[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      const RingElem x = elems[i], y = elems[j];
      push(parent->add(x, y));
      push(parent->mul(x, y));
      push(parent->mul(y, x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return std::shared_ptr<const GeneratedRing>(new GeneratedRing(std::move(parent), std::move(elems)));
}

std::string GeneratedRing::describe() const {
  return "subring of " + parent_->describe() + " with " + std::to_string(elements_.size()) + " elements";
}

RingPtr product_ring(std::vector<RingPtr> factors) { return ProductRing::make(std::move(factors)); }

RingPtr generated_subring(RingPtr parent, const std::vector<RingElem>& generators) {
  return GeneratedRing::make(std::move(parent), generators);
}

// ------------------------------------------------------------ calculus

Matrix adjoint(const GramSpace& space, const Matrix& a) {
  const auto& f = space.field();
  auto inv = inverse(f, space.gram());
  if (!inv) throw Error(ErrorCode::DegenerateSpace, "adjoint needs a non-degenerate space");
  return mul(f, mul(f, *inv, star_transpose(f, a)), space.gram());
}

RingElem idempotent_generator(const StarRing& ring, const RingElem& a) {
  return ring.mul(a, ring.quasi_inverse(a));
}

Matrix orthogonal_projection(const GramSpace& space, const Subspace& u) {
  const auto& f = space.field();
  const std::size_t n = space.dim();
  if (u.dim() == 0) return Matrix(n, n);
  const Matrix cols = transpose(u.basis());
  const Matrix ustar = star_transpose(f, cols);
  const Matrix h = mul(f, mul(f, ustar, space.gram()), cols);
  auto hinv = inverse(f, h);
  if (!hinv) throw Error(ErrorCode::NotASummand, "subspace meets its orthogonal");
  return mul(f, mul(f, mul(f, cols, *hinv), ustar), space.gram());
}

namespace {

bool is_projection(const StarRing& r, const RingElem& e) { return r.mul(e, e) == e && r.star(e) == e; }

Subspace column_space(const InvolutiveField& f, const Matrix& m) { return Subspace::span(f, transpose(m)); }

}  // namespace

RingElem projection_generator(const StarRing& ring, const RingElem& a) {
  if (const auto* m = dynamic_cast<const MatrixRing*>(&ring)) {
    const auto& f = m->field();
    try {
      return orthogonal_projection(m->space(), column_space(f, m->to_matrix(a))).data();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotASummand) throw;
      throw Error(ErrorCode::NotStarRegular, "image of the element is not an orthogonal summand");
    }
  }
  const RingElem g = idempotent_generator(ring, a);
  for (const auto& e : ring.carrier())
    if (is_projection(ring, e) && ring.mul(e, a) == a && ring.mul(g, e) == e) return e;
  throw Error(ErrorCode::NotStarRegular, "no projection generates the same right ideal");
}

RingElem common_left_unit(const StarRing& ring, const RingElem& a, const RingElem& b) {
  const RingElem e1 = idempotent_generator(ring, a);
  const RingElem bp = ring.sub(b, ring.mul(e1, b));
  const RingElem f = idempotent_generator(ring, bp);  // of the form b' x, so e1 f = 0
  return ring.sub(ring.add(e1, f), ring.mul(f, e1));
}

std::vector<RingElem> projections(const StarRing& ring) {
  std::vector<RingElem> out;
  for (const auto& e : ring.carrier())
    if (is_projection(ring, e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> right_ideal(const StarRing& ring, const RingElem& a) {
  std::set<std::size_t> idx;
  for (const auto& r : ring.carrier()) idx.insert(*ring.index_of(ring.mul(a, r)));
  return {idx.begin(), idx.end()};
}

namespace {

// Rank-one matrices u v^T with u normalized (first nonzero entry 1) and
// v != 0; every rank-one matrix appears exactly once.
template <class Visit>
void scan_rank_one(const MatrixRing& ring, Visit&& visit) {
  const auto& f = ring.field();
  const std::size_t n = ring.n();
  const std::uint64_t total = saturating_pow(f.order(), n);
  const std::uint64_t count = (total - 1) / (f.order() - 1) * (total - 1);
  if (!within_cap(count, kMaxRankOneScan, "rank-one scan"))
    throw Error(ErrorCode::EnumerationCap, "rank-one scan of " + std::to_string(count) + " matrices");
  for (std::uint64_t i = 1; i < total; ++i) {
    Vector u = vector_from_index(f, i, n);
    if (*std::find_if(u.begin(), u.end(), [](FieldElem x) { return x != kZero; }) != kOne) continue;
    for (std::uint64_t j = 1; j < total; ++j) {
      Vector v = vector_from_index(f, j, n);
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = f.mul(u[r], v[c]);
      if (visit(m.data(), u, v)) return;
    }
  }
}

}  // namespace

std::optional<RingElem> find_rank1_projection(const MatrixRing& ring) {
  std::optional<RingElem> found;
  const auto& f = ring.field();
  scan_rank_one(ring, [&](const RingElem& e, const Vector& u, const Vector& v) {
    if (dot(f, v, u) != kOne) return false;
    if (ring.star(e) != e) return false;
    found = e;
    return true;
  });
  return found;
}

std::optional<RingElem> find_rank1_null_idempotent(const MatrixRing& ring) {
  std::optional<RingElem> found;
  const auto& f = ring.field();
  scan_rank_one(ring, [&](const RingElem& e, const Vector& u, const Vector& v) {
    if (dot(f, v, u) != kOne) return false;
    const RingElem es = ring.star(e);
    if (!ring.is_zero(ring.mul(e, es)) || !ring.is_zero(ring.mul(es, e))) return false;
    found = e;
    return true;
  });
  return found;
}

RegularityReport regularity_report(const StarRing& ring) {
  RegularityReport rep;
  const auto* m = dynamic_cast<const MatrixRing*>(&ring);
  if (m) {
    rep.regular = true;  // full matrix rings over a field
  } else {
    rep.regular = true;
    for (const auto& a : ring.carrier()) {
      try {
        ring.quasi_inverse(a);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRegularElement) throw;
        rep.regular = false;
        rep.irregular_witness = a;
        break;
      }
    }
  }

  rep.proper = true;
  auto check_proper = [&](const RingElem& r) {
    if (ring.is_zero(r)) return false;
    if (!ring.is_zero(ring.mul(ring.star(r), r))) return false;
    rep.proper = false;
    rep.improper_witness = r;
    return true;
  };
  if (m) {
    // If r* r = 0 then (r E_jj)* (r E_jj) = E_jj r* r E_jj = 0, and r E_jj
    // is rank one for a nonzero column j, so rank-one matrices suffice.
    scan_rank_one(*m, [&](const RingElem& r, const Vector&, const Vector&) { return check_proper(r); });
  } else {
    for (const auto& r : ring.carrier())
      if (check_proper(r)) break;
  }
  rep.star_regular = rep.regular && rep.proper;

  if (m) {
    rep.rank1_projection = find_rank1_projection(*m);
  } else {
    // eR minimal: every nonzero x in eR generates all of eR.
    for (const auto& e : projections(ring)) {
      if (ring.is_zero(e)) continue;
      const auto ideal = right_ideal(ring, e);
      bool minimal = true;
      for (auto i : ideal) {
        const RingElem& x = ring.carrier()[i];
        if (ring.is_zero(x)) continue;
        if (right_ideal(ring, x).size() != ideal.size()) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        rep.rank1_projection = e;
        break;
      }
    }
  }
  rep.has_rank1_projection = rep.rank1_projection.has_value();
  return rep;
}

// ---------------------------------------------------------------- homs

RingHom RingHom::identity(RingPtr ring) {
  return RingHom{ring, ring, [](const RingElem& a) { return a; }};
}

RingHom RingHom::projection(std::shared_ptr<const ProductRing> ring, std::size_t component) {
  if (component >= ring->factors().size()) throw Error(ErrorCode::NotAHom, "no such component");
  RingPtr target = ring->factors()[component];
  return RingHom{ring, target, [ring, component](const RingElem& a) { return ring->component(a, component); }};
}

RingHom RingHom::from_table(RingPtr source, RingPtr target, std::vector<std::pair<RingElem, RingElem>> table) {
  std::sort(table.begin(), table.end());
  auto shared = std::make_shared<const std::vector<std::pair<RingElem, RingElem>>>(std::move(table));
  return RingHom{std::move(source), std::move(target), [shared](const RingElem& a) {
                   auto it = std::lower_bound(shared->begin(), shared->end(), a,
                                              [](const auto& p, const RingElem& x) { return p.first < x; });
                   if (it == shared->end() || it->first != a) throw Error(ErrorCode::NotAHom, "map is not total");
                   return it->second;
                 }};
}

HomReport hom_check(const RingHom& hom) {
  const StarRing& s = *hom.source;
  const StarRing& t = *hom.target;
  const auto& carrier = s.carrier();
  HomReport rep;
  std::vector<RingElem> image;
  image.reserve(carrier.size());
  for (const auto& a : carrier) {
    RingElem x = hom(a);
    if (x.size() != t.width()) throw Error(ErrorCode::NotAHom, "image has the wrong width");
    image.push_back(std::move(x));
  }
  auto fail = [&](std::string what) {
    if (rep.failure.empty()) rep.failure = std::move(what);
  };
  if (hom(s.one()) != t.one()) fail("1 is not preserved");
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (hom(s.star(carrier[i])) != t.star(image[i])) fail("involution is not preserved");
    if (hom(s.scalar(2, carrier[i])) != t.scalar(2, image[i])) fail("scalar action is not preserved");
    if (t.is_zero(image[i])) rep.kernel.push_back(carrier[i]);
  }
  // Pairs: all of them when affordable, else each element against a sample.
  std::vector<std::size_t> partners;
  const std::uint64_t m = carrier.size();
  rep.exhaustive = m * m <= (1u << 24);
  if (rep.exhaustive) {
    for (std::size_t j = 0; j < m; ++j) partners.push_back(j);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> d(0, m - 1);
    for (int k = 0; k < 64; ++k) partners.push_back(d(rng));
  }
  for (std::size_t i = 0; i < m && rep.failure.empty(); ++i)
    for (auto j : partners) {
      if (hom(s.add(carrier[i], carrier[j])) != t.add(image[i], image[j])) {
        fail("addition is not preserved");
        break;
      }
      if (hom(s.mul(carrier[i], carrier[j])) != t.mul(image[i], image[j])) {
        fail("multiplication is not preserved");
        break;
      }
    }
  rep.is_star_hom = rep.failure.empty();
  rep.injective = rep.kernel.size() == 1 && rep.is_star_hom;
  if (!rep.is_star_hom) {
    std::set<RingElem> distinct(image.begin(), image.end());
    rep.injective = distinct.size() == image.size();
  }
  return rep;
}

RingElem lift_quasi_inverse(const RingHom& hom, const RingElem& a, const RingElem& b, const RingElem& c,
                            const RingElem& y) {
  const StarRing& r = *hom.source;
  const StarRing& t = *hom.target;
  if (hom(c) != a) throw Error(ErrorCode::PreimageMismatch, "hom(c) differs from a");
  if (hom(y) != b) throw Error(ErrorCode::PreimageMismatch, "hom(y) differs from b");
  if (t.mul(t.mul(a, b), a) != a) throw Error(ErrorCode::PreimageMismatch, "b is not a quasi-inverse of a");

  // w = c - cyc lies in the kernel I; find u in I with w u w = w.
  const RingElem w = r.sub(c, r.mul(r.mul(c, y), c));
  std::optional<RingElem> u;
  for (const auto& k : r.carrier()) {
    if (!t.is_zero(hom(k))) continue;
    if (r.mul(r.mul(w, k), w) == w) {
      u = k;
      break;
    }
  }
  if (!u) throw Error(ErrorCode::KernelNotRegular, "c - cyc has no quasi-inverse in the kernel");

  const RingElem& uu = *u;
  const RingElem ucy = r.mul(r.mul(uu, c), y);
  const RingElem ycu = r.mul(r.mul(y, c), uu);
  const RingElem ycucy = r.mul(r.mul(ycu, c), y);
  RingElem d = r.sub(uu, ucy);
  d = r.sub(d, ycu);
  d = r.add(d, ycucy);
  return r.add(d, y);
}

// ------------------------------------------------------- reconstruction

Reconstruction reconstruct_space(std::shared_ptr<const MatrixRing> ring, const RingElem& e) {
  const auto& f = ring->field();
  const std::size_t n = ring->n();
  const Matrix em = ring->to_matrix(e);
  if (ring->mul(e, e) != e) throw Error(ErrorCode::BadIdempotent, "element is not idempotent");
  if (rank(f, em) != 1) throw Error(ErrorCode::RankNotOne, "idempotent must have rank one");
  const RingElem es = ring->star(e);

  ReconstructionCase which;
  RingElem twist = ring->one();
  if (es == e) {
    which = ReconstructionCase::Projection;
  } else if (ring->is_zero(ring->mul(e, es)) && ring->is_zero(ring->mul(es, e))) {
    which = ReconstructionCase::Alternate;
    std::optional<RingElem> psi;
    for (std::size_t k = 0; k < n * n && !psi; ++k) {
      RingElem unit(n * n, kZero);
      unit[k] = kOne;
      RingElem x = ring->mul(ring->mul(e, unit), es);
      if (!ring->is_zero(x)) psi = x;
    }
    twist = ring->star(*psi);
  } else {
    throw Error(ErrorCode::BadIdempotent, "need e = e* or e e* = 0 = e* e");
  }

  // kappa(lambda e) = lambda, read at a nonzero entry of e.
  std::size_t pos = 0;
  while (e[pos] == kZero) ++pos;
  auto kappa = [&](const RingElem& x) { return f.div(x[pos], e[pos]); };

  // Basis of Re from the matrix units E_k e, first independent ones.
  std::vector<RingElem> basis;
  Matrix span(0, n * n);
  for (std::size_t k = 0; k < n * n && basis.size() < n; ++k) {
    RingElem unit(n * n, kZero);
    unit[k] = kOne;
    RingElem v = ring->mul(unit, e);
    Matrix trial = vstack(span, Matrix(1, n * n, v));
    if (rank(f, trial) > span.rows()) {
      span = trial;
      basis.push_back(std::move(v));
    }
  }

  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = kappa(ring->mul(twist, ring->mul(ring->star(basis[i]), basis[j])));
  GramSpace space = GramSpace::make(f, g);

  // Coordinates in Re: solve span^T c = x.
  const Matrix cols = transpose(span);
  auto coords = [f, cols, n](const RingElem& x) {
    Matrix aug(cols.rows(), n + 1);
    for (std::size_t i = 0; i < cols.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = cols(i, j);
      aug(i, n) = x[i];
    }
    Echelon ech = rref(f, aug);
    Vector c(n, kZero);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      if (ech.pivots[r] < n) c[ech.pivots[r]] = ech.reduced(r, n);
    return c;
  };
  auto target = space.nondegenerate() ? MatrixRing::make(space) : nullptr;
  auto rep_map = [ring, basis, coords, n](const RingElem& r) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = coords(ring->mul(r, basis[j]));
      for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return m.data();
  };

  Reconstruction out{space, which, basis, RingHom{ring, target, rep_map}, false};
  if (!target) return out;

  // Verify on matrix units; linearity extends the checks to all of End(V).
  bool ok = rep_map(ring->one()) == target->one();
  std::vector<RingElem> units, images;
  for (std::size_t k = 0; k < n * n; ++k) {
    RingElem unit(n * n, kZero);
    unit[k] = kOne;
    images.push_back(rep_map(unit));
    units.push_back(std::move(unit));
  }
  for (std::size_t i = 0; i < units.size() && ok; ++i) {
    if (rep_map(ring->star(units[i])) != target->star(images[i])) ok = false;
    for (std::size_t j = 0; j < units.size() && ok; ++j)
      if (rep_map(ring->mul(units[i], units[j])) != target->mul(images[i], images[j])) ok = false;
  }
  Matrix image_span(0, n * n);
  for (const auto& im : images) image_span = vstack(image_span, Matrix(1, n * n, im));
  if (rank(f, image_span) != n * n) ok = false;
  out.rep_verified = ok;
  return out;
}

}  // namespace hermilat
