#include "hermilat/constructions.hpp"

#include "hermilat/error.hpp"
#include "hermilat/subspace_lattice.hpp"

#include <algorithm>
#include <random>

namespace hermilat {

Vector FieldEmbedding::apply(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (*this)(v[i]);
  return out;
}

Matrix FieldEmbedding::apply(const Matrix& a) const {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (*this)(a(i, j));
  return out;
}

namespace {

bool embedding_laws_hold(const InvolutiveField& f, const InvolutiveField& k, const std::vector<FieldElem>& map) {
  const std::uint32_t q = f.order();
  if (map[0] != kZero || map[1] != kOne) return false;
  std::vector<bool> hit(k.order(), false);
  for (std::uint32_t x = 0; x < q; ++x) {
    if (hit[code(map[x])]) return false;
    hit[code(map[x])] = true;
    if (map[code(f.star(elem(x)))] != k.star(map[x])) return false;
  }
  auto pair_ok = [&](std::uint32_t x, std::uint32_t y) {
    return map[code(f.add(elem(x), elem(y)))] == k.add(map[x], map[y]) &&
           map[code(f.mul(elem(x), elem(y)))] == k.mul(map[x], map[y]);
  };
  if (std::uint64_t{q} * q <= (1u << 22)) {
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y)
        if (!pair_ok(x, y)) return false;
  } else {
    std::mt19937_64 rng(0xe1b);
    std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
    for (int i = 0; i < (1 << 20); ++i)
      if (!pair_ok(d(rng), d(rng))) return false;
  }
  return true;
}

void check_space(const GramSpace& s) {
  if (!s.nondegenerate()) throw Error(ErrorCode::DegenerateSpace, "tensorial embeddings need a nondegenerate source");
  if (!s.classification().orthosymmetric) throw Error(ErrorCode::NotOrthosymmetric, "source is not orthosymmetric");
}

std::size_t index_in(const SpaceLattice& l, const Subspace& u) {
  auto idx = l.index_of(u);
  if (!idx) throw Error(ErrorCode::NotAHom, "image subspace missing from the target lattice");
  return *idx;
}

}  // namespace

FieldEmbedding field_embedding(const InvolutiveField& from, const InvolutiveField& to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(ErrorCode::NoCompatibleEmbedding,
                from.describe() + " does not embed in " + to.describe() + " as a field");
  const auto& modulus = from.modulus();
  std::optional<std::vector<FieldElem>> best;
  for (std::uint32_t r = 0; r < to.order(); ++r) {
    // Horner evaluation of the modulus at r.
    FieldElem v = kZero;
    for (std::size_t i = modulus.size(); i-- > 0;) v = to.add(to.mul(v, elem(r)), to.from_int(modulus[i]));
    if (v != kZero) continue;
    std::vector<FieldElem> map(from.order());
    for (std::uint32_t x = 0; x < from.order(); ++x) {
      const auto d = from.digits(elem(x));
      FieldElem acc = kZero, power = kOne;
      for (auto c : d) {
        acc = to.add(acc, to.mul(to.from_int(c), power));
        power = to.mul(power, elem(r));
      }
      map[x] = acc;
    }
    if (!embedding_laws_hold(from, to, map)) continue;
    if (!best || map < *best) best = std::move(map);
  }
  if (!best)
    throw Error(ErrorCode::NoCompatibleEmbedding,
                "no embedding of " + from.describe() + " into " + to.describe() + " commutes with the involutions");
  return {from, to, std::move(*best)};
}

TensorialEmbedding tensorial_embed(const GramSpace& space, const FieldEmbedding& alpha) {
  if (!(space.field() == alpha.source))
    throw Error(ErrorCode::FieldMismatch, "space field differs from the embedding source");
  check_space(space);
  const std::size_t n = space.dim();
  TensorialEmbedding t{alpha, space, GramSpace::make(alpha.target, alpha.apply(space.gram()))};
  auto compatible = [&](const Vector& v, const Vector& w) {
    return inner(t.target, t.omega(v), t.omega(w)) == alpha(inner(space, v, w));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei(n, kZero), ej(n, kZero);
      ei[i] = kOne;
      ej[j] = kOne;
      if (!compatible(ei, ej)) throw Error(ErrorCode::NotAHom, "form is not carried along the embedding");
    }
  const std::uint64_t vectors = saturating_pow(space.field().order(), n);
  if (vectors * vectors <= (1u << 16))
    for (std::uint64_t a = 0; a < vectors; ++a)
      for (std::uint64_t b = 0; b < vectors; ++b)
        if (!compatible(vector_from_index(space.field(), a, n), vector_from_index(space.field(), b, n)))
          throw Error(ErrorCode::NotAHom, "form is not carried along the embedding");
  if (rank(alpha.target, alpha.apply(Matrix::identity(n))) != n)
    throw Error(ErrorCode::NotAHom, "image does not span the target");
  return t;
}

EmbeddingReport lift_ring_embedding(const TensorialEmbedding& t) {
  const std::size_t n = t.source.dim();
  auto src = MatrixRing::make(t.source);
  auto tgt = MatrixRing::make(t.target);
  const FieldEmbedding alpha = t.alpha;
  EmbeddingReport rep{RingHom{src, tgt, [alpha, n](const RingElem& a) { return alpha.apply(Matrix(n, n, a)).data(); }},
                      {}, {}, {}, {}, {}, false};
  rep.ring_check = hom_check(rep.ring);

  SpaceLattice sl = lattice_of_space(t.source);
  SpaceLattice tl = lattice_of_space(t.target);
  for (const auto& u : sl.elements)
    rep.lattice_map.push_back(index_in(tl, Subspace::span(alpha.target, alpha.apply(u.basis()))));
  rep.source_lattice = std::move(sl.lattice);
  rep.target_lattice = std::move(tl.lattice);
  rep.lattice_check = check_hom(rep.lattice_hom());
  rep.ok = rep.ring_check.is_star_hom && rep.ring_check.injective && rep.lattice_check.is_galois_hom &&
           rep.lattice_check.injective;
  return rep;
}

JointExtension joint_extension(const GramSpace& v0, const GramSpace& v1, const FieldEmbedding& e0,
                               const FieldEmbedding& e1) {
  if (!(e0.target == e1.target)) throw Error(ErrorCode::FieldMismatch, "the embeddings target different fields");
  const TensorialEmbedding t0 = tensorial_embed(v0, e0);
  const TensorialEmbedding t1 = tensorial_embed(v1, e1);
  const auto& eps0 = t0.target.classification().epsilon;
  const auto& eps1 = t1.target.classification().epsilon;
  if (t0.target.dim() > 0 && t1.target.dim() > 0 && eps0 && eps1 && *eps0 != *eps1)
    throw Error(ErrorCode::EpsilonMismatch, "embedded forms are hermitian for epsilon " +
                                                std::to_string(code(*eps0)) + " and " + std::to_string(code(*eps1)));
  const GramSpace space = orthogonal_sum(t0.target, t1.target);
  const std::size_t n0 = v0.dim(), n1 = v1.dim(), n = n0 + n1;

  auto r0 = MatrixRing::make(v0);
  auto r1 = MatrixRing::make(v1);
  auto prod = ProductRing::make({r0, r1});
  auto tgt = MatrixRing::make(space);
  auto block = [prod, e0, e1, n0, n1, n](const RingElem& a) {
    const Matrix m0 = e0.apply(Matrix(n0, n0, prod->component(a, 0)));
    const Matrix m1 = e1.apply(Matrix(n1, n1, prod->component(a, 1)));
    Matrix out(n, n);
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n0; ++j) out(i, j) = m0(i, j);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) out(n0 + i, n0 + j) = m1(i, j);
    return out.data();
  };
  JointExtension out{space, {RingHom{prod, tgt, block}, {}, {}, {}, {}, {}, false}};
  EmbeddingReport& rep = out.embedding;
  rep.ring_check = hom_check(rep.ring);

  SpaceLattice l0 = lattice_of_space(v0);
  SpaceLattice l1 = lattice_of_space(v1);
  SpaceLattice tl = lattice_of_space(space);
  const auto& k = e0.target;
  for (const auto& u0 : l0.elements)
    for (const auto& u1 : l1.elements) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < u0.dim(); ++i) {
        Vector v(n, kZero);
        const Vector w = e0.apply(u0.basis_vector(i));
        std::copy(w.begin(), w.end(), v.begin());
        rows.push_back(std::move(v));
      }
      for (std::size_t i = 0; i < u1.dim(); ++i) {
        Vector v(n, kZero);
        const Vector w = e1.apply(u1.basis_vector(i));
        std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(n0));
        rows.push_back(std::move(v));
      }
      rep.lattice_map.push_back(index_in(tl, Subspace::span(k, rows, n)));
    }
  rep.source_lattice = product({&l0.lattice, &l1.lattice});
  rep.target_lattice = std::move(tl.lattice);
  rep.lattice_check = check_hom(rep.lattice_hom());
  rep.ok = rep.ring_check.is_star_hom && rep.ring_check.injective && rep.lattice_check.is_galois_hom &&
           rep.lattice_check.injective;
  return out;
}

}  // namespace hermilat
