#include "hermilat/error.hpp"
#include "hermilat/star_ring.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hermilat;

namespace {

InvolutiveField gf(std::uint32_t p, std::uint32_t k = 1, InvolutionKind inv = InvolutionKind::Identity) {
  return InvolutiveField::make(p, k, {}, inv);
}

Matrix codes(std::vector<std::vector<std::uint32_t>> rows) { return Matrix::from_codes(rows); }
RingElem el(std::vector<std::vector<std::uint32_t>> rows) { return codes(std::move(rows)).data(); }

GramSpace symplectic2() { return GramSpace::make(gf(2), codes({{0, 1}, {1, 0}})); }

// Adjoint found by searching all matrices for the defining identity on
// basis pairs; independent of the G^{-1} formula.
Matrix adjoint_by_search(const GramSpace& s, const Matrix& a) {
  const auto& f = s.field();
  const std::size_t n = s.dim();
  std::optional<Matrix> found;
  for (std::uint64_t idx = 0; idx < saturating_pow(f.order(), n * n); ++idx) {
    Matrix b = matrix_from_index(f, idx, n, n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Vector ei(n, kZero), ej(n, kZero);
        ei[i] = kOne;
        ej[j] = kOne;
        ok = oracle::form(f, s.gram(), apply(f, a, ei), ej) == oracle::form(f, s.gram(), ei, apply(f, b, ej));
      }
    if (ok) {
      EXPECT_FALSE(found.has_value()) << "adjoint not unique";
      found = b;
    }
  }
  return *found;
}

std::vector<GramSpace> small_orthosymmetric(const InvolutiveField& f, std::size_t n) {
  std::vector<GramSpace> out;
  for (std::uint64_t i = 0; i < saturating_pow(f.order(), n * n); ++i) {
    Matrix g = matrix_from_index(f, i, n, n);
    if (!inverse(f, g)) continue;
    auto s = GramSpace::make(f, g);
    if (s.classification().orthosymmetric) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(StarRing, AdjointExamples) {
  auto s = symplectic2();
  for (std::uint64_t i = 0; i < 16; ++i) {
    Matrix a = matrix_from_index(s.field(), i, 2, 2);
    Matrix expect(2, 2);
    expect(0, 0) = a(1, 1);
    expect(0, 1) = a(0, 1);
    expect(1, 0) = a(1, 0);
    expect(1, 1) = a(0, 0);
    EXPECT_EQ(adjoint(s, a), expect);
  }
  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto h = GramSpace::make(f4, Matrix::identity(2));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix a = oracle::random_matrix(f4, 2, 2, rng);
    EXPECT_EQ(adjoint(h, a), star_transpose(f4, a));
  }
  EXPECT_EQ(adjoint(h, Matrix::identity(2)), Matrix::identity(2));
}

TEST(StarRing, AdjointMatchesDefiningEquation) {
  const InvolutiveField fields[] = {gf(2), gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  std::mt19937_64 rng(11);
  for (const auto& f : fields)
    for (const auto& s : small_orthosymmetric(f, 2)) {
      auto ring = MatrixRing::make(s);
      for (int t = 0; t < 4; ++t) {
        Matrix a = oracle::random_matrix(f, 2, 2, rng), b = oracle::random_matrix(f, 2, 2, rng);
        ASSERT_EQ(adjoint(s, a), adjoint_by_search(s, a));
        const RingElem x = a.data(), y = b.data();
        ASSERT_EQ(ring->star(ring->star(x)), x);
        ASSERT_EQ(ring->star(ring->mul(x, y)), ring->mul(ring->star(y), ring->star(x)));
        ASSERT_EQ(ring->star(ring->add(x, y)), ring->add(ring->star(x), ring->star(y)));
      }
    }
}

TEST(StarRing, QuasiInverseExamples) {
  auto ring = MatrixRing::make(symplectic2());
  EXPECT_EQ(ring->quasi_inverse(ring->zero()), ring->zero());
  const RingElem a = el({{1, 0}, {0, 0}});
  EXPECT_EQ(ring->quasi_inverse(a), a);
  auto f3 = gf(3);
  auto r3 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  const RingElem inv = el({{1, 1}, {0, 1}});
  EXPECT_EQ(r3->mul(inv, r3->quasi_inverse(inv)), r3->one());
}

TEST(StarRing, QuasiInverseProperty) {
  std::mt19937_64 rng(99);
  struct Case {
    InvolutiveField f;
    std::size_t n;
  };
  const Case cases[] = {{gf(2), 3}, {gf(3), 3}, {gf(5), 4}, {gf(2, 2, InvolutionKind::FrobeniusHalf), 3}};
  for (const auto& c : cases) {
    auto ring = MatrixRing::make(GramSpace::make(c.f, Matrix::identity(c.n)));
    for (int t = 0; t < 1000; ++t) {
      Matrix a = oracle::random_matrix(c.f, c.n, c.n, rng);
      // Bias towards low rank.
      if (t % 3 == 0) a = oracle::naive_mul(c.f, oracle::random_matrix(c.f, c.n, 1, rng),
                                            oracle::random_matrix(c.f, 1, c.n, rng));
      const RingElem x = ring->quasi_inverse(a.data());
      ASSERT_EQ(ring->mul(ring->mul(a.data(), x), a.data()), a.data());
    }
  }
  // Exhaustive over an enumerated product.
  auto m2 = MatrixRing::make(symplectic2());
  auto prod = ProductRing::make({m2, m2});
  for (const auto& a : prod->carrier()) {
    const RingElem x = prod->quasi_inverse(a);
    ASSERT_EQ(prod->mul(prod->mul(a, x), a), a);
  }
}

TEST(StarRing, IdempotentGenerator) {
  auto f3 = gf(3);
  auto ring = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  const RingElem a = el({{1, 1}, {0, 0}});
  const RingElem e = idempotent_generator(*ring, a);
  EXPECT_EQ(ring->mul(e, e), e);
  EXPECT_EQ(Subspace::span(f3, transpose(ring->to_matrix(e))),
            Subspace::span(f3, std::vector<Vector>{{kOne, kZero}}, 2));
  EXPECT_EQ(idempotent_generator(*ring, el({{1, 1}, {0, 1}})), ring->one());
  // Right ideals agree in an enumerated ring.
  EXPECT_EQ(right_ideal(*ring, e), right_ideal(*ring, a));
}

TEST(StarRing, OrthogonalProjection) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_EQ(orthogonal_projection(s, Subspace::whole(2)), Matrix::identity(2));
  EXPECT_EQ(orthogonal_projection(s, Subspace::zero(2)), Matrix(2, 2));
  auto x = Subspace::span(f3, std::vector<Vector>{{kOne, kZero}}, 2);
  EXPECT_EQ(orthogonal_projection(s, x), codes({{1, 0}, {0, 0}}));
  EXPECT_THROW(orthogonal_projection(symplectic2(), Subspace::span(gf(2), std::vector<Vector>{{kOne, kZero}}, 2)),
               Error);

  // Every summand of every small orthosymmetric space.
  const InvolutiveField fields[] = {gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  for (const auto& f : fields)
    for (const auto& sp : small_orthosymmetric(f, 2))
      for (const auto& u : enumerate_subspaces(f, 2)) {
        if (!radical_report(sp, u).summand) continue;
        Matrix pi = orthogonal_projection(sp, u);
        ASSERT_EQ(mul(f, pi, pi), pi);
        ASSERT_EQ(adjoint(sp, pi), pi);
        ASSERT_EQ(Subspace::span(f, transpose(pi)), u);
        ASSERT_EQ(Subspace::span(f, kernel(f, pi)), orthogonal(sp, u));
      }
}

TEST(StarRing, ProjectionGenerator) {
  auto f3 = gf(3);
  auto ring = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  EXPECT_EQ(projection_generator(*ring, ring->zero()), ring->zero());
  const RingElem a = el({{1, 1}, {0, 0}});
  const RingElem e = projection_generator(*ring, a);
  EXPECT_EQ(ring->mul(e, e), e);
  EXPECT_EQ(ring->star(e), e);
  EXPECT_EQ(ring->mul(e, a), a);

  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto r4 = MatrixRing::make(GramSpace::make(f4, Matrix::identity(2)));
  try {
    projection_generator(*r4, el({{1, 1}, {1, 1}}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotStarRegular);
  }
}

TEST(StarRing, CommonLeftUnit) {
  auto ring = MatrixRing::make(symplectic2());
  EXPECT_EQ(common_left_unit(*ring, ring->zero(), ring->zero()), ring->zero());
  EXPECT_EQ(common_left_unit(*ring, el({{1, 0}, {0, 0}}), el({{0, 0}, {0, 1}})), ring->one());
  EXPECT_EQ(common_left_unit(*ring, el({{1, 1}, {0, 1}}), el({{1, 0}, {1, 0}})), ring->one());

  auto f3 = gf(3);
  auto r3 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(3)));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const RingElem a = oracle::naive_mul(f3, oracle::random_matrix(f3, 3, 1, rng), oracle::random_matrix(f3, 1, 3, rng)).data();
    const RingElem b = oracle::random_matrix(f3, 3, 3, rng).data();
    const RingElem e = common_left_unit(*r3, a, b);
    ASSERT_EQ(r3->mul(e, e), e);
    ASSERT_EQ(r3->mul(e, a), a);
    ASSERT_EQ(r3->mul(e, b), b);
    // e lies in aR + bR: its column space is inside im a + im b.
    Matrix both = vstack(transpose(r3->to_matrix(a)), transpose(r3->to_matrix(b)));
    ASSERT_TRUE(is_subspace_of(f3, Subspace::span(f3, transpose(r3->to_matrix(e))), Subspace::span(f3, both)));
  }
}

TEST(StarRing, RegularityExamples) {
  auto r3 = MatrixRing::make(GramSpace::make(gf(3), Matrix::identity(2)));
  auto rep = regularity_report(*r3);
  EXPECT_TRUE(rep.regular && rep.proper && rep.star_regular && rep.has_rank1_projection);

  auto sym = MatrixRing::make(symplectic2());
  auto rs = regularity_report(*sym);
  EXPECT_TRUE(rs.regular);
  EXPECT_FALSE(rs.star_regular);
  EXPECT_FALSE(rs.has_rank1_projection);
  // The only projections among the 16 matrices are 0 and I.
  auto ps = projections(*sym);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0], sym->zero());
  EXPECT_EQ(ps[1], sym->one());

  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto r4 = MatrixRing::make(GramSpace::make(f4, Matrix::identity(2)));
  auto rep4 = regularity_report(*r4);
  EXPECT_FALSE(rep4.proper);
  ASSERT_TRUE(rep4.improper_witness);
  const RingElem w = *rep4.improper_witness;
  EXPECT_FALSE(r4->is_zero(w));
  EXPECT_TRUE(r4->is_zero(r4->mul(r4->star(w), w)));
  // r with rows (1,1),(0,0) has r r* = 0, so r* is a witness as well.
  const RingElem r = el({{1, 1}, {0, 0}});
  EXPECT_TRUE(r4->is_zero(r4->mul(r, r4->star(r))));
}

TEST(StarRing, StarRegularIffAnisotropicAndAlternateIffNoProjection) {
  const InvolutiveField fields[] = {gf(2), gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  for (const auto& f : fields)
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& s : small_orthosymmetric(f, n)) {
        auto rep = regularity_report(*MatrixRing::make(s));
        ASSERT_EQ(rep.star_regular, s.classification().anisotropic);
        ASSERT_EQ(rep.has_rank1_projection, !s.classification().alternate);
      }
}

TEST(StarRing, EnumeratedRegularity) {
  auto m2 = MatrixRing::make(symplectic2());
  auto prod = ProductRing::make({m2, m2});
  EXPECT_EQ(prod->size(), 256u);
  EXPECT_EQ(prod->carrier().size(), 256u);
  auto rep = regularity_report(*prod);
  EXPECT_TRUE(rep.regular);
  EXPECT_FALSE(rep.proper);
  EXPECT_FALSE(rep.has_rank1_projection);

  auto f3 = gf(3);
  auto r1 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(1)));
  auto p3 = ProductRing::make({r1, r1});
  auto rep3 = regularity_report(*p3);
  EXPECT_TRUE(rep3.star_regular);
  EXPECT_TRUE(rep3.has_rank1_projection);
}

TEST(StarRing, GeneratedSubring) {
  auto f3 = gf(3);
  auto ring = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  auto sub = generated_subring(ring, {el({{1, 0}, {0, 0}})});
  // Diagonal matrices: a I + b diag(1, 0).
  EXPECT_EQ(sub->size(), 9u);
  for (const auto& x : sub->carrier()) {
    EXPECT_EQ(x[1], kZero);
    EXPECT_EQ(x[2], kZero);
    for (const auto& y : sub->carrier()) {
      ASSERT_TRUE(sub->contains(sub->mul(x, y)));
      ASSERT_TRUE(sub->contains(sub->add(x, y)));
    }
    ASSERT_TRUE(sub->contains(sub->star(x)));
  }
  // A non-symmetric generator pulls in its adjoint.
  auto upper = generated_subring(ring, {el({{0, 1}, {0, 0}})});
  EXPECT_TRUE(upper->contains(el({{0, 0}, {1, 0}})));
}

TEST(StarRing, HomCheck) {
  auto f3 = gf(3);
  RingPtr ring = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  auto rep = hom_check(RingHom::identity(ring));
  EXPECT_TRUE(rep.is_star_hom);
  EXPECT_TRUE(rep.injective);
  EXPECT_EQ(rep.kernel.size(), 1u);

  auto m2 = MatrixRing::make(symplectic2());
  auto prod = ProductRing::make({m2, m2});
  auto proj = hom_check(RingHom::projection(prod, 0));
  EXPECT_TRUE(proj.is_star_hom);
  EXPECT_FALSE(proj.injective);
  EXPECT_EQ(proj.kernel.size(), 16u);

  // Transpose is an anti-homomorphism, not a homomorphism, for M_2(GF(3)).
  RingHom tr{ring, ring, [](const RingElem& a) { return transpose(Matrix(2, 2, a)).data(); }};
  EXPECT_FALSE(hom_check(tr).is_star_hom);
}

TEST(StarRing, LiftQuasiInverseExample) {
  auto m2 = MatrixRing::make(symplectic2());
  auto prod = ProductRing::make({m2, m2});
  auto hom = RingHom::projection(prod, 0);
  const RingElem a = el({{1, 0}, {0, 0}});
  const RingElem c = prod->join({a, el({{0, 1}, {0, 0}})});
  const RingElem y = prod->join({a, m2->zero()});
  const RingElem d = lift_quasi_inverse(hom, a, a, c, y);
  EXPECT_EQ(prod->mul(prod->mul(c, d), c), c);
  EXPECT_EQ(hom(d), a);

  // cyc = c already: d = y.
  const RingElem c2 = prod->join({a, m2->zero()});
  EXPECT_EQ(lift_quasi_inverse(hom, a, a, c2, y), y);

  // Mismatched preimage.
  EXPECT_THROW(lift_quasi_inverse(hom, a, a, c, prod->zero()), Error);
}

TEST(StarRing, LiftQuasiInverseRandom) {
  std::mt19937_64 rng(17);
  auto m2 = MatrixRing::make(GramSpace::make(gf(3), Matrix::identity(2)));
  auto m1 = MatrixRing::make(GramSpace::make(gf(3), Matrix::identity(1)));
  auto prod = ProductRing::make({m2, m1});
  auto hom = RingHom::projection(prod, 0);
  const auto& carrier = prod->carrier();
  std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const RingElem c = carrier[pick(rng)];
    const RingElem a = hom(c);
    // A random quasi-inverse of a in the target, then a random preimage.
    std::vector<RingElem> qis;
    for (const auto& x : m2->carrier())
      if (m2->mul(m2->mul(a, x), a) == a) qis.push_back(x);
    const RingElem b = qis[std::uniform_int_distribution<std::size_t>(0, qis.size() - 1)(rng)];
    const RingElem y = prod->join({b, m1->carrier()[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]});
    const RingElem d = lift_quasi_inverse(hom, a, b, c, y);
    ASSERT_EQ(prod->mul(prod->mul(c, d), c), c);
    ASSERT_EQ(hom(d), b);
  }
}

TEST(StarRing, ReconstructProjectionCase) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  auto ring = MatrixRing::make(s);
  auto rec = reconstruct_space(ring, el({{1, 0}, {0, 0}}));
  EXPECT_EQ(rec.which, ReconstructionCase::Projection);
  EXPECT_EQ(rec.space.gram(), Matrix::identity(2));
  EXPECT_TRUE(rec.rep_verified);
  EXPECT_TRUE(is_similar(rec.space, s));

  auto one = MatrixRing::make(GramSpace::make(gf(2, 2, InvolutionKind::FrobeniusHalf), Matrix::identity(1)));
  auto r1 = reconstruct_space(one, one->one());
  EXPECT_EQ(r1.space.gram(), Matrix::identity(1));
  EXPECT_TRUE(r1.rep_verified);
}

TEST(StarRing, ReconstructAlternateCase) {
  auto s = symplectic2();
  auto ring = MatrixRing::make(s);
  // Exhaustive idempotent search over the 16 matrices.
  std::optional<RingElem> e;
  for (const auto& x : ring->carrier()) {
    if (ring->mul(x, x) != x || rank(s.field(), ring->to_matrix(x)) != 1) continue;
    const RingElem xs = ring->star(x);
    if (ring->is_zero(ring->mul(x, xs)) && ring->is_zero(ring->mul(xs, x))) {
      e = x;
      break;
    }
  }
  ASSERT_TRUE(e);
  auto rec = reconstruct_space(ring, *e);
  EXPECT_EQ(rec.which, ReconstructionCase::Alternate);
  EXPECT_TRUE(rec.space.nondegenerate());
  EXPECT_TRUE(rec.space.classification().alternate);
  EXPECT_TRUE(rec.rep_verified);
  EXPECT_TRUE(is_similar(rec.space, s));
  EXPECT_EQ(find_rank1_null_idempotent(*ring).has_value(), true);
}

TEST(StarRing, ReconstructErrors) {
  auto f3 = gf(3);
  auto ring = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  auto code_of = [&](const RingElem& e) {
    try {
      reconstruct_space(ring, e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of(ring->one()), ErrorCode::RankNotOne);
  EXPECT_EQ(code_of(el({{1, 1}, {0, 1}})), ErrorCode::BadIdempotent);
  // Rank-one idempotent that is neither a projection nor null: e = [[1,1],[0,0]].
  EXPECT_EQ(code_of(el({{1, 1}, {0, 0}})), ErrorCode::BadIdempotent);
}

TEST(StarRing, ReconstructRoundTripSmallGrid) {
  const InvolutiveField fields[] = {gf(2), gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  for (const auto& f : fields)
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& s : small_orthosymmetric(f, n)) {
        auto ring = MatrixRing::make(s);
        auto e = find_rank1_projection(*ring);
        if (!e) e = find_rank1_null_idempotent(*ring);
        ASSERT_TRUE(e) << f.describe();
        auto rec = reconstruct_space(ring, *e);
        ASSERT_TRUE(rec.rep_verified);
        ASSERT_TRUE(is_similar(rec.space, s)) << f.describe() << " " << n;
      }
}
