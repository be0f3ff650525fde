#include "hermilat/constructions.hpp"
#include "hermilat/error.hpp"
#include "hermilat/subspace_lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hermilat;

namespace {

InvolutiveField gf(std::uint32_t p, std::uint32_t k = 1, InvolutionKind inv = InvolutionKind::Identity) {
  return InvolutiveField::make(p, k, {}, inv);
}
constexpr auto kFrob = InvolutionKind::FrobeniusHalf;

Matrix codes(std::vector<std::vector<std::uint32_t>> rows) { return Matrix::from_codes(rows); }
GramSpace unit(const InvolutiveField& f, std::size_t n) { return GramSpace::make(f, Matrix::identity(n)); }
GramSpace symplectic2() { return GramSpace::make(gf(2), codes({{0, 1}, {1, 0}})); }

// Checks the table with the reference polynomial arithmetic of the target,
// and the involution against an explicit Frobenius power.
void expect_embedding(const FieldEmbedding& e) {
  const auto& f = e.source;
  const auto& k = e.target;
  const std::uint32_t p = k.characteristic();
  std::set<std::uint32_t> image;
  for (std::uint32_t x = 0; x < f.order(); ++x) image.insert(code(e(elem(x))));
  EXPECT_EQ(image.size(), f.order());
  EXPECT_EQ(e(kOne), kOne);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      const auto ex = code(e(elem(x))), ey = code(e(elem(y)));
      EXPECT_EQ(code(e(f.add(elem(x), elem(y)))), oracle::poly_add(ex, ey, p, k.degree()));
      if (k.degree() > 1)
        EXPECT_EQ(code(e(f.mul(elem(x), elem(y)))), oracle::poly_mul(ex, ey, p, k.modulus()));
    }
    std::uint32_t star = code(e(elem(x)));
    if (k.involution_kind() == kFrob && k.degree() > 1)
      star = oracle::poly_pow(star, saturating_pow(p, k.degree() / 2), p, k.modulus());
    EXPECT_EQ(code(e(f.star(elem(x)))), star);
  }
}

}  // namespace

TEST(FieldEmbedding, Examples) {
  auto e = field_embedding(gf(3), gf(3, 2, kFrob));
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(code(e(elem(x))), x);
  expect_embedding(e);
  expect_embedding(field_embedding(gf(2), gf(2, 2)));
  expect_embedding(field_embedding(gf(2), gf(2, 3)));
  expect_embedding(field_embedding(gf(2, 2), gf(2, 4, kFrob)));
  expect_embedding(field_embedding(gf(3, 2, kFrob), gf(3, 2, kFrob)));
  // Both automorphisms of GF(4) commute with Frobenius; the identity is least.
  auto id = field_embedding(gf(2, 2, kFrob), gf(2, 2, kFrob));
  for (std::uint32_t x = 0; x < 4; ++x) EXPECT_EQ(code(id(elem(x))), x);
}

TEST(FieldEmbedding, Rejections) {
  auto rejects = [](const InvolutiveField& a, const InvolutiveField& b) {
    try {
      field_embedding(a, b);
      ADD_FAILURE() << a.describe() << " -> " << b.describe();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::NoCompatibleEmbedding);
    }
  };
  rejects(gf(2, 2, kFrob), gf(2, 2));
  rejects(gf(2, 2, kFrob), gf(2, 4, kFrob));  // the subfield is fixed by x -> x^4
  rejects(gf(2, 2), gf(2, 3));
  rejects(gf(2), gf(3));
}

TEST(TensorialEmbedding, FormIsCarried) {
  auto alpha = field_embedding(gf(3), gf(3, 2, kFrob));
  auto v = GramSpace::make(gf(3), codes({{1, 0}, {0, 2}}));
  auto t = tensorial_embed(v, alpha);
  EXPECT_EQ(t.target.dim(), 2u);
  EXPECT_TRUE(t.target.classification().hermitian);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) {
      auto x = vector_from_index(v.field(), a, 2), y = vector_from_index(v.field(), b, 2);
      EXPECT_EQ(oracle::form(t.target.field(), t.target.gram(), t.omega(x), t.omega(y)),
                alpha(oracle::form(v.field(), v.gram(), x, y)));
    }
}

TEST(TensorialEmbedding, Errors) {
  auto alpha = field_embedding(gf(2), gf(2, 2));
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NotAHom;
  };
  EXPECT_EQ(code_of([&] { tensorial_embed(unit(gf(3), 1), alpha); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(code_of([&] { tensorial_embed(GramSpace::make(gf(2), codes({{1, 0}, {0, 0}})), alpha); }),
            ErrorCode::DegenerateSpace);
  auto v1 = unit(gf(3), 1);
  auto e = field_embedding(gf(3), gf(3));
  auto sympl = GramSpace::make(gf(3), codes({{0, 1}, {2, 0}}));
  EXPECT_EQ(code_of([&] { joint_extension(v1, sympl, e, e); }), ErrorCode::EpsilonMismatch);
  EXPECT_EQ(code_of([&] { joint_extension(v1, v1, e, field_embedding(gf(3), gf(3, 2))); }),
            ErrorCode::FieldMismatch);
}

// Every orthosymmetric form on GF(3)^2 keeps its epsilon and stays
// orthosymmetric under the inclusion into GF(9).
TEST(TensorialEmbedding, ClassificationPreserved) {
  auto f = gf(3);
  auto alpha = field_embedding(f, gf(3, 2, kFrob));
  std::size_t seen = 0;
  for (std::uint64_t i = 0; i < 81; ++i) {
    Matrix g = matrix_from_index(f, i, 2, 2);
    if (!inverse(f, g)) continue;
    auto v = GramSpace::make(f, g);
    if (!v.classification().orthosymmetric) continue;
    ++seen;
    auto t = tensorial_embed(v, alpha);
    const auto& ce = v.classification().epsilon;
    const auto& te = t.target.classification().epsilon;
    ASSERT_EQ(ce.has_value(), te.has_value());
    if (ce) EXPECT_EQ(alpha(*ce), *te);
    EXPECT_TRUE(t.target.classification().orthosymmetric);
  }
  EXPECT_GT(seen, 0u);
}

TEST(LiftRingEmbedding, PrimeFieldInclusion) {
  auto alpha = field_embedding(gf(3), gf(3, 2, kFrob));
  auto v = unit(gf(3), 2);
  auto rep = lift_ring_embedding(tensorial_embed(v, alpha));
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.ring_check.exhaustive);
  EXPECT_TRUE(rep.ring_check.is_star_hom) << rep.ring_check.failure;
  EXPECT_EQ(rep.ring.source->size(), 81u);
  EXPECT_EQ(rep.source_lattice.size(), 6u);
  EXPECT_EQ(rep.target_lattice.size(), 12u);

  // The image of U' is orthogonal to the image of U, and dimensions agree.
  auto sl = lattice_of_space(v);
  auto tl = lattice_of_space(tensorial_embed(v, alpha).target);
  const auto& k = alpha.target;
  for (std::size_t i = 0; i < sl.elements.size(); ++i) {
    const auto& img = tl.elements[rep.lattice_map[i]];
    EXPECT_EQ(img.dim(), sl.elements[i].dim());
    const auto& perp_img = tl.elements[rep.lattice_map[sl.lattice.prime(i)]];
    for (std::size_t a = 0; a < img.dim(); ++a)
      for (std::size_t b = 0; b < perp_img.dim(); ++b)
        EXPECT_EQ(oracle::form(k, Matrix::identity(2), img.basis_vector(a), perp_img.basis_vector(b)), kZero);
  }
}

TEST(LiftRingEmbedding, SmallCases) {
  auto rep = lift_ring_embedding(tensorial_embed(symplectic2(), field_embedding(gf(2), gf(2, 2))));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.target_lattice.size(), 7u);

  auto zero = GramSpace::make(gf(2), Matrix(0, 0));
  auto r0 = lift_ring_embedding(tensorial_embed(zero, field_embedding(gf(2), gf(2, 2))));
  EXPECT_TRUE(r0.ok);
  EXPECT_EQ(r0.source_lattice.size(), 1u);
  EXPECT_EQ(r0.target_lattice.size(), 1u);
}

TEST(JointExtension, LinesIntoPlane) {
  auto e = field_embedding(gf(3), gf(3));
  auto j = joint_extension(unit(gf(3), 1), unit(gf(3), 1), e, e);
  EXPECT_EQ(j.space.dim(), 2u);
  const auto& rep = j.embedding;
  EXPECT_TRUE(rep.ok) << rep.ring_check.failure << rep.lattice_check.failure;
  EXPECT_EQ(rep.source_lattice.size(), 4u);
  EXPECT_EQ(rep.target_lattice.size(), 6u);
  EXPECT_EQ(rep.ring.source->size(), 9u);
  // (0, V1) goes to the second coordinate line.
  auto tl = lattice_of_space(j.space);
  const auto& img = tl.elements[rep.lattice_map[1]];
  ASSERT_EQ(img.dim(), 1u);
  EXPECT_EQ(img.basis_vector(0), (Vector{kZero, kOne}));
}

TEST(JointExtension, SymplecticPair) {
  auto e = field_embedding(gf(2), gf(2));
  auto j = joint_extension(symplectic2(), symplectic2(), e, e);
  const auto& rep = j.embedding;
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.ring.source->size(), 256u);
  EXPECT_EQ(rep.source_lattice.size(), 25u);
  EXPECT_EQ(rep.target_lattice.size(), 67u);
}

TEST(JointExtension, ZeroFactorAndFieldChange) {
  auto e = field_embedding(gf(3), gf(3, 2, kFrob));
  auto zero = GramSpace::make(gf(3), Matrix(0, 0));
  auto j = joint_extension(zero, unit(gf(3), 2), e, e);
  EXPECT_TRUE(j.embedding.ok);
  EXPECT_EQ(j.embedding.source_lattice.size(), 6u);
  EXPECT_EQ(j.embedding.target_lattice.size(), 12u);
}

// Alternate forms stay alternate when the target involution is trivial; the
// conjugation on GF(4) turns the symplectic plane into a hermitian one.
TEST(TensorialEmbedding, AlternateForms) {
  auto to_id = tensorial_embed(symplectic2(), field_embedding(gf(2), gf(2, 2)));
  EXPECT_TRUE(to_id.target.classification().alternate);
  auto to_conj = tensorial_embed(symplectic2(), field_embedding(gf(2), gf(2, 2, kFrob)));
  EXPECT_FALSE(to_conj.target.classification().alternate);
  EXPECT_TRUE(to_conj.target.classification().hermitian);
}
