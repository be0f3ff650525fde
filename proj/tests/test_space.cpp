#include "hermilat/error.hpp"
#include "hermilat/space.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hermilat;

namespace {

Matrix codes(std::vector<std::vector<std::uint32_t>> rows) { return Matrix::from_codes(rows); }

InvolutiveField gf(std::uint32_t p, std::uint32_t k = 1, InvolutionKind inv = InvolutionKind::Identity) {
  return InvolutiveField::make(p, k, {}, inv);
}

Vector vec(std::vector<std::uint32_t> c) {
  Vector v;
  for (auto x : c) v.push_back(elem(x));
  return v;
}

Subspace line(const InvolutiveField& f, std::vector<std::uint32_t> c) {
  return Subspace::span(f, std::vector<Vector>{vec(c)}, c.size());
}

// Orthogonal complement straight from the definition, as a vector set.
std::set<Vector> perp_set(const GramSpace& s, const Subspace& u) {
  std::set<Vector> out;
  const auto& f = s.field();
  for (std::uint64_t i = 0; i < saturating_pow(f.order(), s.dim()); ++i) {
    Vector v = vector_from_index(f, i, s.dim());
    bool ok = true;
    for (std::size_t r = 0; r < u.dim() && ok; ++r) ok = oracle::form(f, s.gram(), u.basis_vector(r), v) == kZero;
    if (ok) out.insert(v);
  }
  return out;
}

std::set<Vector> as_set(const InvolutiveField& f, const Subspace& u) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(u.basis_vector(i));
  return oracle::span_set(f, rows, u.ambient_dim());
}

// All nondegenerate Gram matrices of size n (small universes only).
std::vector<GramSpace> nondegenerate_spaces(const InvolutiveField& f, std::size_t n) {
  std::vector<GramSpace> out;
  for (std::uint64_t i = 0; i < saturating_pow(f.order(), n * n); ++i) {
    Matrix g = matrix_from_index(f, i, n, n);
    if (!inverse(f, g)) continue;
    out.push_back(GramSpace::make(f, g));
  }
  return out;
}

}  // namespace

TEST(Space, ClassifyExamples) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_TRUE(s.nondegenerate());
  ASSERT_TRUE(s.classification().epsilon);
  EXPECT_EQ(*s.classification().epsilon, kOne);
  EXPECT_TRUE(s.classification().hermitian);
  EXPECT_TRUE(s.classification().anisotropic);

  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  EXPECT_TRUE(sym.classification().alternate);
  EXPECT_TRUE(sym.classification().skew_symmetric);
  EXPECT_TRUE(sym.classification().orthosymmetric);
  EXPECT_EQ(*sym.classification().epsilon, kOne);

  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto h4 = GramSpace::make(f4, Matrix::identity(2));
  EXPECT_TRUE(h4.classification().hermitian);
  EXPECT_FALSE(h4.classification().anisotropic);

  auto bad = GramSpace::make(f3, codes({{1, 1}, {0, 1}}));
  EXPECT_FALSE(bad.classification().orthosymmetric);
  EXPECT_FALSE(bad.classification().epsilon.has_value());
}

TEST(Space, InnerProductExamples) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_EQ(inner(s, vec({1, 2}), vec({1, 1})), kZero);
  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto h = GramSpace::make(f4, Matrix::identity(2));
  const FieldElem w = f4.generator_x();
  EXPECT_EQ(inner(h, Vector{w, kZero}, vec({1, 0})), f4.add(w, kOne));
  EXPECT_THROW(inner(h, vec({1}), vec({1, 0})), Error);
}

TEST(Space, MakeErrors) {
  auto f3 = gf(3);
  EXPECT_THROW(GramSpace::make(f3, Matrix(2, 3)), Error);
  try {
    GramSpace::make(f3, Matrix::identity(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionCap);
  }
}

TEST(Space, SubspaceCounts) {
  EXPECT_EQ(enumerate_subspaces(gf(2), 3).size(), 16u);
  EXPECT_EQ(enumerate_subspaces(gf(2), 4).size(), 67u);
  EXPECT_EQ(enumerate_subspaces(gf(3), 2).size(), 6u);
  EXPECT_EQ(count_subspaces(2, 4), 67u);
  EXPECT_EQ(count_subspaces(4, 2), 7u);
}

TEST(Space, EnumerationIsOrderedAndDistinctSpans) {
  auto f = gf(3);
  auto all = enumerate_subspaces(f, 3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  std::set<std::set<Vector>> spans;
  for (const auto& u : all) spans.insert(as_set(f, u));
  EXPECT_EQ(spans.size(), all.size());
  EXPECT_EQ(all.size(), count_subspaces(3, 3));
}

TEST(Space, SumAndMeetMatchVectorSets) {
  auto f = gf(2);
  auto all = enumerate_subspaces(f, 3);
  for (const auto& u : all)
    for (const auto& w : all) {
      auto su = as_set(f, u), sw = as_set(f, w);
      std::set<Vector> inter;
      for (const auto& v : su)
        if (sw.count(v)) inter.insert(v);
      ASSERT_EQ(as_set(f, meet(f, u, w)), inter);
      for (const auto& v : su) ASSERT_TRUE(sum(f, u, w).contains(f, v));
      ASSERT_EQ(sum(f, u, w).dim() + meet(f, u, w).dim(), u.dim() + w.dim());
    }
}

TEST(Space, OrthogonalExamples) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_EQ(orthogonal(s, Subspace::zero(2)), Subspace::whole(2));
  EXPECT_EQ(orthogonal(s, line(f3, {1, 0})), line(f3, {0, 1}));
  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  EXPECT_EQ(orthogonal(sym, line(f2, {1, 0})), line(f2, {1, 0}));
  auto deg = GramSpace::make(f3, codes({{1, 0}, {0, 0}}));
  EXPECT_THROW(orthogonal(deg, line(f3, {1, 0})), Error);
}

TEST(Space, RadicalExamples) {
  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  auto r = radical_report(sym, line(f2, {1, 0}));
  EXPECT_EQ(r.radical, line(f2, {1, 0}));
  EXPECT_FALSE(r.summand);
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_TRUE(radical_report(s, line(f3, {1, 0})).summand);
  EXPECT_TRUE(radical_report(s, Subspace::whole(2)).summand);
}

TEST(Space, OrthogonalMatchesDefinitionAndLaws) {
  const InvolutiveField fields[] = {gf(2), gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  for (const auto& f : fields) {
    for (const auto& s : nondegenerate_spaces(f, 2)) {
      auto all = enumerate_subspaces(f, 2);
      for (const auto& u : all) {
        auto p = orthogonal(s, u);
        ASSERT_EQ(as_set(f, p), perp_set(s, u));
        ASSERT_EQ(u.dim() + p.dim(), s.dim());
        if (s.classification().orthosymmetric) ASSERT_EQ(orthogonal(s, p), u);
        for (const auto& w : all)
          ASSERT_EQ(orthogonal(s, sum(f, u, w)), meet(f, orthogonal(s, u), orthogonal(s, w)));
      }
    }
  }
}

TEST(Space, OrthosymmetryIffEpsilon) {
  // Pair search versus epsilon existence, exhaustive for small universes.
  struct Case {
    InvolutiveField f;
    std::size_t n;
  };
  const Case cases[] = {{gf(2), 2}, {gf(2), 3}, {gf(3), 2}, {gf(2, 2, InvolutionKind::FrobeniusHalf), 2}};
  for (const auto& c : cases)
    for (const auto& s : nondegenerate_spaces(c.f, c.n)) {
      const auto& k = s.classification();
      ASSERT_EQ(k.orthosymmetric, k.epsilon.has_value()) << c.f.describe();
    }
}

TEST(Space, FunctionalOrthosymmetryMatchesPairs) {
  // The large-space path of classify must agree with the pair search.
  std::mt19937_64 rng(2024);
  auto f = gf(3);
  for (int t = 0; t < 200; ++t) {
    Matrix g = oracle::random_matrix(f, 3, 3, rng);
    if (t % 2 == 0) g = add(f, g, transpose(g));  // bias towards symmetric forms
    ASSERT_EQ(orthosymmetric_by_pairs(f, g), orthosymmetric_by_functionals(f, g));
  }
}

TEST(Space, AlternateImpliesSkew) {
  auto f = gf(3);
  for (const auto& s : nondegenerate_spaces(f, 2))
    if (s.classification().alternate) EXPECT_TRUE(s.classification().skew_symmetric);
}

TEST(Space, ExtendToSummandBound) {
  const InvolutiveField fields[] = {gf(2), gf(3), gf(2, 2, InvolutionKind::FrobeniusHalf)};
  for (const auto& f : fields)
    for (const auto& s : nondegenerate_spaces(f, 2)) {
      if (!s.classification().orthosymmetric) continue;
      for (const auto& w : enumerate_subspaces(f, 2)) {
        auto u = extend_to_summand(s, w);
        ASSERT_TRUE(is_subspace_of(f, w, u));
        ASSERT_TRUE(radical_report(s, u).summand);
        ASSERT_LE(u.dim(), 2 * w.dim());
      }
    }
  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  EXPECT_EQ(extend_to_summand(sym, line(f2, {1, 0})), Subspace::whole(2));
  EXPECT_EQ(extend_to_summand(sym, Subspace::zero(2)), Subspace::zero(2));
}

TEST(Space, Subquotient) {
  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  EXPECT_EQ(subquotient(sym, line(f2, {1, 0})).dim(), 0u);
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, codes({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  for (const auto& u : enumerate_subspaces(f3, 3)) {
    auto q = subquotient(s, u);
    EXPECT_EQ(q.dim(), u.dim() - radical_report(s, u).radical.dim());
    EXPECT_TRUE(q.nondegenerate());
    if (q.dim() > 0) EXPECT_EQ(q.classification().epsilon, s.classification().epsilon);
  }
}

TEST(Space, ScalingKeepsOrthogonality) {
  auto f3 = gf(3);
  auto s = GramSpace::make(f3, Matrix::identity(2));
  auto t = scale(s, elem(2));
  EXPECT_EQ(t.gram(), scale(f3, elem(2), Matrix::identity(2)));
  for (const auto& u : enumerate_subspaces(f3, 2)) EXPECT_EQ(orthogonal(s, u), orthogonal(t, u));
  EXPECT_THROW(scale(s, kZero), Error);

  auto f4 = gf(2, 2, InvolutionKind::FrobeniusHalf);
  auto h = GramSpace::make(f4, Matrix::identity(2));
  const FieldElem w = f4.generator_x();
  auto hw = scale(h, w);
  EXPECT_EQ(*hw.classification().epsilon, f4.div(w, f4.star(w)));
}

TEST(Space, OrthogonalSum) {
  auto f3 = gf(3);
  auto a = GramSpace::make(f3, Matrix::identity(2));
  auto b = GramSpace::make(f3, Matrix::identity(1));
  EXPECT_EQ(orthogonal_sum(a, b).gram(), Matrix::identity(3));
  EXPECT_EQ(orthogonal_sum(a, GramSpace::make(f3, Matrix(0, 0))).gram(), a.gram());
  auto f2 = gf(2);
  auto sym = GramSpace::make(f2, codes({{0, 1}, {1, 0}}));
  auto four = orthogonal_sum(sym, sym);
  EXPECT_TRUE(four.classification().alternate);
  EXPECT_TRUE(four.nondegenerate());
  EXPECT_THROW(orthogonal_sum(a, sym), Error);
}

TEST(Space, Similarity) {
  auto f3 = gf(3);
  auto a = GramSpace::make(f3, Matrix::identity(2));
  EXPECT_TRUE(is_similar(a, scale(a, elem(2))));
  // diag(1,2) is isotropic ((1,1) has norm 0) while I_2 is anisotropic and
  // 2 I_2 is as well, so no similitude exists.
  auto d = GramSpace::make(f3, codes({{1, 0}, {0, 2}}));
  EXPECT_FALSE(is_similar(a, d));
  EXPECT_FALSE(is_similar(a, GramSpace::make(f3, Matrix::identity(1))));
}
