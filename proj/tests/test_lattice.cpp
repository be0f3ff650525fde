#include "hermilat/error.hpp"
#include "hermilat/glattice.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

using namespace hermilat;

namespace {

Lattice by_order(std::size_t m, const std::function<bool(std::size_t, std::size_t)>& le,
                 std::vector<std::size_t> prime) {
  std::vector<bool> rel(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = le(i, j);
  return Lattice::from_order(m, rel, std::move(prime));
}

// Subsets of {0..k-1} as bit masks, complement as prime.
Lattice boolean(std::size_t k) {
  const std::size_t m = std::size_t{1} << k;
  std::vector<std::size_t> prime(m);
  for (std::size_t i = 0; i < m; ++i) prime[i] = (m - 1) ^ i;
  return by_order(m, [](auto i, auto j) { return (i & ~j) == 0; }, prime);
}

Lattice chain(std::size_t m) {
  std::vector<std::size_t> prime(m);
  for (std::size_t i = 0; i < m; ++i) prime[i] = m - 1 - i;
  return by_order(m, [](auto i, auto j) { return i <= j; }, prime);
}

// 0 < a < c < 1, 0 < b < 1 as 0, 1=a, 2=b, 3=c, 4=1.
Lattice n5() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return Lattice::from_covers(5, covers, {4, 2, 3, 2, 0});
}

// 0, three atoms, 1; atoms permuted cyclically by prime.
Lattice m3() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return Lattice::from_covers(5, covers, {4, 2, 3, 1, 0});
}

// Four elements 0, a, b, 1 with x' = 0 for x != 0 and 0' = 1.
Lattice flat_prime() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return Lattice::from_covers(4, covers, {3, 0, 0, 0});
}

bool law(const Lattice& l, Law w) { return check_law(l, w).pass; }

// Every partition of 0..m-1 as canonical block vectors.
void partitions(std::size_t m, std::vector<std::size_t>& cur, std::vector<Congruence>& out) {
  const std::size_t i = cur.size();
  if (i == m) {
    out.push_back({cur});
    return;
  }
  std::set<std::size_t> reps(cur.begin(), cur.end());
  reps.insert(i);
  for (auto r : reps) {
    cur.push_back(r);
    partitions(m, cur, out);
    cur.pop_back();
  }
}

bool naive_congruence(const Lattice& l, const Congruence& c) {
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!c.related(x, y)) continue;
      for (std::size_t z = 0; z < l.size(); ++z)
        if (!c.related(l.join(x, z), l.join(y, z)) || !c.related(l.meet(x, z), l.meet(y, z))) return false;
    }
  return true;
}

// Direct evaluation of the Arguesian inclusion for a given tuple.
bool arguesian_at(const Lattice& l, const std::vector<std::size_t>& t) {
  auto J = [&](auto a, auto b) { return l.join(a, b); };
  auto M = [&](auto a, auto b) { return l.meet(a, b); };
  const auto a0 = t[0], a1 = t[1], a2 = t[2], b0 = t[3], b1 = t[4], b2 = t[5];
  const auto c0 = M(J(a1, a2), J(b1, b2));
  const auto c1 = M(J(a0, a2), J(b0, b2));
  const auto c2 = M(J(a0, a1), J(b0, b1));
  const auto c = M(c2, J(c0, c1));
  return l.leq(M(M(J(a0, b0), J(a1, b1)), J(a2, b2)), J(M(a0, J(a1, c)), M(b0, J(b1, c))));
}

}  // namespace

TEST(Lattice, FromOrderTables) {
  auto l = n5();
  EXPECT_EQ(l.size(), 5u);
  EXPECT_EQ(l.zero(), 0u);
  EXPECT_EQ(l.one(), 4u);
  EXPECT_EQ(l.join(1, 2), 4u);
  EXPECT_EQ(l.meet(3, 2), 0u);
  EXPECT_EQ(l.join(1, 3), 3u);
  EXPECT_TRUE(l.leq(1, 3));
  EXPECT_FALSE(l.leq(2, 3));
  EXPECT_EQ(l.height(4), 3u);
  EXPECT_EQ(l.height(2), 1u);
  EXPECT_EQ(l.dimension(), 3u);
  EXPECT_EQ(l.atoms(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(l.coatoms(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(l.covers().size(), 5u);
  EXPECT_TRUE(is_atomic(l));
}

TEST(Lattice, RejectsNonLattices) {
  // Two maximal elements.
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { by_order(3, [](auto i, auto j) { return i == j || i == 0; }, {0, 1, 2}); }),
            ErrorCode::NotALattice);
  // Bowtie: two lower bounds for two upper elements.
  EXPECT_EQ(code_of([] {
              Lattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
                                   {0, 0, 0, 0, 0, 0});
            }),
            ErrorCode::NotALattice);
  EXPECT_EQ(code_of([] { Lattice::from_covers(2, {{0, 1}}, {0}); }), ErrorCode::NotALattice);
  EXPECT_EQ(code_of([] { Lattice::from_covers(2, {{0, 1}}, {0, 7}); }), ErrorCode::NotALattice);
  EXPECT_EQ(code_of([] { by_order(2, [](auto, auto) { return true; }, {0, 0}); }), ErrorCode::NotALattice);
}

TEST(Lattice, LawsOnExamples) {
  auto n = n5();
  auto mod = check_law(n, Law::Modular);
  EXPECT_FALSE(mod.pass);
  ASSERT_EQ(mod.witness.size(), 3u);
  const auto a = mod.witness[0], b = mod.witness[1], c = mod.witness[2];
  EXPECT_TRUE(n.leq(c, a));
  EXPECT_NE(n.meet(a, n.join(b, c)), n.join(n.meet(a, b), c));
  EXPECT_FALSE(law(n, Law::Arguesian));

  auto b3 = boolean(3);
  for (Law w : all_laws()) EXPECT_TRUE(law(b3, w)) << to_string(w);

  auto m = m3();
  EXPECT_TRUE(law(m, Law::Modular));
  EXPECT_TRUE(law(m, Law::Arguesian));
  EXPECT_TRUE(law(m, Law::Complemented));
  EXPECT_TRUE(law(m, Law::Polarity));
  EXPECT_FALSE(law(m, Law::Involution));
}

TEST(Lattice, FlatPrimeExample) {
  auto l = flat_prime();
  EXPECT_TRUE(law(l, Law::Modular));
  EXPECT_TRUE(law(l, Law::Arguesian));
  EXPECT_TRUE(law(l, Law::Complemented));
  EXPECT_TRUE(law(l, Law::Galois));
  EXPECT_TRUE(law(l, Law::Ortho));
  auto p = check_law(l, Law::Polarity);
  EXPECT_FALSE(p.pass);
  EXPECT_EQ(p.witness, std::vector<std::size_t>{1});
  EXPECT_FALSE(law(l, Law::Involution));
  EXPECT_THROW(l_f(l), Error);
}

TEST(Lattice, GaloisWitnesses) {
  auto c = chain(3);
  EXPECT_TRUE(law(c, Law::Galois));
  auto bad = c.with_prime({2, 2, 1});  // 1' != 0
  auto r = check_law(bad, Law::Galois);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.witness, std::vector<std::size_t>{2});
  auto upward = c.with_prime({2, 2, 0});  // not antitone
  auto r2 = check_law(upward, Law::Galois);
  ASSERT_FALSE(r2.pass);
  ASSERT_EQ(r2.witness.size(), 2u);
  EXPECT_TRUE(upward.leq(r2.witness[0], upward.prime(r2.witness[1])));
  EXPECT_FALSE(upward.leq(r2.witness[1], upward.prime(r2.witness[0])));
}

TEST(Lattice, ArguesianSampledAgreesWithExhaustive) {
  LawOptions sampled;
  sampled.exhaustive_limit = 0;
  sampled.samples = 200000;
  auto m = m3();
  auto r = check_law(m, Law::Arguesian, sampled);
  EXPECT_TRUE(r.sampled);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.seed, sampled.seed);
  auto n = n5();
  auto rn = check_law(n, Law::Arguesian, sampled);
  ASSERT_FALSE(rn.pass);
  EXPECT_FALSE(arguesian_at(n, rn.witness));
  auto ex = check_law(n, Law::Arguesian);
  EXPECT_FALSE(ex.sampled);
  EXPECT_FALSE(arguesian_at(n, ex.witness));
}

TEST(Lattice, ArguesianImpliesModularOnSmallLattices) {
  for (const auto& l : {n5(), m3(), boolean(2), chain(4), flat_prime()})
    if (law(l, Law::Arguesian)) {
      EXPECT_TRUE(law(l, Law::Modular));
    }
}

TEST(Lattice, CongruencesMatchBruteForce) {
  auto m3xc2 = [] {
    auto a = m3();
    auto b = chain(2);
    return product({&a, &b});
  };
  for (const auto& l : {n5(), m3(), boolean(3), chain(4), flat_prime(), m3xc2()}) {
    std::vector<Congruence> all;
    std::vector<std::size_t> cur;
    partitions(l.size(), cur, all);
    std::vector<Congruence> expect;
    for (auto& c : all)
      if (naive_congruence(l, c)) expect.push_back(c);
    std::sort(expect.begin(), expect.end());
    auto rep = congruences(l);
    ASSERT_EQ(rep.all, expect) << l.size();
    for (const auto& c : rep.all) EXPECT_TRUE(is_congruence(l, c));
  }
}

TEST(Lattice, SimpleAndSdi) {
  auto m = m3();
  auto rm = congruences(m);
  EXPECT_EQ(rm.all.size(), 2u);
  EXPECT_TRUE(rm.simple);
  EXPECT_TRUE(rm.sdi);
  EXPECT_TRUE(rm.strict_simple);

  auto mm = product({&m, &m});
  auto rmm = congruences(mm);
  EXPECT_GE(rmm.all.size(), 4u);
  EXPECT_FALSE(rmm.sdi);
  EXPECT_FALSE(rmm.simple);

  // N5 is subdirectly irreducible but not simple.
  auto rn = congruences(n5());
  EXPECT_TRUE(rn.sdi);
  EXPECT_FALSE(rn.simple);
  ASSERT_TRUE(rn.monolith);
  EXPECT_TRUE(rn.monolith->related(1, 3));
}

TEST(Lattice, GeneratedCongruence) {
  auto b = boolean(2);
  auto c = generated_congruence(b, {{0, 1}});
  EXPECT_EQ(c.block, (std::vector<std::size_t>{0, 0, 2, 2}));
  EXPECT_EQ(generated_congruence(b, {}), identity_congruence(4));
  EXPECT_EQ(generated_congruence(b, {{0, 3}}), total_congruence(4));
  EXPECT_TRUE(refines(identity_congruence(4), c));
  EXPECT_TRUE(refines(c, total_congruence(4)));
  EXPECT_FALSE(refines(total_congruence(4), c));
  auto d = generated_congruence(b, {{0, 2}});
  EXPECT_EQ(congruence_join(c, d), total_congruence(4));
  EXPECT_EQ(congruence_meet(c, d), identity_congruence(4));
}

TEST(Lattice, Quotient) {
  auto b = boolean(2);
  auto c = generated_congruence(b, {{0, 1}});
  ASSERT_TRUE(prime_compatible(b, c));
  auto q = quotient(b, c);
  EXPECT_EQ(q.lattice.size(), 2u);
  EXPECT_EQ(q.map, (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(q.lattice.prime(0), 1u);
  for (Law w : all_laws()) EXPECT_TRUE(law(q.lattice, w));

  auto self_dual = b.with_prime({3, 1, 2, 0});
  try {
    quotient(self_dual, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrimeIncompatibleCongruence);
  }
  Congruence not_cong{{0, 1, 0, 3}};
  EXPECT_FALSE(is_congruence(b, not_cong));
  EXPECT_THROW(quotient(b, not_cong), Error);
}

TEST(Lattice, ProductMatchesBooleanLattice) {
  auto c = chain(2);
  auto p = product({&c, &c, &c});
  EXPECT_EQ(p, boolean(3));
  EXPECT_EQ(p.label(5), "(1,0,1)");
  auto big = chain(200);
  EXPECT_THROW(product({&big, &big}), Error);
}

TEST(Lattice, ClosureAndSublattice) {
  auto b = boolean(3);
  auto s = galois_closure(b, {1});
  EXPECT_EQ(s.embedding, (std::vector<std::size_t>{0, 1, 6, 7}));
  EXPECT_FALSE(s.needed_meets);
  auto again = galois_closure(b, s.embedding);
  EXPECT_EQ(again.embedding, s.embedding);
  for (std::size_t i = 0; i < s.lattice.size(); ++i)
    for (std::size_t j = 0; j < s.lattice.size(); ++j)
      EXPECT_EQ(s.embedding[s.lattice.join(i, j)], b.join(s.embedding[i], s.embedding[j]));

  // With x' = 0 for x != 0 the +/' closure of two atoms of 2^3 misses
  // their meet.
  std::vector<std::size_t> flat(8, 0);
  flat[0] = 7;
  auto t = galois_closure(b.with_prime(flat), {3, 5});
  EXPECT_TRUE(t.needed_meets);
  EXPECT_EQ(t.embedding, (std::vector<std::size_t>{0, 1, 3, 5, 7}));

  EXPECT_THROW(sublattice(b, {0, 1, 2, 7}), Error);  // 1 + 2 = 3 missing
  auto full = l_f(b);
  EXPECT_EQ(full.lattice, b);
}

TEST(Lattice, Homomorphisms) {
  auto c = chain(2);
  auto l = m3();
  auto prod = product({&l, &c});
  auto pi = [&](std::size_t which) {
    LatticeHom h{&prod, which == 0 ? &l : &c, {}};
    for (std::size_t x = 0; x < prod.size(); ++x) h.map.push_back(which == 0 ? x / 2 : x % 2);
    return h;
  };
  auto h0 = pi(0), h1 = pi(1);
  auto c0 = check_hom(h0);
  EXPECT_TRUE(c0.is_hom);
  EXPECT_FALSE(c0.injective);
  EXPECT_FALSE(faithful_family({h0}));
  EXPECT_FALSE(faithful_family({h1}));
  EXPECT_TRUE(faithful_family({h0, h1}));
  EXPECT_EQ(hom_kernel(h1).block_count(), 2u);

  // Merging two atoms of M3 is not a lattice map.
  LatticeHom merge{&l, &l, {0, 1, 1, 3, 4}};
  auto cm = check_hom(merge);
  EXPECT_FALSE(cm.is_hom);
  EXPECT_EQ(cm.witness.size(), 2u);
  EXPECT_THROW(hom_kernel(merge), Error);

  LatticeHom id{&l, &l, {0, 1, 2, 3, 4}};
  auto ci = check_hom(id);
  EXPECT_TRUE(ci.is_galois_hom && ci.injective);
  // Swapping two atoms keeps + and . but not the cyclic prime.
  LatticeHom swap{&l, &l, {0, 2, 1, 3, 4}};
  auto cs = check_hom(swap);
  EXPECT_TRUE(cs.is_hom);
  EXPECT_FALSE(cs.is_galois_hom);
}

TEST(Lattice, LawNamesAndDot) {
  for (Law w : all_laws()) EXPECT_EQ(law_from_string(to_string(w)), w);
  EXPECT_FALSE(law_from_string("distributive"));
  const std::string dot = n5().to_dot("N");
  EXPECT_NE(dot.find("digraph N"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
}

TEST(Lattice, RandomProductsAreModularIffFactorsAre) {
  std::mt19937_64 rng(8);
  const std::vector<Lattice> pool{n5(), m3(), chain(3), boolean(2), flat_prime()};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 12; ++t) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    auto p = product({&a, &b});
    EXPECT_EQ(law(p, Law::Modular), law(a, Law::Modular) && law(b, Law::Modular));
    EXPECT_EQ(law(p, Law::Galois), law(a, Law::Galois) && law(b, Law::Galois));
  }
}
