#include "hermilat/glattice.hpp"

#include "hermilat/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace hermilat {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitMatrix {
  std::size_t m = 0, words = 0;
  std::vector<std::uint64_t> data;

  explicit BitMatrix(std::size_t m_) : m(m_), words((m_ + 63) / 64), data(m_ * words, 0) {}
  void set(std::size_t i, std::size_t j) { data[i * words + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const { return (data[i * words + j / 64] >> (j % 64)) & 1u; }
  const std::uint64_t* row(std::size_t i) const { return data.data() + i * words; }
  std::uint64_t* row(std::size_t i) { return data.data() + i * words; }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Congruence canonical(UnionFind& uf, std::size_t m) {
  Congruence c;
  c.block.resize(m);
  std::vector<std::size_t> least(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = uf.find(i);
    if (least[r] == m) least[r] = i;
    c.block[i] = least[r];
  }
  return c;
}

std::vector<std::string> default_labels(std::size_t m, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != m) throw Error(ErrorCode::NotALattice, "label count does not match element count");
  return labels;
}

void check_size(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  if (m > Lattice::kMaxSize)
    throw Error(ErrorCode::SizeCap, std::to_string(m) + " elements exceed the lattice cap of 20000");
}

}  // namespace

// ----------------------------------------------------------- construction

void FiniteGaloisLattice::finish(std::vector<std::string> labels) {
  labels_ = default_labels(m_, std::move(labels));
  if (prime_.size() != m_) throw Error(ErrorCode::NotALattice, "prime table has the wrong length");
  for (auto p : prime_)
    if (p >= m_) throw Error(ErrorCode::NotALattice, "prime table entry out of range");
  zero_ = 0;
  one_ = 0;
  for (std::size_t i = 1; i < m_; ++i) {
    zero_ = meet(zero_, i);
    one_ = join(one_, i);
  }
  heights_.clear();
}

FiniteGaloisLattice FiniteGaloisLattice::from_tables(std::size_t m, std::vector<Index> join, std::vector<Index> meet,
                                                     std::vector<std::size_t> prime, std::vector<std::string> labels) {
  check_size(m);
  if (join.size() != m * m || meet.size() != m * m) throw Error(ErrorCode::NotALattice, "table size");
  FiniteGaloisLattice l;
  l.m_ = m;
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.prime_ = std::move(prime);
  l.finish(std::move(labels));
  return l;
}

FiniteGaloisLattice FiniteGaloisLattice::from_order(std::size_t m, const std::vector<bool>& leq,
                                                    std::vector<std::size_t> prime, std::vector<std::string> labels) {
  check_size(m);
  if (leq.size() != m * m) throw Error(ErrorCode::NotALattice, "order relation size");
  BitMatrix up(m), down(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq[a * m + a]) throw Error(ErrorCode::NotALattice, "order is not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b)
      if (leq[a * m + b]) {
        if (a != b && leq[b * m + a]) throw Error(ErrorCode::NotALattice, "order is not antisymmetric");
        up.set(a, b);
        down.set(b, a);
      }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (up.get(a, b))
        for (std::size_t w = 0; w < up.words; ++w)
          if ((up.row(b)[w] & ~up.row(a)[w]) != 0) throw Error(ErrorCode::NotALattice, "order is not transitive");

  // A linear extension: elements with fewer predecessors first.
  auto popcount_row = [](const BitMatrix& bm, std::size_t i) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < bm.words; ++w) c += static_cast<std::size_t>(__builtin_popcountll(bm.row(i)[w]));
    return c;
  };
  std::vector<std::size_t> by_down(m), by_up(m);
  std::iota(by_down.begin(), by_down.end(), 0);
  std::iota(by_up.begin(), by_up.end(), 0);
  std::vector<std::size_t> dcount(m), ucount(m);
  for (std::size_t i = 0; i < m; ++i) {
    dcount[i] = popcount_row(down, i);
    ucount[i] = popcount_row(up, i);
  }
  std::stable_sort(by_down.begin(), by_down.end(), [&](auto x, auto y) { return dcount[x] < dcount[y]; });
  std::stable_sort(by_up.begin(), by_up.end(), [&](auto x, auto y) { return ucount[x] < ucount[y]; });

  std::vector<Index> join(m * m), meet(m * m);
  Bits common(up.words);
  auto least_in = [&](const BitMatrix& rel, const std::vector<std::size_t>& order, std::size_t a, std::size_t b,
                      const char* what) -> std::size_t {
    for (std::size_t w = 0; w < rel.words; ++w) common[w] = rel.row(a)[w] & rel.row(b)[w];
    for (auto c : order) {
      if (!((common[c / 64] >> (c % 64)) & 1u)) continue;
      for (std::size_t w = 0; w < rel.words; ++w)
        if ((common[w] & ~rel.row(c)[w]) != 0)
          throw Error(ErrorCode::NotALattice, std::string("no ") + what + " of " + std::to_string(a) + " and " +
                                                  std::to_string(b));
      return c;
    }
    throw Error(ErrorCode::NotALattice,
                std::string("no ") + what + " of " + std::to_string(a) + " and " + std::to_string(b));
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const auto j = static_cast<Index>(least_in(up, by_down, a, b, "join"));
      const auto t = static_cast<Index>(least_in(down, by_up, a, b, "meet"));
      join[a * m + b] = join[b * m + a] = j;
      meet[a * m + b] = meet[b * m + a] = t;
    }
  return from_tables(m, std::move(join), std::move(meet), std::move(prime), std::move(labels));
}

FiniteGaloisLattice FiniteGaloisLattice::from_covers(std::size_t m,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                                     std::vector<std::size_t> prime, std::vector<std::string> labels) {
  check_size(m);
  BitMatrix reach(m);
  for (std::size_t i = 0; i < m; ++i) reach.set(i, i);
  for (auto [a, b] : covers) {
    if (a >= m || b >= m) throw Error(ErrorCode::NotALattice, "cover index out of range");
    reach.set(a, b);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (reach.get(i, k))
        for (std::size_t w = 0; w < reach.words; ++w) reach.row(i)[w] |= reach.row(k)[w];
  std::vector<bool> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = reach.get(i, j);
  return from_order(m, leq, std::move(prime), std::move(labels));
}

FiniteGaloisLattice FiniteGaloisLattice::with_prime(std::vector<std::size_t> prime) const {
  FiniteGaloisLattice l = *this;
  l.prime_ = std::move(prime);
  l.finish(labels_);
  return l;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGaloisLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  // a < b is a cover iff no c has a < c < b; group candidates by height to
  // keep the scan short on graded lattices.
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m_ && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::size_t> FiniteGaloisLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < m_; ++a)
    if (a != zero_ && height(a) == 1) out.push_back(a);
  return out;
}

std::vector<std::size_t> FiniteGaloisLattice::coatoms() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < m_; ++a) {
    if (a == one_) continue;
    bool co = true;
    for (std::size_t c = 0; c < m_ && co; ++c)
      if (c != a && c != one_ && leq(a, c)) co = false;
    if (co) out.push_back(a);
  }
  return out;
}

std::size_t FiniteGaloisLattice::height(std::size_t a) const {
  if (heights_.empty()) {
    // Longest chain from 0, processed along a linear extension.
    std::vector<std::size_t> below(m_, 0), order(m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        if (leq(j, i)) ++below[i];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return below[x] < below[y]; });
    std::vector<std::size_t> h(m_, 0);
    for (std::size_t idx = 0; idx < m_; ++idx) {
      const std::size_t b = order[idx];
      for (std::size_t k = 0; k < idx; ++k) {
        const std::size_t c = order[k];
        if (leq(c, b) && c != b) h[b] = std::max(h[b], h[c] + 1);
      }
    }
    heights_ = std::move(h);
  }
  return heights_[a];
}

std::string FiniteGaloisLattice::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < m_; ++i) {
    std::string l = labels_[i];
    std::string esc;
    for (char ch : l) {
      if (ch == '"' || ch == '\\') esc += '\\';
      esc += ch;
    }
    os << "  n" << i << " [label=\"" << esc << "\"];\n";
  }
  for (auto [a, b] : covers()) os << "  n" << a << " -> n" << b << ";\n";
  for (std::size_t i = 0; i < m_; ++i)
    os << "  n" << i << " -> n" << prime_[i] << " [style=dashed, color=gray, constraint=false, arrowhead=open];\n";
  os << "}\n";
  return os.str();
}

// ------------------------------------------------------------------ laws

std::string to_string(Law law) {
  switch (law) {
    case Law::Modular: return "modular";
    case Law::Arguesian: return "arguesian";
    case Law::Complemented: return "complemented";
    case Law::Galois: return "galois";
    case Law::Polarity: return "polarity";
    case Law::Involution: return "involution";
    case Law::Ortho: return "ortho";
  }
  return "?";
}

std::optional<Law> law_from_string(const std::string& name) {
  for (Law l : all_laws())
    if (to_string(l) == name) return l;
  return std::nullopt;
}

const std::vector<Law>& all_laws() {
  static const std::vector<Law> laws{Law::Modular,  Law::Arguesian,  Law::Complemented, Law::Galois,
                                     Law::Polarity, Law::Involution, Law::Ortho};
  return laws;
}

namespace {

LawResult modular(const Lattice& l) {
  LawResult r;
  r.law = Law::Modular;
  const std::size_t m = l.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      if (!l.leq(c, a)) continue;
      for (std::size_t b = 0; b < m; ++b) {
        ++r.checked;
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), c)) {
          r.pass = false;
          r.witness = {a, b, c};
          return r;
        }
      }
    }
  return r;
}

LawResult arguesian(const Lattice& l, const LawOptions& opt) {
  LawResult r;
  r.law = Law::Arguesian;
  const std::size_t m = l.size();
  const auto* J = l.join_table().data();
  const auto* M = l.meet_table().data();
  auto join = [&](std::size_t a, std::size_t b) -> std::size_t { return J[a * m + b]; };
  auto meet = [&](std::size_t a, std::size_t b) -> std::size_t { return M[a * m + b]; };
  const std::size_t zero = l.zero();

  // (a0+b0)(a1+b1)(a2+b2) <= a0(a1+c) + b0(b1+c), c = c2(c0+c1),
  // ci = (aj+ak)(bj+bk).
  auto holds = [&](std::size_t a0, std::size_t a1, std::size_t a2, std::size_t b0, std::size_t b1, std::size_t b2) {
    const std::size_t lhs = meet(meet(join(a0, b0), join(a1, b1)), join(a2, b2));
    if (lhs == zero) return true;
    const std::size_t c0 = meet(join(a1, a2), join(b1, b2));
    const std::size_t c1 = meet(join(a0, a2), join(b0, b2));
    const std::size_t c2 = meet(join(a0, a1), join(b0, b1));
    const std::size_t c = meet(c2, join(c0, c1));
    const std::size_t rhs = join(meet(a0, join(a1, c)), meet(b0, join(b1, c)));
    return join(lhs, rhs) == rhs;
  };

  long double m6 = 1;
  for (int i = 0; i < 6; ++i) m6 *= static_cast<long double>(m);
  if (m6 <= static_cast<long double>(opt.exhaustive_limit)) {
    for (std::size_t a0 = 0; a0 < m; ++a0)
      for (std::size_t b0 = 0; b0 < m; ++b0) {
        const std::size_t s0 = join(a0, b0);
        for (std::size_t a1 = 0; a1 < m; ++a1)
          for (std::size_t b1 = 0; b1 < m; ++b1) {
            const std::size_t x = meet(s0, join(a1, b1));
            if (x == zero) {
              r.checked += m * m;
              continue;
            }
            const std::size_t c2 = meet(join(a0, a1), join(b0, b1));
            for (std::size_t a2 = 0; a2 < m; ++a2)
              for (std::size_t b2 = 0; b2 < m; ++b2) {
                ++r.checked;
                const std::size_t lhs = meet(x, join(a2, b2));
                if (lhs == zero) continue;
                const std::size_t c0 = meet(join(a1, a2), join(b1, b2));
                const std::size_t c1 = meet(join(a0, a2), join(b0, b2));
                const std::size_t c = meet(c2, join(c0, c1));
                const std::size_t rhs = join(meet(a0, join(a1, c)), meet(b0, join(b1, c)));
                if (join(lhs, rhs) != rhs) {
                  r.pass = false;
                  r.witness = {a0, a1, a2, b0, b1, b2};
                  return r;
                }
              }
          }
      }
    return r;
  }
  r.sampled = true;
  r.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::uint64_t s = 0; s < opt.samples; ++s) {
    std::size_t t[6];
    for (auto& x : t) x = pick(rng);
    ++r.checked;
    if (!holds(t[0], t[1], t[2], t[3], t[4], t[5])) {
      r.pass = false;
      r.witness.assign(t, t + 6);
      return r;
    }
  }
  return r;
}

LawResult complemented(const Lattice& l) {
  LawResult r;
  r.law = Law::Complemented;
  for (std::size_t a = 0; a < l.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < l.size() && !found; ++b) {
      ++r.checked;
      found = l.join(a, b) == l.one() && l.meet(a, b) == l.zero();
    }
    if (!found) {
      r.pass = false;
      r.witness = {a};
      return r;
    }
  }
  return r;
}

LawResult galois(const Lattice& l) {
  LawResult r;
  r.law = Law::Galois;
  ++r.checked;
  if (l.prime(l.one()) != l.zero()) {
    r.pass = false;
    r.witness = {l.one()};
    return r;
  }
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) {
      ++r.checked;
      if (l.leq(x, l.prime(y)) && !l.leq(y, l.prime(x))) {
        r.pass = false;
        r.witness = {x, y};
        return r;
      }
    }
  return r;
}

LawResult polarity(const Lattice& l) {
  LawResult r;
  r.law = Law::Polarity;
  const auto co = l.coatoms();
  const std::set<std::size_t> coatoms(co.begin(), co.end());
  for (auto p : l.atoms()) {
    ++r.checked;
    if (!coatoms.count(l.prime(p))) {
      r.pass = false;
      r.witness = {p};
      return r;
    }
  }
  return r;
}

LawResult unary(const Lattice& l, Law law) {
  LawResult r;
  r.law = law;
  for (std::size_t x = 0; x < l.size(); ++x) {
    ++r.checked;
    const bool ok = law == Law::Involution ? l.prime(l.prime(x)) == x : l.meet(x, l.prime(x)) == l.zero();
    if (!ok) {
      r.pass = false;
      r.witness = {x};
      return r;
    }
  }
  return r;
}

// Lattice-only laws depend on the tables alone; subspace lattices of one
// field and dimension share them, so their results are memoized.
struct CacheKey {
  std::vector<Lattice::Index> join, meet;
  Law law;
  std::uint64_t seed, samples, limit;
  auto tie() const { return std::tie(law, seed, samples, limit, join, meet); }
  bool operator<(const CacheKey& o) const { return tie() < o.tie(); }
};

std::mutex g_cache_mutex;
std::map<CacheKey, LawResult> g_cache;

}  // namespace

LawResult check_law(const Lattice& l, Law law, const LawOptions& opt) {
  switch (law) {
    case Law::Modular:
    case Law::Arguesian:
    case Law::Complemented: {
      CacheKey key{l.join_table(), l.meet_table(), law, opt.seed, opt.samples, opt.exhaustive_limit};
      {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
      }
      LawResult r = law == Law::Modular ? modular(l) : law == Law::Arguesian ? arguesian(l, opt) : complemented(l);
      std::lock_guard<std::mutex> lock(g_cache_mutex);
      g_cache.emplace(std::move(key), r);
      return r;
    }
    case Law::Galois: return galois(l);
    case Law::Polarity: return polarity(l);
    case Law::Involution:
    case Law::Ortho: return unary(l, law);
  }
  return {};
}

std::vector<LawResult> check_laws(const Lattice& l, const std::vector<Law>& laws, const LawOptions& opt) {
  std::vector<LawResult> out;
  for (Law law : laws) out.push_back(check_law(l, law, opt));
  return out;
}

// ------------------------------------------------------------ congruences

std::size_t Congruence::block_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < block.size(); ++i)
    if (block[i] == i) ++c;
  return c;
}

bool Congruence::is_identity() const { return block_count() == block.size(); }
bool Congruence::is_total() const { return block_count() <= 1; }

Congruence identity_congruence(std::size_t m) {
  Congruence c;
  c.block.resize(m);
  std::iota(c.block.begin(), c.block.end(), 0);
  return c;
}

Congruence total_congruence(std::size_t m) { return Congruence{std::vector<std::size_t>(m, 0)}; }

Congruence generated_congruence(const Lattice& l, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t m = l.size();
  UnionFind uf(m);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  // Every merge is recorded as an edge; translating the edges by joins and
  // meets with every element is enough, because the block relation is the
  // transitive closure of the edges.
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (std::size_t z = 0; z < m; ++z) {
      const std::size_t j1 = l.join(x, z), j2 = l.join(y, z);
      if (uf.unite(j1, j2)) work.emplace_back(j1, j2);
      const std::size_t m1 = l.meet(x, z), m2 = l.meet(y, z);
      if (uf.unite(m1, m2)) work.emplace_back(m1, m2);
    }
  }
  return canonical(uf, m);
}

bool is_congruence(const Lattice& l, const Congruence& c) {
  const std::size_t m = l.size();
  if (c.block.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (c.block[i] >= m || c.block[c.block[i]] != c.block[i]) return false;
    const std::size_t r = c.block[i];
    if (r == i) continue;
    for (std::size_t z = 0; z < m; ++z) {
      if (!c.related(l.join(i, z), l.join(r, z))) return false;
      if (!c.related(l.meet(i, z), l.meet(r, z))) return false;
    }
  }
  return true;
}

bool prime_compatible(const Lattice& l, const Congruence& c) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!c.related(l.prime(i), l.prime(c.block[i]))) return false;
  return true;
}

bool refines(const Congruence& a, const Congruence& b) {
  for (std::size_t i = 0; i < a.block.size(); ++i)
    if (!b.related(i, a.block[i])) return false;
  return true;
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  const std::size_t m = a.block.size();
  UnionFind uf(m);
  for (std::size_t i = 0; i < m; ++i) {
    uf.unite(i, a.block[i]);
    uf.unite(i, b.block[i]);
  }
  return canonical(uf, m);
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const std::size_t m = a.block.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first;
  Congruence c;
  c.block.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = first.emplace(std::make_pair(a.block[i], b.block[i]), i);
    c.block[i] = it->second;
  }
  return c;
}

CongruenceReport congruences(const Lattice& l) {
  const std::size_t m = l.size();
  if (m > 500) throw Error(ErrorCode::CongruenceCap, std::to_string(m) + " elements exceed the congruence cap of 500");
  // Every congruence is a join of principal congruences of covering pairs.
  std::set<Congruence> principal;
  for (auto [a, b] : l.covers()) principal.insert(generated_congruence(l, {{a, b}}));

  std::set<Congruence> all{identity_congruence(m)};
  std::vector<Congruence> work(principal.begin(), principal.end());
  for (const auto& p : principal) all.insert(p);
  while (!work.empty()) {
    Congruence c = std::move(work.back());
    work.pop_back();
    std::vector<Congruence> fresh;
    for (const auto& p : principal) {
      Congruence j = congruence_join(c, p);
      if (!all.count(j)) fresh.push_back(std::move(j));
    }
    for (auto& f : fresh)
      if (all.insert(f).second) {
        work.push_back(std::move(f));
        if (all.size() > 65536) throw Error(ErrorCode::CongruenceCap, "more than 65536 congruences");
      }
  }

  CongruenceReport rep;
  rep.all.assign(all.begin(), all.end());
  std::vector<const Congruence*> minimal;
  for (const auto& c : rep.all) {
    if (prime_compatible(l, c)) ++rep.galois_count;
    if (c.is_identity()) continue;
    bool is_min = true;
    for (const auto& d : rep.all)
      if (!d.is_identity() && d != c && refines(d, c)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(&c);
  }
  if (minimal.size() == 1) rep.monolith = *minimal.front();
  rep.simple = m >= 2 && rep.all.size() == 2;
  rep.sdi = rep.monolith.has_value();
  rep.strict_sdi = rep.sdi && prime_compatible(l, *rep.monolith);
  rep.strict_simple = rep.simple;
  return rep;
}

Quotient quotient(const Lattice& l, const Congruence& c) {
  if (!is_congruence(l, c)) throw Error(ErrorCode::NotALattice, "partition is not a lattice congruence");
  if (!prime_compatible(l, c))
    throw Error(ErrorCode::PrimeIncompatibleCongruence, "a theta b does not imply a' theta b'");
  const std::size_t m = l.size();
  std::vector<std::size_t> reps, index(m);
  std::vector<std::size_t> pos(m, m);
  for (std::size_t i = 0; i < m; ++i)
    if (c.block[i] == i) {
      pos[i] = reps.size();
      reps.push_back(i);
    }
  for (std::size_t i = 0; i < m; ++i) index[i] = pos[c.block[i]];
  const std::size_t k = reps.size();
  std::vector<Lattice::Index> join(k * k), meet(k * k);
  std::vector<std::size_t> prime(k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    prime[a] = index[l.prime(reps[a])];
    labels[a] = "[" + l.label(reps[a]) + "]";
    for (std::size_t b = 0; b < k; ++b) {
      join[a * k + b] = static_cast<Lattice::Index>(index[l.join(reps[a], reps[b])]);
      meet[a * k + b] = static_cast<Lattice::Index>(index[l.meet(reps[a], reps[b])]);
    }
  }
  return {Lattice::from_tables(k, std::move(join), std::move(meet), std::move(prime), std::move(labels)),
          std::move(index)};
}

Lattice product(const std::vector<const Lattice*>& factors) {
  std::uint64_t total = 1;
  for (const auto* f : factors) {
    total *= f->size();
    if (total > Lattice::kMaxSize) throw Error(ErrorCode::SizeCap, "product exceeds 20000 elements");
  }
  const std::size_t m = total;
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = x % factors[i]->size();
      x /= factors[i]->size();
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->size() + d[i];
    return x;
  };
  std::vector<std::vector<std::size_t>> coords(m);
  for (std::size_t x = 0; x < m; ++x) coords[x] = decode(x);
  std::vector<Lattice::Index> join(m * m), meet(m * m);
  std::vector<std::size_t> prime(m);
  std::vector<std::string> labels(m);
  std::vector<std::size_t> tmp(factors.size());
  for (std::size_t x = 0; x < m; ++x) {
    std::string lab = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      tmp[i] = factors[i]->prime(coords[x][i]);
      lab += (i ? "," : "") + factors[i]->label(coords[x][i]);
    }
    labels[x] = lab + ")";
    prime[x] = encode(tmp);
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < factors.size(); ++i) tmp[i] = factors[i]->join(coords[x][i], coords[y][i]);
      join[x * m + y] = static_cast<Lattice::Index>(encode(tmp));
      for (std::size_t i = 0; i < factors.size(); ++i) tmp[i] = factors[i]->meet(coords[x][i], coords[y][i]);
      meet[x * m + y] = static_cast<Lattice::Index>(encode(tmp));
    }
  }
  return Lattice::from_tables(m, std::move(join), std::move(meet), std::move(prime), std::move(labels));
}

Sublattice sublattice(const Lattice& l, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t k = elements.size();
  std::vector<std::size_t> pos(l.size(), l.size());
  for (std::size_t i = 0; i < k; ++i) pos[elements[i]] = i;
  auto at = [&](std::size_t x, const char* what) {
    if (pos[x] == l.size()) throw Error(ErrorCode::NotALattice, std::string("subset is not closed under ") + what);
    return pos[x];
  };
  std::vector<Lattice::Index> join(k * k), meet(k * k);
  std::vector<std::size_t> prime(k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    prime[a] = at(l.prime(elements[a]), "'");
    labels[a] = l.label(elements[a]);
    for (std::size_t b = 0; b < k; ++b) {
      join[a * k + b] = static_cast<Lattice::Index>(at(l.join(elements[a], elements[b]), "joins"));
      meet[a * k + b] = static_cast<Lattice::Index>(at(l.meet(elements[a], elements[b]), "meets"));
    }
  }
  return {Lattice::from_tables(k, std::move(join), std::move(meet), std::move(prime), std::move(labels)),
          std::move(elements), false};
}

Sublattice galois_closure(const Lattice& l, const std::vector<std::size_t>& generators) {
  const std::size_t m = l.size();
  std::vector<bool> in(m, false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  auto close = [&](bool with_meets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t x = members[i];
      add(l.prime(x));
      for (std::size_t j = 0; j <= i; ++j) {
        add(l.join(x, members[j]));
        if (with_meets) add(l.meet(x, members[j]));
      }
    }
  };
  add(l.zero());
  for (auto g : generators) {
    if (g >= m) throw Error(ErrorCode::NotALattice, "generator index out of range");
    add(g);
  }
  close(false);
  bool meet_closed = in[l.one()];
  for (std::size_t i = 0; i < members.size() && meet_closed; ++i)
    for (std::size_t j = 0; j < members.size() && meet_closed; ++j)
      meet_closed = in[l.meet(members[i], members[j])];
  if (!meet_closed) {
    add(l.one());
    // Re-run from the start so every pair sees every operation.
    std::vector<std::size_t> seed = members;
    std::fill(in.begin(), in.end(), false);
    members.clear();
    for (auto x : seed) add(x);
    close(true);
  }
  Sublattice s = sublattice(l, members);
  s.needed_meets = !meet_closed;
  return s;
}

// ------------------------------------------------------------------ homs

HomCheck check_hom(const LatticeHom& h) {
  HomCheck r;
  const Lattice& s = *h.source;
  const Lattice& t = *h.target;
  if (h.map.size() != s.size()) {
    r.failure = "map is not total";
    return r;
  }
  for (auto x : h.map)
    if (x >= t.size()) {
      r.failure = "map leaves the target";
      return r;
    }
  r.is_hom = h.map[s.zero()] == t.zero() && h.map[s.one()] == t.one();
  if (!r.is_hom) r.failure = "bounds are not preserved";
  for (std::size_t x = 0; x < s.size() && r.is_hom; ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (h.map[s.join(x, y)] != t.join(h.map[x], h.map[y])) {
        r.is_hom = false;
        r.failure = "join is not preserved";
        r.witness = {x, y};
        break;
      }
      if (h.map[s.meet(x, y)] != t.meet(h.map[x], h.map[y])) {
        r.is_hom = false;
        r.failure = "meet is not preserved";
        r.witness = {x, y};
        break;
      }
    }
  r.is_galois_hom = r.is_hom;
  for (std::size_t x = 0; x < s.size() && r.is_galois_hom; ++x)
    if (h.map[s.prime(x)] != t.prime(h.map[x])) {
      r.is_galois_hom = false;
      r.failure = "' is not preserved";
      r.witness = {x};
    }
  std::set<std::size_t> image(h.map.begin(), h.map.end());
  r.injective = image.size() == h.map.size();
  return r;
}

Congruence hom_kernel(const LatticeHom& h) {
  HomCheck c = check_hom(h);
  if (!c.is_hom) throw Error(ErrorCode::NotAHom, c.failure);
  std::map<std::size_t, std::size_t> first;
  Congruence k;
  k.block.resize(h.map.size());
  for (std::size_t i = 0; i < h.map.size(); ++i) k.block[i] = first.emplace(h.map[i], i).first->second;
  return k;
}

bool faithful_family(const std::vector<LatticeHom>& homs) {
  if (homs.empty()) return false;
  Congruence k = hom_kernel(homs.front());
  for (std::size_t i = 1; i < homs.size(); ++i) k = congruence_meet(k, hom_kernel(homs[i]));
  return k.is_identity();
}

Sublattice l_f(const Lattice& l) {
  for (Law law : {Law::Modular, Law::Complemented, Law::Galois, Law::Polarity}) {
    LawResult r = check_law(l, law);
    if (!r.pass) throw Error(ErrorCode::NotPolarityCML, "fails the " + to_string(law) + " law");
  }
  // F = elements of finite height; every height is finite here, but the
  // filter is applied rather than assumed.
  std::vector<std::size_t> members;
  for (std::size_t u = 0; u < l.size(); ++u)
    if (l.height(u) <= l.size()) {
      members.push_back(u);
      members.push_back(l.prime(u));
    }
  return sublattice(l, members);
}

bool is_atomic(const Lattice& l) {
  const auto atoms = l.atoms();
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.zero()) continue;
    bool has = false;
    for (auto a : atoms)
      if (l.leq(a, x)) {
        has = true;
        break;
      }
    if (!has) return false;
  }
  return true;
}

}  // namespace hermilat
