#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermilat {

/// A finite bounded lattice with an arbitrary unary operation x -> x'.
/// Elements are indices 0..m-1; joins and meets are dense tables, so the
/// order is fixed at construction. The prime table is only required to be
/// total: antitone, involutive and similar properties are checked laws.
class FiniteGaloisLattice {
 public:
  using Index = std::uint16_t;
  static constexpr std::size_t kMaxSize = 20000;

  FiniteGaloisLattice() = default;

  /// Builds from a partial order given as a row-major m x m relation and
  /// verifies that all joins and meets exist (NotALattice otherwise).
  static FiniteGaloisLattice from_order(std::size_t m, const std::vector<bool>& leq, std::vector<std::size_t> prime,
                                        std::vector<std::string> labels = {});
  /// Builds from cover pairs (i below j) via reflexive-transitive closure.
  static FiniteGaloisLattice from_covers(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                         std::vector<std::size_t> prime, std::vector<std::string> labels = {});
  /// Trusted construction from complete join and meet tables; the order is
  /// read off the join table (a <= b iff a + b = b).
  static FiniteGaloisLattice from_tables(std::size_t m, std::vector<Index> join, std::vector<Index> meet,
                                         std::vector<std::size_t> prime, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return m_; }
  bool leq(std::size_t a, std::size_t b) const { return join_[a * m_ + b] == b; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * m_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * m_ + b]; }
  std::size_t prime(std::size_t a) const { return prime_[a]; }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& prime_table() const noexcept { return prime_; }
  const std::vector<Index>& join_table() const noexcept { return join_; }
  const std::vector<Index>& meet_table() const noexcept { return meet_; }

  /// Cover pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> coatoms() const;
  /// Length of the longest chain from 0 to a.
  std::size_t height(std::size_t a) const;
  std::size_t dimension() const { return height(one_); }

  /// Same lattice, different prime table.
  FiniteGaloisLattice with_prime(std::vector<std::size_t> prime) const;

  /// Hasse diagram with the prime map drawn as dashed arcs.
  std::string to_dot(const std::string& name = "L") const;

  friend bool operator==(const FiniteGaloisLattice& a, const FiniteGaloisLattice& b) {
    return a.m_ == b.m_ && a.join_ == b.join_ && a.meet_ == b.meet_ && a.prime_ == b.prime_;
  }

 private:
  void finish(std::vector<std::string> labels);

  std::size_t m_ = 0;
  std::vector<Index> join_, meet_;
  std::vector<std::size_t> prime_;
  std::size_t zero_ = 0, one_ = 0;
  std::vector<std::string> labels_;
  mutable std::vector<std::size_t> heights_;
};

using Lattice = FiniteGaloisLattice;

enum class Law { Modular, Arguesian, Complemented, Galois, Polarity, Involution, Ortho };

std::string to_string(Law law);
std::optional<Law> law_from_string(const std::string& name);
const std::vector<Law>& all_laws();

struct LawResult {
  Law law = Law::Modular;
  bool pass = true;
  bool sampled = false;             // Arguesian only, when m^6 exceeds the limit
  std::uint64_t checked = 0;        // tuples evaluated
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> witness;  // failing tuple, element indices
};

struct LawOptions {
  std::uint64_t seed = 20240611;
  std::uint64_t samples = 1000000;
  std::uint64_t exhaustive_limit = 1000000000;  // m^6 bound for exhaustive Arguesian
};

/// Witness layouts: Modular (a, b, c) with c <= a; Arguesian (a0, a1, a2,
/// b0, b1, b2); Complemented (a); Galois (x, y) or (1) for 1' != 0;
/// Polarity (atom); Involution (x); Ortho (x).
/// Results for lattice-only laws are cached by join/meet tables.
std::vector<LawResult> check_laws(const Lattice& l, const std::vector<Law>& laws, const LawOptions& opt = {});
LawResult check_law(const Lattice& l, Law law, const LawOptions& opt = {});

/// Partition of element indices; block[i] is the least element index of
/// the block containing i.
struct Congruence {
  std::vector<std::size_t> block;

  bool related(std::size_t a, std::size_t b) const { return block[a] == block[b]; }
  std::size_t block_count() const;
  bool is_identity() const;
  bool is_total() const;
  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

Congruence identity_congruence(std::size_t m);
Congruence total_congruence(std::size_t m);
/// Least congruence containing every pair of `pairs`.
Congruence generated_congruence(const Lattice& l, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
bool is_congruence(const Lattice& l, const Congruence& c);
bool prime_compatible(const Lattice& l, const Congruence& c);
/// Finer-or-equal test.
bool refines(const Congruence& a, const Congruence& b);
Congruence congruence_join(const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);

struct CongruenceReport {
  std::vector<Congruence> all;           // sorted, lattice congruences
  std::size_t galois_count = 0;          // members with a theta b => a' theta b'
  std::optional<Congruence> monolith;    // unique minimal nontrivial one
  bool simple = false;                   // all == {Delta, Nabla}
  bool sdi = false;                      // monolith exists
  bool strict_sdi = false;               // sdi and the monolith is prime-compatible
  bool strict_simple = false;            // simple (Delta and Nabla are always prime-compatible)
};

/// Throws CongruenceCap above 500 elements or when the congruence lattice
/// itself grows past 65536 members.
CongruenceReport congruences(const Lattice& l);

struct Quotient {
  Lattice lattice;
  std::vector<std::size_t> map;  // element -> block index
};

/// Throws NotALattice if c is not a congruence and
/// PrimeIncompatibleCongruence if a c b does not imply a' c b'.
Quotient quotient(const Lattice& l, const Congruence& c);

/// Componentwise product, first factor most significant. SizeCap above
/// 20000 elements.
Lattice product(const std::vector<const Lattice*>& factors);

struct Sublattice {
  Lattice lattice;
  std::vector<std::size_t> embedding;  // sub index -> parent index, increasing
  bool needed_meets = false;           // +/' closure was not meet-closed
};

/// Least subset containing the generators and 0 closed under + and '. If
/// that set is not closed under meets (possible outside MILs) it is closed
/// further under meets and 1 is added, and needed_meets is set.
Sublattice galois_closure(const Lattice& l, const std::vector<std::size_t>& generators);
Sublattice sublattice(const Lattice& l, std::vector<std::size_t> elements);

struct LatticeHom {
  const Lattice* source = nullptr;
  const Lattice* target = nullptr;
  std::vector<std::size_t> map;
};

struct HomCheck {
  bool is_hom = false;        // +, ., 0, 1
  bool is_galois_hom = false; // and ' as well
  bool injective = false;
  std::vector<std::size_t> witness;  // (x, y) where + or . fails, or (x) for '
  std::string failure;
};

HomCheck check_hom(const LatticeHom& h);
/// Partition by equal images; throws NotAHom.
Congruence hom_kernel(const LatticeHom& h);
/// The kernels meet to Delta; throws NotAHom.
bool faithful_family(const std::vector<LatticeHom>& homs);

/// Elements of finite height together with their primes; requires a
/// polarity CML (modular, complemented, Galois, polarity) and throws
/// NotPolarityCML otherwise. For a finite lattice this is all of L.
Sublattice l_f(const Lattice& l);

/// True when each nonzero element has an atom below it.
bool is_atomic(const Lattice& l);

}  // namespace hermilat
