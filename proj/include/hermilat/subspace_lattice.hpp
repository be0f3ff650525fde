#pragma once

#include "hermilat/glattice.hpp"
#include "hermilat/space.hpp"
#include "hermilat/star_ring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hermilat {

/// The subspace lattice of a space with U' = U^perp. Element i is
/// elements[i]; the order is dimension first, then RREF entries.
struct SpaceLattice {
  Lattice lattice;
  std::vector<Subspace> elements;

  std::optional<std::size_t> index_of(const Subspace& u) const;
};

/// Short printable form of a subspace: "0", or its RREF rows.
std::string subspace_label(const Subspace& u);

/// Throws DegenerateSpace, NotOrthosymmetric or EnumerationCap.
SpaceLattice lattice_of_space(const GramSpace& space);

/// Principal right ideals of a regular *-ring ordered by inclusion, with
/// (eR)' = (1 - e*)R. Matrix rings use the column-space correspondence;
/// other rings enumerate the ideals eR of their idempotents.
struct RingLattice {
  Lattice lattice;
  std::vector<RingElem> idempotents;  // a generating idempotent per element
  std::vector<Subspace> images;       // column spaces (matrix rings only)
};

/// Throws NotRegular or EnumerationCap.
RingLattice lattice_of_ring(const StarRing& ring);

struct LrepReport {
  Lattice ring_lattice;
  Lattice space_lattice;
  std::vector<std::size_t> eta;  // aR -> im a
  bool order_checked = false;    // ring order re-tested as e_b e_a = e_a
  bool order_matches = false;
  HomCheck check;
  bool ok = false;

  LatticeHom hom() const { return {&ring_lattice, &space_lattice, eta}; }
};

/// Builds eta: aR -> im a from the ring lattice of End(V) onto the
/// subspace lattice and checks it is a bijective Galois-lattice map.
LrepReport lrep_check(const GramSpace& space);

/// Points with collinearity and orthogonality. Lines are stored explicitly:
/// line(p, q) lists every point on the line through p != q, so
/// collinear(p, q, r) holds for distinct p, q, r with r on that line.
class Orthogeometry {
 public:
  Orthogeometry(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines,
                std::vector<bool> perp);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t p) const { return labels_[p]; }
  const std::vector<std::vector<std::size_t>>& lines() const noexcept { return lines_; }
  /// Index into lines() of the line through p != q.
  std::size_t line_index(std::size_t p, std::size_t q) const { return line_of_[p * size() + q]; }
  const std::vector<std::size_t>& line(std::size_t p, std::size_t q) const { return lines_[line_index(p, q)]; }

  bool collinear(std::size_t p, std::size_t q, std::size_t r) const;
  /// collinear, or two of the three points coincide.
  bool weakly_collinear(std::size_t p, std::size_t q, std::size_t r) const;
  bool perp(std::size_t p, std::size_t q) const { return perp_[p * size() + q]; }

  /// Sorted (i < j < k) triples and (i <= j) perpendicular pairs.
  std::vector<std::array<std::size_t, 3>> collinear_triples() const;
  std::vector<std::pair<std::size_t, std::size_t>> perp_pairs() const;

  friend bool operator==(const Orthogeometry& a, const Orthogeometry& b) {
    return a.lines_ == b.lines_ && a.perp_ == b.perp_ && a.size() == b.size();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> lines_;
  std::vector<std::size_t> line_of_;
  std::vector<bool> perp_;
};

/// Projective points vF with vF perp wF iff <v,w> = 0. points[i] is the
/// i-th one-dimensional subspace in lattice order.
struct SpaceGeometry {
  Orthogeometry geometry;
  std::vector<Subspace> points;
};

SpaceGeometry geometry_of_space(const GramSpace& space);

/// Atoms of L, r collinear with distinct p, q iff r <= p + q, and p perp q
/// iff p <= q'. atoms[i] is the lattice index of point i. Throws NotAtomic.
struct LatticeGeometry {
  Orthogeometry geometry;
  std::vector<std::size_t> atoms;
};

LatticeGeometry geometry_of_lattice(const Lattice& l);

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> witness;  // point indices
};

/// Axioms checked, each reported once with its first witness:
///   projective-i    collinear triples are permutation-closed and distinct
///   projective-ii   collinear(p,q,a), collinear(p,q,b), a != b => collinear(p,a,b)
///   projective-iii  collinear(p,a,b), collinear(p,c,d) => some q is weakly
///                   collinear with a, c and with b, d
///   perp-symmetric
///   ortho-a         p perp q, p perp r, collinear(q,r,s) => p perp s
///   ortho-b         every p has some q it is not perpendicular to
///   polarity-ii     p != q => every r is perpendicular to some t weakly
///                   collinear with p, q
struct GeometryReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
};

GeometryReport geometry_axiom_check(const Orthogeometry& g);

/// The lattice of subspaces (line-closed point sets) of a geometry with
/// X' = {q : q perp p for all p in X}. members[i] lists the points of
/// element i; elements are ordered by size, then by point list.
struct GeometryLattice {
  Lattice lattice;
  std::vector<std::vector<std::size_t>> members;
};

GeometryLattice lattice_of_geometry(const Orthogeometry& g);

struct RoundTripReport {
  std::size_t lattice_size = 0;
  std::size_t geometry_lattice_size = 0;
  std::vector<std::size_t> map;  // element -> geometry lattice element
  HomCheck check;
  bool ok = false;
};

/// L = L(V), then G(L), then the lattice of G(L); checks that
/// a -> {atoms below a} is a Galois-lattice isomorphism.
RoundTripReport arg2_roundtrip(const GramSpace& space);

/// U -> {points inside U} from L(V) into the lattice of G(V): a faithful
/// representation, i.e. an injective Galois-lattice hom.
RoundTripReport ogrep_check(const GramSpace& space);

struct PolaritySearchReport {
  std::uint64_t budget = 0;
  std::uint64_t tried = 0;       // generator sets examined
  std::uint64_t distinct = 0;    // distinct subalgebras among them
  std::uint64_t complemented = 0;
  bool exhausted = false;        // every generator set of size <= 3 was tried
  std::optional<std::vector<std::size_t>> generators;   // of the counterexample
  std::optional<std::vector<std::size_t>> subalgebra;   // its elements
};

/// Galois closures of all element sets of size <= 3 (by size, then
/// lexicographically), stopping after `budget` sets; reports the first
/// complemented subalgebra that is not a polarity lattice.
PolaritySearchReport polarity_subalgebra_search(const GramSpace& space, std::uint64_t budget);
PolaritySearchReport polarity_subalgebra_search(const Lattice& l, std::uint64_t budget);

}  // namespace hermilat
