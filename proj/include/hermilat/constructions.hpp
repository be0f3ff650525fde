#pragma once

#include "hermilat/glattice.hpp"
#include "hermilat/space.hpp"
#include "hermilat/star_ring.hpp"

#include <vector>

namespace hermilat {

/// An injective ring map F -> K that commutes with the involutions.
struct FieldEmbedding {
  InvolutiveField source;
  InvolutiveField target;
  std::vector<FieldElem> map;  // indexed by source code

  FieldElem operator()(FieldElem x) const { return map[code(x)]; }
  Vector apply(const Vector& v) const;
  Matrix apply(const Matrix& a) const;
};

/// The lexicographically least table sending x to a root of F's modulus in
/// K that is additive, multiplicative, injective and commutes with the
/// involutions. Throws NoCompatibleEmbedding.
FieldEmbedding field_embedding(const InvolutiveField& from, const InvolutiveField& to);

/// W = K^n with Gram alpha(G); omega maps coordinates through alpha.
struct TensorialEmbedding {
  FieldEmbedding alpha;
  GramSpace source;
  GramSpace target;

  Vector omega(const Vector& v) const { return alpha.apply(v); }
};

/// Checks <omega v, omega w> = alpha(<v, w>) on all basis pairs (and on all
/// vector pairs when there are at most 2^16 of them) and that the image
/// spans W. Throws DegenerateSpace, NotOrthosymmetric or FieldMismatch.
TensorialEmbedding tensorial_embed(const GramSpace& space, const FieldEmbedding& alpha);

/// A verified *-ring embedding together with the induced lattice map.
struct EmbeddingReport {
  RingHom ring;
  HomReport ring_check;
  Lattice source_lattice;
  Lattice target_lattice;
  std::vector<std::size_t> lattice_map;
  HomCheck lattice_check;
  bool ok = false;  // both maps are injective homs preserving the involutions

  LatticeHom lattice_hom() const { return {&source_lattice, &target_lattice, lattice_map}; }
};

/// xi: End(V) -> End(W), entrywise alpha, and U -> K-span of omega(U).
EmbeddingReport lift_ring_embedding(const TensorialEmbedding& t);

struct JointExtension {
  GramSpace space;  // the orthogonal sum of the two embedded spaces
  EmbeddingReport embedding;  // from End(V0) x End(V1) and L(V0) x L(V1)
};

/// Embeds both spaces into K and forms their orthogonal sum; the ring map
/// is block diagonal and the lattice map sends (U0, U1) to U0 + U1.
/// Throws FieldMismatch when the targets differ and EpsilonMismatch when the
/// embedded forms are hermitian for different epsilons.
JointExtension joint_extension(const GramSpace& v0, const GramSpace& v1, const FieldEmbedding& e0,
                               const FieldEmbedding& e1);

}  // namespace hermilat
