#pragma once

#include "hermilat/constructions.hpp"
#include "hermilat/glattice.hpp"
#include "hermilat/space.hpp"
#include "hermilat/star_ring.hpp"
#include "hermilat/subspace_lattice.hpp"

#include <json.hpp>

#include <string>

namespace hermilat {

using Json = nlohmann::ordered_json;

// Every *_from_json throws Error(ParseError) on malformed input; semantic
// problems (reducible modulus, singular Gram, ...) keep their own codes.

Json to_json(const InvolutiveField& f);
InvolutiveField field_from_json(const Json& j);

Json to_json(const Matrix& m);  // rows of integer codes
Matrix matrix_from_json(const InvolutiveField& f, const Json& j);
Json to_json(const Vector& v);

Json to_json(const GramSpace& s);  // {"field", "dim", "gram"}
GramSpace space_from_json(const Json& j);

Json to_json(const Subspace& u);  // {"basis": rows}
Json to_json(const SpaceClass& c);

Json to_json(const Lattice& l);  // {"elements", "covers", "prime", "zero", "one"}
Lattice lattice_from_json(const Json& j);

Json to_json(const LawResult& r);
Json to_json(const CongruenceReport& r);
Json to_json(const SpaceGeometry& g);  // {"points", "collinear", "perp"}
Json to_json(const RegularityReport& r, const StarRing& ring);
Json to_json(const FieldEmbedding& e);
Json to_json(const EmbeddingReport& r);
Json to_json(const PolaritySearchReport& r);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Ring elements of a matrix ring as row-major code matrices; product ring
/// elements as the list of their components.
Json ring_elem_to_json(const StarRing& ring, const RingElem& a);

}  // namespace hermilat
