#include "hermilat/io.hpp"

#include "hermilat/error.hpp"

#include <fstream>
#include <sstream>

namespace hermilat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object with \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad("missing \"" + std::string(key) + "\"");
  return *it;
}

std::uint64_t uint_of(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::size_t> index_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(uint_of(x, what));
  return out;
}

}  // namespace

Json to_json(const InvolutiveField& f) {
  return Json{{"p", f.characteristic()},
              {"k", f.degree()},
              {"modulus", f.modulus()},
              {"involution", std::string(to_string(f.involution_kind()))}};
}

InvolutiveField field_from_json(const Json& j) {
  const auto p = static_cast<std::uint32_t>(uint_of(member(j, "p"), "p"));
  std::uint32_t k = 1;
  if (j.contains("k")) k = static_cast<std::uint32_t>(uint_of(j["k"], "k"));
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus"))
    for (auto c : index_list(j["modulus"], "modulus")) modulus.push_back(static_cast<std::uint32_t>(c));
  InvolutionKind inv = InvolutionKind::Identity;
  if (j.contains("involution")) {
    if (!j["involution"].is_string()) bad("involution must be a string");
    inv = involution_from_string(j["involution"].get<std::string>());
  }
  return InvolutiveField::make(p, k, std::move(modulus), inv);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row_vector(i)));
  return rows;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(code(x));
  return out;
}

Matrix matrix_from_json(const InvolutiveField& f, const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix rows must be arrays");
    std::vector<std::uint32_t> row;
    for (const auto& x : r) {
      const auto c = uint_of(x, "matrix entry");
      if (c >= f.order())
        throw Error(ErrorCode::InvalidElement, std::to_string(c) + " is not an element of " + f.describe());
      row.push_back(static_cast<std::uint32_t>(c));
    }
    if (!rows.empty() && row.size() != rows.front().size()) bad("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_codes(rows);
}

Json to_json(const GramSpace& s) {
  return Json{{"field", to_json(s.field())}, {"dim", s.dim()}, {"gram", to_json(s.gram())}};
}

GramSpace space_from_json(const Json& j) {
  const InvolutiveField f = field_from_json(member(j, "field"));
  const Matrix g = matrix_from_json(f, member(j, "gram"));
  if (j.contains("dim") && uint_of(j["dim"], "dim") != g.rows())
    throw Error(ErrorCode::LengthMismatch, "dim " + j["dim"].dump() + " does not match the Gram matrix");
  return GramSpace::make(f, g);
}

Json to_json(const Subspace& u) { return Json{{"basis", to_json(u.basis())}}; }

Json to_json(const SpaceClass& c) {
  Json out{{"nondegenerate", c.nondegenerate}};
  out["epsilon"] = c.epsilon ? Json(code(*c.epsilon)) : Json(nullptr);
  out["hermitian"] = c.hermitian;
  out["skew_symmetric"] = c.skew_symmetric;
  out["alternate"] = c.alternate;
  out["anisotropic"] = c.anisotropic;
  out["orthosymmetric"] = c.orthosymmetric;
  return out;
}

Json to_json(const Lattice& l) {
  Json covers = Json::array();
  for (auto [a, b] : l.covers()) covers.push_back({a, b});
  return Json{{"elements", l.labels()},
              {"covers", covers},
              {"prime", l.prime_table()},
              {"zero", l.zero()},
              {"one", l.one()}};
}

Lattice lattice_from_json(const Json& j) {
  const Json& elements = member(j, "elements");
  if (!elements.is_array()) bad("elements must be an array");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  const std::size_t m = labels.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const Json& cj = member(j, "covers");
  if (!cj.is_array()) bad("covers must be an array");
  for (const auto& c : cj) {
    auto pair = index_list(c, "cover");
    if (pair.size() != 2 || pair[0] >= m || pair[1] >= m) bad("cover " + c.dump() + " is not a pair of elements");
    covers.emplace_back(pair[0], pair[1]);
  }
  auto prime = index_list(member(j, "prime"), "prime");
  if (prime.size() != m) bad("prime has " + std::to_string(prime.size()) + " entries for " + std::to_string(m) + " elements");
  for (auto p : prime)
    if (p >= m) bad("prime entry " + std::to_string(p) + " out of range");
  Lattice l = Lattice::from_covers(m, covers, std::move(prime), std::move(labels));
  if (j.contains("zero") && uint_of(j["zero"], "zero") != l.zero())
    throw Error(ErrorCode::NotALattice, "declared zero is not the least element");
  if (j.contains("one") && uint_of(j["one"], "one") != l.one())
    throw Error(ErrorCode::NotALattice, "declared one is not the greatest element");
  return l;
}

Json to_json(const LawResult& r) {
  Json out{{"law", to_string(r.law)}, {"pass", r.pass}, {"checked", r.checked}, {"sampled", r.sampled}};
  if (r.seed) out["seed"] = *r.seed;
  if (!r.pass) out["witness"] = r.witness;
  return out;
}

Json to_json(const CongruenceReport& r) {
  Json all = Json::array();
  for (const auto& c : r.all) all.push_back(c.block);
  Json out{{"count", r.all.size()}, {"galois_count", r.galois_count}, {"congruences", all}};
  out["monolith"] = r.monolith ? Json(r.monolith->block) : Json(nullptr);
  out["simple"] = r.simple;
  out["sdi"] = r.sdi;
  out["strict_sdi"] = r.strict_sdi;
  out["strict_simple"] = r.strict_simple;
  return out;
}

Json to_json(const SpaceGeometry& g) {
  Json points = Json::array();
  for (const auto& p : g.points) points.push_back(to_json(p));
  Json collinear = Json::array();
  for (const auto& t : g.geometry.collinear_triples()) collinear.push_back(t);
  Json perp = Json::array();
  for (auto [a, b] : g.geometry.perp_pairs()) perp.push_back({a, b});
  return Json{{"points", points}, {"collinear", collinear}, {"perp", perp}};
}

Json ring_elem_to_json(const StarRing& ring, const RingElem& a) {
  if (const auto* m = dynamic_cast<const MatrixRing*>(&ring)) return to_json(m->to_matrix(a));
  if (const auto* p = dynamic_cast<const ProductRing*>(&ring)) {
    Json parts = Json::array();
    for (std::size_t i = 0; i < p->factors().size(); ++i)
      parts.push_back(ring_elem_to_json(*p->factors()[i], p->component(a, i)));
    return parts;
  }
  if (const auto* g = dynamic_cast<const GeneratedRing*>(&ring)) return ring_elem_to_json(*g->parent(), a);
  return to_json(Vector(a));
}

Json to_json(const RegularityReport& r, const StarRing& ring) {
  auto opt = [&](const std::optional<RingElem>& x) { return x ? ring_elem_to_json(ring, *x) : Json(nullptr); };
  return Json{{"ring", ring.describe()},
              {"size", ring.size()},
              {"regular", r.regular},
              {"proper", r.proper},
              {"star_regular", r.star_regular},
              {"has_rank1_projection", r.has_rank1_projection},
              {"improper_witness", opt(r.improper_witness)},
              {"irregular_witness", opt(r.irregular_witness)},
              {"rank1_projection", opt(r.rank1_projection)}};
}

Json to_json(const FieldEmbedding& e) {
  Json map = Json::array();
  for (auto x : e.map) map.push_back(code(x));
  return Json{{"source", to_json(e.source)}, {"target", to_json(e.target)}, {"map", map}};
}

Json to_json(const EmbeddingReport& r) {
  Json ring{{"source", r.ring.source->describe()},
            {"target", r.ring.target->describe()},
            {"star_hom", r.ring_check.is_star_hom},
            {"injective", r.ring_check.injective},
            {"exhaustive", r.ring_check.exhaustive}};
  if (!r.ring_check.failure.empty()) ring["failure"] = r.ring_check.failure;
  if (r.ring.source->size() <= 4096) {
    Json table = Json::array();
    for (const auto& a : r.ring.source->carrier())
      table.push_back({ring_elem_to_json(*r.ring.source, a), ring_elem_to_json(*r.ring.target, r.ring(a))});
    ring["map"] = table;
  }
  Json lattice{{"source", to_json(r.source_lattice)},
               {"target_size", r.target_lattice.size()},
               {"map", r.lattice_map},
               {"galois_hom", r.lattice_check.is_galois_hom},
               {"injective", r.lattice_check.injective}};
  if (!r.lattice_check.failure.empty()) lattice["failure"] = r.lattice_check.failure;
  return Json{{"ring", ring}, {"lattice", lattice}, {"ok", r.ok}};
}

Json to_json(const PolaritySearchReport& r) {
  Json out{{"budget", r.budget},
           {"tried", r.tried},
           {"distinct", r.distinct},
           {"complemented", r.complemented},
           {"exhausted", r.exhausted}};
  out["generators"] = r.generators ? Json(*r.generators) : Json(nullptr);
  out["subalgebra"] = r.subalgebra ? Json(*r.subalgebra) : Json(nullptr);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("write to " + path + " failed");
}

}  // namespace hermilat
