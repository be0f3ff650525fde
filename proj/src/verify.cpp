#include "hermilat/verify.hpp"

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace hermilat {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedCap: return "skipped-cap";
  }
  return "fail";
}

CheckStatus check_status_from_string(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped-cap") return CheckStatus::SkippedCap;
  throw Error(ErrorCode::ParseError, "unknown check status '" + std::string(s) + "'");
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Pass; });
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"id", c.id}, {"anchor", c.anchor}, {"status", std::string(to_string(c.status))}, {"summary", c.summary}};
    if (c.witness) j["witness"] = *c.witness;
    if (c.seconds) j["time"] = *c.seconds;
    checks.push_back(std::move(j));
  }
  return Json{{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.anchor = c.at("anchor").get<std::string>();
      rec.status = check_status_from_string(c.at("status").get<std::string>());
      rec.summary = c.value("summary", std::string());
      if (c.contains("witness")) rec.witness = c["witness"];
      if (c.contains("time")) rec.seconds = c["time"].get<double>();
      r.checks.push_back(std::move(rec));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::vector<GramSpace> enumerate_spaces(const InvolutiveField& f, std::size_t n) {
  const std::uint64_t total = saturating_pow(f.order(), n * n);
  if (!within_cap(total, 1u << 20, "Gram matrix enumeration"))
    throw Error(ErrorCode::EnumerationCap, std::to_string(total) + " Gram matrices exceed 2^20");
  std::vector<GramSpace> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    Matrix g = matrix_from_index(f, i, n, n);
    if (!inverse(f, g)) continue;
    auto s = GramSpace::make(f, g);
    if (s.classification().orthosymmetric) out.push_back(std::move(s));
  }
  return out;
}

std::vector<GramSpace> sample_spaces(const InvolutiveField& f, std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  std::vector<GramSpace> out;
  std::set<Matrix> seen;
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= 1000000)
      throw Error(ErrorCode::EnumerationCap, "no more distinct orthosymmetric Gram matrices found after 10^6 draws");
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = elem(d(rng));
    if (seen.count(g) || !inverse(f, g)) continue;
    auto s = GramSpace::make(f, g);
    if (!s.classification().orthosymmetric) continue;
    seen.insert(g);
    out.push_back(std::move(s));
  }
  return out;
}

Grid default_grid() {
  const auto id = InvolutionKind::Identity;
  Grid g;
  for (std::size_t n = 1; n <= 3; ++n) g.entries.push_back({InvolutiveField::make(2, 1), n});
  for (std::size_t n = 1; n <= 2; ++n) g.entries.push_back({InvolutiveField::make(3, 1), n});
  g.entries.push_back({InvolutiveField::make(2, 2, {}, id), 2});
  g.entries.push_back({InvolutiveField::make(2, 2, {}, InvolutionKind::FrobeniusHalf), 2});
  g.entries.push_back({InvolutiveField::make(2, 1), 4, true, 3, 4});
  g.entries.push_back({InvolutiveField::make(3, 1), 3, true, 3, 3});
  return g;
}

Json to_json(const Grid& g) {
  Json ex = Json::array(), sa = Json::array();
  for (const auto& e : g.entries) {
    if (e.sampled)
      sa.push_back({{"field", to_json(e.field)}, {"dim", e.dim}, {"count", e.count}, {"seed", e.seed}});
    else
      ex.push_back({{"field", to_json(e.field)}, {"dim", e.dim}});
  }
  return Json{{"exhaustive", ex},
              {"sampled", sa},
              {"arguesian_seed", g.arguesian_seed},
              {"arguesian_samples", g.arguesian_samples},
              {"lifting_seed", g.lifting_seed},
              {"lifting_instances", g.lifting_instances}};
}

Grid grid_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "grid must be an object");
  Grid g = default_grid();
  try {
    if (j.contains("exhaustive") || j.contains("sampled")) g.entries.clear();
    if (j.contains("exhaustive"))
      for (const auto& e : j["exhaustive"]) g.entries.push_back({field_from_json(e.at("field")), e.at("dim").get<std::size_t>()});
    if (j.contains("sampled"))
      for (const auto& e : j["sampled"])
        g.entries.push_back({field_from_json(e.at("field")), e.at("dim").get<std::size_t>(), true,
                             e.at("count").get<std::size_t>(), e.value("seed", std::uint64_t{1})});
    g.arguesian_seed = j.value("arguesian_seed", g.arguesian_seed);
    g.arguesian_samples = j.value("arguesian_samples", g.arguesian_samples);
    g.lifting_seed = j.value("lifting_seed", g.lifting_seed);
    g.lifting_instances = j.value("lifting_instances", g.lifting_instances);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed grid: ") + e.what());
  }
  return g;
}

Lattice pentagon() {
  return Lattice::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}, {4, 2, 3, 2, 0},
                              {"0", "a", "b", "c", "1"});
}

Lattice flat_prime_square() {
  return Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 0, 0, 0}, {"0", "a", "b", "1"});
}

namespace {

struct GridSpace {
  GramSpace space;
  std::string origin;  // "GF(2)^3 exhaustive #5" style tag
};

Json space_witness(const GridSpace& g) { return Json{{"space", to_json(g.space)}, {"origin", g.origin}}; }

// Shared state for one suite run: the grid spaces and their lattices.
class Context {
 public:
  explicit Context(const Grid& grid) : grid_(grid) {
    for (const auto& e : grid.entries) {
      const std::string tag = e.field.describe() + "^" + std::to_string(e.dim);
      auto spaces = e.sampled ? sample_spaces(e.field, e.dim, e.count, e.seed) : enumerate_spaces(e.field, e.dim);
      for (std::size_t i = 0; i < spaces.size(); ++i)
        spaces_.push_back({spaces[i], tag + (e.sampled ? " sample(seed " + std::to_string(e.seed) + ") #" : " #") +
                                          std::to_string(i)});
    }
  }

  const Grid& grid() const { return grid_; }
  const std::vector<GridSpace>& spaces() const { return spaces_; }

  const SpaceLattice& lattice(std::size_t i) {
    if (lattices_.size() != spaces_.size()) lattices_.resize(spaces_.size());
    if (!lattices_[i]) lattices_[i] = lattice_of_space(spaces_[i].space);
    return *lattices_[i];
  }

 private:
  const Grid& grid_;
  std::vector<GridSpace> spaces_;
  std::vector<std::optional<SpaceLattice>> lattices_;
};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::optional<Json> witness;

  void fail(Json w, std::string why) {
    if (pass) {
      pass = false;
      witness = std::move(w);
      summary = std::move(why);
    }
  }
};

bool has_epsilon(const InvolutiveField& f, const Matrix& g) {
  // G_ji = eps G_ij^* for all i, j, for a single eps.
  for (std::uint32_t e = 1; e < f.order(); ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < g.rows() && ok; ++i)
      for (std::size_t j = 0; j < g.cols() && ok; ++j) ok = g(j, i) == f.mul(elem(e), f.star(g(i, j)));
    if (ok) return true;
  }
  return false;
}

Outcome c01_orthosymmetry(Context&) {
  Outcome o;
  std::vector<std::pair<InvolutiveField, std::size_t>> universes{
      {InvolutiveField::make(2, 1), 2},
      {InvolutiveField::make(2, 1), 3},
      {InvolutiveField::make(3, 1), 2},
      {InvolutiveField::make(2, 2), 2},
      {InvolutiveField::make(2, 2, {}, InvolutionKind::FrobeniusHalf), 2}};
  std::uint64_t invertible = 0, symmetric = 0;
  for (const auto& [f, n] : universes) {
    const std::uint64_t total = saturating_pow(f.order(), n * n);
    for (std::uint64_t i = 0; i < total; ++i) {
      Matrix g = matrix_from_index(f, i, n, n);
      if (!inverse(f, g)) continue;
      ++invertible;
      const bool by_pairs = orthosymmetric_by_pairs(f, g);
      const bool eps = has_epsilon(f, g);
      symmetric += by_pairs;
      if (by_pairs != eps)
        o.fail(Json{{"field", to_json(f)}, {"gram", to_json(g)}, {"perp_symmetric", by_pairs}, {"epsilon_exists", eps}},
               "perp-symmetry and epsilon-existence disagree");
    }
  }
  if (o.pass)
    o.summary = std::to_string(invertible) + " invertible Gram matrices, " + std::to_string(symmetric) +
                " orthosymmetric, all epsilon-hermitian and no others";
  return o;
}

Outcome c02_polarity_laws(Context& ctx) {
  Outcome o;
  const std::vector<Law> laws{Law::Modular, Law::Complemented, Law::Galois, Law::Polarity, Law::Involution};
  std::uint64_t tuples = 0;
  for (std::size_t i = 0; i < ctx.spaces().size(); ++i) {
    for (const auto& r : check_laws(ctx.lattice(i).lattice, laws)) {
      tuples += r.checked;
      if (!r.pass) {
        Json w = space_witness(ctx.spaces()[i]);
        w["law"] = to_json(r);
        o.fail(std::move(w), to_string(r.law) + " fails on " + ctx.spaces()[i].origin);
      }
    }
  }
  if (o.pass)
    o.summary = std::to_string(ctx.spaces().size()) + " lattices, " + std::to_string(tuples) + " law instances";
  return o;
}

Outcome c03_mol(Context& ctx) {
  Outcome o;
  std::size_t aniso = 0, iso_witnessed = 0;
  for (std::size_t i = 0; i < ctx.spaces().size(); ++i) {
    const auto& s = ctx.spaces()[i];
    const auto r = check_law(ctx.lattice(i).lattice, Law::Ortho);
    const bool an = s.space.classification().anisotropic;
    aniso += an;
    if (!an && !r.pass && !r.witness.empty()) ++iso_witnessed;
    if (r.pass != an) {
      Json w = space_witness(s);
      w["law"] = to_json(r);
      w["anisotropic"] = an;
      o.fail(std::move(w), "xx' = 0 disagrees with anisotropy on " + s.origin);
    }
  }
  if (o.pass)
    o.summary = std::to_string(aniso) + " anisotropic spaces pass xx' = 0; " + std::to_string(iso_witnessed) +
                " isotropic ones fail with a witness";
  return o;
}

Outcome c04_star_regular(Context& ctx) {
  Outcome o;
  auto improper = [](const StarRing& ring, const RingElem& w) {
    return !ring.is_zero(w) && ring.is_zero(ring.mul(ring.star(w), w));
  };
  for (const auto& s : ctx.spaces()) {
    auto ring = MatrixRing::make(s.space);
    const auto r = regularity_report(*ring);
    const bool an = s.space.classification().anisotropic;
    if (!r.regular || r.star_regular != an || (!an && !(r.improper_witness && improper(*ring, *r.improper_witness)))) {
      Json w = space_witness(s);
      w["regularity"] = to_json(r, *ring);
      o.fail(std::move(w), "*-regularity disagrees with anisotropy on " + s.origin);
    }
  }
  // The named instance, whatever the grid: GF(4) I2 with the conjugation.
  const auto gf4 = InvolutiveField::make(2, 2, {}, InvolutionKind::FrobeniusHalf);
  auto ring = MatrixRing::make(GramSpace::make(gf4, Matrix::identity(2)));
  const auto r = regularity_report(*ring);
  Json witness = r.improper_witness ? ring_elem_to_json(*ring, *r.improper_witness) : Json(nullptr);
  if (!r.improper_witness || !improper(*ring, *r.improper_witness))
    o.fail(Json{{"space", "GF(4) I2"}, {"regularity", to_json(r, *ring)}}, "no r != 0 with r*r = 0 in GF(4) I2");
  if (o.pass)
    o.summary = std::to_string(ctx.spaces().size()) + " rings agree with anisotropy; GF(4) I2 witness r = " +
                witness.dump();
  return o;
}

Outcome c05_projections(Context& ctx) {
  Outcome o;
  const auto f2 = InvolutiveField::make(2, 1);
  auto sympl = MatrixRing::make(GramSpace::make(f2, Matrix::from_codes({{0, 1}, {1, 0}})));
  auto ps = projections(*sympl);
  std::vector<RingElem> expect{sympl->zero(), sympl->one()};
  std::sort(expect.begin(), expect.end());
  std::sort(ps.begin(), ps.end());
  if (ps != expect) {
    Json list = Json::array();
    for (const auto& p : ps) list.push_back(ring_elem_to_json(*sympl, p));
    o.fail(Json{{"space", "GF(2) symplectic"}, {"projections", list}}, "GF(2) symplectic has projections besides 0, I");
  }
  const auto f3 = InvolutiveField::make(3, 1);
  auto unit3 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  auto e = find_rank1_projection(*unit3);
  if (!e || unit3->mul(*e, *e) != *e || unit3->star(*e) != *e || rank(f3, unit3->to_matrix(*e)) != 1)
    o.fail(Json{{"space", "GF(3) I2"}}, "no rank-one projection found in GF(3) I2");

  std::size_t alternate = 0;
  for (const auto& s : ctx.spaces()) {
    auto ring = MatrixRing::make(s.space);
    const bool alt = s.space.classification().alternate;
    alternate += alt;
    if (find_rank1_projection(*ring).has_value() == alt)
      o.fail(space_witness(s), std::string(alt ? "alternate space with" : "non-alternate space without") +
                                   " a rank-one projection: " + s.origin);
  }
  if (o.pass)
    o.summary = "GF(2) symplectic projections are {0, I}; GF(3) I2 has one of rank one; " +
                std::to_string(alternate) + " alternate grid spaces have none, the rest have one";
  return o;
}

Outcome c06_summands(Context& ctx) {
  Outcome o;
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < ctx.spaces().size(); ++i) {
    const auto& s = ctx.spaces()[i];
    const auto& f = s.space.field();
    for (const auto& w : ctx.lattice(i).elements) {
      const Subspace u = extend_to_summand(s.space, w);
      ++checked;
      const bool ok = is_subspace_of(f, w, u) && radical_report(s.space, u).summand && u.dim() <= 2 * w.dim();
      if (!ok) {
        Json wj = space_witness(s);
        wj["w"] = to_json(w);
        wj["u"] = to_json(u);
        o.fail(std::move(wj), "summand bound violated on " + s.origin);
      }
    }
  }
  if (o.pass) o.summary = std::to_string(checked) + " subspaces extended within dim U <= 2 dim W";
  return o;
}

Outcome c07_lrep(Context& ctx) {
  Outcome o;
  for (const auto& s : ctx.spaces()) {
    const auto r = lrep_check(s.space);
    if (!r.ok) {
      Json w = space_witness(s);
      w["failure"] = r.check.failure;
      w["order_matches"] = r.order_matches;
      o.fail(std::move(w), "aR -> im a is not an isomorphism on " + s.origin);
    }
  }
  if (o.pass) o.summary = std::to_string(ctx.spaces().size()) + " explicit isomorphisms verified";
  return o;
}

Outcome c08_strictly_simple(Context& ctx) {
  Outcome o;
  LawOptions opt;
  opt.seed = ctx.grid().arguesian_seed;
  opt.samples = ctx.grid().arguesian_samples;
  opt.exhaustive_limit = 16ull * 16 * 16 * 16 * 16 * 16;
  std::size_t exhaustive = 0, sampled = 0;
  for (std::size_t i = 0; i < ctx.spaces().size(); ++i) {
    const auto& s = ctx.spaces()[i];
    const auto& l = ctx.lattice(i).lattice;
    const auto cr = congruences(l);
    if (!cr.simple || !cr.strict_simple || cr.all.size() != (l.size() > 1 ? 2u : 1u)) {
      Json w = space_witness(s);
      w["congruences"] = to_json(cr);
      o.fail(std::move(w), "congruences other than Delta, Nabla on " + s.origin);
    }
    const auto ar = check_law(l, Law::Arguesian, opt);
    (ar.sampled ? sampled : exhaustive)++;
    if (!ar.pass) {
      Json w = space_witness(s);
      w["law"] = to_json(ar);
      o.fail(std::move(w), "Arguesian identity fails on " + s.origin);
    }
  }
  if (o.pass)
    o.summary = std::to_string(ctx.spaces().size()) + " lattices strictly simple; Arguesian exhaustive on " +
                std::to_string(exhaustive) + ", sampled on " + std::to_string(sampled) + " (seed " +
                std::to_string(opt.seed) + ", " + std::to_string(opt.samples) + " tuples)";
  return o;
}

Outcome c09_lifting(Context& ctx) {
  Outcome o;
  const auto f2 = InvolutiveField::make(2, 1);
  const auto f3 = InvolutiveField::make(3, 1);
  auto m22 = MatrixRing::make(GramSpace::make(f2, Matrix::identity(2)));
  auto m32 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(2)));
  auto m31 = MatrixRing::make(GramSpace::make(f3, Matrix::identity(1)));
  const std::vector<std::shared_ptr<const ProductRing>> rings{ProductRing::make({m22, m22}),
                                                              ProductRing::make({m32, m31})};
  std::mt19937_64 rng(ctx.grid().lifting_seed);
  const std::size_t total = ctx.grid().lifting_instances;
  std::size_t done = 0;
  for (std::size_t which = 0; which < rings.size(); ++which) {
    const auto& prod = rings[which];
    const auto& top = prod->factors()[0];
    const auto& rest = prod->factors()[1];
    const RingHom hom = RingHom::projection(prod, 0);
    const auto& carrier = prod->carrier();
    const std::size_t n = which + 1 < rings.size() ? total / rings.size() : total - done;
    for (std::size_t t = 0; t < n; ++t, ++done) {
      const RingElem c = carrier[std::uniform_int_distribution<std::size_t>(0, carrier.size() - 1)(rng)];
      const RingElem a = hom(c);
      std::vector<RingElem> qis;
      for (const auto& x : top->carrier())
        if (top->mul(top->mul(a, x), a) == a) qis.push_back(x);
      const RingElem b = qis[std::uniform_int_distribution<std::size_t>(0, qis.size() - 1)(rng)];
      const auto& rc = rest->carrier();
      const RingElem y = prod->join({b, rc[std::uniform_int_distribution<std::size_t>(0, rc.size() - 1)(rng)]});
      const RingElem d = lift_quasi_inverse(hom, a, b, c, y);
      if (prod->mul(prod->mul(c, d), c) != c || hom(d) != b)
        o.fail(Json{{"ring", prod->describe()},
                    {"instance", done},
                    {"seed", ctx.grid().lifting_seed},
                    {"c", ring_elem_to_json(*prod, c)},
                    {"b", ring_elem_to_json(*top, b)},
                    {"y", ring_elem_to_json(*prod, y)},
                    {"d", ring_elem_to_json(*prod, d)}},
               "lifted d fails cdc = c or hom(d) = b");
    }
  }
  if (o.pass)
    o.summary = std::to_string(done) + " instances (seed " + std::to_string(ctx.grid().lifting_seed) +
                ") satisfy cdc = c and hom(d) = b";
  return o;
}

Outcome c10_reconstruction(Context& ctx) {
  Outcome o;
  std::size_t projection_case = 0, alternate_case = 0, similar = 0, ring_iso = 0;
  for (const auto& s : ctx.spaces()) {
    const std::size_t n = s.space.dim();
    if (n > 3) continue;
    auto ring = MatrixRing::make(s.space);
    auto e = find_rank1_projection(*ring);
    if (!e) e = find_rank1_null_idempotent(*ring);
    if (!e) {
      o.fail(space_witness(s), "no rank-one projection or null idempotent on " + s.origin);
      continue;
    }
    const auto rec = reconstruct_space(ring, *e);
    (rec.which == ReconstructionCase::Projection ? projection_case : alternate_case)++;
    if (!rec.rep_verified) {
      Json w = space_witness(s);
      w["e"] = ring_elem_to_json(*ring, *e);
      o.fail(std::move(w), "the representation on Re is not a *-isomorphism for " + s.origin);
      continue;
    }
    if (n <= 2) {
      if (!is_similar(rec.space, s.space)) {
        Json w = space_witness(s);
        w["e"] = ring_elem_to_json(*ring, *e);
        w["rebuilt"] = to_json(rec.space);
        o.fail(std::move(w), "rebuilt space is not similar to " + s.origin);
      } else {
        ++similar;
      }
    } else {
      ++ring_iso;
    }
  }
  if (o.pass && (projection_case == 0 || alternate_case == 0))
    o.fail(Json{{"projection_case", projection_case}, {"alternate_case", alternate_case}},
           "one of the two reconstruction cases was never exercised");
  if (o.pass)
    o.summary = std::to_string(similar) + " spaces rebuilt up to similitude, " + std::to_string(ring_iso) +
                " verified ring isomorphisms at n = 3; cases: " + std::to_string(projection_case) + " projection, " +
                std::to_string(alternate_case) + " alternate";
  return o;
}

Outcome c11_embeddings(Context&) {
  Outcome o;
  const auto f2 = InvolutiveField::make(2, 1);
  const auto f3 = InvolutiveField::make(3, 1);
  auto check = [&](const EmbeddingReport& r, const std::string& name) {
    if (!r.ok || !r.ring_check.exhaustive) {
      Json w = to_json(r);
      w["instance"] = name;
      o.fail(std::move(w), name + ": embedding not verified exhaustively");
    }
  };
  const auto gf9 = InvolutiveField::make(3, 2, {}, InvolutionKind::FrobeniusHalf);
  check(lift_ring_embedding(tensorial_embed(GramSpace::make(f3, Matrix::identity(2)), field_embedding(f3, gf9))),
        "GF(3)->GF(9)");
  const auto gf4 = InvolutiveField::make(2, 2);
  check(lift_ring_embedding(
            tensorial_embed(GramSpace::make(f2, Matrix::from_codes({{0, 1}, {1, 0}})), field_embedding(f2, gf4))),
        "GF(2)->GF(4) symplectic");
  const auto e3 = field_embedding(f3, f3);
  const auto line = GramSpace::make(f3, Matrix::identity(1));
  const auto joint = joint_extension(line, line, e3, e3);
  check(joint.embedding, "GF(3)^1 + GF(3)^1");
  if (o.pass && (joint.embedding.source_lattice.size() != 4 || joint.embedding.target_lattice.size() != 6))
    o.fail(to_json(joint.embedding), "joint extension lattices are not 4 into 6 elements");
  if (o.pass) o.summary = "three instances: injective *-ring and Galois-lattice embeddings, all pairs checked";
  return o;
}

Outcome c12_geometry(Context& ctx) {
  Outcome o;
  for (const auto& s : ctx.spaces()) {
    const auto g = geometry_of_space(s.space);
    const auto rep = geometry_axiom_check(g.geometry);
    if (!rep.ok) {
      Json w = space_witness(s);
      w["axiom"] = rep.violations.front().axiom;
      w["points"] = rep.violations.front().witness;
      o.fail(std::move(w), rep.violations.front().axiom + " fails on " + s.origin);
      continue;
    }
    const auto rt = arg2_roundtrip(s.space);
    if (!rt.ok) {
      Json w = space_witness(s);
      w["failure"] = rt.check.failure;
      w["map"] = rt.map;
      o.fail(std::move(w), "lattice -> geometry -> lattice is not an isomorphism on " + s.origin);
    }
  }
  if (o.pass) o.summary = std::to_string(ctx.spaces().size()) + " geometries satisfy every axiom and round-trip";
  return o;
}

Outcome c13_negative_controls(Context&) {
  Outcome o;
  const auto n5 = check_law(pentagon(), Law::Modular);
  if (n5.pass || n5.witness.size() != 3) o.fail(to_json(n5), "N5 does not fail modularity with a witness");
  const auto flat = flat_prime_square();
  std::vector<std::string> failing;
  Json results = Json::array();
  for (Law law : {Law::Modular, Law::Arguesian, Law::Complemented, Law::Galois, Law::Ortho, Law::Polarity}) {
    const auto r = check_law(flat, law);
    results.push_back(to_json(r));
    if (!r.pass) failing.push_back(to_string(law));
  }
  if (failing != std::vector<std::string>{to_string(Law::Polarity)})
    o.fail(Json{{"lattice", to_json(flat)}, {"results", results}}, "the flat-prime square does not fail exactly polarity");
  if (o.pass)
    o.summary = "N5 fails modularity at (" + std::to_string(n5.witness[0]) + "," + std::to_string(n5.witness[1]) + "," +
                std::to_string(n5.witness[2]) + "); the 4-element Galois CML fails only the polarity check (x'' = x, " +
                "not a Galois CML law, fails too: " + (check_law(flat, Law::Involution).pass ? "no" : "yes") + ")";
  return o;
}

Outcome c14_faithful(Context&) {
  Outcome o;
  const auto l = lattice_of_space(GramSpace::make(InvolutiveField::make(3, 1), Matrix::identity(2))).lattice;
  const Lattice p = product({&l, &l});
  std::vector<std::size_t> m0(p.size()), m1(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    m0[i] = i / l.size();
    m1[i] = i % l.size();
  }
  const LatticeHom e0{&p, &l, m0}, e1{&p, &l, m1};
  const bool both = faithful_family({e0, e1});
  const bool first = faithful_family({e0});
  const bool second = faithful_family({e1});
  if (!both || first || second)
    o.fail(Json{{"both", both}, {"first", first}, {"second", second}},
           "projections of L(GF(3)^2)^2 do not behave as a minimal faithful family");
  if (o.pass) o.summary = "both projections together are faithful, neither alone is";
  return o;
}

struct CheckDef {
  const char* id;
  const char* anchor;
  Outcome (*run)(Context&);
};

const CheckDef kChecks[] = {
    {"c01-orthosymmetry", "perp is symmetric iff the form is epsilon-hermitian for some epsilon", c01_orthosymmetry},
    {"c02-polarity-laws", "L(V) is a modular complemented Galois polarity lattice with x'' = x", c02_polarity_laws},
    {"c03-mol-anisotropic", "L(V) satisfies xx' = 0 iff V is anisotropic", c03_mol},
    {"c04-star-regular", "End(V) is *-regular iff V is anisotropic", c04_star_regular},
    {"c05-rank1-projection", "End(V) has a rank-one projection iff V is not alternate", c05_projections},
    {"c06-summand-bound", "every W lies in an orthogonal summand U with dim U <= 2 dim W", c06_summands},
    {"c07-lrep", "principal right ideals of End(V) form a lattice isomorphic to L(V)", c07_lrep},
    {"c08-strictly-simple", "L(V) is strictly simple and Arguesian", c08_strictly_simple},
    {"c09-quasi-inverse-lift", "quasi-inverses lift along surjections with regular kernel", c09_lifting},
    {"c10-reconstruction", "V is recovered up to similitude from a rank-one idempotent of End(V)", c10_reconstruction},
    {"c11-joint-embeddings", "tensorial embeddings induce *-ring and Galois-lattice embeddings", c11_embeddings},
    {"c12-geometry", "G(V) is an orthogeometry and L is recovered from G(L)", c12_geometry},
    {"c13-negative-controls", "N5 is not modular; a Galois CML need not be a polarity lattice", c13_negative_controls},
    {"c14-faithful-family", "the coordinate projections of a product form a faithful family", c14_faithful},
};

bool cap_error(ErrorCode c) {
  return c == ErrorCode::EnumerationCap || c == ErrorCode::SizeCap || c == ErrorCode::CongruenceCap ||
         c == ErrorCode::Infeasible || c == ErrorCode::DimensionCap || c == ErrorCode::FieldTooLarge;
}

}  // namespace

VerificationReport run_suite(const Grid& grid, const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "hermilat-acceptance";
  std::optional<Context> ctx;
  std::optional<Error> grid_error;
  try {
    ctx.emplace(grid);
  } catch (const Error& e) {
    grid_error = e;
  }
  for (const auto& def : kChecks) {
    CheckRecord rec;
    rec.id = def.id;
    rec.anchor = def.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (grid_error) throw *grid_error;
      Outcome out = def.run(*ctx);
      rec.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
      rec.summary = std::move(out.summary);
      rec.witness = std::move(out.witness);
    } catch (const Error& e) {
      rec.status = cap_error(e.code()) ? CheckStatus::SkippedCap : CheckStatus::Fail;
      rec.summary = e.what();
      rec.witness = Json{{"error", std::string(to_string(e.code()))}, {"detail", e.what()}};
    }
    if (opt.timings)
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.on_check) opt.on_check(rec);
    report.checks.push_back(std::move(rec));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

}  // namespace hermilat
