// hermilat: command-line front end. Exit codes: 0 success, 1 a
// mathematical check failed, 2 bad input or a size cap.

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"
#include "hermilat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hermilat;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Law> parse_laws(const std::string& list) {
  if (list.empty() || list == "all") return all_laws();
  std::vector<Law> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    const std::string name = list.substr(start, end - start);
    auto law = law_from_string(name);
    if (!law) throw Error(ErrorCode::ParseError, "unknown law '" + name + "'");
    out.push_back(*law);
    start = end + 1;
  }
  return out;
}

// A spec file holds a space ({"field", "gram"}) or a lattice ({"elements", ...}).
bool is_lattice_spec(const Json& j) { return j.is_object() && j.contains("elements"); }

Json laws_json(const Lattice& l, const std::vector<Law>& laws, std::uint64_t seed, bool& all_pass) {
  LawOptions opt;
  opt.seed = seed;
  Json out = Json::array();
  for (const auto& r : check_laws(l, laws, opt)) {
    all_pass = all_pass && r.pass;
    out.push_back(to_json(r));
  }
  return out;
}

int field_info(const std::string& spec, std::uint32_t p, std::uint32_t k, const std::string& involution) {
  InvolutiveField f = !spec.empty() ? field_from_json(read_json_file(spec))
                                    : InvolutiveField::make(p, k, {}, involution_from_string(involution));
  Json j = to_json(f);
  j["order"] = f.order();
  j["description"] = f.describe();
  Json fixed = Json::array();
  for (std::uint32_t x = 0; x < f.order(); ++x)
    if (f.star(elem(x)) == elem(x)) fixed.push_back(x);
  j["fixed_field_order"] = fixed.size();
  if (f.order() <= 64) {
    Json star = Json::array();
    for (std::uint32_t x = 0; x < f.order(); ++x) star.push_back(code(f.star(elem(x))));
    j["star"] = star;
  }
  emit(j);
  return 0;
}

int space_check(const std::string& spec) {
  const GramSpace s = space_from_json(read_json_file(spec));
  Json j = to_json(s.classification());
  j["field"] = s.field().describe();
  j["dim"] = s.dim();
  emit(j);
  return 0;
}

int lattice_build(const std::string& spec, const std::string& out, const std::string& dot, const std::string& laws,
                  std::uint64_t seed) {
  const Json in = read_json_file(spec);
  const Lattice l = is_lattice_spec(in) ? lattice_from_json(in) : lattice_of_space(space_from_json(in)).lattice;
  const std::string text = to_json(l).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  if (!dot.empty()) write_text_file(dot, l.to_dot());
  Json summary{{"elements", l.size()}, {"dimension", l.dimension()}};
  bool pass = true;
  if (!laws.empty()) summary["laws"] = laws_json(l, parse_laws(laws), seed, pass);
  if (!out.empty() || !laws.empty()) emit(summary);
  return pass ? 0 : 1;
}

int lattice_verify(const std::string& spec, const std::string& laws, std::uint64_t seed) {
  const Json in = read_json_file(spec);
  const Lattice l = is_lattice_spec(in) ? lattice_from_json(in) : lattice_of_space(space_from_json(in)).lattice;
  bool pass = true;
  Json j{{"elements", l.size()}, {"laws", laws_json(l, parse_laws(laws), seed, pass)}};
  if (l.size() <= kMaxCongruenceLattice) {
    const auto cr = congruences(l);
    j["congruences"] = Json{{"count", cr.all.size()}, {"simple", cr.simple}, {"strict_simple", cr.strict_simple},
                            {"sdi", cr.sdi}, {"strict_sdi", cr.strict_sdi}};
  }
  j["pass"] = pass;
  emit(j);
  return pass ? 0 : 1;
}

int ring_build(const std::string& spec, const std::string& out) {
  const GramSpace s = space_from_json(read_json_file(spec));
  if (!within_cap(saturating_pow(s.field().order(), s.dim() * s.dim()), kMaxCarrier, "matrix ring carrier"))
    throw Error(ErrorCode::EnumerationCap, "End(V) has more than 2^20 elements");
  auto ring = MatrixRing::make(s);
  Json j = to_json(regularity_report(*ring), *ring);
  const auto rl = lattice_of_ring(*ring);
  j["principal_right_ideals"] = rl.lattice.size();
  const auto lrep = lrep_check(s);
  j["lrep_isomorphism"] = lrep.ok;
  if (!out.empty()) write_text_file(out, to_json(rl.lattice).dump(2) + "\n");
  emit(j);
  return lrep.ok ? 0 : 1;
}

int verify_suite(const std::string& grid_file, const std::string& out, bool timings) {
  const Grid grid = grid_file.empty() ? default_grid() : grid_from_json(read_json_file(grid_file));
  SuiteOptions opt;
  opt.timings = timings;
  const auto report = run_suite(grid, opt);
  for (const auto& c : report.checks) {
    std::cout << to_string(c.status) << " " << c.id << ": " << c.summary << "\n";
    if (c.status == CheckStatus::Fail && c.witness) std::cout << "  witness " << c.witness->dump() << "\n";
  }
  if (!out.empty()) write_text_file(out, to_json(report).dump(2) + "\n");
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::SkippedCap) return 2;
  return report.all_pass() ? 0 : 1;
}

int enumerate(std::uint32_t p, std::uint32_t k, const std::string& involution, std::size_t dim,
              const std::string& mode, std::uint64_t seed, std::size_t count) {
  const InvolutiveField f = InvolutiveField::make(p, k, {}, involution_from_string(involution));
  std::vector<GramSpace> spaces;
  if (mode == "exhaustive") {
    spaces = enumerate_spaces(f, dim);
    if (count > 0 && spaces.size() > count) spaces.erase(spaces.begin() + static_cast<std::ptrdiff_t>(count), spaces.end());
  } else if (mode == "sample") {
    std::cerr << "seed " << seed << "\n";
    spaces = sample_spaces(f, dim, count == 0 ? 1 : count, seed);
  } else {
    throw Error(ErrorCode::ParseError, "mode must be exhaustive or sample");
  }
  for (const auto& s : spaces) {
    Json j = to_json(s);
    j["class"] = to_json(s.classification());
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int explore_polarity(const std::string& spec, std::uint64_t budget) {
  const Json in = read_json_file(spec);
  const auto r = is_lattice_spec(in) ? polarity_subalgebra_search(lattice_from_json(in), budget)
                                     : polarity_subalgebra_search(space_from_json(in), budget);
  emit(to_json(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite sesquilinear spaces, their endomorphism rings and subspace lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // --force-cap may follow the verb
  bool force_cap = false;
  app.add_flag("--force-cap", force_cap, "Lift size caps (also HERMILAT_CAP_OVERRIDE=1)");

  std::string spec, out, dot, laws, involution = "identity", mode = "exhaustive", grid;
  std::uint32_t p = 2, k = 1;
  std::size_t dim = 2, count = 0;
  std::uint64_t seed = 20240611, budget = 100000;
  bool timings = false;
  std::function<int()> action;

  auto* field = app.add_subcommand("field", "Field operations")->require_subcommand(1);
  auto* finfo = field->add_subcommand("info", "Describe a field");
  finfo->add_option("--spec", spec, "Field JSON");
  finfo->add_option("--p", p);
  finfo->add_option("--k", k);
  finfo->add_option("--involution", involution);
  finfo->callback([&] { action = [&] { return field_info(spec, p, k, involution); }; });

  auto* space = app.add_subcommand("space", "Space operations")->require_subcommand(1);
  auto* scheck = space->add_subcommand("check", "Classify a space");
  scheck->add_option("--spec", spec, "Space JSON")->required();
  scheck->callback([&] { action = [&] { return space_check(spec); }; });

  auto* lattice = app.add_subcommand("lattice", "Lattice operations")->require_subcommand(1);
  auto* lbuild = lattice->add_subcommand("build", "Build the subspace lattice of a space");
  lbuild->add_option("--spec", spec, "Space or lattice JSON")->required();
  lbuild->add_option("--out", out, "Lattice JSON output");
  lbuild->add_option("--dot", dot, "Hasse diagram output");
  lbuild->add_option("--laws", laws, "Comma-separated laws to check, or all");
  lbuild->add_option("--seed", seed, "Seed for sampled laws");
  lbuild->callback([&] { action = [&] { return lattice_build(spec, out, dot, laws, seed); }; });
  auto* lverify = lattice->add_subcommand("verify", "Check laws and congruences");
  lverify->add_option("--spec", spec, "Space or lattice JSON")->required();
  lverify->add_option("--laws", laws, "Comma-separated laws to check, or all");
  lverify->add_option("--seed", seed, "Seed for sampled laws");
  lverify->callback([&] { action = [&] { return lattice_verify(spec, laws, seed); }; });

  auto* ring = app.add_subcommand("ring", "Ring operations")->require_subcommand(1);
  auto* rbuild = ring->add_subcommand("build", "Regularity and right ideals of End(V)");
  rbuild->add_option("--spec", spec, "Space JSON")->required();
  rbuild->add_option("--out", out, "Ring lattice JSON output");
  rbuild->callback([&] { action = [&] { return ring_build(spec, out); }; });

  auto* verify = app.add_subcommand("verify", "Verification")->require_subcommand(1);
  auto* vsuite = verify->add_subcommand("suite", "Run the acceptance suite");
  vsuite->add_option("--spec,--grid", grid, "Grid JSON (default grid when omitted)");
  vsuite->add_option("--out", out, "Report JSON output");
  vsuite->add_flag("--timings", timings, "Record wall time per check");
  vsuite->callback([&] { action = [&] { return verify_suite(grid, out, timings); }; });

  auto* en = app.add_subcommand("enumerate", "Stream nondegenerate orthosymmetric spaces as JSON lines");
  en->add_option("--p", p)->required();
  en->add_option("--k", k);
  en->add_option("--involution", involution);
  en->add_option("--dim", dim)->required();
  en->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  en->add_option("--seed", seed);
  en->add_option("--count", count, "Limit (exhaustive) or sample size");
  en->callback([&] { action = [&] { return enumerate(p, k, involution, dim, mode, seed, count); }; });

  auto* explore = app.add_subcommand("explore", "Exploration")->require_subcommand(1);
  auto* polar = explore->add_subcommand("polarity-subalgebras", "Search complemented non-polarity subalgebras");
  polar->add_option("--spec", spec, "Space or lattice JSON")->required();
  polar->add_option("--budget", budget, "Generator sets to try");
  polar->callback([&] { action = [&] { return explore_polarity(spec, budget); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  if (force_cap) set_force_caps(true);
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 2;
  }
}
