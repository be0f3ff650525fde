#pragma once

#include "hermilat/io.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hermilat {

enum class CheckStatus { Pass, Fail, SkippedCap };

std::string_view to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string_view s);

struct CheckRecord {
  std::string id;      // "c01-orthosymmetry", ...; reports sort by id
  std::string anchor;  // the statement being checked, in words
  CheckStatus status = CheckStatus::Pass;
  std::optional<Json> witness;        // enough to replay a failure
  std::optional<double> seconds;      // only recorded on request
  std::string summary;                // one line for humans
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

/// Every nondegenerate orthosymmetric space on F^n, Gram matrices in index
/// order. Throws EnumerationCap when q^(n^2) exceeds 2^20.
std::vector<GramSpace> enumerate_spaces(const InvolutiveField& f, std::size_t n);
/// `count` spaces drawn by rejection from uniform Gram matrices, seeded.
std::vector<GramSpace> sample_spaces(const InvolutiveField& f, std::size_t n, std::size_t count, std::uint64_t seed);

struct GridEntry {
  InvolutiveField field;
  std::size_t dim = 0;
  bool sampled = false;
  std::size_t count = 0;  // sampled entries only
  std::uint64_t seed = 0;
};

struct Grid {
  std::vector<GridEntry> entries;
  std::uint64_t arguesian_seed = 20240611;
  std::uint64_t arguesian_samples = 1000000;
  std::uint64_t lifting_seed = 7;
  std::size_t lifting_instances = 500;
};

/// GF(2) n <= 3, GF(3) n <= 2 and GF(4) n = 2 (both involutions)
/// exhaustive, plus seeded samples at GF(2) n = 4 and GF(3) n = 3.
Grid default_grid();
Json to_json(const Grid& g);
/// {"exhaustive": [{"field": .., "dim": n}], "sampled": [{"field", "dim",
/// "count", "seed"}], "arguesian_seed", "arguesian_samples", "lifting_seed",
/// "lifting_instances"}; missing keys take the defaults.
Grid grid_from_json(const Json& j);

struct SuiteOptions {
  bool timings = false;
  /// Called after each check with its record, in id order.
  std::function<void(const CheckRecord&)> on_check;
};

/// The fourteen acceptance checks over the grid.
VerificationReport run_suite(const Grid& grid, const SuiteOptions& opt = {});

/// The two lattices used as negative controls.
Lattice pentagon();
/// The four-element Boolean lattice with 0' = 1 and x' = 0 otherwise: a
/// Galois CML that is not a polarity lattice.
Lattice flat_prime_square();

}  // namespace hermilat
