#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace hermilat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::OddDegreeFrobenius: return "OddDegreeFrobenius";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonSquareGram: return "NonSquareGram";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateSpace: return "DegenerateSpace";
    case ErrorCode::NotOrthosymmetric: return "NotOrthosymmetric";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::EnumerationCap: return "EnumerationCap";
    case ErrorCode::NotRegularElement: return "NotRegularElement";
    case ErrorCode::NotStarRegular: return "NotStarRegular";
    case ErrorCode::NotASummand: return "NotASummand";
    case ErrorCode::KernelNotRegular: return "KernelNotRegular";
    case ErrorCode::PreimageMismatch: return "PreimageMismatch";
    case ErrorCode::BadIdempotent: return "BadIdempotent";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::NotAHom: return "NotAHom";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::CongruenceCap: return "CongruenceCap";
    case ErrorCode::PrimeIncompatibleCongruence: return "PrimeIncompatibleCongruence";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotPolarityCML: return "NotPolarityCML";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::NoCompatibleEmbedding: return "NoCompatibleEmbedding";
    case ErrorCode::EpsilonMismatch: return "EpsilonMismatch";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::atomic<bool> g_force{false};
std::once_flag g_env_once;
std::once_flag g_warn_once;

void read_env() {
  const char* v = std::getenv("HERMILAT_CAP_OVERRIDE");
  if (v != nullptr && *v != '\0' && std::string(v) != "0") g_force = true;
}

}  // namespace

void set_force_caps(bool on) {
  std::call_once(g_env_once, read_env);
  g_force = on || g_force.load();
}

bool caps_forced() {
  std::call_once(g_env_once, read_env);
  return g_force.load();
}

bool within_cap(std::uint64_t value, std::uint64_t cap, const std::string& what) {
  if (value <= cap) return true;
  if (!caps_forced()) return false;
  std::call_once(g_warn_once, [&] {
    std::cerr << "warning: size cap overridden (" << what << ": " << value
              << " > " << cap << ")\n";
  });
  return true;
}

}  // namespace hermilat
