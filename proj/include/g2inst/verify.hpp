#pragma once

// One-shot rerun of every finite check, collected into a manifest.

#include <cstdint>
#include <string>
#include <vector>

#include "g2inst/census.hpp"
#include "g2inst/report.hpp"

namespace g2inst {

inline constexpr const char* kVersion = "0.1.0";

enum class ClaimStatus { pass, fail, flagged };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string description;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::fail;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

enum class VerifyMode { both, free, constrained };
std::string to_string(VerifyMode m);
VerifyMode verify_mode_from_string(const std::string& text);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::both;
  std::size_t samples = 1000;
  std::string command_line;
};

struct RunManifest {
  std::string version = kVersion;
  std::string command_line;
  VerifyOptions options;
  std::vector<Claim> claims;
  std::vector<StageTiming> timings;
  Json sections = Json::object();  // g2, group, census_free, census_constrained, symmetry, index
  std::vector<PackedAssignment> orbit_representatives;

  /// No claim with status fail.
  bool success() const;
  int exit_code() const { return success() ? 0 : 1; }
  /// FNV-1a of the JSON without manifest.timings and the hash itself.
  std::uint64_t stability_hash() const;
  Json to_json() const;
};

/// Stages in order: g2 suite, hyperkahler suite, singular set, relations,
/// free census, stabilizer, automorphisms and orbits, index, constrained
/// census. A throwing stage is recorded and only its dependents are skipped.
RunManifest verify_paper(const VerifyOptions& options);

}  // namespace g2inst
