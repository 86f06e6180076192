#pragma once

// The invariant suite behind `dynkin-forge verify`. Every check is
// deterministic for a fixed seed; reports contain counts and the first few
// failing cases, never timings.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dynkin {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // first few failures
  std::string note;

  bool pass() const { return failures == 0 && cases > 0; }
  void record(bool ok, const std::string& what);
};

CheckResult check_root_systems(int max_rank);
CheckResult check_weyl_invariance(int max_rank);
CheckResult check_identification(std::uint64_t seed, int max_rank);
CheckResult check_gradations(int max_rank);
CheckResult check_levi_pieces(int max_rank);
CheckResult check_round_trip(int max_rank);
CheckResult check_enumeration(int max_rank);
CheckResult check_jacobi(std::uint64_t seed, int max_rank, int samples);
CheckResult check_grading_killing(int max_rank);
CheckResult check_nilpotency(std::uint64_t seed, int max_rank);
CheckResult check_generic_pairs(int max_rank);
CheckResult check_orbit_sums(int max_rank);
CheckResult check_open_orbits(std::uint64_t seed, int max_rank, int retries);
CheckResult check_glorbits(std::uint64_t seed);
CheckResult check_twisted();

struct VerifyOptions {
  std::uint64_t seed = 0;
  int max_rank = 8;
  int jacobi_samples = 100000;
  int retries = 16;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int max_rank = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

VerifyReport run_verify(const VerifyOptions& opts);

nlohmann::ordered_json to_json(const CheckResult& c);
nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace dynkin
