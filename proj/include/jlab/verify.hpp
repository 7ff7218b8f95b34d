#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace jlab::verify {

struct CheckResult {
  std::string id;  // "A1".."A9" for acceptance criteria, "I.<name>" for invariants
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Check {
  std::string id;
  std::string name;
  std::function<CheckResult()> run;
};

// Fixed seeds and tolerances used by the checks.
inline constexpr std::uint64_t kFamilySeed = 0x5eed0004ULL;
inline constexpr std::uint64_t kChernoffSeed = 0x5eed0006ULL;
inline constexpr std::uint64_t kEdgeRatioSeed = 0x5eed0007ULL;
inline constexpr std::uint64_t kSweepSeed = 0x5eed0008ULL;
inline constexpr std::uint64_t kRandomGraphSeed = 0x5eed0009ULL;
inline constexpr std::uint64_t kSweepTrials = 1000;

// Pinned regression values.
inline constexpr double kGoldenBestC4 = 0.046875;  // 3/64 at (n, i) = (8, 8)
inline constexpr double kGoldenBestC5 = 0.004;     // 1/250 at (n, i) = (10, 10)
inline constexpr double kEdgeBandLo = 3.0;  // measured 3.194 .. 4.320
inline constexpr double kEdgeBandHi = 4.5;

// Every acceptance criterion, in order.
std::vector<Check> acceptance_checks();

// Property checks beyond the acceptance criteria.
std::vector<Check> invariant_checks();

// The sweep whose CSV is pinned by acceptance criterion 8.
std::string petersen_sweep_csv(unsigned threads = 0);

// Runs the checks, printing "PASS|FAIL <id> <name>: <detail>" per check to `out`.
// Returns true iff all pass.
bool run_checks(const std::vector<Check>& checks, std::ostream& out);

}  // namespace jlab::verify
