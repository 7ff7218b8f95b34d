#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jlab/graph.hpp"
#include "jlab/solver.hpp"

namespace jlab {

struct TrialResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;                // derive_seed(master_seed, index)
  Decision exceeds_target = Decision::unknown;  // alpha(G_p) >= target + 1
  std::optional<std::size_t> alpha;      // set when alpha was recorded and solved exactly
  std::uint64_t solver_nodes = 0;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// 95% Wilson score interval, z = 1.959963984540054.
WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials);

/// One batch of trials at a fixed p. A trial succeeds when the sampled graph
/// has no independent set larger than the star bound binom(n-s-1, r-s-1);
/// budget exhaustion is counted in `unknowns` and never as a success.
struct TrialBatch {
  JohnsonParams params;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t target = 0;
  std::vector<TrialResult> results;  // ordered by trial index
  std::uint64_t successes = 0;
  std::uint64_t unknowns = 0;
  double success_rate = 0.0;
  double unknown_rate = 0.0;
  WilsonInterval ci;
};

struct BatchOptions {
  SolverBudget budget{50'000'000, 0.0};
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  bool record_alpha = false;
  unsigned threads = 0;  // 0 = default_thread_count()
};

// Throws CapacityError past the vertex budget, std::invalid_argument for p
// outside [0, 1], ContractViolation if the star is not independent in G.
TrialBatch run_batch(const JohnsonParams& params, double p, std::uint64_t trials, std::uint64_t master_seed,
                     const BatchOptions& options = {});

/// Batches over a p-grid sharing every per-edge uniform draw: trial t at each
/// p thresholds the same values, so G_{p1} ⊆ G_{p2} for p1 < p2.
struct SweepResult {
  JohnsonParams params;
  std::vector<double> p_grid;  // ascending
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<TrialBatch> batches;
  std::optional<double> p0;  // threshold formula for s = 0, n >= 2r + 1
  std::uint64_t monotonicity_checks = 0;
  std::uint64_t monotonicity_violations = 0;  // trials where alpha increased with p
  bool rate_non_decreasing = true;            // up to overlapping Wilson intervals
};

// Records alpha for every trial and asserts alpha(p) is non-increasing along
// the grid trial by trial (violations counted, never hidden).
SweepResult sweep(const JohnsonParams& params, std::vector<double> p_grid, std::uint64_t trials,
                  std::uint64_t master_seed, const BatchOptions& options = {});

std::vector<double> default_p_grid();  // 0.1, 0.2, ..., 0.9, 1.0

// CSV with a '#' header line carrying version, configuration and seed, then
// columns n,r,s,p,trials,successes,unknowns,rate,ci_lo,ci_hi,master_seed.
std::string to_csv(const SweepResult& sweep);
std::string to_csv(const TrialBatch& batch);

nlohmann::json to_json(const TrialBatch& batch, bool per_trial);
nlohmann::json to_json(const SweepResult& sweep, bool per_trial);

}  // namespace jlab
