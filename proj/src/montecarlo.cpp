#include "jlab/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jlab/bounds.hpp"
#include "jlab/errors.hpp"
#include "jlab/parallel.hpp"
#include "jlab/rng.hpp"
#include "jlab/version.hpp"

namespace jlab {
namespace {

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::uint64_t star_target(const JohnsonParams& params) {
  return binomial_u64(params.n - params.s - 1, params.r - params.s - 1);
}

DenseGraph checked_full(const JohnsonParams& params, const BatchOptions& options) {
  params.validate();
  DenseGraph full = build_full(params, options.vertex_budget, options.threads);
  const auto star = star_vertices(params);
  if (!is_independent(full, star)) throw ContractViolation("monte carlo: star S_{1..s+1} is not independent");
  if (star.size() != star_target(params)) throw ContractViolation("monte carlo: star size differs from the target");
  return full;
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("monte carlo: p must lie in [0, 1]");
}

TrialResult run_trial(const DenseGraph& full, double p, std::uint64_t master_seed, std::uint64_t t,
                      std::uint64_t target, const BatchOptions& options, bool record_alpha) {
  TrialResult tr;
  tr.index = t;
  tr.seed = rng::derive_seed(master_seed, t);
  const DenseGraph g = sample_subgraph(full, p, tr.seed, 1);
  if (record_alpha) {
    const MisResult mis = max_independent_set(g, options.budget);
    tr.solver_nodes = mis.nodes_explored;
    if (mis.optimal) {
      tr.alpha = mis.alpha;
      tr.exceeds_target = mis.alpha > target ? Decision::yes : Decision::no;
    } else {
      tr.exceeds_target = mis.alpha > target ? Decision::yes : Decision::unknown;
    }
  } else {
    const DecisionResult d = alpha_at_least(g, target + 1, options.budget);
    tr.solver_nodes = d.nodes_explored;
    tr.exceeds_target = d.decision;
  }
  return tr;
}

void summarize(TrialBatch& b) {
  b.successes = 0;
  b.unknowns = 0;
  for (const auto& tr : b.results) {
    if (tr.exceeds_target == Decision::no) ++b.successes;
    if (tr.exceeds_target == Decision::unknown) ++b.unknowns;
  }
  b.success_rate = b.trials ? static_cast<double>(b.successes) / static_cast<double>(b.trials) : 0.0;
  b.unknown_rate = b.trials ? static_cast<double>(b.unknowns) / static_cast<double>(b.trials) : 0.0;
  b.ci = wilson95(b.successes, b.trials);
}

std::string csv_row(const TrialBatch& b) {
  std::ostringstream os;
  os << b.params.n << ',' << b.params.r << ',' << b.params.s << ',' << shortest(b.p) << ',' << b.trials << ','
     << b.successes << ',' << b.unknowns << ',' << shortest(b.success_rate) << ',' << shortest(b.ci.lo) << ','
     << shortest(b.ci.hi) << ',' << b.master_seed << '\n';
  return os.str();
}

constexpr const char* kColumns = "n,r,s,p,trials,successes,unknowns,rate,ci_lo,ci_hi,master_seed\n";

}  // namespace

WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (ph + z2 / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt)) / denom;
  // The exact endpoints at 0 and at trials successes are 0 and 1.
  return {successes == 0 ? 0.0 : std::max(0.0, center - half), successes == trials ? 1.0 : std::min(1.0, center + half)};
}

TrialBatch run_batch(const JohnsonParams& params, double p, std::uint64_t trials, std::uint64_t master_seed,
                     const BatchOptions& options) {
  check_p(p);
  const DenseGraph full = checked_full(params, options);
  TrialBatch b;
  b.params = params;
  b.p = p;
  b.trials = trials;
  b.master_seed = master_seed;
  b.target = star_target(params);
  b.results.resize(trials);
  parallel_for(trials, options.threads, [&](std::size_t t) {
    b.results[t] = run_trial(full, p, master_seed, t, b.target, options, options.record_alpha);
  });
  summarize(b);
  return b;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(k / 10.0);
  return grid;
}

SweepResult sweep(const JohnsonParams& params, std::vector<double> p_grid, std::uint64_t trials,
                  std::uint64_t master_seed, const BatchOptions& options) {
  for (double p : p_grid) check_p(p);
  std::sort(p_grid.begin(), p_grid.end());
  p_grid.erase(std::unique(p_grid.begin(), p_grid.end()), p_grid.end());
  const DenseGraph full = checked_full(params, options);

  SweepResult sw;
  sw.params = params;
  sw.p_grid = p_grid;
  sw.trials = trials;
  sw.master_seed = master_seed;
  if (params.s == 0 && params.n >= 2 * params.r + 1) sw.p0 = p0_threshold(params.n, params.r);
  const std::uint64_t target = star_target(params);
  sw.batches.resize(p_grid.size());
  for (std::size_t k = 0; k < p_grid.size(); ++k) {
    auto& b = sw.batches[k];
    b.params = params;
    b.p = p_grid[k];
    b.trials = trials;
    b.master_seed = master_seed;
    b.target = target;
    b.results.resize(trials);
  }
  std::vector<std::uint64_t> violations(trials, 0), checks(trials, 0);
  parallel_for(trials, options.threads, [&](std::size_t t) {
    std::optional<std::size_t> prev;
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
      auto tr = run_trial(full, p_grid[k], master_seed, t, target, options, true);
      if (prev && tr.alpha) {
        ++checks[t];
        if (*tr.alpha > *prev) ++violations[t];
      }
      if (tr.alpha) prev = tr.alpha;
      sw.batches[k].results[t] = std::move(tr);
    }
  });
  for (std::size_t t = 0; t < trials; ++t) {
    sw.monotonicity_checks += checks[t];
    sw.monotonicity_violations += violations[t];
  }
  for (auto& b : sw.batches) summarize(b);
  for (std::size_t k = 1; k < sw.batches.size(); ++k) {
    if (sw.batches[k].ci.hi < sw.batches[k - 1].ci.lo) sw.rate_non_decreasing = false;
  }
  return sw;
}

std::string to_csv(const SweepResult& sw) {
  std::ostringstream os;
  os << "# jlab " << kVersion << " mc sweep n=" << sw.params.n << " r=" << sw.params.r << " s=" << sw.params.s
     << " trials=" << sw.trials << " master_seed=" << sw.master_seed << " stream=" << rng::kStreamName
     << " p0=" << (sw.p0 ? shortest(*sw.p0) : std::string("-")) << '\n';
  os << kColumns;
  for (const auto& b : sw.batches) os << csv_row(b);
  return os.str();
}

std::string to_csv(const TrialBatch& b) {
  std::ostringstream os;
  os << "# jlab " << kVersion << " mc run n=" << b.params.n << " r=" << b.params.r << " s=" << b.params.s
     << " p=" << shortest(b.p) << " trials=" << b.trials << " master_seed=" << b.master_seed
     << " stream=" << rng::kStreamName << '\n';
  os << kColumns << csv_row(b);
  return os.str();
}

nlohmann::json to_json(const TrialBatch& b, bool per_trial) {
  nlohmann::json j{{"n", b.params.n},
                   {"r", b.params.r},
                   {"s", b.params.s},
                   {"p", b.p},
                   {"trials", b.trials},
                   {"master_seed", b.master_seed},
                   {"target", b.target},
                   {"successes", b.successes},
                   {"unknowns", b.unknowns},
                   {"rate", b.success_rate},
                   {"unknown_rate", b.unknown_rate},
                   {"ci_lo", b.ci.lo},
                   {"ci_hi", b.ci.hi}};
  if (per_trial) {
    auto& arr = j["per_trial"] = nlohmann::json::array();
    for (const auto& tr : b.results) {
      nlohmann::json e{{"index", tr.index},
                       {"seed", tr.seed},
                       {"exceeds_target", to_string(tr.exceeds_target)},
                       {"solver_nodes", tr.solver_nodes}};
      e["alpha"] = tr.alpha ? nlohmann::json(*tr.alpha) : nlohmann::json(nullptr);
      arr.push_back(std::move(e));
    }
  }
  return j;
}

nlohmann::json to_json(const SweepResult& sw, bool per_trial) {
  nlohmann::json j{{"version", kVersion},
                   {"stream", rng::kStreamName},
                   {"n", sw.params.n},
                   {"r", sw.params.r},
                   {"s", sw.params.s},
                   {"trials", sw.trials},
                   {"master_seed", sw.master_seed},
                   {"monotonicity_checks", sw.monotonicity_checks},
                   {"monotonicity_violations", sw.monotonicity_violations},
                   {"rate_non_decreasing", sw.rate_non_decreasing}};
  j["p0"] = sw.p0 ? nlohmann::json(*sw.p0) : nlohmann::json(nullptr);
  auto& rows = j["batches"] = nlohmann::json::array();
  for (const auto& b : sw.batches) rows.push_back(to_json(b, per_trial));
  return j;
}

}  // namespace jlab
