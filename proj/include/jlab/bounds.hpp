#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jlab/combinatorics.hpp"
#include "jlab/logreal.hpp"

namespace jlab {

enum class Relation { le, lt, ge, gt };
const char* to_string(Relation rel);

/// One evaluated inequality "lhs REL rhs" with both sides in the log domain.
struct BoundReport {
  std::string name;
  std::map<std::string, double> params;
  std::map<std::string, std::string> exact;  // exact integer values, decimal strings
  LogReal lhs;
  LogReal rhs;
  Relation relation = Relation::le;
  double margin = 0.0;  // log-domain slack, positive when strictly satisfied (0 when both sides are 0)
  bool satisfied = false;
};

BoundReport make_report(std::string name, std::map<std::string, double> params, LogReal lhs, LogReal rhs, Relation rel);

nlohmann::json to_json(const BoundReport& report);
std::string csv_header();
std::string csv_row(const BoundReport& report);

enum class LogBase { natural, two };

// Every constant the lab leaves free. Unset fields are derived by resolve_constants.
struct LabConstants {
  std::optional<double> c;              // difference-of-binomials constant
  std::optional<double> c2;             // large-i regime constant
  std::optional<double> c0;             // edge-count constant, e(L) >= c0 l^2 / n
  std::optional<double> alpha;          // exponent constant of the x-summand
  std::optional<double> epsilon;        // x < epsilon n^(r-2)
  std::optional<double> epsilon_prime;  // i(X) < epsilon' n; must equal (c/2)^(1/(r-3))
  std::optional<double> c_tilde;        // i(X) > c~ n^((r-3)/(r-1))
  std::optional<double> t0;             // in (1/2, 1)
  LogBase log_base = LogBase::natural;
  double chernoff_rate = 1.0 / 156.0;

  // Keys: c, c2, c0, alpha, epsilon, epsilon_prime, c_tilde, t0, log_base ("e" | "2"),
  // chernoff_rate. Unknown keys are a ConfigError.
  static LabConstants from_json(const nlohmann::json& j);
  static LabConstants load(const std::filesystem::path& path);
};

struct ResolvedConstants {
  int r = 0;
  double c = 0, c2 = 0, c0 = 0, alpha = 0, epsilon = 0, epsilon_prime = 0, c_tilde = 0, t0 = 0;
  LogBase log_base = LogBase::natural;
  double chernoff_rate = 1.0 / 156.0;
};

// Defaults for r:
//   c        = lemma_tech_best_c(r, 2r, 200, all i)
//   c2       = lemma_tech_c2(r, 2r, 200)
//   c0       = smallest e(L) n / l^2 over edge_ratio_sweep(r, 20, 60) (20..40 for r >= 5)
//   alpha    = 2r / ln 2   (n^2 * binom(binom(n-2,r-2), x-1) * binom(binom(i,r), x) <= n^(2r x) = 2^(alpha x ln n))
//   epsilon' = (c/2)^(1/(r-3))
//   epsilon  = c * epsilon'   (so that c i n^(r-3) < epsilon n^(r-2) <=> i < epsilon' n)
//   t0       = (1 - epsilon (r-2)!)^(1/(r-2))   (leading-order solution of x_cap = epsilon n^(r-2))
//   c~       = (c r!)^(1/(r-1))   (from c i n^(r-3) < binom(i, r) <= i^r / r!)
// Throws ConfigError for r < 4, t0 outside (1/2, 1), non-positive constants,
// or an epsilon' that does not match (c/2)^(1/(r-3)) to 1e-9 relative.
ResolvedConstants resolve_constants(const LabConstants& given, int r);

nlohmann::json to_json(const ResolvedConstants& k);

// ---- difference of binomials --------------------------------------------

// binom(n-r-1, r-2) - binom(n-r-1-i, r-2).
BigInt lemma_tech_lhs(long long n, long long r, long long i);

// lhs >= c * i * n^(r-3). Throws PreconditionError unless 0 <= i <= n, n >= 2r - 4, r >= 3.
BoundReport lemma_tech_margin(long long n, long long r, long long i, double c);

enum class IPolicy { all, below_half, at_least_half };

struct BestC {
  double c = 0.0;  // min over the grid of lhs / (i n^(r-3)), i >= 1
  long long argmin_n = 0;
  long long argmin_i = 0;
};

BestC lemma_tech_best_c(long long r, long long n_lo, long long n_hi, IPolicy policy = IPolicy::all);

// Small-i regime: lhs >= i * binom(n-r-i-1, r-3) (two leading Vandermonde terms), exact.
bool lemma_tech_truncation_holds(long long n, long long r, long long i);

// Large-i regime: 1 - max over n in [n_lo, n_hi], n/2 <= i <= n of
// binom(n-r-1-i, r-2) / binom(n-r-1, r-2).
double lemma_tech_c2(long long r, long long n_lo, long long n_hi);

// ---- Chernoff --------------------------------------------------------------

// exp(-delta^2 mu / (2 + delta)). Throws std::invalid_argument for mu < 0 or delta < 0.
LogReal chernoff_tail(double mu, double delta);

// Fraction of `samples` draws of Bin(trials, p) exceeding (1 + delta) * trials * p.
// Sample k uses the stream keyed by derive_seed(seed, k); p = 1/2 counts set
// bits of whole random words.
double binomial_tail_empirical(int trials, double p, double delta, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

struct RateCheck {
  std::string value;  // exact rational "a/b"
  bool matches_156 = false;
};

// (delta^2 / (2 + delta)) * (1/2) at delta = 1/6, in exact rational arithmetic.
RateCheck recompute_chernoff_rate();

// ---- thresholds and extremal values ----------------------------------------

// 3/4 at n = 2r + 1; log(n binom(n-1, r)) / binom(n-r-1, r-1) for n > 2r + 1.
// Throws PreconditionError for n < 2r + 1.
double p0_threshold(long long n, long long r, LogBase base = LogBase::natural);

struct FranklFurediValue {
  BigInt value;       // binom(n-s-1, r-s-1)
  bool in_regime = true;  // r >= 2s + 1
};

FranklFurediValue frankl_furedi_alpha(long long n, long long r, long long s);

// ---- union bound over Ess(A) ----------------------------------------------

struct UnionBoundTerm {
  long long i = 0;
  BigInt diff;           // binom(n-r-1, r-2) - binom(n-r-1-i, r-2)
  BigInt diff_sum_form;  // sum_{j=1}^{i} binom(n-r-j-1, r-3)
  LogReal term;          // binom(n,2) binom(n,r)^i e^{-rate diff}
  LogReal relaxed;       // e^{2 ln n + i r ln n - rate diff}
};

struct UnionBoundReport {
  long long n = 0;
  long long r = 0;
  double rate = 0.0;
  std::vector<UnionBoundTerm> terms;  // i = 1 .. n-2
  LogReal total;
  LogReal total_sum_form;  // same sum built from diff_sum_form
  LogReal relaxed_total;
  long long argmax_i = 0;
  bool hockey_stick_exact = true;  // diff == diff_sum_form for every i
  bool relaxation_dominates = true;  // term <= relaxed for every i
};

// Throws UnsupportedParameters for r < 4.
UnionBoundReport bipartite_union_bound(long long n, long long r, double rate = 1.0 / 156.0);

struct UnionBoundScan {
  long long r = 0;
  std::vector<long long> grid;
  std::vector<LogReal> totals;
  std::optional<long long> n_star_below_one;   // least grid n with total < 1 from there on
  std::optional<long long> n_star_below_1e3;   // same for total < 1e-3
  bool non_increasing_beyond_n_star = false;   // totals non-increasing from n_star_below_1e3 on
};

// Geometric integer grid from lo to hi inclusive (ratio `factor`, consecutive
// duplicates dropped).
std::vector<long long> geometric_grid(long long lo, long long hi, double factor);

// Default scan grid: geometric_grid(2r, 2000, 1.05).
UnionBoundScan scan_union_bound(long long r, const std::vector<long long>& grid, double rate = 1.0 / 156.0,
                                unsigned threads = 1);

// ---- x-summand over the Turán region ---------------------------------------

struct TuranChainReport {
  long long n = 0;
  long long r = 0;
  ResolvedConstants k;
  long long i_min = 0;  // integer i strictly inside (c~ n^((r-3)/(r-1)), epsilon' n)
  long long i_max = -1;
  std::uint64_t region_points = 0;    // (i, x) pairs in the region
  std::uint64_t chain_violations = 0; // region points with x <= 2 binom(i-2, r-2)
  BigInt x_cap;                       // binom(n-2, r-2) - binom(ceil(t0 n) - 2, r-2)
  bool x_cap_within_epsilon = false;  // x_cap < epsilon n^(r-2)
  double maximizer_ratio = 0.0;       // x* / (c i n^(r-3)), x* = alpha i ln n / (2 c0); i-independent
  bool maximizer_left_of_region = false;
  long long n0 = 0;                   // least n with alpha ln n / (2 c0) < c n^(r-3) for all larger n
  LogReal double_sum;                 // sum over the region of 2^(alpha x ln n - c0 x^2 / i)
  bool double_sum_exact = true;       // false if some i-row was bounded by count * max
  LogReal closing_bound;              // n^(r-1) 2^(-c0 c^2 c~ n^(2r-6+(r-3)/(r-1))), O-term dropped
  std::vector<BoundReport> reports;
};

TuranChainReport turan_chain(long long n, long long r, const ResolvedConstants& k);

// Least integer n >= 3 with alpha ln n / (2 c0) < c n^(r-3) (holds for all larger n when r >= 4).
long long maximizer_crossing_n0(long long r, double alpha, double c, double c0);

// ---- edge density of vertex subsets ----------------------------------------

// ceil(1.2 binom(n, r-2)).
std::uint64_t edge_ratio_subset_size(long long n, long long r);

struct EdgeRatioSample {
  long long n = 0;
  long long r = 0;
  std::uint64_t l = 0;      // ceil(1.2 binom(n, r-2))
  std::uint64_t edges = 0;  // e(L) in G(n, r, 1)
  double ratio = 0.0;       // e(L) n / l^2
};

// Uniform random L of size ceil(1.2 binom(n, r-2)) drawn from the stream
// derive_seed(seed, n); e(L) counted through the implicit predicate.
EdgeRatioSample edge_ratio_sample(long long n, long long r, std::uint64_t seed);

std::vector<EdgeRatioSample> edge_ratio_sweep(long long r, long long n_lo, long long n_hi, std::uint64_t seed,
                                              unsigned threads = 1);

}  // namespace jlab
