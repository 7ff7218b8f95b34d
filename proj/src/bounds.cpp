#include "jlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "jlab/errors.hpp"
#include "jlab/graph.hpp"
#include "jlab/parallel.hpp"
#include "jlab/rng.hpp"

namespace jlab {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int k) {
  double f = 1.0;
  for (int a = 2; a <= k; ++a) f *= a;
  return f;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Log-domain accumulator with a running max shift.
class LogAccumulator {
 public:
  void add(double log_term) {
    if (log_term == -kInf) return;
    if (log_term > top_) {
      sum_ = sum_ * std::exp(top_ - log_term) + 1.0;
      top_ = log_term;
    } else {
      sum_ += std::exp(log_term - top_);
    }
  }
  LogReal value() const { return sum_ == 0.0 ? LogReal{} : LogReal::from_log(top_ + std::log(sum_)); }

 private:
  double top_ = -kInf;
  double sum_ = 0.0;
};

}  // namespace

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

BoundReport make_report(std::string name, std::map<std::string, double> params, LogReal lhs, LogReal rhs, Relation rel) {
  BoundReport rep;
  rep.name = std::move(name);
  rep.params = std::move(params);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.relation = rel;
  switch (rel) {
    case Relation::le: rep.satisfied = lhs <= rhs; break;
    case Relation::lt: rep.satisfied = lhs < rhs; break;
    case Relation::ge: rep.satisfied = lhs >= rhs; break;
    case Relation::gt: rep.satisfied = lhs > rhs; break;
  }
  if (lhs.is_zero() && rhs.is_zero()) {
    rep.margin = 0.0;
  } else if (lhs.sign() >= 0 && rhs.sign() >= 0) {
    const double d = rhs.log_magnitude() - lhs.log_magnitude();
    rep.margin = (rel == Relation::le || rel == Relation::lt) ? d : -d;
  } else {
    const double d = (rhs - lhs).sign() * std::exp((rhs - lhs).log_magnitude());
    rep.margin = (rel == Relation::le || rel == Relation::lt) ? d : -d;
  }
  return rep;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["params"] = report.params;
  if (!report.exact.empty()) j["exact"] = report.exact;
  auto side = [](const LogReal& v) {
    nlohmann::json s;
    s["sign"] = v.sign();
    if (v.is_zero()) {
      s["ln"] = nullptr;
    } else {
      s["ln"] = v.log_magnitude();
    }
    s["value"] = v.to_string(9);
    return s;
  };
  j["lhs"] = side(report.lhs);
  j["rhs"] = side(report.rhs);
  j["relation"] = to_string(report.relation);
  j["margin"] = report.margin;
  j["satisfied"] = report.satisfied;
  return j;
}

std::string csv_header() { return "name,params,lhs,rhs,relation,margin,satisfied"; }

std::string csv_row(const BoundReport& report) {
  std::string params;
  for (const auto& [k, v] : report.params) {
    if (!params.empty()) params += ';';
    params += k + "=" + fmt(v);
  }
  std::ostringstream os;
  os << report.name << ',' << params << ',' << report.lhs.to_string(9) << ',' << report.rhs.to_string(9) << ','
     << to_string(report.relation) << ',' << fmt(report.margin) << ',' << (report.satisfied ? 1 : 0);
  return os.str();
}

// ---- constants ------------------------------------------------------------

LabConstants LabConstants::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("constants: expected a JSON object");
  LabConstants k;
  for (const auto& [key, value] : j.items()) {
    auto number = [&]() {
      if (!value.is_number()) throw ConfigError("constants: '" + key + "' must be a number");
      return value.get<double>();
    };
    if (key == "c") k.c = number();
    else if (key == "c2") k.c2 = number();
    else if (key == "c0") k.c0 = number();
    else if (key == "alpha") k.alpha = number();
    else if (key == "epsilon") k.epsilon = number();
    else if (key == "epsilon_prime") k.epsilon_prime = number();
    else if (key == "c_tilde") k.c_tilde = number();
    else if (key == "t0") k.t0 = number();
    else if (key == "chernoff_rate") k.chernoff_rate = number();
    else if (key == "log_base") {
      const std::string b = value.is_string() ? value.get<std::string>() : value.dump();
      if (b == "e") k.log_base = LogBase::natural;
      else if (b == "2") k.log_base = LogBase::two;
      else throw ConfigError("constants: log_base must be \"e\" or \"2\"");
    } else {
      throw ConfigError("constants: unknown key '" + key + "'");
    }
  }
  return k;
}

LabConstants LabConstants::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("constants: cannot open " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("constants: ") + e.what());
  }
}

ResolvedConstants resolve_constants(const LabConstants& given, int r) {
  if (r < 4) throw ConfigError("constants: the Turan-side constants need r >= 4");
  ResolvedConstants k;
  k.r = r;
  k.log_base = given.log_base;
  k.chernoff_rate = given.chernoff_rate;
  k.c = given.c ? *given.c : lemma_tech_best_c(r, 2 * r, 200).c;
  k.c2 = given.c2 ? *given.c2 : lemma_tech_c2(r, 2 * r, 200);
  if (given.c0) {
    k.c0 = *given.c0;
  } else {
    const auto samples = edge_ratio_sweep(r, 20, r >= 5 ? 40 : 60, 20240601);
    k.c0 = kInf;
    for (const auto& s : samples) k.c0 = std::min(k.c0, s.ratio);
  }
  k.alpha = given.alpha ? *given.alpha : 2.0 * r / kLn2;
  const double expected_eps_prime = std::pow(k.c / 2.0, 1.0 / (r - 3));
  k.epsilon_prime = given.epsilon_prime ? *given.epsilon_prime : expected_eps_prime;
  if (std::fabs(k.epsilon_prime - expected_eps_prime) > 1e-9 * expected_eps_prime) {
    throw ConfigError("constants: epsilon_prime = " + fmt(k.epsilon_prime) + " does not match (c/2)^(1/(r-3)) = " +
                      fmt(expected_eps_prime));
  }
  k.epsilon = given.epsilon ? *given.epsilon : k.c * k.epsilon_prime;
  k.t0 = given.t0 ? *given.t0 : std::pow(1.0 - k.epsilon * factorial(r - 2), 1.0 / (r - 2));
  if (!(k.t0 > 0.5 && k.t0 < 1.0)) throw ConfigError("constants: t0 = " + fmt(k.t0) + " is outside (1/2, 1)");
  k.c_tilde = given.c_tilde ? *given.c_tilde : std::pow(k.c * factorial(r), 1.0 / (r - 1));
  for (double v : {k.c, k.c2, k.c0, k.alpha, k.epsilon, k.epsilon_prime, k.c_tilde, k.chernoff_rate}) {
    if (!(v > 0) || !std::isfinite(v)) throw ConfigError("constants: every constant must be positive and finite");
  }
  return k;
}

nlohmann::json to_json(const ResolvedConstants& k) {
  return {{"r", k.r},           {"c", k.c},
          {"c2", k.c2},         {"c0", k.c0},
          {"alpha", k.alpha},   {"epsilon", k.epsilon},
          {"epsilon_prime", k.epsilon_prime}, {"c_tilde", k.c_tilde},
          {"t0", k.t0},         {"log_base", k.log_base == LogBase::natural ? "e" : "2"},
          {"chernoff_rate", k.chernoff_rate}};
}

// ---- difference of binomials --------------------------------------------

BigInt lemma_tech_lhs(long long n, long long r, long long i) {
  return binomial(n - r - 1, r - 2) - binomial(n - r - 1 - i, r - 2);
}

BoundReport lemma_tech_margin(long long n, long long r, long long i, double c) {
  if (r < 3) throw PreconditionError("lemma_tech: need r >= 3");
  if (i < 0 || i > n) throw PreconditionError("lemma_tech: need 0 <= i <= n");
  if (n < 2 * r - 4) throw PreconditionError("lemma_tech: need n >= 2r - 4");
  const BigInt lhs = lemma_tech_lhs(n, r, i);
  const LogReal rhs = LogReal::from_double(c) * LogReal::from_double(static_cast<double>(i)) *
                      LogReal::from_log((r - 3) * std::log(static_cast<double>(n)));
  auto rep = make_report("lemma_tech", {{"n", double(n)}, {"r", double(r)}, {"i", double(i)}, {"c", c}},
                         LogReal::from_bigint(lhs), rhs, Relation::ge);
  rep.exact["lhs"] = lhs.str();
  return rep;
}

BestC lemma_tech_best_c(long long r, long long n_lo, long long n_hi, IPolicy policy) {
  if (r < 3) throw PreconditionError("lemma_tech_best_c: need r >= 3");
  if (n_lo < 2 * r - 4 || n_hi < n_lo) throw PreconditionError("lemma_tech_best_c: need 2r - 4 <= n_lo <= n_hi");
  BestC best{kInf, 0, 0};
  for (long long n = n_lo; n <= n_hi; ++n) {
    const BigInt top = binomial(n - r - 1, r - 2);
    const double scale = std::pow(static_cast<double>(n), static_cast<double>(r - 3));
    for (long long i = 1; i <= n; ++i) {
      const bool below = 2 * i < n;
      if ((policy == IPolicy::below_half && !below) || (policy == IPolicy::at_least_half && below)) continue;
      const BigInt lhs = top - binomial(n - r - 1 - i, r - 2);
      const double ratio = to_double(lhs) / (static_cast<double>(i) * scale);
      if (ratio < best.c) best = {ratio, n, i};
    }
  }
  return best;
}

bool lemma_tech_truncation_holds(long long n, long long r, long long i) {
  return lemma_tech_lhs(n, r, i) >= BigInt(i) * binomial(n - r - i - 1, r - 3);
}

double lemma_tech_c2(long long r, long long n_lo, long long n_hi) {
  double worst = 0.0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    const BigInt base = binomial(n - r - 1, r - 2);
    if (base == 0) continue;
    for (long long i = (n + 1) / 2; i <= n; ++i) {
      const BigInt tail = binomial(n - r - 1 - i, r - 2);
      if (tail == 0) break;
      worst = std::max(worst, to_double(tail) / to_double(base));
    }
  }
  return 1.0 - worst;
}

// ---- Chernoff --------------------------------------------------------------

LogReal chernoff_tail(double mu, double delta) {
  if (mu < 0 || delta < 0) throw std::invalid_argument("chernoff_tail: need mu >= 0 and delta >= 0");
  return LogReal::from_log(-delta * delta * mu / (2.0 + delta));
}

double binomial_tail_empirical(int trials, double p, double delta, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (trials < 0 || p < 0 || p > 1) throw std::invalid_argument("binomial_tail_empirical: bad trials or p");
  const double threshold = (1.0 + delta) * trials * p;
  const bool half = p == 0.5;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(samples, 64));
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = samples * c / chunks;
    const std::uint64_t hi = samples * (c + 1) / chunks;
    for (std::uint64_t k = lo; k < hi; ++k) {
      rng::CounterStream stream(rng::derive_seed(seed, k));
      int count = 0;
      if (half) {
        int left = trials;
        while (left >= 64) {
          count += std::popcount(stream.next());
          left -= 64;
        }
        if (left > 0) count += std::popcount(stream.next() & ((std::uint64_t{1} << left) - 1));
      } else {
        for (int t = 0; t < trials; ++t) count += stream.next_uniform() < p;
      }
      if (count > threshold) ++hits[c];
    }
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return samples == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(samples);
}

RateCheck recompute_chernoff_rate() {
  using boost::multiprecision::cpp_rational;
  const cpp_rational delta(1, 6);
  const cpp_rational rate = delta * delta / (cpp_rational(2) + delta) / cpp_rational(2);
  return {rate.str(), rate == cpp_rational(1, 156)};
}

// ---- thresholds and extremal values ----------------------------------------

double p0_threshold(long long n, long long r, LogBase base) {
  if (r < 1 || n < 2 * r + 1) throw PreconditionError("p0: need n >= 2r + 1");
  if (n == 2 * r + 1) return 0.75;
  double num = std::log(static_cast<double>(n)) + log_of(binomial(n - 1, r));
  if (base == LogBase::two) num /= kLn2;
  return num / to_double(binomial(n - r - 1, r - 1));
}

FranklFurediValue frankl_furedi_alpha(long long n, long long r, long long s) {
  return {binomial(n - s - 1, r - s - 1), r >= 2 * s + 1};
}

// ---- union bound over Ess(A) ----------------------------------------------

UnionBoundReport bipartite_union_bound(long long n, long long r, double rate) {
  if (r < 4) throw UnsupportedParameters("union bound: need r >= 4");
  if (n < 3) throw PreconditionError("union bound: need n >= 3");
  UnionBoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.rate = rate;
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_pairs = log_binomial(n, 2);
  const double ln_vertices = log_binomial(n, r);
  const BigInt top = binomial(n - r - 1, r - 2);
  BigInt running = 0;
  LogAccumulator total, total_sum, relaxed;
  double best = -kInf;
  rep.terms.reserve(static_cast<std::size_t>(n - 2));
  for (long long i = 1; i <= n - 2; ++i) {
    UnionBoundTerm t;
    t.i = i;
    t.diff = top - binomial(n - r - 1 - i, r - 2);
    running += binomial(n - r - i - 1, r - 3);
    t.diff_sum_form = running;
    const double d = to_double(t.diff);
    const double ln_term = ln_pairs + static_cast<double>(i) * ln_vertices - rate * d;
    const double ln_term_sum = ln_pairs + static_cast<double>(i) * ln_vertices - rate * to_double(running);
    const double ln_relaxed = 2.0 * ln_n + static_cast<double>(i * r) * ln_n - rate * d;
    t.term = LogReal::from_log(ln_term);
    t.relaxed = LogReal::from_log(ln_relaxed);
    if (t.diff != t.diff_sum_form) rep.hockey_stick_exact = false;
    if (ln_term > ln_relaxed) rep.relaxation_dominates = false;
    if (ln_term > best) {
      best = ln_term;
      rep.argmax_i = i;
    }
    total.add(ln_term);
    total_sum.add(ln_term_sum);
    relaxed.add(ln_relaxed);
    rep.terms.push_back(std::move(t));
  }
  rep.total = total.value();
  rep.total_sum_form = total_sum.value();
  rep.relaxed_total = relaxed.value();
  return rep;
}

std::vector<long long> geometric_grid(long long lo, long long hi, double factor) {
  if (lo < 1 || hi < lo || !(factor > 1.0)) throw std::invalid_argument("geometric_grid: need 1 <= lo <= hi, factor > 1");
  std::vector<long long> grid;
  double x = static_cast<double>(lo);
  while (true) {
    const long long v = std::min<long long>(hi, std::llround(x));
    if (grid.empty() || v > grid.back()) grid.push_back(v);
    if (v >= hi) break;
    x *= factor;
  }
  return grid;
}

UnionBoundScan scan_union_bound(long long r, const std::vector<long long>& grid, double rate, unsigned threads) {
  UnionBoundScan scan;
  scan.r = r;
  scan.grid = grid;
  std::sort(scan.grid.begin(), scan.grid.end());
  scan.totals.assign(scan.grid.size(), LogReal{});
  parallel_for(scan.grid.size(), threads,
               [&](std::size_t k) { scan.totals[k] = bipartite_union_bound(scan.grid[k], r, rate).total; });
  auto crossing = [&](double log_limit) -> std::optional<long long> {
    std::optional<std::size_t> idx;
    for (std::size_t k = scan.grid.size(); k-- > 0;) {
      if (scan.totals[k].log_magnitude() < log_limit) idx = k;
      else break;
    }
    if (!idx) return std::nullopt;
    return scan.grid[*idx];
  };
  scan.n_star_below_one = crossing(0.0);
  scan.n_star_below_1e3 = crossing(std::log(1e-3));
  if (scan.n_star_below_1e3) {
    scan.non_increasing_beyond_n_star = true;
    for (std::size_t k = 1; k < scan.grid.size(); ++k) {
      if (scan.grid[k - 1] >= *scan.n_star_below_1e3 && scan.totals[k] > scan.totals[k - 1]) {
        scan.non_increasing_beyond_n_star = false;
      }
    }
  }
  return scan;
}

// ---- x-summand over the Turán region ---------------------------------------

long long maximizer_crossing_n0(long long r, double alpha, double c, double c0) {
  if (r < 4) throw UnsupportedParameters("maximizer crossing: need r >= 4");
  auto holds = [&](long long n) {
    const double ln_n = std::log(static_cast<double>(n));
    return alpha * ln_n / (2.0 * c0) < c * std::pow(static_cast<double>(n), static_cast<double>(r - 3));
  };
  // ln n / n^(r-3) is decreasing for n >= 3, so the predicate is monotone there.
  long long hi = 3;
  while (!holds(hi)) {
    if (hi > (1LL << 60)) throw std::overflow_error("maximizer crossing: no n0 below 2^60");
    hi *= 2;
  }
  long long lo = hi / 2;
  if (lo < 3 || holds(lo)) lo = 2;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

TuranChainReport turan_chain(long long n, long long r, const ResolvedConstants& k) {
  if (r < 4) throw UnsupportedParameters("turan chain: need r >= 4");
  if (k.r != r) throw ConfigError("turan chain: constants were resolved for a different r");
  if (!(k.t0 > 0.5 && k.t0 < 1.0)) throw ConfigError("turan chain: t0 outside (1/2, 1)");
  const double expected_eps_prime = std::pow(k.c / 2.0, 1.0 / (r - 3));
  if (std::fabs(k.epsilon_prime - expected_eps_prime) > 1e-9 * expected_eps_prime) {
    throw ConfigError("turan chain: epsilon_prime does not match (c/2)^(1/(r-3))");
  }
  if (n < 2 * r) throw PreconditionError("turan chain: need n >= 2r");

  TuranChainReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  const double dn = static_cast<double>(n);
  const double ln_n = std::log(dn);
  const double n_r3 = std::pow(dn, static_cast<double>(r - 3));
  const double n_r2 = std::pow(dn, static_cast<double>(r - 2));
  const std::map<std::string, double> base{{"n", dn}, {"r", double(r)}};

  const long long t0n = static_cast<long long>(std::ceil(k.t0 * dn));
  rep.x_cap = binomial(n - 2, r - 2) - binomial(t0n - 2, r - 2);
  rep.x_cap_within_epsilon = to_double(rep.x_cap) < k.epsilon * n_r2;
  {
    auto p = base;
    p["t0"] = k.t0;
    p["epsilon"] = k.epsilon;
    auto rpt = make_report("turan.x_cap", p, LogReal::from_bigint(rep.x_cap), LogReal::from_double(k.epsilon * n_r2),
                           Relation::lt);
    rpt.exact["x_cap"] = rep.x_cap.str();
    rep.reports.push_back(std::move(rpt));
  }

  rep.maximizer_ratio = k.alpha * ln_n / (2.0 * k.c0 * k.c * n_r3);
  rep.maximizer_left_of_region = rep.maximizer_ratio < 1.0;
  rep.n0 = maximizer_crossing_n0(r, k.alpha, k.c, k.c0);
  {
    auto p = base;
    p["alpha"] = k.alpha;
    p["c0"] = k.c0;
    p["c"] = k.c;
    p["n0"] = static_cast<double>(rep.n0);
    rep.reports.push_back(make_report("turan.maximizer_left_of_region", p,
                                      LogReal::from_double(k.alpha * ln_n / (2.0 * k.c0)),
                                      LogReal::from_double(k.c * n_r3), Relation::lt));
  }

  const double i_lo = k.c_tilde * std::pow(dn, static_cast<double>(r - 3) / static_cast<double>(r - 1));
  const double i_hi = std::min(k.epsilon_prime * dn, static_cast<double>(n - 2) + 1.0);
  rep.i_min = static_cast<long long>(std::floor(i_lo)) + 1;
  rep.i_max = static_cast<long long>(std::ceil(i_hi)) - 1;

  constexpr std::uint64_t kExactRowLimit = 1000000;
  LogAccumulator sum;
  for (long long i = rep.i_min; i <= rep.i_max; ++i) {
    const double di = static_cast<double>(i);
    const double x_lo_real = k.c * di * n_r3;
    const double x_hi_real = std::min(k.epsilon * n_r2, to_double(binomial(i, r)));
    const long long x_lo = static_cast<long long>(std::floor(x_lo_real)) + 1;
    const long long x_hi = static_cast<long long>(std::ceil(x_hi_real)) - 1;
    if (x_hi < x_lo) continue;
    const std::uint64_t count = static_cast<std::uint64_t>(x_hi - x_lo + 1);
    rep.region_points += count;
    const double chain = 2.0 * to_double(binomial(i - 2, r - 2));
    if (static_cast<double>(x_lo) <= chain) {
      const long long last_bad = std::min<long long>(x_hi, static_cast<long long>(std::floor(chain)));
      rep.chain_violations += static_cast<std::uint64_t>(last_bad - x_lo + 1);
    }
    auto exponent = [&](double x) { return kLn2 * (k.alpha * x * ln_n - k.c0 * x * x / di); };
    if (count <= kExactRowLimit) {
      for (long long x = x_lo; x <= x_hi; ++x) sum.add(exponent(static_cast<double>(x)));
    } else {
      rep.double_sum_exact = false;
      const double vertex = k.alpha * di * ln_n / (2.0 * k.c0);
      const double peak = std::clamp(vertex, static_cast<double>(x_lo), static_cast<double>(x_hi));
      sum.add(std::log(static_cast<double>(count)) + std::max(exponent(std::floor(peak)), exponent(std::ceil(peak))));
    }
  }
  rep.double_sum = sum.value();
  {
    auto p = base;
    p["region_points"] = static_cast<double>(rep.region_points);
    rep.reports.push_back(make_report("turan.double_sum", p, rep.double_sum, LogReal::from_double(1.0), Relation::lt));
  }
  {
    auto p = base;
    p["chain_violations"] = static_cast<double>(rep.chain_violations);
    rep.reports.push_back(make_report("turan.chain_x_gt_2binom", p,
                                      LogReal::from_double(static_cast<double>(rep.chain_violations)), LogReal{},
                                      Relation::le));
  }
  const double closing_exp =
      k.c0 * k.c * k.c * k.c_tilde * std::pow(dn, 2.0 * r - 6.0 + static_cast<double>(r - 3) / static_cast<double>(r - 1));
  rep.closing_bound = LogReal::from_log((r - 1) * ln_n - kLn2 * closing_exp);
  {
    auto p = base;
    rep.reports.push_back(make_report("turan.closing_bound", p, rep.closing_bound, LogReal::from_double(1.0), Relation::lt));
  }
  return rep;
}

// ---- edge density of vertex subsets ----------------------------------------

std::uint64_t edge_ratio_subset_size(long long n, long long r) {
  const BigInt b = binomial(n, r - 2);
  const BigInt l = (b * 12 + 9) / 10;
  return l.convert_to<std::uint64_t>();
}

EdgeRatioSample edge_ratio_sample(long long n, long long r, std::uint64_t seed) {
  if (r < 3 || n < r) throw PreconditionError("edge ratio: need r >= 3 and n >= r");
  EdgeRatioSample s;
  s.n = n;
  s.r = r;
  s.l = edge_ratio_subset_size(n, r);
  const std::uint64_t V = binomial_u64(n, r);
  if (s.l > V) throw PreconditionError("edge ratio: l exceeds binom(n, r)");
  rng::CounterStream stream(rng::derive_seed(seed, static_cast<std::uint64_t>(n)));
  std::vector<KSubset> L;
  L.reserve(s.l);
  for (std::uint64_t rk : rng::sample_distinct(stream, V, s.l)) L.push_back(unrank(rk, static_cast<int>(n), static_cast<int>(r)));
  const JohnsonParams params{static_cast<int>(n), static_cast<int>(r), 1};
  s.edges = edge_count_within(params, L);
  s.ratio = static_cast<double>(s.edges) * static_cast<double>(n) / (static_cast<double>(s.l) * static_cast<double>(s.l));
  return s;
}

std::vector<EdgeRatioSample> edge_ratio_sweep(long long r, long long n_lo, long long n_hi, std::uint64_t seed,
                                              unsigned threads) {
  std::vector<EdgeRatioSample> out(static_cast<std::size_t>(std::max<long long>(0, n_hi - n_lo + 1)));
  parallel_for(out.size(), threads,
               [&](std::size_t k) { out[k] = edge_ratio_sample(n_lo + static_cast<long long>(k), r, seed); });
  return out;
}

}  // namespace jlab
