#include "jlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jlab/bounds.hpp"
#include "jlab/errors.hpp"
#include "jlab/family.hpp"
#include "jlab/family_io.hpp"
#include "jlab/graph.hpp"
#include "jlab/montecarlo.hpp"
#include "jlab/parallel.hpp"
#include "jlab/rng.hpp"
#include "jlab/solver.hpp"
#include "jlab/verify.hpp"
#include "jlab/version.hpp"

namespace jlab::cli {
namespace {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0, r = 0, s = 0;
  std::optional<double> p;
  std::uint64_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0.0;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  std::string constants;
  std::string format = "text";
  std::string out;
  std::string in;
  // bounds
  long long i = 0;
  std::optional<double> c;
  double mu = 0, delta = 0;
  long long n_lo = 0, n_hi = 0;
  double factor = 1.05;
  LogBase log_base = LogBase::natural;
  // mc
  std::vector<double> p_grid;
  bool per_trial = false;
  bool record_alpha = false;
  // family
  bool random_instance = false;
  std::string what;  // verify target
};

std::string join_ranks(std::span<const Vertex> v) {
  std::string s;
  for (auto x : v) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

std::string config_line(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s = "# jlab " + std::string(kVersion) + " " + command;
  for (const auto& [k, v] : kv) s += " " + k + "=" + v;
  return s;
}

nlohmann::json config_json(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
  nlohmann::json j{{"version", kVersion}, {"command", command}};
  for (const auto& [k, v] : kv) j["config"][k] = v;
  return j;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  std::ostream& sink() {
    if (o_.out.empty()) return out_;
    if (!file_) {
      file_ = std::make_unique<std::ofstream>(o_.out);
      if (!*file_) throw ConfigError("cannot open output file " + o_.out);
    }
    return *file_;
  }

  JohnsonParams params() const {
    JohnsonParams p{o_.n, o_.r, o_.s};
    p.validate();
    return p;
  }

  SolverBudget budget() const { return {o_.budget_nodes, o_.budget_secs}; }

  bool json() const { return o_.format == "json"; }

  std::vector<std::pair<std::string, std::string>> graph_config() const {
    std::vector<std::pair<std::string, std::string>> kv{{"n", str(o_.n)}, {"r", str(o_.r)}, {"s", str(o_.s)}};
    kv.emplace_back("p", o_.p ? str(*o_.p) : "1");
    kv.emplace_back("seed", str(o_.seed));
    return kv;
  }

  DenseGraph graph() const {
    if (!o_.in.empty()) {
      std::ifstream in(o_.in);
      if (!in) throw ConfigError("cannot open " + o_.in);
      return import_edge_list(in);
    }
    const DenseGraph full = build_full(params(), o_.vertex_budget, default_thread_count());
    if (!o_.p || *o_.p == 1.0) return full;
    return sample_subgraph(full, *o_.p, o_.seed, default_thread_count());
  }

  void graph_build() {
    const DenseGraph g = graph();
    auto& os = sink();
    if (json()) {
      auto j = config_json("graph build", graph_config());
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["hash"] = str(g.adjacency_hash());
      os << j.dump(2) << '\n';
      return;
    }
    os << config_line("graph build", graph_config()) << '\n';
    os << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " hash=" << g.adjacency_hash() << '\n';
  }

  void graph_export() { export_edge_list(sink(), graph()); }

  void alpha() {
    const DenseGraph g = graph();
    const MisResult mis = max_independent_set(g, budget());
    auto& os = sink();
    auto kv = graph_config();
    kv.emplace_back("budget_nodes", str(o_.budget_nodes));
    kv.emplace_back("budget_secs", str(o_.budget_secs));
    if (json()) {
      auto j = config_json("alpha", kv);
      j["alpha"] = mis.alpha;
      j["optimal"] = mis.optimal;
      j["upper_bound"] = mis.upper_bound;
      j["witness"] = mis.witness;
      j["nodes"] = mis.nodes_explored;
      os << j.dump(2) << '\n';
    } else {
      os << config_line("alpha", kv) << '\n';
      os << "alpha=" << mis.alpha << " witness=" << join_ranks(mis.witness) << '\n';
      if (g.params()) {
        os << "# witness subsets:";
        for (auto v : mis.witness) os << ' ' << unrank(v, g.params()->n, g.params()->r).to_string();
        os << '\n';
      }
      os << "optimal=" << (mis.optimal ? 1 : 0) << " upper_bound=" << mis.upper_bound
         << " nodes=" << mis.nodes_explored << '\n';
    }
    if (!mis.optimal) throw BudgetExhausted("alpha: budget exhausted; alpha >= " + std::to_string(mis.alpha));
  }

  Family family_input() const {
    if (o_.random_instance) {
      const auto inst = random_admissible_instance(o_.n, o_.r, o_.seed);
      return {o_.n, o_.r, inst.family};
    }
    if (o_.in.empty()) throw ConfigError("family: need --in <file> or --random");
    return read_family_file(o_.in);
  }

  void family(const std::string& action) {
    const Family fam = family_input();
    const FamilyStats stats = analyze_family(fam.n, fam.r, fam.members);
    std::vector<std::pair<std::string, std::string>> kv{{"n", str(fam.n)}, {"r", str(fam.r)}};
    if (o_.random_instance) kv.emplace_back("seed", str(o_.seed));
    else kv.emplace_back("in", o_.in);
    auto& os = sink();
    nlohmann::json j = config_json("family " + action, kv);
    if (action == "analyze") {
      j["stats"] = to_json(stats);
    } else if (action == "ess") {
      j["stats"] = to_json(stats);
      auto& arr = j["ess"] = nlohmann::json::array();
      for (const auto& v : build_ess(stats, fam.members)) arr.push_back(std::vector<int>(v.elements().begin(), v.elements().end()));
    } else {
      const BjFamily bj = build_bj(fam.n, fam.r, stats);
      const BjCheck check = check_bj(bj);
      j["stats"] = to_json(stats);
      j["bj"] = to_json(bj);
      j["check"] = {{"containment", check.containment}, {"avoidance", check.avoidance}, {"disjoint", check.disjoint},
                    {"cardinality", check.cardinality}, {"cross_edge", check.cross_edge}, {"all", check.all()}};
      if (!check.first_failure.empty()) j["check"]["first_failure"] = check.first_failure;
    }
    os << j.dump(2) << '\n';
  }

  void emit_reports(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv,
                    const std::vector<BoundReport>& reports, nlohmann::json extra = nlohmann::json::object()) {
    auto& os = sink();
    if (json()) {
      auto j = config_json(command, kv);
      auto& arr = j["reports"] = nlohmann::json::array();
      for (const auto& rep : reports) arr.push_back(to_json(rep));
      if (!extra.empty()) j["summary"] = extra;
      os << j.dump(2) << '\n';
      return;
    }
    os << config_line(command, kv) << '\n';
    for (const auto& [k, v] : extra.items()) os << "# " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    os << csv_header() << '\n';
    for (const auto& rep : reports) os << csv_row(rep) << '\n';
  }

  ResolvedConstants constants(int r) const {
    const LabConstants given = o_.constants.empty() ? LabConstants{} : LabConstants::load(o_.constants);
    return resolve_constants(given, r);
  }

  void bounds(const std::string& name) {
    auto& os = sink();
    const std::vector<std::pair<std::string, std::string>> nr{{"n", str(o_.n)}, {"r", str(o_.r)}};
    if (name == "p0") {
      const double v = p0_threshold(o_.n, o_.r, o_.log_base);
      if (json()) {
        auto j = config_json("bounds p0", nr);
        j["p0"] = v;
        j["log_base"] = o_.log_base == LogBase::natural ? "e" : "2";
        os << j.dump(2) << '\n';
      } else {
        os << config_line("bounds p0", nr) << '\n' << "p0=" << str(v) << '\n';
      }
    } else if (name == "lemma-tech") {
      const double c = o_.c ? *o_.c : lemma_tech_best_c(o_.r, std::max<long long>(2 * o_.r - 4, 1), std::max(o_.n, 2 * o_.r)).c;
      const std::vector<BoundReport> reps{lemma_tech_margin(o_.n, o_.r, o_.i, c)};
      auto kv = nr;
      kv.emplace_back("i", str(o_.i));
      kv.emplace_back("c", str(c));
      emit_reports("bounds lemma-tech", kv, reps);
    } else if (name == "best-c") {
      const long long lo = o_.n_lo ? o_.n_lo : 2 * o_.r;
      const long long hi = o_.n_hi ? o_.n_hi : 200;
      const BestC b = lemma_tech_best_c(o_.r, lo, hi);
      const std::vector<std::pair<std::string, std::string>> kv{{"r", str(o_.r)}, {"n_lo", str(lo)}, {"n_hi", str(hi)}};
      if (json()) {
        auto j = config_json("bounds best-c", kv);
        j["c"] = b.c;
        j["argmin_n"] = b.argmin_n;
        j["argmin_i"] = b.argmin_i;
        j["c2"] = lemma_tech_c2(o_.r, lo, hi);
        os << j.dump(2) << '\n';
      } else {
        os << config_line("bounds best-c", kv) << '\n'
           << "c=" << str(b.c) << " argmin_n=" << b.argmin_n << " argmin_i=" << b.argmin_i
           << " c2=" << str(lemma_tech_c2(o_.r, lo, hi)) << '\n';
      }
    } else if (name == "chernoff") {
      const LogReal bound = chernoff_tail(o_.mu, o_.delta);
      std::vector<std::pair<std::string, std::string>> kv{{"mu", str(o_.mu)}, {"delta", str(o_.delta)}};
      nlohmann::json extra{{"bound", bound.to_double()}, {"ln_bound", bound.log_magnitude()},
                           {"rate_recomputed", recompute_chernoff_rate().value}};
      std::vector<BoundReport> reps;
      if (o_.trials > 0 && o_.p) {
        kv.emplace_back("trials", str(o_.trials));
        kv.emplace_back("p", str(*o_.p));
        kv.emplace_back("seed", str(o_.seed));
        const double emp = binomial_tail_empirical(static_cast<int>(o_.n), *o_.p, o_.delta, o_.trials, o_.seed,
                                                   default_thread_count());
        reps.push_back(make_report("chernoff.empirical_tail", {{"binomial_n", double(o_.n)}, {"p", *o_.p}, {"delta", o_.delta}},
                                   LogReal::from_double(emp),
                                   chernoff_tail(o_.n * *o_.p, o_.delta), Relation::le));
      }
      emit_reports("bounds chernoff", kv, reps, extra);
    } else if (name == "union") {
      const auto rep = bipartite_union_bound(o_.n, o_.r, constants_rate());
      std::vector<BoundReport> reps;
      for (const auto& t : rep.terms) {
        auto b = make_report("union.term", {{"n", double(o_.n)}, {"r", double(o_.r)}, {"i", double(t.i)}}, t.term,
                             t.relaxed, Relation::le);
        b.exact["diff"] = t.diff.str();
        reps.push_back(std::move(b));
      }
      reps.push_back(make_report("union.total", {{"n", double(o_.n)}, {"r", double(o_.r)}}, rep.total,
                                 LogReal::from_double(1.0), Relation::lt));
      nlohmann::json extra{{"ln_total", rep.total.log_magnitude()},
                           {"ln_relaxed_total", rep.relaxed_total.log_magnitude()},
                           {"argmax_i", rep.argmax_i},
                           {"hockey_stick_exact", rep.hockey_stick_exact},
                           {"relaxation_dominates", rep.relaxation_dominates}};
      emit_reports("bounds union", nr, reps, extra);
    } else if (name == "union-scan") {
      const long long lo = o_.n_lo ? o_.n_lo : 2 * o_.r;
      const long long hi = o_.n_hi ? o_.n_hi : 2000;
      const auto scan = scan_union_bound(o_.r, geometric_grid(lo, hi, o_.factor), constants_rate(), default_thread_count());
      std::vector<BoundReport> reps;
      for (std::size_t k = 0; k < scan.grid.size(); ++k) {
        reps.push_back(make_report("union.total", {{"n", double(scan.grid[k])}, {"r", double(o_.r)}}, scan.totals[k],
                                   LogReal::from_double(1e-3), Relation::lt));
      }
      auto opt = [](const std::optional<long long>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
      nlohmann::json extra{{"n_star_below_1", opt(scan.n_star_below_one)},
                           {"n_star_below_1e-3", opt(scan.n_star_below_1e3)},
                           {"non_increasing_beyond_n_star", scan.non_increasing_beyond_n_star}};
      emit_reports("bounds union-scan",
                   {{"r", str(o_.r)}, {"n_lo", str(lo)}, {"n_hi", str(hi)}, {"factor", str(o_.factor)}}, reps, extra);
    } else if (name == "turan") {
      const ResolvedConstants k = constants(o_.r);
      const auto rep = turan_chain(o_.n, o_.r, k);
      nlohmann::json extra{{"constants", to_json(k)},
                           {"i_range", {rep.i_min, rep.i_max}},
                           {"region_points", rep.region_points},
                           {"chain_violations", rep.chain_violations},
                           {"x_cap", rep.x_cap.str()},
                           {"maximizer_ratio", rep.maximizer_ratio},
                           {"n0", rep.n0},
                           {"ln_double_sum", rep.double_sum.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(rep.double_sum.log_magnitude())},
                           {"double_sum_exact", rep.double_sum_exact},
                           {"ln_closing_bound", rep.closing_bound.log_magnitude()}};
      emit_reports("bounds turan", nr, rep.reports, extra);
    } else if (name == "ff") {
      const auto v = frankl_furedi_alpha(o_.n, o_.r, o_.s);
      const std::vector<std::pair<std::string, std::string>> kv{{"n", str(o_.n)}, {"r", str(o_.r)}, {"s", str(o_.s)}};
      if (!v.in_regime) err_ << "warning: r < 2s + 1, outside the regime of the formula\n";
      if (json()) {
        auto j = config_json("bounds ff", kv);
        j["alpha"] = v.value.str();
        j["in_regime"] = v.in_regime;
        os << j.dump(2) << '\n';
      } else {
        os << config_line("bounds ff", kv) << '\n' << "alpha=" << v.value << " in_regime=" << (v.in_regime ? 1 : 0) << '\n';
      }
    } else if (name == "edge-ratio") {
      const long long lo = o_.n_lo ? o_.n_lo : 20;
      const long long hi = o_.n_hi ? o_.n_hi : 60;
      const auto samples = edge_ratio_sweep(o_.r, lo, hi, o_.seed, default_thread_count());
      const std::vector<std::pair<std::string, std::string>> kv{
          {"r", str(o_.r)}, {"n_lo", str(lo)}, {"n_hi", str(hi)}, {"seed", str(o_.seed)}};
      if (json()) {
        auto j = config_json("bounds edge-ratio", kv);
        auto& arr = j["samples"] = nlohmann::json::array();
        for (const auto& s : samples) arr.push_back({{"n", s.n}, {"l", s.l}, {"edges", s.edges}, {"ratio", s.ratio}});
        os << j.dump(2) << '\n';
      } else {
        os << config_line("bounds edge-ratio", kv) << '\n' << "n,r,l,edges,ratio\n";
        for (const auto& s : samples) os << s.n << ',' << s.r << ',' << s.l << ',' << s.edges << ',' << str(s.ratio) << '\n';
      }
    } else if (name == "constants") {
      auto j = config_json("bounds constants", {{"r", str(o_.r)}});
      j["constants"] = to_json(constants(o_.r));
      os << j.dump(2) << '\n';
    } else {
      throw ConfigError("bounds: unknown bound '" + name + "'");
    }
  }

  double constants_rate() const {
    if (o_.constants.empty()) return 1.0 / 156.0;
    return LabConstants::load(o_.constants).chernoff_rate;
  }

  BatchOptions batch_options() const {
    BatchOptions opt;
    if (o_.budget_nodes || o_.budget_secs > 0) opt.budget = budget();
    opt.vertex_budget = o_.vertex_budget;
    opt.record_alpha = o_.record_alpha;
    opt.threads = default_thread_count();
    return opt;
  }

  void mc_run() {
    if (!o_.p) throw ConfigError("mc run: --p is required");
    const auto b = run_batch(params(), *o_.p, o_.trials, o_.seed, batch_options());
    auto& os = sink();
    if (json()) os << to_json(b, o_.per_trial).dump(2) << '\n';
    else os << to_csv(b);
    if (b.unknowns) throw BudgetExhausted("mc run: " + std::to_string(b.unknowns) + " trials exhausted the budget");
  }

  void mc_sweep() {
    const auto grid = o_.p_grid.empty() ? default_p_grid() : o_.p_grid;
    const auto sw = sweep(params(), grid, o_.trials, o_.seed, batch_options());
    auto& os = sink();
    if (json()) os << to_json(sw, o_.per_trial).dump(2) << '\n';
    else os << to_csv(sw);
    if (sw.monotonicity_violations) throw ContractViolation("mc sweep: alpha increased with p on a coupled trial");
    std::uint64_t unknowns = 0;
    for (const auto& b : sw.batches) unknowns += b.unknowns;
    if (unknowns) throw BudgetExhausted("mc sweep: " + std::to_string(unknowns) + " trials exhausted the budget");
  }

  int verify_run() {
    std::vector<verify::Check> checks;
    if (o_.what == "all" || o_.what == "acceptance") {
      auto a = verify::acceptance_checks();
      checks.insert(checks.end(), a.begin(), a.end());
    }
    if (o_.what == "all" || o_.what == "invariants") {
      auto b = verify::invariant_checks();
      checks.insert(checks.end(), b.begin(), b.end());
    }
    if (checks.empty()) throw ConfigError("verify: expected all, acceptance or invariants");
    auto& os = sink();
    os << config_line("verify " + o_.what, {}) << '\n';
    return verify::run_checks(checks, os) ? kExitOk : kExitError;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Johnson graph independence lab", "jlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ground set size");
    sub->add_option("--r", o.r, "subset size");
    sub->add_option("--s", o.s, "intersection size defining edges");
    sub->add_option("--p", o.p, "edge retention probability");
    sub->add_option("--seed", o.seed, "master seed (default 1)");
    sub->add_option("--vertex-budget", o.vertex_budget, "largest dense graph to build");
    sub->add_option("--in", o.in, "edge-list file to import instead of building");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--budget-nodes", o.budget_nodes, "solver node budget (0 = unlimited)");
    sub->add_option("--budget-secs", o.budget_secs, "solver time budget in seconds (0 = unlimited)");
    sub->add_option("--constants", o.constants, "constants JSON file");
  };

  std::function<int(Runner&)> action;

  auto* graph = app.add_subcommand("graph", "build or export G(n,r,s) and G_p(n,r,s)");
  graph->require_subcommand(1);
  auto* gbuild = graph->add_subcommand("build", "build a graph and print its size and adjacency hash");
  auto* gexport = graph->add_subcommand("export", "print the edge list");
  for (auto* sub : {gbuild, gexport}) {
    add_graph_flags(sub);
    add_common(sub);
  }
  gbuild->callback([&] { action = [](Runner& r) { r.graph_build(); return kExitOk; }; });
  gexport->callback([&] { action = [](Runner& r) { r.graph_export(); return kExitOk; }; });

  auto* alpha = app.add_subcommand("alpha", "exact independence number");
  add_graph_flags(alpha);
  add_common(alpha);
  alpha->callback([&] { action = [](Runner& r) { r.alpha(); return kExitOk; }; });

  auto* family = app.add_subcommand("family", "family statistics and constructions");
  family->require_subcommand(1);
  for (const std::string name : {"analyze", "ess", "bj"}) {
    auto* sub = family->add_subcommand(name, name == "analyze" ? "d(A), X, I(X)" : name == "ess" ? "Ess(A)" : "B_j sets and their checks");
    sub->add_option("--in", o.in, "family file");
    sub->add_flag("--random", o.random_instance, "draw a random admissible instance instead");
    sub->add_option("--n", o.n, "ground set size (--random)");
    sub->add_option("--r", o.r, "subset size (--random)");
    sub->add_option("--seed", o.seed, "seed (--random)");
    add_common(sub);
    sub->callback([&, name] { action = [name](Runner& r) { r.family(name); return kExitOk; }; });
  }

  auto* bounds = app.add_subcommand("bounds", "evaluate a bound");
  std::string bound_name;
  bounds->add_option("name", bound_name,
                     "p0 | lemma-tech | best-c | chernoff | union | union-scan | turan | ff | edge-ratio | constants")
      ->required();
  bounds->add_option("--n", o.n);
  bounds->add_option("--r", o.r);
  bounds->add_option("--s", o.s);
  bounds->add_option("--i", o.i);
  bounds->add_option("--c", o.c);
  bounds->add_option("--mu", o.mu);
  bounds->add_option("--delta", o.delta);
  bounds->add_option("--p", o.p);
  bounds->add_option("--trials", o.trials, "samples for the empirical Chernoff tail");
  bounds->add_option("--seed", o.seed);
  bounds->add_option("--n-lo", o.n_lo);
  bounds->add_option("--n-hi", o.n_hi);
  bounds->add_option("--factor", o.factor, "geometric grid ratio");
  bool log2 = false;
  bounds->add_flag("--log2", log2, "use log base 2 in p0");
  add_common(bounds);
  bounds->callback([&] {
    if (log2) o.log_base = LogBase::two;
    action = [&bound_name](Runner& r) { r.bounds(bound_name); return kExitOk; };
  });

  auto* mc = app.add_subcommand("mc", "Monte Carlo over G_p(n,r,s)");
  mc->require_subcommand(1);
  auto* mrun = mc->add_subcommand("run", "one batch at fixed p");
  auto* msweep = mc->add_subcommand("sweep", "coupled batches over a p grid");
  for (auto* sub : {mrun, msweep}) {
    add_graph_flags(sub);
    add_common(sub);
    sub->add_option("--trials", o.trials);
    sub->add_flag("--per-trial", o.per_trial, "include per-trial records in JSON");
  }
  mrun->add_flag("--record-alpha", o.record_alpha, "solve alpha exactly for every trial");
  msweep->add_option("--p-grid", o.p_grid, "p values (default 0.1 .. 1.0)")->delimiter(',');
  mrun->callback([&] { action = [](Runner& r) { r.mc_run(); return kExitOk; }; });
  msweep->callback([&] { action = [](Runner& r) { r.mc_sweep(); return kExitOk; }; });

  auto* ver = app.add_subcommand("verify", "acceptance criteria and invariants");
  ver->add_option("what", o.what, "all | acceptance | invariants")->required();
  ver->add_option("--out", o.out);
  ver->callback([&] { action = [](Runner& r) { return r.verify_run(); }; });

  app.failure_message(CLI::FailureMessage::help);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    Runner runner(o, out, err);
    return action ? action(runner) : kExitError;
  } catch (const BudgetExhausted& e) {
    err << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace jlab::cli
