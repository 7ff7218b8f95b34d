#include "jlab/family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "jlab/errors.hpp"
#include "jlab/rng.hpp"

namespace jlab {
namespace {

// Calls fn(combo) for each k-subset of pool, lexicographic in pool order.
void for_each_combination(const std::vector<int>& pool, int k, const std::function<void(const std::vector<int>&)>& fn) {
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) idx[static_cast<std::size_t>(a)] = a;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (;;) {
    for (int a = 0; a < k; ++a) combo[static_cast<std::size_t>(a)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
    fn(combo);
    int a = k - 1;
    while (a >= 0 && idx[static_cast<std::size_t>(a)] == m - k + a) --a;
    if (a < 0) return;
    ++idx[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < k; ++b) idx[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(b - 1)] + 1;
  }
}

bool contains_pair(const KSubset& v, int i, int j) { return v.contains(i) && v.contains(j); }

}  // namespace

std::vector<int> FamilyStats::I_relabeled() const {
  std::vector<int> out;
  out.reserve(I_of_X.size());
  for (int e : I_of_X) out.push_back(relabel[static_cast<std::size_t>(e)]);
  std::sort(out.begin(), out.end());
  return out;
}

KSubset FamilyStats::to_relabeled(const KSubset& original) const {
  std::vector<int> e;
  for (int v : original.elements()) e.push_back(relabel[static_cast<std::size_t>(v)]);
  return KSubset::from_unsorted(n, std::move(e));
}

KSubset FamilyStats::to_original(const KSubset& relabeled) const {
  std::vector<int> e;
  for (int v : relabeled.elements()) e.push_back(inverse_relabel[static_cast<std::size_t>(v)]);
  return KSubset::from_unsorted(n, std::move(e));
}

FamilyStats analyze_family(int n, int r, std::span<const KSubset> A) {
  if (n < 2 || r < 1 || r > n) throw std::invalid_argument("analyze_family: need n >= 2 and 1 <= r <= n");
  std::set<std::vector<int>> seen;
  for (const auto& m : A) {
    if (m.ground_n() != n || m.size() != r) throw std::invalid_argument("analyze_family: member " + m.to_string() + " is not an r-subset of [n]");
    if (!seen.emplace(m.elements().begin(), m.elements().end()).second) {
      throw std::invalid_argument("analyze_family: repeated member " + m.to_string());
    }
  }
  FamilyStats st;
  st.n = n;
  st.r = r;
  st.family_size = A.size();
  // Pairs in lexicographic order; strict '>' keeps the lexicographically smallest maximizer.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::size_t count = 0;
      for (const auto& m : A) count += contains_pair(m, i, j) ? 1 : 0;
      if (count > st.d_value) {
        st.d_value = count;
        st.best_center = {i, j};
      }
    }
  }
  const auto [ci, cj] = st.best_center;
  std::set<int> covered;
  for (const auto& m : A) {
    if (contains_pair(m, ci, cj)) continue;
    st.X.push_back(m);
    for (int e : m.elements()) {
      if (e != ci && e != cj) covered.insert(e);
    }
  }
  st.x = st.X.size();
  st.I_of_X.assign(covered.begin(), covered.end());
  st.i_of_X = st.I_of_X.size();

  st.relabel.assign(static_cast<std::size_t>(n) + 1, 0);
  st.inverse_relabel.assign(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (int e = 1; e <= n; ++e) {
    if (e == ci || e == cj) continue;
    st.relabel[static_cast<std::size_t>(e)] = next++;
  }
  st.relabel[static_cast<std::size_t>(ci)] = n - 1;
  st.relabel[static_cast<std::size_t>(cj)] = n;
  for (int e = 1; e <= n; ++e) st.inverse_relabel[static_cast<std::size_t>(st.relabel[static_cast<std::size_t>(e)])] = e;
  return st;
}

namespace {

// Lowest-rank member of X containing element l (original labels).
const KSubset* lowest_rank_containing(const std::vector<KSubset>& X, int l) {
  const KSubset* best = nullptr;
  std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
  for (const auto& u : X) {
    if (!u.contains(l)) continue;
    const std::uint64_t rk = rank(u);
    if (rk < best_rank) {
      best_rank = rk;
      best = &u;
    }
  }
  return best;
}

}  // namespace

std::vector<KSubset> build_ess(const FamilyStats& stats, std::span<const KSubset> A) {
  const auto [ci, cj] = stats.best_center;
  std::vector<KSubset> out;
  for (const auto& m : A) {
    if (contains_pair(m, ci, cj)) out.push_back(m);
  }
  std::set<std::vector<int>> added;
  for (int l : stats.I_of_X) {
    const KSubset* v = lowest_rank_containing(stats.X, l);
    if (!v) throw ContractViolation("build_ess: stats do not match the family");
    if (added.emplace(v->elements().begin(), v->elements().end()).second) out.push_back(*v);
  }
  std::sort(out.begin(), out.end(), [](const KSubset& a, const KSubset& b) { return rank(a) < rank(b); });
  return out;
}

BjFamily build_bj(int n, int r, const FamilyStats& stats, const std::optional<std::vector<KSubset>>& u_override) {
  if (r < 4) throw UnsupportedParameters("build_bj: needs r >= 4 (r - 3 free slots per vertex)");
  if (stats.n != n || stats.r != r) throw std::invalid_argument("build_bj: stats computed for different (n, r)");
  if (stats.i_of_X == 0) throw PreconditionError("build_bj: i(X) = 0, nothing to construct");
  const auto [ci, cj] = stats.best_center;
  for (const auto& u : stats.X) {
    if (u.contains(ci) || u.contains(cj)) {
      throw PreconditionError("build_bj: member " + u.to_string() + " of X meets the center; members outside the star must avoid it");
    }
  }
  BjFamily bj;
  bj.n = n;
  bj.r = r;
  bj.l = stats.I_relabeled();
  const std::size_t count = bj.l.size();
  if (u_override) {
    if (u_override->size() != count) throw std::invalid_argument("build_bj: need one u_j per element of I(X)");
    for (std::size_t j = 0; j < count; ++j) {
      const KSubset& u = (*u_override)[j];
      const KSubset orig = stats.to_original(u);
      const bool in_X = std::find(stats.X.begin(), stats.X.end(), orig) != stats.X.end();
      if (!in_X || !u.contains(bj.l[j])) throw std::invalid_argument("build_bj: u_j must be a member of X containing l_j");
    }
    bj.u_choices = *u_override;
  } else {
    for (int l : stats.I_of_X) bj.u_choices.push_back(stats.to_relabeled(*lowest_rank_containing(stats.X, l)));
  }
  for (std::size_t j = 0; j < count; ++j) {
    const int lj = bj.l[j];
    std::set<int> banned(bj.l.begin(), bj.l.begin() + static_cast<std::ptrdiff_t>(j));
    for (int e : bj.u_choices[j].elements()) banned.insert(e);
    std::vector<int> pool;
    for (int e = 1; e <= n - 2; ++e) {
      if (!banned.count(e)) pool.push_back(e);
    }
    std::vector<KSubset> Bj;
    for_each_combination(pool, r - 3, [&](const std::vector<int>& combo) {
      std::vector<int> e(combo);
      e.push_back(lj);
      e.push_back(n - 1);
      e.push_back(n);
      Bj.push_back(KSubset::from_unsorted(n, std::move(e)));
    });
    bj.B_sets.push_back(std::move(Bj));
  }
  return bj;
}

BjCheck check_bj(const BjFamily& bj) {
  BjCheck c;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (c.first_failure.empty()) c.first_failure = why;
  };
  const int n = bj.n;
  const int r = bj.r;
  std::set<std::vector<int>> seen;
  for (std::size_t j = 0; j < bj.B_sets.size(); ++j) {
    const int lj = bj.l[j];
    const KSubset& uj = bj.u_choices[j];
    std::vector<int> banned(bj.l.begin(), bj.l.begin() + static_cast<std::ptrdiff_t>(j));
    for (int e : uj.elements()) {
      if (e != lj) banned.push_back(e);
    }
    const auto jj = static_cast<long long>(j) + 1;
    if (binomial(n - r - jj - 1, r - 3) > bj.B_sets[j].size()) {
      fail(c.cardinality, "|B_" + std::to_string(jj) + "| = " + std::to_string(bj.B_sets[j].size()) + " below the lower bound");
    }
    for (const auto& v : bj.B_sets[j]) {
      const auto e = v.elements();
      auto has = [&](int x) { return std::find(e.begin(), e.end(), x) != e.end(); };
      if (v.size() != r || !has(lj) || !has(n - 1) || !has(n)) fail(c.containment, v.to_string() + " misses {l_j, n-1, n}");
      for (int b : banned) {
        if (has(b)) fail(c.avoidance, v.to_string() + " contains banned element " + std::to_string(b));
      }
      if (!seen.emplace(e.begin(), e.end()).second) fail(c.disjoint, v.to_string() + " appears in two B_j");
      if (intersection_size_merge(v, uj) != 1) fail(c.cross_edge, v.to_string() + " does not meet u_j in exactly one element");
    }
  }
  return c;
}

AdmissibleInstance random_admissible_instance(int n, int r, std::uint64_t seed, double t0) {
  if (r < 3 || n < r + 2) throw std::invalid_argument("random_admissible_instance: need r >= 3 and n >= r + 2");
  rng::CounterStream stream(seed);
  const long long t0n = static_cast<long long>(std::ceil(t0 * n));
  const std::uint64_t star_size = binomial_u64(n - 2, r - 2);
  const std::uint64_t outside_pool = binomial_u64(n - 2, r);
  const std::uint64_t threshold = binomial_u64(t0n - 2, r - 2);
  if (star_size <= threshold) throw std::invalid_argument("random_admissible_instance: t0 leaves no admissible x");
  const std::uint64_t x_cap = std::min<std::uint64_t>(outside_pool, star_size - threshold);
  for (;;) {
    const int i = 1 + static_cast<int>(stream.below(static_cast<std::uint64_t>(n)));
    int j = 1 + static_cast<int>(stream.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    const int ci = std::min(i, j);
    const int cj = std::max(i, j);
    std::vector<int> others;
    for (int e = 1; e <= n; ++e) {
      if (e != ci && e != cj) others.push_back(e);
    }
    auto lift = [&](const KSubset& inner, bool with_center) {
      std::vector<int> e;
      for (int v : inner.elements()) e.push_back(others[static_cast<std::size_t>(v - 1)]);
      if (with_center) {
        e.push_back(ci);
        e.push_back(cj);
      }
      return KSubset::from_unsorted(n, std::move(e));
    };
    const std::uint64_t x = 1 + stream.below(x_cap);
    AdmissibleInstance inst;
    inst.center = {ci, cj};
    inst.x = static_cast<std::size_t>(x);
    for (std::uint64_t rk : rng::sample_distinct(stream, outside_pool, x)) inst.family.push_back(lift(unrank(rk, n - 2, r), false));
    for (std::uint64_t rk : rng::sample_distinct(stream, star_size, star_size + 1 - x)) {
      inst.family.push_back(lift(unrank(rk, n - 2, r - 2), true));
    }
    const FamilyStats st = analyze_family(n, r, inst.family);
    // Reject ties: another pair reaching the same d would make the center ambiguous.
    bool unique = st.best_center == inst.center;
    if (unique) {
      for (int a = 1; a <= n && unique; ++a) {
        for (int b = a + 1; b <= n && unique; ++b) {
          if (std::pair{a, b} == inst.center) continue;
          std::size_t cnt = 0;
          for (const auto& m : inst.family) cnt += contains_pair(m, a, b) ? 1 : 0;
          if (cnt >= st.d_value) unique = false;
        }
      }
    }
    if (unique && st.d_value > threshold) return inst;
  }
}

nlohmann::json to_json(const FamilyStats& stats) {
  nlohmann::json IX = nlohmann::json::array();
  for (int e : stats.I_of_X) IX.push_back(e);
  return nlohmann::json{
      {"size", stats.family_size},
      {"center", {stats.best_center.first, stats.best_center.second}},
      {"d", stats.d_value},
      {"x", stats.x},
      {"iX", stats.i_of_X},
      {"IX", IX},
  };
}

nlohmann::json to_json(const BjFamily& bj) {
  auto subset_json = [](const KSubset& s) { return nlohmann::json(std::vector<int>(s.elements().begin(), s.elements().end())); };
  nlohmann::json sets = nlohmann::json::array();
  for (std::size_t j = 0; j < bj.B_sets.size(); ++j) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& v : bj.B_sets[j]) members.push_back(subset_json(v));
    sets.push_back({{"j", j + 1}, {"l", bj.l[j]}, {"u", subset_json(bj.u_choices[j])}, {"size", bj.B_sets[j].size()},
                    {"lower_bound", binomial(bj.n - bj.r - static_cast<long long>(j) - 2, bj.r - 3).str()},
                    {"members", members}});
  }
  return nlohmann::json{{"n", bj.n}, {"r", bj.r}, {"B", sets}};
}

}  // namespace jlab
