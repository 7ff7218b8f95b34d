#include "jlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "jlab/simd/kernels.hpp"

namespace jlab {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::no:
      return "no";
    case Decision::yes:
      return "yes";
    case Decision::unknown:
      return "unknown";
  }
  return "unknown";
}

bool is_independent(const DenseGraph& g, std::span<const Vertex> A) {
  for (Vertex v : A) {
    if (v >= g.vertex_count()) throw std::out_of_range("is_independent: vertex index out of range");
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = a + 1; b < A.size(); ++b) {
      if (g.adjacent(A[a], A[b])) return false;
    }
  }
  return true;
}

namespace {

using Word = simd::Word;
using Mask = KSubset::Mask;
using Clock = std::chrono::steady_clock;

inline void set_bit(Word* w, std::size_t i) { w[i / simd::kWordBits] |= Word{1} << (i % simd::kWordBits); }
inline void clear_bit(Word* w, std::size_t i) { w[i / simd::kWordBits] &= ~(Word{1} << (i % simd::kWordBits)); }
inline bool test_bit(const Word* w, std::size_t i) { return (w[i / simd::kWordBits] >> (i % simd::kWordBits)) & 1U; }

inline int popcount128(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

class BranchAndBound {
 public:
  BranchAndBound(const DenseGraph& g, const SolverBudget& budget, const SolverOptions& options)
      : g_(g), kernels_(simd::active_kernels()), budget_(budget), options_(options), V_(g.vertex_count()),
        W_(simd::words_for_bits(g.vertex_count())) {
    relabel();
    setup_symmetry();
  }

  MisResult solve() {
    const auto start = Clock::now();
    start_ = start;
    seed_lower_bound();
    sample_mode_ = options_.optimal_sample_limit > 0;
    run();
    MisResult out;
    out.alpha = best_size_;
    out.witness = to_original(best_set_);
    out.optimal = !stopped_;
    out.upper_bound = stopped_ ? std::max(root_bound_, best_size_) : best_size_;
    out.nodes_explored = nodes_;
    out.optimal_sets_sample = std::move(samples_);
    if (sample_mode_ && out.optimal_sets_sample.empty() && best_size_ > 0) {
      out.optimal_sets_sample.push_back(out.witness);
    }
    out.elapsed = Clock::now() - start;
    return out;
  }

  DecisionResult decide(std::size_t k) {
    const auto start = Clock::now();
    start_ = start;
    DecisionResult out;
    if (k == 0) {
      out.decision = Decision::yes;
      return out;
    }
    if (k > V_) {
      out.decision = Decision::no;
      return out;
    }
    seed_lower_bound();
    if (best_size_ >= k) {
      out.decision = Decision::yes;
      out.witness = to_original(best_set_);
      out.witness.resize(k);
    } else {
      decide_target_ = k;
      best_size_ = k - 1;  // only sets of size >= k matter
      best_set_.clear();
      run();
      if (found_) {
        out.decision = Decision::yes;
        out.witness = to_original(best_set_);
        out.witness.resize(k);
      } else {
        out.decision = stopped_ ? Decision::unknown : Decision::no;
      }
    }
    out.nodes_explored = nodes_;
    out.elapsed = Clock::now() - start;
    return out;
  }

 private:
  struct Level {
    std::vector<Word> P, Q, R;
    std::vector<Vertex> order;
    std::vector<std::uint32_t> bound;
  };

  // Internal labels sort vertices by (degree ascending, index ascending). Coloring
  // visits low labels first, so the branching loop, which walks the coloring
  // backwards, tries the highest-degree vertices first.
  void relabel() {
    to_orig_.resize(V_);
    std::iota(to_orig_.begin(), to_orig_.end(), Vertex{0});
    std::vector<std::size_t> deg(V_);
    for (std::size_t v = 0; v < V_; ++v) deg[v] = g_.degree(v);
    std::stable_sort(to_orig_.begin(), to_orig_.end(), [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
    std::vector<Vertex> to_internal(V_);
    for (std::size_t i = 0; i < V_; ++i) to_internal[to_orig_[i]] = static_cast<Vertex>(i);
    adj_.assign(V_ * W_, 0);
    for (std::size_t i = 0; i < V_; ++i) {
      auto row = g_.row(to_orig_[i]);
      Word* dst = adj_.data() + i * W_;
      for (std::size_t w = 0; w < row.size(); ++w) {
        for (Word bits = row[w]; bits; bits &= bits - 1) {
          const std::size_t v = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          set_bit(dst, to_internal[v]);
        }
      }
    }
  }

  void setup_symmetry() {
    const auto& prm = g_.params();
    symmetric_ = options_.use_symmetry && prm && g_.provenance().kind == Provenance::Kind::full &&
                 prm->n <= KSubset::kMaskLimit;
    if (!symmetric_) return;
    vmask_.resize(V_);
    for (std::size_t i = 0; i < V_; ++i) vmask_[i] = unrank(to_orig_[i], prm->n, prm->r).mask();
    const Mask ground = prm->n == 128 ? ~Mask{0} : ((Mask{1} << prm->n) - 1);
    atoms_.assign(1, std::vector<Mask>{ground});
  }

  std::vector<Vertex> to_original(const std::vector<Vertex>& internal) const {
    std::vector<Vertex> out;
    out.reserve(internal.size());
    for (Vertex v : internal) out.push_back(to_orig_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void seed_lower_bound() {
    // Candidate 1: the star S_{1..s+1}, if independent here, extended greedily.
    // Candidate 2: greedy over internal order (lowest degree first).
    std::vector<Vertex> best = greedy_extend({});
    if (const auto& prm = g_.params()) {
      const auto star = star_vertices(*prm);
      if (is_independent(g_, star)) {
        std::vector<Vertex> seed;
        std::vector<Vertex> to_internal(V_);
        for (std::size_t i = 0; i < V_; ++i) to_internal[to_orig_[i]] = static_cast<Vertex>(i);
        for (Vertex v : star) seed.push_back(to_internal[v]);
        auto extended = greedy_extend(std::move(seed));
        if (extended.size() >= best.size()) best = std::move(extended);
      }
    }
    best_size_ = best.size();
    best_set_ = std::move(best);
  }

  std::vector<Vertex> greedy_extend(std::vector<Vertex> set) const {
    std::vector<Word> blocked(W_, 0);
    for (Vertex v : set) {
      set_bit(blocked.data(), v);
      for (std::size_t w = 0; w < W_; ++w) blocked[w] |= adj_[v * W_ + w];
    }
    for (std::size_t v = 0; v < V_; ++v) {
      if (test_bit(blocked.data(), v)) continue;
      set.push_back(static_cast<Vertex>(v));
      set_bit(blocked.data(), v);
      for (std::size_t w = 0; w < W_; ++w) blocked[w] |= adj_[v * W_ + w];
    }
    return set;
  }

  void ensure_depth(std::size_t depth) {
    while (levels_.size() <= depth) {
      Level lvl;
      lvl.P.assign(W_, 0);
      lvl.Q.assign(W_, 0);
      lvl.R.assign(W_, 0);
      lvl.order.resize(V_);
      lvl.bound.resize(V_);
      levels_.push_back(std::move(lvl));
    }
    if (symmetric_ && atoms_.size() <= depth) atoms_.resize(depth + 1);
  }

  void run() {
    if (V_ == 0) return;
    ensure_depth(0);
    Word* P = levels_[0].P.data();
    for (std::size_t v = 0; v < V_; ++v) set_bit(P, v);
    current_.clear();
    expand(0);
  }

  bool budget_exhausted() {
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> spent = Clock::now() - start_;
      if (spent.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  // Greedy partition of P into cliques of g. order/bound list vertices in
  // coloring order with bound[k] = number of cliques used up to position k.
  std::size_t color(Level& lvl) {
    std::copy(lvl.P.begin(), lvl.P.end(), lvl.Q.begin());
    std::size_t count = 0;
    std::uint32_t cliques = 0;
    std::size_t first_word = 0;
    for (;;) {
      while (first_word < W_ && lvl.Q[first_word] == 0) ++first_word;
      if (first_word == W_) break;
      ++cliques;
      std::copy(lvl.Q.begin(), lvl.Q.end(), lvl.R.begin());
      std::size_t w = first_word;
      for (;;) {
        while (w < W_ && lvl.R[w] == 0) ++w;
        if (w == W_) break;
        const std::size_t v = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(lvl.R[w]));
        clear_bit(lvl.Q.data(), v);
        // Later members of this clique must be adjacent to v.
        kernels_.and_words(lvl.R.data() + w, lvl.R.data() + w, adj_.data() + v * W_ + w, W_ - w);
        lvl.order[count] = static_cast<Vertex>(v);
        lvl.bound[count] = cliques;
        ++count;
      }
    }
    return count;
  }

  bool prune(std::size_t upper) const {
    if (decide_target_) return upper < decide_target_;
    return sample_mode_ ? upper < best_size_ : upper <= best_size_;
  }

  void record() {
    const std::size_t size = current_.size();
    if (decide_target_) {
      if (size >= decide_target_) {
        found_ = true;
        best_set_ = current_;
        best_size_ = size;
      }
      return;
    }
    if (size > best_size_) {
      best_size_ = size;
      best_set_ = current_;
      samples_.clear();
    }
    if (sample_mode_ && size == best_size_ && samples_.size() < options_.optimal_sample_limit) {
      auto s = to_original(current_);
      if (std::find(samples_.begin(), samples_.end(), s) == samples_.end()) samples_.push_back(std::move(s));
    }
  }

  bool same_orbit(std::size_t u, std::size_t v, const std::vector<Mask>& atoms) const {
    for (Mask a : atoms) {
      if (popcount128(vmask_[u] & a) != popcount128(vmask_[v] & a)) return false;
    }
    return true;
  }

  void expand(std::size_t depth) {
    ++nodes_;
    if (budget_exhausted()) {
      stopped_ = true;
      return;
    }
    ensure_depth(depth + 1);
    Level& lvl = levels_[depth];
    Word* P = lvl.P.data();
    const std::size_t count = color(lvl);
    if (depth == 0 && count > 0) root_bound_ = lvl.bound[count - 1];
    for (std::size_t idx = count; idx-- > 0;) {
      const std::size_t v = lvl.order[idx];
      if (!test_bit(P, v)) continue;
      if (prune(current_.size() + lvl.bound[idx])) return;
      current_.push_back(static_cast<Vertex>(v));
      Word* child = levels_[depth + 1].P.data();
      kernels_.andnot_words(child, P, adj_.data() + v * W_, W_);
      clear_bit(child, v);
      if (symmetric_) {
        auto& next = atoms_[depth + 1];
        next.clear();
        for (Mask a : atoms_[depth]) {
          if (Mask in = a & vmask_[v]) next.push_back(in);
          if (Mask out = a & ~vmask_[v]) next.push_back(out);
        }
      }
      bool empty = true;
      for (std::size_t w = 0; w < W_ && empty; ++w) empty = child[w] == 0;
      if (empty || (decide_target_ && current_.size() >= decide_target_)) {
        record();
      } else {
        expand(depth + 1);
      }
      current_.pop_back();
      if (stopped_ || found_) return;
      clear_bit(P, v);
      if (symmetric_) {
        // Everything in v's orbit under the stabilizer of the chosen vertices is done.
        for (std::size_t w = 0; w < W_; ++w) {
          for (Word bits = P[w]; bits; bits &= bits - 1) {
            const std::size_t u = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            if (same_orbit(u, v, atoms_[depth])) clear_bit(P, u);
          }
        }
      }
    }
  }

  const DenseGraph& g_;
  const simd::Kernels& kernels_;
  SolverBudget budget_;
  SolverOptions options_;
  std::size_t V_;
  std::size_t W_;
  std::vector<Word> adj_;
  std::vector<Vertex> to_orig_;

  bool symmetric_ = false;
  std::vector<Mask> vmask_;
  std::vector<std::vector<Mask>> atoms_;

  std::deque<Level> levels_;  // deque: references stay valid while deeper levels are added
  std::vector<Vertex> current_;
  std::vector<Vertex> best_set_;
  std::size_t best_size_ = 0;
  std::vector<std::vector<Vertex>> samples_;
  bool sample_mode_ = false;
  std::size_t decide_target_ = 0;
  bool found_ = false;
  bool stopped_ = false;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  Clock::time_point start_{};
};

}  // namespace

MisResult max_independent_set(const DenseGraph& g, const SolverBudget& budget, const SolverOptions& options) {
  return BranchAndBound(g, budget, options).solve();
}

DecisionResult alpha_at_least(const DenseGraph& g, std::size_t k, const SolverBudget& budget,
                              const SolverOptions& options) {
  return BranchAndBound(g, budget, options).decide(k);
}

}  // namespace jlab
