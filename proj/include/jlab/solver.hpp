#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "jlab/graph.hpp"

namespace jlab {

struct SolverBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited
};

struct SolverOptions {
  // For full G(n, r, s) graphs with n <= 128, prune branches that are images
  // of already-explored ones under the permutations of [n] fixing every chosen
  // vertex.
  bool use_symmetry = true;
  // Collect up to this many distinct maximum independent sets (0 = off).
  // Enabling it makes the bound test non-strict, so the search is slower.
  std::size_t optimal_sample_limit = 0;
};

/// Outcome of a maximum independent set search.
///
/// When optimal is false the budget ran out: alpha is the best size found
/// (a lower bound) and upper_bound the root clique-cover bound.
struct MisResult {
  std::size_t alpha = 0;
  std::vector<Vertex> witness;  // ascending vertex indices, |witness| == alpha
  std::vector<std::vector<Vertex>> optimal_sets_sample;
  bool optimal = false;
  std::size_t upper_bound = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

enum class Decision { no, yes, unknown };

const char* to_string(Decision d);

struct DecisionResult {
  Decision decision = Decision::unknown;
  std::vector<Vertex> witness;  // size k when decision == yes
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

// True iff no edge of g joins two members of A. Throws std::out_of_range for bad indices.
bool is_independent(const DenseGraph& g, std::span<const Vertex> A);

// Exact alpha(g) by branch and bound: greedy clique-cover bounds on the residual
// candidate set, highest-degree vertices branched first, ties broken by lowest
// index, initial lower bound from the star S_{1..s+1} (Johnson graphs) extended
// greedily or a min-degree greedy set.
MisResult max_independent_set(const DenseGraph& g, const SolverBudget& budget = {}, const SolverOptions& options = {});

// Whether g has an independent set of size k; stops at the first witness.
DecisionResult alpha_at_least(const DenseGraph& g, std::size_t k, const SolverBudget& budget = {},
                              const SolverOptions& options = {});

}  // namespace jlab
