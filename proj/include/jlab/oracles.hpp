#pragma once
// Reference implementations used only to cross-check the production paths.
// They share no search code with solver.cpp and avoid the SIMD kernels.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jlab/graph.hpp"

namespace jlab::oracles {

// alpha by enumerating all 2^V vertex subsets (V <= 26).
std::size_t brute_force_alpha(const DenseGraph& g);

struct ExhaustiveResult {
  std::size_t alpha = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

// Plain backtracking over independent sets in index order, pruning only when
// |chosen| + |candidates| cannot beat the incumbent. With
// assume_vertex_transitive, only sets containing vertex 0 are enumerated
// (valid for full Johnson graphs, whose automorphism group is transitive).
ExhaustiveResult exhaustive_alpha(const DenseGraph& g, bool assume_vertex_transitive);

// Pascal recurrence on 64-bit values; a, b >= 0, result must fit.
std::uint64_t pascal_binomial(int a, int b);

}  // namespace jlab::oracles
