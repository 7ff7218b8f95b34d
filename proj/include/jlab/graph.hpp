#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "jlab/combinatorics.hpp"
#include "jlab/simd/kernels.hpp"

namespace jlab {

using Vertex = std::uint32_t;

/// G(n, r, s): vertices are the r-subsets of [n], edges join subsets meeting in exactly s elements.
struct JohnsonParams {
  int n = 1;
  int r = 1;
  int s = 0;

  // Throws std::invalid_argument unless n >= 1 and 0 <= s < r <= n.
  void validate() const;

  std::uint64_t vertex_count() const { return binomial_u64(n, r); }

  // binom(r, s) * binom(n - r, r - s): every vertex of the full graph has this degree.
  std::uint64_t regular_degree() const { return binomial_u64(r, s) * binomial_u64(n - r, r - s); }

  friend bool operator==(const JohnsonParams&, const JohnsonParams&) = default;
};

// Adjacency predicate of the full G(n, r, s).
inline bool johnson_adjacent(const JohnsonParams& params, const KSubset& u, const KSubset& v) {
  return intersection_size(u, v) == params.s;
}

struct Provenance {
  enum class Kind { full, sampled, generic };
  Kind kind = Kind::generic;
  double p = 1.0;
  std::uint64_t seed = 0;
};

/// Explicit adjacency bit-matrix, one row of words_per_row() words per vertex.
///
/// Rows are padded with zero bits past vertex_count(). Graphs are built once and
/// then only read; a const DenseGraph may be shared freely between threads.
class DenseGraph {
 public:
  using Word = simd::Word;

  // Edgeless generic graph (no Johnson parameters).
  explicit DenseGraph(std::size_t vertex_count);

  // Edgeless graph on the vertex set of G(n, r, s); callers add the edges.
  DenseGraph(const JohnsonParams& params, Provenance provenance);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t words_per_row() const { return words_; }

  std::span<const Word> row(std::size_t v) const { return {bits_.data() + v * words_, words_}; }
  std::span<Word> mutable_row(std::size_t v) { return {bits_.data() + v * words_, words_}; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / simd::kWordBits] >> (v % simd::kWordBits)) & 1U;
  }

  // Sets both (u,v) and (v,u). Requires u != v.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t v) const;
  std::uint64_t edge_count() const;

  const std::optional<JohnsonParams>& params() const { return params_; }
  const Provenance& provenance() const { return provenance_; }

  // Hash of the vertex count and every adjacency word; provenance is not included.
  std::uint64_t adjacency_hash() const;

  // Symmetric with zero diagonal.
  bool is_well_formed() const;

 private:
  std::size_t vertex_count_;
  std::size_t words_;
  std::vector<Word> bits_;
  std::optional<JohnsonParams> params_;
  Provenance provenance_;
};

inline constexpr std::uint64_t kDefaultVertexBudget = 20000;

// All vertices of G(n, r, s) in rank order: result[i] == unrank(i, n, r).
std::vector<KSubset> johnson_vertices(const JohnsonParams& params);

// Exact G(n, r, s). Throws CapacityError when binom(n, r) > vertex_budget.
DenseGraph build_full(const JohnsonParams& params, std::uint64_t vertex_budget = kDefaultVertexBudget,
                      unsigned threads = 1);

// Keeps each edge of g independently with probability p. The decision for edge
// {u, v} is uniform01(draw(seed, edge_id(u, v))) < p, so the output depends only
// on (g, p, seed). Throws ContractViolation when g is itself sampled, and
// std::invalid_argument when p is outside [0, 1].
DenseGraph sample_subgraph(const DenseGraph& g, double p, std::uint64_t seed, unsigned threads = 1);

// Number of edges with both ends in L (duplicates in L are ignored).
// Throws std::out_of_range for an index >= vertex_count().
std::uint64_t edge_count_within(const DenseGraph& g, std::span<const Vertex> L);

// Same count through the implicit adjacency predicate; works past the dense budget.
std::uint64_t edge_count_within(const JohnsonParams& params, std::span<const KSubset> L);

// Ranks of the star S_{1..s+1}: every vertex containing {1, ..., s+1}.
std::vector<Vertex> star_vertices(const JohnsonParams& params);

// Edge-list text form: "# n r s p seed" comment, a values line "n r s p seed"
// (seed '-' for full graphs), then "u v" per edge with u < v in ascending order.
void export_edge_list(std::ostream& out, const DenseGraph& g);

// Inverse of export_edge_list. Rejects edges that are not edges of G(n, r, s).
DenseGraph import_edge_list(std::istream& in);

}  // namespace jlab
