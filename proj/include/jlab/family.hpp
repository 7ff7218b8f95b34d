#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jlab/combinatorics.hpp"

namespace jlab {

/// Per-family quantities relative to the star S_{i,j} that meets the family most.
///
/// All subsets are stored in original labels. `relabel` maps the original
/// ground set onto [n] so that the winning center becomes {n-1, n} and the
/// remaining elements keep their relative order; inverse_relabel undoes it.
struct FamilyStats {
  int n = 0;
  int r = 0;
  std::size_t family_size = 0;
  std::pair<int, int> best_center{1, 2};  // i < j, lexicographically smallest among maximizers
  std::size_t d_value = 0;                // |A ∩ S_{i,j}|
  std::vector<KSubset> X;                 // members of A not containing both i and j
  std::size_t x = 0;
  std::vector<int> I_of_X;  // ascending; elements of members of X other than i, j
  std::size_t i_of_X = 0;
  std::vector<int> relabel;          // size n+1, index 0 unused
  std::vector<int> inverse_relabel;  // size n+1, index 0 unused

  // I(X) in relabeled coordinates, a subset of [n-2] (ascending).
  std::vector<int> I_relabeled() const;
  KSubset to_relabeled(const KSubset& original) const;
  KSubset to_original(const KSubset& relabeled) const;
};

// Exact d(A) by scanning every pair 1 <= i < j <= n. An empty family gives
// d = 0 and center (1, 2). Throws std::invalid_argument if a member is not an
// r-subset of [n] or members repeat.
FamilyStats analyze_family(int n, int r, std::span<const KSubset> A);

// Ess(A) = (A \ X) ∪ {v_l : l ∈ I(X)}, where v_l is the lowest-rank member of X
// containing l. Returned in ascending rank order.
std::vector<KSubset> build_ess(const FamilyStats& stats, std::span<const KSubset> A);

/// The sets B_1, ..., B_{i(X)} of the star-internal construction, in relabeled
/// coordinates (center {n-1, n}, l_1 < ... < l_{i(X)} the elements of I(X)).
struct BjFamily {
  int n = 0;
  int r = 0;
  std::vector<int> l;
  std::vector<KSubset> u_choices;            // u_j ∈ X with l_j ∈ u_j
  std::vector<std::vector<KSubset>> B_sets;  // B_j: every vertex meeting both conditions
};

// Builds every B_j maximally. u_j defaults to the lowest-rank (original labels)
// member of X containing l_j; `u_override`, when given, supplies u_j in
// relabeled coordinates instead.
// Throws UnsupportedParameters for r < 4, PreconditionError when i(X) = 0 or a
// member of X meets the center, std::invalid_argument for a bad override.
BjFamily build_bj(int n, int r, const FamilyStats& stats,
                  const std::optional<std::vector<KSubset>>& u_override = std::nullopt);

/// Result of checking the five properties the construction promises.
struct BjCheck {
  bool containment = true;  // {l_j, n-1, n} ⊂ v for v ∈ B_j
  bool avoidance = true;    // v avoids {l_1..l_{j-1}} ∪ (u_j \ {l_j})
  bool disjoint = true;     // B_j pairwise disjoint
  bool cardinality = true;  // |B_j| >= binom(n-r-j-1, r-3)
  bool cross_edge = true;   // |v ∩ u_j| = 1
  std::string first_failure;

  bool all() const { return containment && avoidance && disjoint && cardinality && cross_edge; }
};

BjCheck check_bj(const BjFamily& bj);

/// A random family meeting the hypotheses of the key lemma: |A| = binom(n-2, r-2) + 1,
/// the drawn center is the unique maximizing star, every member either contains
/// the center or avoids it, and d(A) > binom(ceil(t0*n) - 2, r - 2).
///
/// The outside part X is uniform over x-element sets of r-subsets of [n] \ {i, j},
/// with x uniform on [1, x_cap], x_cap = min(binom(n-2, r), binom(n-2, r-2) - binom(ceil(t0*n)-2, r-2));
/// the star part is a uniform subset of S_{i,j} of the remaining size. Draws
/// that leave a tie for the best star are rejected and redrawn.
struct AdmissibleInstance {
  std::vector<KSubset> family;
  std::pair<int, int> center;
  std::size_t x = 0;
};

AdmissibleInstance random_admissible_instance(int n, int r, std::uint64_t seed, double t0 = 0.75);

nlohmann::json to_json(const FamilyStats& stats);
nlohmann::json to_json(const BjFamily& bj);

}  // namespace jlab
