#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jlab {

using BigInt = boost::multiprecision::cpp_int;

/// Memoized Pascal triangle of exact binomial coefficients for 0 <= b <= a <= a_max.
///
/// Built eagerly in the constructor; afterwards the table is immutable and may
/// be read concurrently.
class BinomialTable {
 public:
  static constexpr int kDefaultMax = 512;

  explicit BinomialTable(int a_max = kDefaultMax);

  int a_max() const { return a_max_; }

  // Requires 0 <= b <= a <= a_max.
  const BigInt& at(int a, int b) const { return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

 private:
  int a_max_;
  std::vector<std::vector<BigInt>> rows_;
};

// Process-wide table, initialized once on first use (thread-safe static).
const BinomialTable& shared_binomial_table();

/// Exact binom(a, b) with the convention binom(a, b) = 0 whenever a < b or b < 0.
/// Any negative a is therefore 0; binom(a, 0) = 1 for a >= 0.
BigInt binomial(long long a, long long b);

// Polynomial extension a(a-1)...(a-b+1)/b! for b >= 0 (0 for b < 0). Agrees
// with binomial() for a >= 0 and is nonzero for negative a; under it the
// Vandermonde convolution holds for every integer upper argument.
BigInt binomial_poly(long long a, long long b);

// binom(a, b) as a 64-bit value; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(long long a, long long b);

// Natural log of a positive big integer, accurate to double precision for any size.
double log_of(const BigInt& value);

// ln binom(a, b); -infinity when the coefficient is zero.
double log_binomial(long long a, long long b);

// Nearest double (may be +inf for huge values).
double to_double(const BigInt& value);

/// A sorted r-element subset of [n] = {1, ..., n}.
class KSubset {
 public:
  using Mask = unsigned __int128;
  static constexpr int kMaskLimit = 128;

  KSubset() = default;
  // elements must be strictly increasing and lie in [1, ground_n]; throws std::invalid_argument otherwise.
  KSubset(int ground_n, std::vector<int> elements);

  // Sorts first; still rejects duplicates and out-of-range values.
  static KSubset from_unsorted(int ground_n, std::vector<int> elements);

  int ground_n() const { return ground_n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  int operator[](std::size_t k) const { return elements_[k]; }

  bool contains(int e) const;

  // The 128-bit mask fast path exists only for ground_n <= 128. Bit e-1 is set for element e.
  bool has_mask() const { return ground_n_ <= kMaskLimit; }
  Mask mask() const { return mask_; }

  std::string to_string() const;

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.ground_n_ == b.ground_n_ && a.elements_ == b.elements_;
  }

 private:
  int ground_n_ = 0;
  std::vector<int> elements_;
  Mask mask_ = 0;
};

// |u ∩ v|. Uses the mask fast path when available. Throws ContractViolation
// when the ground sets differ.
int intersection_size(const KSubset& u, const KSubset& v);

// Same value via a sorted merge; never uses masks.
int intersection_size_merge(const KSubset& u, const KSubset& v);

// Colexicographic rank: sum over k of binom(e_k - 1, k) for the sorted elements e_1 < ... < e_r.
// Throws std::overflow_error when binom(n, r) does not fit in 64 bits.
std::uint64_t rank(const KSubset& subset);

// Inverse of rank. Throws std::out_of_range unless 0 <= index < binom(n, r).
KSubset unrank(std::uint64_t index, int n, int r);

}  // namespace jlab
