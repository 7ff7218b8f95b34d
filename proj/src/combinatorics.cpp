#include "jlab/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "jlab/errors.hpp"

namespace jlab {

BinomialTable::BinomialTable(int a_max) : a_max_(a_max) {
  if (a_max < 0) throw std::invalid_argument("BinomialTable: a_max must be non-negative");
  rows_.resize(static_cast<std::size_t>(a_max) + 1);
  for (int a = 0; a <= a_max; ++a) {
    auto& row = rows_[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(a) + 1);
    row.front() = 1;
    row.back() = 1;
    const auto& prev = rows_[static_cast<std::size_t>(a > 0 ? a - 1 : 0)];
    for (int b = 1; b < a; ++b) {
      row[static_cast<std::size_t>(b)] = prev[static_cast<std::size_t>(b - 1)] + prev[static_cast<std::size_t>(b)];
    }
  }
}

const BinomialTable& shared_binomial_table() {
  static const BinomialTable table;
  return table;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  const auto& table = shared_binomial_table();
  if (a <= table.a_max()) return table.at(static_cast<int>(a), static_cast<int>(b));
  const long long k = std::min(b, a - b);
  BigInt result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= (a - k + j);
    result /= j;
  }
  return result;
}

BigInt binomial_poly(long long a, long long b) {
  if (b < 0) return 0;
  if (a >= 0) return binomial(a, b);
  BigInt num = 1;
  BigInt den = 1;
  for (long long j = 0; j < b; ++j) {
    num *= (a - j);
    den *= (j + 1);
  }
  return num / den;
}

namespace {

constexpr int kSmallMax = 67;  // binom(67, 33) < 2^64

struct SmallPascal {
  std::array<std::array<std::uint64_t, kSmallMax + 1>, kSmallMax + 1> v{};
  constexpr SmallPascal() {
    for (int a = 0; a <= kSmallMax; ++a) {
      v[a][0] = 1;
      for (int b = 1; b <= a; ++b) v[a][b] = v[a - 1][b - 1] + (b <= a - 1 ? v[a - 1][b] : 0);
    }
  }
};

constexpr SmallPascal kSmall{};

}  // namespace

std::uint64_t binomial_u64(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (a <= kSmallMax) return kSmall.v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  const long long k = std::min(b, a - b);
  unsigned __int128 result = 1;
  for (long long j = 1; j <= k; ++j) {
    // result * (a-k+j) / j is exact at every step; keep it inside 128 bits.
    result = result * static_cast<unsigned __int128>(a - k + j);
    result /= static_cast<unsigned __int128>(j);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

double log_of(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_binomial(long long a, long long b) { return log_of(binomial(a, b)); }

double to_double(const BigInt& value) { return value.convert_to<double>(); }

KSubset::KSubset(int ground_n, std::vector<int> elements) : ground_n_(ground_n), elements_(std::move(elements)) {
  if (ground_n < 1) throw std::invalid_argument("KSubset: ground set size must be >= 1");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const int e = elements_[k];
    if (e < 1 || e > ground_n) {
      throw std::invalid_argument("KSubset: element " + std::to_string(e) + " outside [1," + std::to_string(ground_n) + "]");
    }
    if (k > 0 && elements_[k - 1] >= e) throw std::invalid_argument("KSubset: elements must be strictly increasing");
    if (ground_n <= kMaskLimit) mask_ |= Mask{1} << (e - 1);
  }
}

KSubset KSubset::from_unsorted(int ground_n, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  return KSubset(ground_n, std::move(elements));
}

bool KSubset::contains(int e) const {
  if (e < 1 || e > ground_n_) return false;
  if (has_mask()) return (mask_ >> (e - 1)) & 1;
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::string KSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < elements_.size(); ++k) out << (k ? "," : "") << elements_[k];
  out << '}';
  return out.str();
}

int intersection_size(const KSubset& u, const KSubset& v) {
  if (u.ground_n() != v.ground_n()) throw ContractViolation("intersection_size: subsets over different ground sets");
  if (u.has_mask()) {
    const KSubset::Mask m = u.mask() & v.mask();
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
  }
  return intersection_size_merge(u, v);
}

int intersection_size_merge(const KSubset& u, const KSubset& v) {
  if (u.ground_n() != v.ground_n()) throw ContractViolation("intersection_size: subsets over different ground sets");
  auto a = u.elements();
  auto b = v.elements();
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t rank(const KSubset& subset) {
  // Validates that binom(n, r) itself fits.
  (void)binomial_u64(subset.ground_n(), subset.size());
  std::uint64_t index = 0;
  auto elems = subset.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    index += binomial_u64(elems[k] - 1, static_cast<long long>(k) + 1);
  }
  return index;
}

KSubset unrank(std::uint64_t index, int n, int r) {
  if (n < 1 || r < 0 || r > n) throw std::out_of_range("unrank: need 0 <= r <= n, n >= 1");
  const std::uint64_t total = binomial_u64(n, r);
  if (index >= total) {
    throw std::out_of_range("unrank: index " + std::to_string(index) + " outside [0," + std::to_string(total) + ")");
  }
  std::vector<int> elems(static_cast<std::size_t>(r));
  // Colex: the largest element is the largest c with binom(c, r) <= index; continue downward.
  long long c = n - 1;
  for (int k = r; k >= 1; --k) {
    while (binomial_u64(c, k) > index) --c;
    elems[static_cast<std::size_t>(k - 1)] = static_cast<int>(c) + 1;
    index -= binomial_u64(c, k);
    --c;
  }
  return KSubset(n, std::move(elems));
}

}  // namespace jlab
