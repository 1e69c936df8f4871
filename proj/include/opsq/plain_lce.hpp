#pragma once

#include <cstdint>
#include <vector>

#include "opsq/sequence.hpp"

namespace opsq {

// Longest-common-extension queries over the raw character string (plain word
// equality, not order-isomorphism): suffix ranking + common-prefix table +
// range minimum. Build O(n log^2 n), queries O(1). Used for the "arms differ
// as words" half of op-square verification and for distinct-as-words
// deduplication.
class PlainLce {
 public:
  PlainLce() = default;
  explicit PlainLce(const Sequence& s);

  // Length of the longest common prefix of w[a..n] and w[b..n]; 1-based.
  [[nodiscard]] int64_t lce(int64_t a, int64_t b) const;

  // Lexicographic rank of the suffix starting at a (1-based suffix order).
  [[nodiscard]] int64_t rank(int64_t a) const { return rank_[static_cast<size_t>(a - 1)]; }

  [[nodiscard]] int64_t size() const { return n_; }

 private:
  int64_t n_ = 0;
  std::vector<int32_t> sa_;    // sa_[r] = start (0-based) of rank-r suffix
  std::vector<int32_t> rank_;  // inverse of sa_
  std::vector<int32_t> lcp_;   // lcp_[r] = LCP(sa_[r-1], sa_[r]), lcp_[0] = 0
  std::vector<std::vector<int32_t>> sparse_;  // range-minimum over lcp_
  std::vector<int32_t> log2_;

  [[nodiscard]] int32_t range_min(int64_t lo, int64_t hi) const;  // inclusive, over lcp_
};

}  // namespace opsq
