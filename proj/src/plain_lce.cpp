#include "opsq/plain_lce.hpp"

#include <algorithm>
#include <numeric>

namespace opsq {

PlainLce::PlainLce(const Sequence& s) : n_(s.size()) {
  const int64_t n = n_;
  sa_.resize(static_cast<size_t>(n));
  rank_.resize(static_cast<size_t>(n));
  std::iota(sa_.begin(), sa_.end(), 0);
  for (int64_t i = 0; i < n; ++i) rank_[static_cast<size_t>(i)] = s.chars[static_cast<size_t>(i)];

  // Doubling: sort by (rank[i], rank[i+h]) and re-rank until all distinct.
  std::vector<int32_t> tmp(static_cast<size_t>(n));
  for (int64_t h = 1;; h *= 2) {
    auto key = [&](int32_t i) {
      int32_t second = (i + h < n) ? rank_[static_cast<size_t>(i + h)] : -1;
      return std::pair<int32_t, int32_t>(rank_[static_cast<size_t>(i)], second);
    };
    std::sort(sa_.begin(), sa_.end(), [&](int32_t a, int32_t b) { return key(a) < key(b); });
    tmp[static_cast<size_t>(sa_[0])] = 0;
    for (int64_t r = 1; r < n; ++r) {
      tmp[static_cast<size_t>(sa_[static_cast<size_t>(r)])] =
          tmp[static_cast<size_t>(sa_[static_cast<size_t>(r - 1)])] +
          (key(sa_[static_cast<size_t>(r - 1)]) < key(sa_[static_cast<size_t>(r)]) ? 1 : 0);
    }
    rank_ = tmp;
    if (rank_[static_cast<size_t>(sa_[static_cast<size_t>(n - 1)])] == n - 1) break;
  }

  // Kasai common-prefix table.
  lcp_.assign(static_cast<size_t>(n), 0);
  int64_t h = 0;
  for (int64_t i = 0; i < n; ++i) {
    const int64_t r = rank_[static_cast<size_t>(i)];
    if (r == 0) {
      h = 0;
      continue;
    }
    const int64_t j = sa_[static_cast<size_t>(r - 1)];
    if (h > 0) --h;
    while (i + h < n && j + h < n &&
           s.chars[static_cast<size_t>(i + h)] == s.chars[static_cast<size_t>(j + h)])
      ++h;
    lcp_[static_cast<size_t>(r)] = static_cast<int32_t>(h);
  }

  // Sparse table for range minimum over lcp_.
  log2_.assign(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = 2; i <= n; ++i) log2_[static_cast<size_t>(i)] = log2_[static_cast<size_t>(i / 2)] + 1;
  const int32_t levels = (n >= 1) ? log2_[static_cast<size_t>(n)] + 1 : 1;
  sparse_.assign(static_cast<size_t>(levels), {});
  sparse_[0] = lcp_;
  for (int32_t k = 1; k < levels; ++k) {
    const int64_t span = int64_t{1} << k;
    sparse_[static_cast<size_t>(k)].resize(static_cast<size_t>(n - span + 1));
    for (int64_t i = 0; i + span <= n; ++i) {
      sparse_[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          std::min(sparse_[static_cast<size_t>(k - 1)][static_cast<size_t>(i)],
                   sparse_[static_cast<size_t>(k - 1)][static_cast<size_t>(i + span / 2)]);
    }
  }
}

int32_t PlainLce::range_min(int64_t lo, int64_t hi) const {
  const int32_t k = log2_[static_cast<size_t>(hi - lo + 1)];
  return std::min(sparse_[static_cast<size_t>(k)][static_cast<size_t>(lo)],
                  sparse_[static_cast<size_t>(k)][static_cast<size_t>(hi - (int64_t{1} << k) + 1)]);
}

int64_t PlainLce::lce(int64_t a, int64_t b) const {
  if (a == b) return n_ - a + 1;
  int64_t ra = rank_[static_cast<size_t>(a - 1)];
  int64_t rb = rank_[static_cast<size_t>(b - 1)];
  if (ra > rb) std::swap(ra, rb);
  return range_min(ra + 1, rb);
}

}  // namespace opsq
