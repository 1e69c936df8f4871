#include "opsq/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace opsq {

namespace {

// Per-position pair (earlier-smaller count, earlier-equal count) for every
// suffix, derived by its own recurrence rather than any shared machinery:
// going from the suffix at i+1 to the suffix at i prepends w[i], which bumps
// the count at offset j (j >= 2) exactly when w[i] is smaller than / equal to
// the character at that offset.
struct SuffixCodes {
  int64_t n = 0;
  // codes[i-1] = code of w[i..n]; codes[i-1][j-1] = pair at offset j.
  std::vector<std::vector<std::pair<int32_t, int32_t>>> codes;
};

SuffixCodes all_suffix_codes(const Sequence& s) {
  const int64_t n = s.size();
  SuffixCodes sc;
  sc.n = n;
  sc.codes.resize(static_cast<size_t>(n));
  sc.codes[static_cast<size_t>(n - 1)] = {{0, 0}};
  for (int64_t i = n - 1; i >= 1; --i) {
    const auto& prev = sc.codes[static_cast<size_t>(i)];
    auto& cur = sc.codes[static_cast<size_t>(i - 1)];
    cur.resize(prev.size() + 1);
    cur[0] = {0, 0};
    const Symbol c = s.at1(i);
    for (size_t j = 0; j < prev.size(); ++j) {
      const Symbol d = s.at1(i + 1 + static_cast<int64_t>(j));
      cur[j + 1] = {prev[j].first + (c < d ? 1 : 0), prev[j].second + (c == d ? 1 : 0)};
    }
  }
  return sc;
}

// Arms w[i..i+len-1] and w[i2..i2+len-1] are order-isomorphic iff the first
// len pairs of the two suffix codes agree (the pairs only look left within
// the fragment).
bool arms_isomorphic(const SuffixCodes& sc, int64_t i, int64_t i2, int64_t len) {
  const auto& a = sc.codes[static_cast<size_t>(i - 1)];
  const auto& b = sc.codes[static_cast<size_t>(i2 - 1)];
  for (int64_t j = 0; j < len; ++j) {
    if (a[static_cast<size_t>(j)] != b[static_cast<size_t>(j)]) return false;
  }
  return true;
}

bool arms_equal_words(const Sequence& s, int64_t i, int64_t i2, int64_t len) {
  return std::memcmp(s.chars.data() + (i - 1), s.chars.data() + (i2 - 1),
                     static_cast<size_t>(len) * sizeof(Symbol)) == 0;
}

void check_cap(const Sequence& s, int64_t cap) {
  if (s.size() > cap) throw std::length_error("length cap exceeded");
}

}  // namespace

std::vector<SquareOccurrence> brute_force_enumerate(const Sequence& s, int64_t cap) {
  check_cap(s, cap);
  const int64_t n = s.size();
  const SuffixCodes sc = all_suffix_codes(s);
  std::vector<SquareOccurrence> out;
  for (int64_t i = 1; i <= n; ++i) {
    for (int64_t len = 1; i + 2 * len - 1 <= n; ++len) {
      if (arms_isomorphic(sc, i, i + len, len) && !arms_equal_words(s, i, i + len, len)) {
        out.push_back(SquareOccurrence{i, 2 * len});
      }
    }
  }
  return out;
}

int64_t brute_force_distinct(const Sequence& s, int64_t cap) {
  const auto occs = brute_force_enumerate(s, cap);
  // Group by length, then dedupe by direct word comparison.
  std::vector<SquareOccurrence> byLen(occs);
  std::sort(byLen.begin(), byLen.end(), [&](const SquareOccurrence& a, const SquareOccurrence& b) {
    if (a.length != b.length) return a.length < b.length;
    return std::lexicographical_compare(
        s.chars.begin() + (a.start - 1), s.chars.begin() + (a.start - 1 + a.length),
        s.chars.begin() + (b.start - 1), s.chars.begin() + (b.start - 1 + b.length));
  });
  int64_t distinct = 0;
  for (size_t q = 0; q < byLen.size(); ++q) {
    if (q == 0 || byLen[q].length != byLen[q - 1].length ||
        !arms_equal_words(s, byLen[q - 1].start, byLen[q].start, byLen[q].length)) {
      ++distinct;
    }
  }
  return distinct;
}

std::vector<int64_t> brute_force_prefix_squares(const Sequence& s, int64_t cap) {
  check_cap(s, cap);
  const int64_t n = s.size();
  const SuffixCodes sc = all_suffix_codes(s);
  std::vector<int64_t> out;
  for (int64_t len = 1; 2 * len <= n; ++len) {
    if (arms_isomorphic(sc, 1, 1 + len, len) && !arms_equal_words(s, 1, 1 + len, len)) {
      out.push_back(2 * len);
    }
  }
  return out;
}

}  // namespace opsq
