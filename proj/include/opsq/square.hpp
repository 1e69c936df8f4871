#pragma once

#include <cstdint>
#include <tuple>

namespace opsq {

// One op-square occurrence: the fragment w[start..start+length-1] splits into
// two arms that are order-isomorphic but not equal as words. length is the
// total (even) length |uv|. Plain data shared by the enumerator and the
// brute-force reference; no logic lives here.
struct SquareOccurrence {
  int64_t start = 0;   // 1-based
  int64_t length = 0;  // even, >= 2

  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
  friend bool operator<(const SquareOccurrence& a, const SquareOccurrence& b) {
    return std::tie(a.start, a.length) < std::tie(b.start, b.length);
  }
};

}  // namespace opsq
