#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace opsq {

using Symbol = int32_t;

// A string over the integer alphabet {1..sigma}, 1-based in the public API.
// sigma may exceed the number of distinct characters (callers that want the
// tight alphabet should build through make_sequence, which normalizes).
struct Sequence {
  std::vector<Symbol> chars;  // stored 0-based; use at1() for 1-based access
  int32_t sigma = 0;

  [[nodiscard]] int64_t size() const { return static_cast<int64_t>(chars.size()); }
  [[nodiscard]] Symbol at1(int64_t i) const { return chars[static_cast<size_t>(i - 1)]; }
};

// Remaps arbitrary positive integers to dense ranks 1..sigma, order-preserving
// on value; sigma becomes the number of distinct characters. Rank remapping
// changes neither order-isomorphism nor word-equality patterns.
Sequence make_sequence(const std::vector<int64_t>& raw);

// Wraps characters that are already in {1..sigma}; throws if any is not.
Sequence make_sequence_dense(std::vector<Symbol> chars, int32_t sigma);

// Maps each byte to its rank among the distinct bytes present (order-preserving
// on byte value). Whitespace bytes are skipped.
Sequence sequence_from_ascii(std::string_view bytes);

// Renders "c1 c2 c3 ..." (1-based character values).
std::string to_int_string(const Sequence& s);

}  // namespace opsq
