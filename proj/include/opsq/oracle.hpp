#pragma once

#include <cstdint>
#include <vector>

#include "opsq/sequence.hpp"
#include "opsq/square.hpp"

namespace opsq {

// Brute-force reference implementations, straight from the definitions.
// Deliberately self-contained: no code shared with the production enumerator
// or the suffix tree beyond the Sequence type and the occurrence record, so
// equivalence testing against them is meaningful. Not built for speed.

inline constexpr int64_t kOracleDefaultCap = 2000;

// Every (start, even length) whose arms are order-isomorphic and differ as
// words. O(n^3). Throws when |s| exceeds the cap.
std::vector<SquareOccurrence> brute_force_enumerate(const Sequence& s,
                                                    int64_t cap = kOracleDefaultCap);

// Number of distinct words among the occurrences' fragments, by direct
// character comparison.
int64_t brute_force_distinct(const Sequence& s, int64_t cap = kOracleDefaultCap);

// All even lengths 2l such that s[1..2l] is an op-square.
std::vector<int64_t> brute_force_prefix_squares(const Sequence& s,
                                                int64_t cap = kOracleDefaultCap);

}  // namespace opsq
