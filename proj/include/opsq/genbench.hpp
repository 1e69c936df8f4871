#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "opsq/sequence.hpp"
#include "opsq/square.hpp"

namespace opsq {

// sigma blocks of k equal characters each: 1^k 2^k ... sigma^k. This family
// carries ~sigma*n/12 op-squares that are distinct as words, which makes it
// the stress input for the lower-bound audits.
Sequence generate_lower_bound_family(int32_t sigma, int64_t k);

// Closed-form lower bound on the family's distinct op-square count:
// sum over i = 1..floor(sigma/2) of (sigma*k - 2*i*k + 1) when sigma >= 3,
// floor(k/2) when sigma <= 2.
int64_t expected_family_count(int32_t sigma, int64_t k);

// Deterministic pseudo-random sequence over [1, sigma]; splitmix64 stream,
// reproducible bit-for-bit for a given (n, sigma, seed).
Sequence generate_random(int64_t n, int32_t sigma, uint64_t seed);

struct SplitMix64 {
  uint64_t state = 0;
  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

struct BoundReport {
  int64_t n = 0;
  int64_t sigma = 0;
  int64_t distinctCount = 0;
  int64_t occurrenceCount = 0;
  int64_t candidateTotal = 0;
  int64_t perSuffixCandidateMax = 0;
  int64_t lowerBoundTarget = 0;  // floor(sigma * n / 12)
  int64_t upperBoundCap = 0;     // n * (64 * sigma + 3)
  double buildMs = 0.0;          // index construction (median over repetitions)
  double enumMs = 0.0;           // candidate generation + verification (median)
};

struct AuditOptions {
  // The lower-bound target only applies to family inputs (sigma >= 3, or
  // sigma <= 2 with k >= 2); the cap is checked unconditionally.
  bool enforceLowerBound = false;
  int64_t minRepetitions = 3;
  double minTotalMs = 200.0;  // repeat timing until this much has accumulated
};

// Runs the enumeration, fills the report, and enforces the bound checks;
// timings are medians over adaptive repetitions. Throws std::runtime_error
// when an enforced bound fails.
BoundReport audit_bounds(const Sequence& s, const AuditOptions& options = {});

std::string to_jsonl(const BoundReport& report);
std::string csv_header();
std::string to_csv(const BoundReport& report);

// Oracle-equivalence harness. The enumeration under test is injectable so a
// deliberately broken variant can prove the harness catches mismatches.
using EnumerateFn = std::function<std::vector<SquareOccurrence>(const Sequence&)>;

struct EquivalenceResult {
  bool pass = true;
  int64_t casesRun = 0;
  std::vector<Symbol> counterexample;  // minimal failing string, empty when pass
  int32_t counterexampleSigma = 0;     // alphabet bound the failing case was built with
  std::vector<SquareOccurrence> expected;
  std::vector<SquareOccurrence> actual;
};

// Every string with length in [1, maxN] over [1, maxSigma].
EquivalenceResult exhaustive_equivalence(int64_t maxN, int32_t maxSigma, const EnumerateFn& fn);

// `cases` random strings, n uniform in [1, maxN], sigma uniform in [1, maxSigma].
EquivalenceResult random_equivalence(int64_t cases, int64_t maxN, int32_t maxSigma, uint64_t seed,
                                     const EnumerateFn& fn);

}  // namespace opsq
