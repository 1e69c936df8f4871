#include "opsq/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "opsq/enumerator.hpp"
#include "opsq/oracle.hpp"

namespace opsq {

Sequence generate_lower_bound_family(int32_t sigma, int64_t k) {
  if (sigma < 1) throw std::invalid_argument("sigma must be positive");
  if (k < 1) throw std::invalid_argument("block length must be positive");
  std::vector<Symbol> chars;
  chars.reserve(static_cast<size_t>(sigma) * static_cast<size_t>(k));
  for (int32_t c = 1; c <= sigma; ++c)
    for (int64_t rep = 0; rep < k; ++rep) chars.push_back(c);
  return make_sequence_dense(std::move(chars), sigma);
}

int64_t expected_family_count(int32_t sigma, int64_t k) {
  if (sigma < 1) throw std::invalid_argument("sigma must be positive");
  if (k < 1) throw std::invalid_argument("block length must be positive");
  if (sigma <= 2) return k / 2;
  int64_t total = 0;
  const int64_t n = static_cast<int64_t>(sigma) * k;
  for (int64_t i = 1; i <= sigma / 2; ++i) total += n - 2 * i * k + 1;
  return total;
}

Sequence generate_random(int64_t n, int32_t sigma, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  if (sigma < 1 || sigma > n) throw std::invalid_argument("sigma must be in [1, n]");
  SplitMix64 rng{seed};
  std::vector<Symbol> chars(static_cast<size_t>(n));
  for (Symbol& c : chars) c = static_cast<Symbol>(1 + rng.next() % static_cast<uint64_t>(sigma));
  return make_sequence_dense(std::move(chars), sigma);
}

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

}  // namespace

BoundReport audit_bounds(const Sequence& s, const AuditOptions& options) {
  using Clock = std::chrono::steady_clock;
  BoundReport report;
  report.n = s.size();
  report.sigma = s.sigma;
  report.lowerBoundTarget = report.sigma * report.n / 12;
  report.upperBoundCap = report.n * (64 * report.sigma + 3);

  std::vector<double> buildTimes;
  std::vector<double> enumTimes;
  std::vector<SquareOccurrence> occurrences;
  EnumerateStats stats;
  double totalMs = 0.0;
  constexpr int64_t kMaxRepetitions = 64;
  for (int64_t rep = 0; rep < kMaxRepetitions; ++rep) {
    auto t0 = Clock::now();
    OpSquareIndexes ix(s);
    auto t1 = Clock::now();
    occurrences = enumerate_with_indexes(ix, &stats);
    auto t2 = Clock::now();
    double buildMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double enumMs = std::chrono::duration<double, std::milli>(t2 - t1).count();
    buildTimes.push_back(buildMs);
    enumTimes.push_back(enumMs);
    totalMs += buildMs + enumMs;
    if (rep + 1 >= options.minRepetitions && totalMs >= options.minTotalMs) break;
  }
  report.buildMs = median(buildTimes);
  report.enumMs = median(enumTimes);
  report.occurrenceCount = static_cast<int64_t>(occurrences.size());
  report.candidateTotal = stats.candidates;
  report.perSuffixCandidateMax = stats.maxPerSuffix;
  report.distinctCount = count_distinct_as_words(occurrences, s);

  if (report.distinctCount > report.upperBoundCap)
    throw std::runtime_error("distinct-as-words total exceeds the per-string cap");
  if (options.enforceLowerBound && report.distinctCount < report.lowerBoundTarget)
    throw std::runtime_error("distinct-as-words total below the family target");
  return report;
}

std::string to_jsonl(const BoundReport& report) {
  nlohmann::json line = {
      {"n", report.n},
      {"sigma", report.sigma},
      {"distinct", report.distinctCount},
      {"occurrences", report.occurrenceCount},
      {"candidates", report.candidateTotal},
      {"maxPerSuffix", report.perSuffixCandidateMax},
      {"lowerBoundTarget", report.lowerBoundTarget},
      {"upperBoundCap", report.upperBoundCap},
      {"t_build_ms", report.buildMs},
      {"t_enum_ms", report.enumMs},
  };
  return line.dump();
}

std::string csv_header() { return "n,sigma,distinct,occurrences,candidates,maxPerSuffix,t_build_ms,t_enum_ms"; }

std::string to_csv(const BoundReport& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%lld,%lld,%lld,%lld,%lld,%lld,%.3f,%.3f",
                static_cast<long long>(report.n), static_cast<long long>(report.sigma),
                static_cast<long long>(report.distinctCount),
                static_cast<long long>(report.occurrenceCount),
                static_cast<long long>(report.candidateTotal),
                static_cast<long long>(report.perSuffixCandidateMax), report.buildMs,
                report.enumMs);
  return buffer;
}

namespace {

// Compares the injected enumeration against the brute-force reference on the
// sequence built from `chars` over alphabet bound `sigma`.
bool outputs_match(const std::vector<Symbol>& chars, int32_t sigma, const EnumerateFn& fn,
                   std::vector<SquareOccurrence>* expectedOut,
                   std::vector<SquareOccurrence>* actualOut) {
  Sequence s = make_sequence_dense(chars, sigma);
  std::vector<SquareOccurrence> expected = brute_force_enumerate(s, s.size());
  std::vector<SquareOccurrence> actual = fn(s);
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  bool match = expected == actual;
  if (expectedOut != nullptr) *expectedOut = std::move(expected);
  if (actualOut != nullptr) *actualOut = std::move(actual);
  return match;
}

// Greedy endpoint shrink: drop characters from either end while the mismatch
// persists, so the reported counterexample is locally minimal.
EquivalenceResult report_mismatch(std::vector<Symbol> chars, int32_t sigma, int64_t casesRun,
                                  const EnumerateFn& fn) {
  bool improved = true;
  while (improved && chars.size() > 1) {
    improved = false;
    std::vector<Symbol> shorter(chars.begin(), chars.end() - 1);
    if (!outputs_match(shorter, sigma, fn, nullptr, nullptr)) {
      chars = std::move(shorter);
      improved = true;
      continue;
    }
    shorter.assign(chars.begin() + 1, chars.end());
    if (!outputs_match(shorter, sigma, fn, nullptr, nullptr)) {
      chars = std::move(shorter);
      improved = true;
    }
  }
  EquivalenceResult result;
  result.pass = false;
  result.casesRun = casesRun;
  result.counterexampleSigma = sigma;
  outputs_match(chars, sigma, fn, &result.expected, &result.actual);
  result.counterexample = std::move(chars);
  return result;
}

}  // namespace

EquivalenceResult exhaustive_equivalence(int64_t maxN, int32_t maxSigma, const EnumerateFn& fn) {
  EquivalenceResult result;
  for (int64_t n = 1; n <= maxN; ++n) {
    std::vector<Symbol> chars(static_cast<size_t>(n), 1);
    for (;;) {
      ++result.casesRun;
      if (!outputs_match(chars, maxSigma, fn, nullptr, nullptr))
        return report_mismatch(std::move(chars), maxSigma, result.casesRun, fn);
      int64_t pos = n - 1;
      while (pos >= 0 && chars[static_cast<size_t>(pos)] == maxSigma) {
        chars[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++chars[static_cast<size_t>(pos)];
    }
  }
  return result;
}

EquivalenceResult random_equivalence(int64_t cases, int64_t maxN, int32_t maxSigma, uint64_t seed,
                                     const EnumerateFn& fn) {
  EquivalenceResult result;
  SplitMix64 rng{seed};
  for (int64_t c = 0; c < cases; ++c) {
    int64_t n = 1 + static_cast<int64_t>(rng.next() % static_cast<uint64_t>(maxN));
    int32_t sigma = 1 + static_cast<int32_t>(rng.next() % static_cast<uint64_t>(maxSigma));
    std::vector<Symbol> chars(static_cast<size_t>(n));
    for (Symbol& ch : chars)
      ch = static_cast<Symbol>(1 + rng.next() % static_cast<uint64_t>(sigma));
    ++result.casesRun;
    if (!outputs_match(chars, sigma, fn, nullptr, nullptr))
      return report_mismatch(std::move(chars), sigma, result.casesRun, fn);
  }
  return result;
}

}  // namespace opsq
