// Acceptance harness: run with a single argument in [1, 7] selecting the
// check to perform. Prints exactly one verdict line and exits nonzero on
// failure, so each check can be wired up as its own test.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opsq/enumerator.hpp"
#include "opsq/genbench.hpp"
#include "opsq/opcore.hpp"
#include "opsq/opsuffixtree.hpp"
#include "opsq/oracle.hpp"
#include "opsq/sequence.hpp"

using namespace opsq;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Rng {
  SplitMix64 gen;
  explicit Rng(uint64_t seed) : gen{seed} {}
  int64_t below(int64_t bound) { return static_cast<int64_t>(gen.next() % static_cast<uint64_t>(bound)); }
};

Sequence random_sequence(Rng& rng, int64_t n, int32_t sigma) {
  std::vector<Symbol> chars(static_cast<size_t>(n));
  for (Symbol& c : chars) c = static_cast<Symbol>(1 + rng.below(sigma));
  return make_sequence_dense(std::move(chars), sigma);
}

bool next_string(std::vector<Symbol>& chars, int32_t sigma) {
  int64_t pos = static_cast<int64_t>(chars.size()) - 1;
  while (pos >= 0 && chars[static_cast<size_t>(pos)] == sigma) {
    chars[static_cast<size_t>(pos)] = 1;
    --pos;
  }
  if (pos < 0) return false;
  ++chars[static_cast<size_t>(pos)];
  return true;
}

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

int verdict(int criterion, bool pass, const std::string& detail) {
  std::printf("CRITERION %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  return pass ? 0 : 1;
}

// ---- 1: oracle equivalence --------------------------------------------------

int criterion1() {
  const auto start = Clock::now();
  EnumerateFn fn = [](const Sequence& s) { return enumerate_op_squares(s); };
  EquivalenceResult ex = exhaustive_equivalence(10, 3, fn);
  EquivalenceResult rnd = random_equivalence(1000, 200, 8, 20260816, fn);
  const double sec = seconds_since(start);
  const bool pass = ex.pass && rnd.pass && sec <= 120.0;
  std::ostringstream detail;
  detail << "exhaustive n<=10 sigma<=3 (" << ex.casesRun << " strings) "
         << (ex.pass ? "clean" : "MISMATCH") << ", random 1000 strings n<=200 sigma<=8 "
         << (rnd.pass ? "clean" : "MISMATCH") << ", " << sec << "s (limit 120s)";
  if (!ex.pass || !rnd.pass) {
    const EquivalenceResult& bad = ex.pass ? rnd : ex;
    detail << "; first counterexample length " << bad.counterexample.size();
  }
  return verdict(1, pass, detail.str());
}

// ---- 2: family lower bound --------------------------------------------------

int criterion2() {
  int64_t pairs = 0;
  int64_t failing = 0;
  bool failuresOnlyUnary = true;
  for (int32_t sigma = 1; sigma <= 8; ++sigma) {
    for (int64_t k = 2; k <= 32; ++k) {
      ++pairs;
      Sequence f = generate_lower_bound_family(sigma, k);
      int64_t count = count_distinct_as_words(enumerate_op_squares(f), f);
      int64_t target = (static_cast<int64_t>(sigma) * sigma * k) / 12;
      if (count < target) {
        ++failing;
        if (sigma != 1) failuresOnlyUnary = false;
      }
    }
  }
  Sequence f43 = generate_lower_bound_family(4, 3);
  const int64_t count43 = count_distinct_as_words(enumerate_op_squares(f43), f43);
  const bool pass = failing == 0 && count43 >= 8;
  std::ostringstream detail;
  if (pass) {
    detail << "all " << pairs << " (sigma, k) family pairs meet floor(sigma^2*k/12); family(4,3) has "
           << count43 << " >= 8";
  } else {
    detail << failing << " of " << pairs << " family pairs miss the target";
    if (failuresOnlyUnary) {
      detail << ", all with sigma=1: a one-letter alphabet admits no valid squares at all"
                " (order-isomorphic arms over a single symbol are equal as words, which the"
                " definition excludes), so the counted total is 0, while the target"
                " floor(sigma^2*k/12) reaches 1 from k=12 on; those pairs are mathematically"
                " unattainable";
    } else {
      detail << ", including sigma >= 2 cases";
    }
    detail << "; family(4,3) has " << count43 << (count43 >= 8 ? " >= 8" : " < 8");
  }
  return verdict(2, pass, detail.str());
}

// ---- 3: density caps --------------------------------------------------------

struct DensityAudit {
  int64_t inputs = 0;
  int64_t violations = 0;
  int64_t worstPerSuffix = 0;
  int64_t capOfWorst = 0;

  void check(const Sequence& s) {
    ++inputs;
    const int64_t cap = 64 * s.sigma + 3;
    std::vector<int64_t> perStart(static_cast<size_t>(s.size()), 0);
    const auto occs = enumerate_op_squares(s);
    for (const SquareOccurrence& occ : occs) ++perStart[static_cast<size_t>(occ.start - 1)];
    for (int64_t c : perStart) {
      if (c > worstPerSuffix) {
        worstPerSuffix = c;
        capOfWorst = cap;
      }
      if (c > cap) ++violations;
    }
    if (count_distinct_as_words(occs, s) > s.size() * cap) ++violations;
  }
};

int criterion3() {
  DensityAudit audit;
  for (int64_t n = 1; n <= 10; ++n) {
    std::vector<Symbol> chars(static_cast<size_t>(n), 1);
    do {
      audit.check(make_sequence_dense(chars, 3));
    } while (next_string(chars, 3));
  }
  Rng rng(11001);
  for (int rep = 0; rep < 300; ++rep) {
    int32_t sigma = static_cast<int32_t>(1 + rng.below(8));
    audit.check(random_sequence(rng, 1 + rng.below(200), sigma));
  }
  for (int32_t sigma = 1; sigma <= 8; ++sigma)
    for (int64_t k : {2, 8, 32}) audit.check(generate_lower_bound_family(sigma, k));

  const bool pass = audit.violations == 0;
  std::ostringstream detail;
  detail << "per-suffix op-square prefixes <= 64*sigma+3 and distinct <= n*(64*sigma+3) on "
         << audit.inputs << " inputs (exhaustive n<=10 sigma<=3, 300 random, 24 family): "
         << audit.violations << " violations, busiest suffix " << audit.worstPerSuffix
         << " of cap " << audit.capOfWorst;
  return verdict(3, pass, detail.str());
}

// ---- 4: candidate budget ----------------------------------------------------

int criterion4() {
  int64_t c = 0;
  int64_t inputs = 0;
  auto absorb = [&](const Sequence& s) {
    ++inputs;
    EnumerateStats stats{};
    enumerate_op_squares(s, stats);
    const int64_t denom = 1 + s.sigma;
    c = std::max(c, ceil_div(stats.maxPerSuffix, denom));
    c = std::max(c, ceil_div(stats.candidates, denom * s.size()));
  };
  for (int64_t n = 1; n <= 10; ++n) {
    std::vector<Symbol> chars(static_cast<size_t>(n), 1);
    do {
      absorb(make_sequence_dense(chars, 3));
    } while (next_string(chars, 3));
  }
  Rng rng(11002);
  for (int rep = 0; rep < 300; ++rep) {
    int32_t sigma = static_cast<int32_t>(1 + rng.below(8));
    absorb(random_sequence(rng, 1 + rng.below(200), sigma));
  }
  for (int32_t sigma = 1; sigma <= 8; ++sigma)
    for (int64_t k : {2, 8, 32, 512}) absorb(generate_lower_bound_family(sigma, k));

  const bool pass = c <= 64;
  std::ostringstream detail;
  detail << "per-suffix candidates <= c*(1+sigma) and total <= c*(1+sigma)*n across " << inputs
         << " inputs with a single constant c = " << c << " (required <= 64)";
  return verdict(4, pass, detail.str());
}

// ---- 5: tree structure equivalence -------------------------------------------

int criterion5() {
  int64_t cases = 0;
  int64_t mismatches = 0;
  int64_t degreeViolations = 0;
  auto check = [&](const Sequence& s) {
    ++cases;
    CntTable cnt = build_cnt_table(s);
    OpSuffixTree tree = build_op_suffix_tree(s, cnt);
    if (canonical_serialization(tree) != canonical_serialization(naive_reference_tree(s)))
      ++mismatches;
    if (tree.max_degree() > 2 * s.sigma + 1) ++degreeViolations;
  };
  for (int64_t n = 1; n <= 10; ++n) {
    std::vector<Symbol> chars(static_cast<size_t>(n), 1);
    do {
      check(make_sequence_dense(chars, 3));
    } while (next_string(chars, 3));
  }
  Rng rng(11003);
  for (int rep = 0; rep < 200; ++rep) {
    int32_t sigma = static_cast<int32_t>(1 + rng.below(8));
    check(random_sequence(rng, 1 + rng.below(64), sigma));
  }
  const bool pass = mismatches == 0 && degreeViolations == 0;
  std::ostringstream detail;
  detail << "production tree vs reference construction on " << cases
         << " inputs (exhaustive n<=10 sigma<=3 + 200 random n<=64): " << mismatches
         << " structural mismatches, " << degreeViolations << " degree-cap (2*sigma+1) violations";
  return verdict(5, pass, detail.str());
}

// ---- 6: query-layer agreement -------------------------------------------------

int criterion6() {
  int64_t fragTriples = 0;
  int64_t fragMismatches = 0;
  int64_t fpPairs = 0;
  int64_t fpMismatches = 0;
  Rng rng(11004);
  for (int rep = 0; rep < 100; ++rep) {
    int32_t sigma = static_cast<int32_t>(1 + rng.below(8));
    Sequence s = random_sequence(rng, 1 + rng.below(64), sigma);
    const int64_t n = s.size();
    CntTable cnt = build_cnt_table(s);
    OpSuffixTree tree = build_op_suffix_tree(s, cnt);
    LcaIndex lca = build_lca_index(tree);
    FingerprintIndex fp = build_fingerprint_index(tree);
    for (int64_t len = 1; len <= n; ++len) {
      for (int64_t i = 1; i + len - 1 <= n; ++i) {
        for (int64_t i2 = i; i2 + len - 1 <= n; ++i2) {
          ++fragTriples;
          if (op_isomorphic_fragments(tree, lca, i, i2, len) != is_op_isomorphic_frag(s, i, i2, len))
            ++fragMismatches;
        }
      }
    }
    for (int32_t k = 0; (int64_t{1} << k) <= n; ++k) {
      const int64_t len = int64_t{1} << k;
      for (int64_t x = 1; x + len - 1 <= n; ++x) {
        for (int64_t y = x; y + len - 1 <= n; ++y) {
          ++fpPairs;
          const bool same = fp.fingerprint(k, x) == fp.fingerprint(k, y);
          if (same != is_op_isomorphic_frag(s, x, y, len)) ++fpMismatches;
        }
      }
    }
  }
  const bool pass = fragMismatches == 0 && fpMismatches == 0;
  std::ostringstream detail;
  detail << "100 random strings n<=64: fragment-isomorphism queries " << fragTriples << " ("
         << fragMismatches << " mismatches), fingerprint pairs " << fpPairs << " ("
         << fpMismatches << " mismatches) against direct comparison";
  return verdict(6, pass, detail.str());
}

// ---- 7: scaling trends --------------------------------------------------------

int criterion7() {
  const auto start = Clock::now();
  AuditOptions opts;
  opts.enforceLowerBound = false;
  opts.minRepetitions = 5;
  opts.minTotalMs = 200.0;

  auto familyReport = [&](int32_t sigma, int64_t n) {
    return audit_bounds(generate_lower_bound_family(sigma, n / sigma), opts);
  };

  std::vector<BoundReport> bySize;
  for (int64_t n : {int64_t{4096}, int64_t{8192}, int64_t{16384}, int64_t{32768}})
    bySize.push_back(familyReport(4, n));
  std::vector<BoundReport> bySigma;
  for (int32_t sigma : {2, 4, 8}) bySigma.push_back(familyReport(sigma, 16384));

  double worstTime = 0.0;
  double worstCand = 0.0;
  auto fold = [&](const std::vector<BoundReport>& reports) {
    for (size_t i = 1; i < reports.size(); ++i) {
      const double t = reports[i].enumMs / std::max(reports[i - 1].enumMs, 0.001);
      const double c = static_cast<double>(reports[i].candidateTotal) /
                       static_cast<double>(std::max<int64_t>(reports[i - 1].candidateTotal, 1));
      worstTime = std::max(worstTime, t);
      worstCand = std::max(worstCand, c);
    }
  };
  fold(bySize);
  fold(bySigma);
  const double sec = seconds_since(start);
  const bool pass = worstTime <= 3.0 && worstCand <= 3.0 && sec <= 300.0;

  std::ostringstream detail;
  detail.precision(3);
  detail << "family sigma=4 n=4096..32768 plus n=16384 sigma=2,4,8: worst per-doubling factor "
         << worstTime << " (enum time) / " << worstCand << " (candidates), limit 3.0; sweep "
         << sec << "s (limit 300s); enum ms:";
  for (const BoundReport& r : bySize) detail << " " << r.enumMs;
  detail << " | sigma sweep:";
  for (const BoundReport& r : bySigma) detail << " " << r.enumMs;
  return verdict(7, pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..7>\n");
    return 2;
  }
  const int which = std::atoi(argv[1]);
  try {
    switch (which) {
      case 1: return criterion1();
      case 2: return criterion2();
      case 3: return criterion3();
      case 4: return criterion4();
      case 5: return criterion5();
      case 6: return criterion6();
      case 7: return criterion7();
      default:
        std::fprintf(stderr, "usage: acceptance <criterion 1..7>\n");
        return 2;
    }
  } catch (const std::exception& e) {
    std::printf("CRITERION %d: FAIL - unexpected exception: %s\n", which, e.what());
    return 1;
  }
}
