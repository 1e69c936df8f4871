#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "opsq/opcore.hpp"
#include "opsq/opsuffixtree.hpp"
#include "opsq/plain_lce.hpp"
#include "opsq/sequence.hpp"
#include "opsq/square.hpp"

namespace opsq {

// Leftmost occurrences of the suffix w[i..n]: the positions p >= i whose
// character does not appear in w[i..p-1]. At most sigma of them.
struct LeftmostState {
  int64_t suffix = 0;               // i
  std::vector<int64_t> positions;   // absolute, ascending
};

// Sweep i = n..1 maintaining the leftmost-occurrence list in O(sigma) per
// step; all per-suffix lists are kept (flattened), together with iprev:
// iprev[p] = largest q < p with w[q] = w[p], or 0.
struct LeftmostScan {
  std::vector<int64_t> iprev;       // index p-1 for position p
  std::vector<int64_t> offsets;     // slice [offsets[i-1], offsets[i]) of positions
  std::vector<int64_t> positions;   // ascending within each slice

  [[nodiscard]] LeftmostState state(int64_t i) const;
  [[nodiscard]] int64_t iprev_at(int64_t p) const { return iprev[static_cast<size_t>(p - 1)]; }
};

LeftmostScan scan_leftmost(const Sequence& s);

// Leftmost occurrences of w[i..n] split into dyadic distance groups:
// group k holds the relative positions r = p - i + 1 with 2^k <= r < 2^{k+1}.
// groups[k] ascending; sum of sizes <= sigma.
std::vector<std::vector<int64_t>> group_leftmost(const LeftmostState& state, int64_t i);

// Position p is k-active at suffix start i' when p is a leftmost occurrence
// of w[i'..n] (i.e. i' > iprev(p)) and 2^k <= p-i'+1 < 2^{k+1}. For each p
// that yields, per scale k in [0, kMax(p)], the contiguous range
// [max(iprev(p)+1, p-2^{k+1}+2), p-2^k+1].
struct KActiveRange {
  int64_t position = 0;  // p
  int64_t scale = 0;     // k
  int64_t start = 0;     // first i' in the range
  int64_t end = 0;       // last i'
  int64_t kMax = 0;      // largest scale for p
};

struct KActiveTable {
  std::vector<KActiveRange> entries;  // ordered by (position, scale)
  std::vector<int64_t> firstEntry;    // index of (p, k=0), per position
  std::vector<int64_t> kMax;          // per position
  int64_t slotSum = 0;                // sum of 2^k over all entries (space audit)
};

KActiveTable compute_k_active(const std::vector<int64_t>& iprev);

// Per (position x, scale k >= 1, suffix start i' in the k-active range of x)
// two precomputed lists of fragment starts, kept in one shared arena:
//  - half scale (span 2^{k-1}): starts y with x in [y, y+2^{k-1}-1] and
//    w[y..y+2^{k-1}-1] order-isomorphic to w[i'..i'+2^{k-1}-1];
//  - full scale (span 2^k): same with 2^k in place of 2^{k-1}.
// Both lists exist so that every true square prefix of w[i'..n] is reachable
// from an extreme leftmost occurrence regardless of which dyadic band the
// arm length falls in. Scale k=0 stores nothing (length-2 squares are
// emitted directly). Fragments that would overflow w are skipped.
struct ResultIndex {
  struct Cell {
    int64_t offset = 0;
    int64_t len = 0;
  };
  struct Group {
    int64_t lo = 0;        // k-active range of (position, scale)
    int64_t hi = 0;
    int64_t cellBase = 0;  // first cell index for i' = lo
  };

  int64_t n = 0;
  std::vector<int64_t> kMax;      // per position
  std::vector<int64_t> pkBase;    // per position: first group index (scale 1)
  std::vector<Group> groups;      // scales 1..kMax per position
  std::vector<Cell> cellsHalf;    // span 2^{k-1}
  std::vector<Cell> cellsFull;    // span 2^k
  std::vector<int64_t> ys;        // shared arena of list payloads
  int64_t tupleCount = 0;         // sorted tuples (space audit)

  // Empty span when the cell is absent (k out of [1, kMax(x)] or i outside
  // the k-active range) or holds no starts.
  [[nodiscard]] std::pair<const int64_t*, int64_t> half_list(int64_t x, int64_t k, int64_t i) const;
  [[nodiscard]] std::pair<const int64_t*, int64_t> full_list(int64_t x, int64_t k, int64_t i) const;

 private:
  [[nodiscard]] std::pair<const int64_t*, int64_t> list_at(const std::vector<Cell>& cells, int64_t x,
                                                           int64_t k, int64_t i) const;
};

// One offline radix sort of fixed-width integer tuples groups equal
// fingerprints; each cell then references its group's y-list in the arena.
ResultIndex precompute_results(const Sequence& s, const FingerprintIndex& fp,
                               const KActiveTable& act);

// Candidate total lengths 2*l for op-squares starting at i, all verified
// later in O(1) each. Sources:
//  - length 2 directly (when the suffix has at least 2 characters);
//  - for each nonempty group k >= 1 and each of its extreme members x
//    (smallest and largest): every y in half_list(x, k, i) and in
//    full_list(x, k, i) contributes 2*(y - i);
//  - for each k >= 1 with groups k and k-1 nonempty: min(group k) paired
//    with every member of group k-1 contributes twice their distance.
// Out-of-range lengths are dropped at the source. Per-suffix output size is
// O(sigma) with a small audited constant.
std::vector<int64_t> candidates_for_suffix(int64_t i, const LeftmostState& state,
                                           const std::vector<std::vector<int64_t>>& groups,
                                           const ResultIndex& results);

// True iff w[i..i+l-1] and w[i+l..i+2l-1] are order-isomorphic but not equal
// as words, where l = totalLen/2. Constant time per call.
bool verify_candidate(const OpSuffixTree& tree, const LcaIndex& lca, const PlainLce& plain,
                      int64_t i, int64_t totalLen);

// Everything the enumeration needs that depends only on the string: counting
// table, suffix tree over coded suffixes, LCA and fingerprint indexes, and
// the plain-word LCE index. Owns stable copies so the tree's internal
// references survive moves.
class OpSquareIndexes {
 public:
  explicit OpSquareIndexes(const Sequence& s);

  [[nodiscard]] const Sequence& sequence() const { return *seq_; }
  [[nodiscard]] const CntTable& cnt() const { return *cnt_; }
  [[nodiscard]] const OpSuffixTree& tree() const { return *tree_; }
  [[nodiscard]] const LcaIndex& lca() const { return *lca_; }
  [[nodiscard]] const FingerprintIndex& fingerprints() const { return *fp_; }
  [[nodiscard]] const PlainLce& plain() const { return *plain_; }

 private:
  std::unique_ptr<Sequence> seq_;
  std::unique_ptr<CntTable> cnt_;
  std::unique_ptr<OpSuffixTree> tree_;
  std::unique_ptr<LcaIndex> lca_;
  std::unique_ptr<FingerprintIndex> fp_;
  std::unique_ptr<PlainLce> plain_;
};

struct EnumerateStats {
  int64_t suffixes = 0;
  int64_t candidates = 0;      // total emitted, before per-suffix dedup
  int64_t maxPerSuffix = 0;
  int64_t occurrences = 0;
  int64_t activeSlotSum = 0;   // sum of 2^k over k-active entries
  int64_t storedYs = 0;        // arena length of the result index
  int64_t tupleCount = 0;      // tuples fed to the offline sort
};

// Candidate generation + verification over prebuilt indexes. Output sorted
// by (start, length); stats (when non-null) receive the audit counters.
std::vector<SquareOccurrence> enumerate_with_indexes(const OpSquareIndexes& ix,
                                                     EnumerateStats* stats);

// All op-square occurrences of s: fragments uv with the arms order-isomorphic
// but distinct as words. Builds the indexes, then generates and verifies
// O(sigma) candidates per suffix.
std::vector<SquareOccurrence> enumerate_op_squares(const Sequence& s);
std::vector<SquareOccurrence> enumerate_op_squares(const Sequence& s, EnumerateStats& stats);

// Number of word-distinct fragments among the reported occurrences: grouped
// by length, starts ordered by plain suffix rank, neighbours merged when the
// plain common extension covers the whole fragment.
int64_t count_distinct_as_words(const std::vector<SquareOccurrence>& occurrences,
                                const Sequence& s);

}  // namespace opsq
