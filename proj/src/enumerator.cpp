#include "opsq/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>

namespace opsq {

namespace {

int64_t floor_log2(int64_t x) { return std::bit_width(static_cast<uint64_t>(x)) - 1; }

}  // namespace

LeftmostState LeftmostScan::state(int64_t i) const {
  LeftmostState out;
  out.suffix = i;
  auto from = positions.begin() + static_cast<ptrdiff_t>(offsets[static_cast<size_t>(i - 1)]);
  auto to = positions.begin() + static_cast<ptrdiff_t>(offsets[static_cast<size_t>(i)]);
  out.positions.assign(from, to);
  return out;
}

LeftmostScan scan_leftmost(const Sequence& s) {
  const int64_t n = s.size();
  LeftmostScan scan;
  scan.iprev.assign(static_cast<size_t>(n), 0);
  std::vector<int64_t> lastSeen(static_cast<size_t>(s.sigma) + 1, 0);
  for (int64_t p = 1; p <= n; ++p) {
    Symbol c = s.at1(p);
    scan.iprev[static_cast<size_t>(p - 1)] = lastSeen[static_cast<size_t>(c)];
    lastSeen[static_cast<size_t>(c)] = p;
  }

  // inext(p): the next position with the same character, 0 if none. A
  // position stays leftmost for w[i..n] until i passes iprev(p); dually,
  // when i reaches p the position inext(p) stops being leftmost.
  std::vector<int64_t> inext(static_cast<size_t>(n), 0);
  std::fill(lastSeen.begin(), lastSeen.end(), 0);
  for (int64_t p = n; p >= 1; --p) {
    Symbol c = s.at1(p);
    inext[static_cast<size_t>(p - 1)] = lastSeen[static_cast<size_t>(c)];
    lastSeen[static_cast<size_t>(c)] = p;
  }

  // Per-suffix list sizes: the count of distinct characters of w[i..n].
  std::vector<int64_t> sizes(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = n; i >= 1; --i) {
    sizes[static_cast<size_t>(i - 1)] =
        sizes[static_cast<size_t>(i)] + (inext[static_cast<size_t>(i - 1)] == 0 ? 1 : 0);
  }
  scan.offsets.assign(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = 1; i <= n; ++i) {
    scan.offsets[static_cast<size_t>(i)] =
        scan.offsets[static_cast<size_t>(i - 1)] + sizes[static_cast<size_t>(i - 1)];
  }
  scan.positions.assign(static_cast<size_t>(scan.offsets[static_cast<size_t>(n)]), 0);

  // Sweep right to left: inserting w[i] makes i leftmost and evicts inext(i).
  std::vector<int64_t> current;  // ascending
  for (int64_t i = n; i >= 1; --i) {
    int64_t evict = inext[static_cast<size_t>(i - 1)];
    if (evict != 0) {
      auto at = std::find(current.begin(), current.end(), evict);
      current.erase(at);
    }
    current.insert(current.begin(), i);
    std::copy(current.begin(), current.end(),
              scan.positions.begin() + static_cast<ptrdiff_t>(scan.offsets[static_cast<size_t>(i - 1)]));
  }
  return scan;
}

std::vector<std::vector<int64_t>> group_leftmost(const LeftmostState& state, int64_t i) {
  std::vector<std::vector<int64_t>> groups;
  for (int64_t p : state.positions) {
    int64_t rel = p - i + 1;
    if (rel < 1) throw std::out_of_range("leftmost position before suffix start");
    size_t k = static_cast<size_t>(floor_log2(rel));
    if (groups.size() <= k) groups.resize(k + 1);
    groups[k].push_back(rel);
  }
  return groups;
}

KActiveTable compute_k_active(const std::vector<int64_t>& iprev) {
  const int64_t n = static_cast<int64_t>(iprev.size());
  KActiveTable table;
  table.firstEntry.assign(static_cast<size_t>(n), 0);
  table.kMax.assign(static_cast<size_t>(n), 0);
  for (int64_t p = 1; p <= n; ++p) {
    int64_t lo = iprev[static_cast<size_t>(p - 1)] + 1;
    int64_t kmax = floor_log2(p - lo + 1);
    table.firstEntry[static_cast<size_t>(p - 1)] = static_cast<int64_t>(table.entries.size());
    table.kMax[static_cast<size_t>(p - 1)] = kmax;
    for (int64_t k = 0; k <= kmax; ++k) {
      int64_t start = std::max(lo, p - (static_cast<int64_t>(1) << (k + 1)) + 2);
      int64_t end = p - (static_cast<int64_t>(1) << k) + 1;
      table.entries.push_back(KActiveRange{p, k, start, end, kmax});
      table.slotSum += static_cast<int64_t>(1) << k;
    }
  }
  return table;
}

namespace {

struct SortItem {
  uint64_t key;
  int64_t pos;
};

// Key layout, high to low: position (24 bits) | scale (5) | table (1) |
// fingerprint (26) | payload tag (1). Sorting ascending therefore groups by
// (position, scale, table, fingerprint) and puts list payloads (tag 0)
// before the cells that will reference them (tag 1).
constexpr int kFpBits = 26;
constexpr int64_t kMaxIndexedLength = 4000000;  // keeps fingerprints inside kFpBits

uint64_t pack_key(int64_t p, int64_t k, int64_t table, int64_t fp, int64_t tag) {
  return (static_cast<uint64_t>(p) << 33) | (static_cast<uint64_t>(k) << 28) |
         (static_cast<uint64_t>(table) << 27) | (static_cast<uint64_t>(fp) << 1) |
         static_cast<uint64_t>(tag);
}

void sort_items(std::vector<SortItem>& items) {
  if (items.size() < 4096) {
    std::sort(items.begin(), items.end(), [](const SortItem& a, const SortItem& b) {
      return a.key != b.key ? a.key < b.key : a.pos < b.pos;
    });
    return;
  }
  std::vector<SortItem> buffer(items.size());
  for (int shift = 0; shift < 64; shift += 8) {
    size_t counts[257] = {};
    for (const SortItem& item : items) ++counts[((item.key >> shift) & 0xFF) + 1];
    for (size_t b = 1; b <= 256; ++b) counts[b] += counts[b - 1];
    for (const SortItem& item : items) buffer[counts[(item.key >> shift) & 0xFF]++] = item;
    items.swap(buffer);
  }
}

}  // namespace

std::pair<const int64_t*, int64_t> ResultIndex::list_at(const std::vector<Cell>& cells, int64_t x,
                                                        int64_t k, int64_t i) const {
  if (x < 1 || x > n) return {nullptr, 0};
  if (k < 1 || k > kMax[static_cast<size_t>(x - 1)]) return {nullptr, 0};
  const Group& g = groups[static_cast<size_t>(pkBase[static_cast<size_t>(x - 1)] + (k - 1))];
  if (i < g.lo || i > g.hi) return {nullptr, 0};
  const Cell& cell = cells[static_cast<size_t>(g.cellBase + (i - g.lo))];
  if (cell.len == 0) return {nullptr, 0};
  return {ys.data() + cell.offset, cell.len};
}

std::pair<const int64_t*, int64_t> ResultIndex::half_list(int64_t x, int64_t k, int64_t i) const {
  return list_at(cellsHalf, x, k, i);
}

std::pair<const int64_t*, int64_t> ResultIndex::full_list(int64_t x, int64_t k, int64_t i) const {
  return list_at(cellsFull, x, k, i);
}

ResultIndex precompute_results(const Sequence& s, const FingerprintIndex& fp,
                               const KActiveTable& act) {
  const int64_t n = s.size();
  if (n > kMaxIndexedLength) throw std::length_error("input too long for the candidate index");
  ResultIndex out;
  out.n = n;
  out.kMax = act.kMax;
  out.pkBase.assign(static_cast<size_t>(n), 0);

  int64_t cellTotal = 0;
  for (int64_t p = 1; p <= n; ++p) {
    out.pkBase[static_cast<size_t>(p - 1)] = static_cast<int64_t>(out.groups.size());
    int64_t base = act.firstEntry[static_cast<size_t>(p - 1)];
    for (int64_t k = 1; k <= act.kMax[static_cast<size_t>(p - 1)]; ++k) {
      const KActiveRange& r = act.entries[static_cast<size_t>(base + k)];
      out.groups.push_back(ResultIndex::Group{r.start, r.end, cellTotal});
      cellTotal += r.end - r.start + 1;
    }
  }
  out.cellsHalf.assign(static_cast<size_t>(cellTotal), ResultIndex::Cell{});
  out.cellsFull.assign(static_cast<size_t>(cellTotal), ResultIndex::Cell{});

  std::vector<SortItem> items;
  for (int64_t p = 1; p <= n; ++p) {
    int64_t base = act.firstEntry[static_cast<size_t>(p - 1)];
    for (int64_t k = 1; k <= act.kMax[static_cast<size_t>(p - 1)]; ++k) {
      const KActiveRange& r = act.entries[static_cast<size_t>(base + k)];
      for (int64_t table = 0; table < 2; ++table) {
        int64_t span = static_cast<int64_t>(1) << (k - 1 + table);
        int32_t fk = static_cast<int32_t>(k - 1 + table);
        int64_t yLo = std::max<int64_t>(1, p - span + 1);
        int64_t yHi = std::min(p, n - span + 1);  // overflowing fragments skipped
        for (int64_t y = yLo; y <= yHi; ++y)
          items.push_back({pack_key(p, k, table, fp.fingerprint(fk, y), 0), y});
        for (int64_t i = r.start; i <= r.end; ++i)
          items.push_back({pack_key(p, k, table, fp.fingerprint(fk, i), 1), i});
      }
    }
  }
  out.tupleCount = static_cast<int64_t>(items.size());
  sort_items(items);

  const size_t m = items.size();
  size_t a = 0;
  while (a < m) {
    uint64_t groupKey = items[a].key >> 1;
    int64_t arenaStart = static_cast<int64_t>(out.ys.size());
    size_t b = a;
    while (b < m && (items[b].key >> 1) == groupKey && (items[b].key & 1) == 0) {
      out.ys.push_back(items[b].pos);
      ++b;
    }
    int64_t listLen = static_cast<int64_t>(out.ys.size()) - arenaStart;
    while (b < m && (items[b].key >> 1) == groupKey) {
      uint64_t key = items[b].key;
      int64_t p = static_cast<int64_t>(key >> 33);
      int64_t k = static_cast<int64_t>((key >> 28) & 31);
      int64_t table = static_cast<int64_t>((key >> 27) & 1);
      const ResultIndex::Group& g =
          out.groups[static_cast<size_t>(out.pkBase[static_cast<size_t>(p - 1)] + (k - 1))];
      size_t cellIdx = static_cast<size_t>(g.cellBase + (items[b].pos - g.lo));
      (table == 0 ? out.cellsHalf : out.cellsFull)[cellIdx] =
          ResultIndex::Cell{arenaStart, listLen};
      ++b;
    }
    a = b;
  }
  return out;
}

std::vector<int64_t> candidates_for_suffix(int64_t i, const LeftmostState& state,
                                           const std::vector<std::vector<int64_t>>& groups,
                                           const ResultIndex& results) {
  const int64_t n = results.n;
  if (i < 1 || i > n || state.suffix != i) throw std::out_of_range("suffix offset out of range");
  std::vector<int64_t> out;
  auto emit = [&](int64_t totalLen) {
    if (totalLen >= 2 && i + totalLen - 1 <= n) out.push_back(totalLen);
  };
  if (i + 1 <= n) out.push_back(2);
  for (size_t k = 1; k < groups.size(); ++k) {
    if (groups[k].empty()) continue;
    int64_t extremes[2] = {groups[k].front(), groups[k].back()};
    int extremeCount = extremes[0] == extremes[1] ? 1 : 2;
    for (int e = 0; e < extremeCount; ++e) {
      int64_t x = i + extremes[e] - 1;
      auto [halfPtr, halfLen] = results.half_list(x, static_cast<int64_t>(k), i);
      for (int64_t idx = 0; idx < halfLen; ++idx) emit(2 * (halfPtr[idx] - i));
      auto [fullPtr, fullLen] = results.full_list(x, static_cast<int64_t>(k), i);
      for (int64_t idx = 0; idx < fullLen; ++idx) emit(2 * (fullPtr[idx] - i));
    }
    if (!groups[k - 1].empty()) {
      int64_t xmin = groups[k].front();
      for (int64_t a : groups[k - 1]) emit(2 * (xmin - a));
    }
  }
  return out;
}

bool verify_candidate(const OpSuffixTree& tree, const LcaIndex& lca, const PlainLce& plain,
                      int64_t i, int64_t totalLen) {
  if (totalLen % 2 != 0) throw std::invalid_argument("odd square length");
  const int64_t arm = totalLen / 2;
  if (arm < 1 || i < 1 || i + totalLen - 1 > tree.n())
    throw std::out_of_range("fragment out of range");
  if (!op_isomorphic_fragments(tree, lca, i, i + arm, arm)) return false;
  return plain.lce(i, i + arm) < arm;  // arms must differ as words
}

OpSquareIndexes::OpSquareIndexes(const Sequence& s)
    : seq_(std::make_unique<Sequence>(s)),
      cnt_(std::make_unique<CntTable>(build_cnt_table(*seq_))),
      tree_(std::make_unique<OpSuffixTree>(build_op_suffix_tree(*seq_, *cnt_))),
      lca_(std::make_unique<LcaIndex>(*tree_)),
      fp_(std::make_unique<FingerprintIndex>(*tree_)),
      plain_(std::make_unique<PlainLce>(*seq_)) {}

std::vector<SquareOccurrence> enumerate_with_indexes(const OpSquareIndexes& ix,
                                                     EnumerateStats* stats) {
  const Sequence& s = ix.sequence();
  const int64_t n = s.size();
  LeftmostScan scan = scan_leftmost(s);
  KActiveTable act = compute_k_active(scan.iprev);
  ResultIndex results = precompute_results(s, ix.fingerprints(), act);

  std::vector<SquareOccurrence> out;
  EnumerateStats local;
  local.suffixes = n;
  local.activeSlotSum = act.slotSum;
  local.storedYs = static_cast<int64_t>(results.ys.size());
  local.tupleCount = results.tupleCount;
  for (int64_t i = 1; i <= n; ++i) {
    LeftmostState state = scan.state(i);
    std::vector<std::vector<int64_t>> groups = group_leftmost(state, i);
    std::vector<int64_t> cands = candidates_for_suffix(i, state, groups, results);
    local.candidates += static_cast<int64_t>(cands.size());
    local.maxPerSuffix = std::max(local.maxPerSuffix, static_cast<int64_t>(cands.size()));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int64_t totalLen : cands) {
      if (verify_candidate(ix.tree(), ix.lca(), ix.plain(), i, totalLen))
        out.push_back(SquareOccurrence{i, totalLen});
    }
  }
  local.occurrences = static_cast<int64_t>(out.size());
  if (stats != nullptr) *stats = local;
  return out;
}

std::vector<SquareOccurrence> enumerate_op_squares(const Sequence& s) {
  OpSquareIndexes ix(s);
  return enumerate_with_indexes(ix, nullptr);
}

std::vector<SquareOccurrence> enumerate_op_squares(const Sequence& s, EnumerateStats& stats) {
  OpSquareIndexes ix(s);
  return enumerate_with_indexes(ix, &stats);
}

int64_t count_distinct_as_words(const std::vector<SquareOccurrence>& occurrences,
                                const Sequence& s) {
  if (occurrences.empty()) return 0;
  PlainLce plain(s);
  std::vector<SquareOccurrence> sorted(occurrences);
  std::sort(sorted.begin(), sorted.end(), [&](const SquareOccurrence& a, const SquareOccurrence& b) {
    if (a.length != b.length) return a.length < b.length;
    return plain.rank(a.start) < plain.rank(b.start);
  });
  int64_t count = 0;
  for (size_t idx = 0; idx < sorted.size(); ++idx) {
    if (idx == 0 || sorted[idx].length != sorted[idx - 1].length ||
        plain.lce(sorted[idx - 1].start, sorted[idx].start) < sorted[idx].length) {
      ++count;
    }
  }
  return count;
}

}  // namespace opsq
