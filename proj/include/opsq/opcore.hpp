#pragma once

#include <cstdint>
#include <vector>

#include "opsq/sequence.hpp"

namespace opsq {

// One coordinate of code(w): the pair (prev_<, prev_=) for a position —
// how many earlier characters of the fragment are strictly smaller / equal.
// Two fragments are order-isomorphic iff their codes are equal.
struct CodeSymbol {
  int32_t prevLess = 0;
  int32_t prevEqual = 0;

  friend bool operator==(const CodeSymbol&, const CodeSymbol&) = default;
};

// code(s) for a whole sequence: result[j-1] = (prev_<(s,j), prev_=(s,j)).
std::vector<CodeSymbol> compute_code(const Sequence& s);

// code of the fragment s[start..start+len-1] (1-based start).
std::vector<CodeSymbol> compute_code_fragment(const Sequence& s, int64_t start, int64_t len);

// Prefix-count table: cnt(i, x) = |{k <= i : w[k] < x}| for i in [0, n],
// x in [0, sigma]. Non-decreasing in both arguments; cnt(i, 0) = cnt(0, x) = 0.
// Supports the constant-time character oracle below.
class CntTable {
 public:
  CntTable() = default;
  CntTable(int64_t n, int32_t sigma) : n_(n), sigma_(sigma), data_((n + 1) * (sigma + 1), 0) {}

  [[nodiscard]] int32_t cnt(int64_t i, int32_t x) const {
    return data_[static_cast<size_t>(i * (sigma_ + 1) + x)];
  }
  // |{k <= i : w[k] <= c}|; every character is <= sigma, hence the short-cut.
  [[nodiscard]] int32_t less_eq(int64_t i, Symbol c) const {
    return c >= sigma_ ? static_cast<int32_t>(i) : cnt(i, c + 1);
  }
  [[nodiscard]] int64_t n() const { return n_; }
  [[nodiscard]] int32_t sigma() const { return sigma_; }

  int32_t& at(int64_t i, int32_t x) { return data_[static_cast<size_t>(i * (sigma_ + 1) + x)]; }

 private:
  int64_t n_ = 0;
  int32_t sigma_ = 0;
  std::vector<int32_t> data_;
};

CntTable build_cnt_table(const Sequence& s);

// phi(w[i..n], j) in O(1): the code symbol at offset j of the suffix starting
// at i. Throws std::out_of_range for invalid (i, j).
CodeSymbol character_oracle(const CntTable& t, const Sequence& s, int64_t i, int64_t j);

// Order-isomorphism of two whole sequences / two fragments of one sequence.
bool is_op_isomorphic(const Sequence& u, const Sequence& v);
bool is_op_isomorphic_frag(const Sequence& s, int64_t i, int64_t i2, int64_t len);

// b is an op-border of s when the length-b prefix and length-b suffix are
// order-isomorphic. b in [0, |s|]; 0 and |s| are trivially borders.
bool is_op_border(const Sequence& s, int64_t b);

// Decomposition of s into blocks of length p: full blocks b_1..b_f plus an
// incomplete tail. p is an initial op-period when the full blocks are pairwise
// order-isomorphic and every b_j's prefix of tail length is isomorphic to the
// tail; `valid` reports that check.
struct BlockDecomposition {
  int64_t blockLength = 0;     // p
  int64_t fullBlocks = 0;      // f = floor(|s| / p)
  int64_t incompleteLength = 0;  // |s| - f*p, < p
  bool valid = false;
};

BlockDecomposition decompose_initial_op_period(const Sequence& s, int64_t p);

}  // namespace opsq
