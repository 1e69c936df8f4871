#include "opsq/opcore.hpp"

#include <stdexcept>

namespace opsq {

namespace {

// Shared worker: code of chars[0..len-1] computed with per-character prefix
// counts, O(len * sigma). Intended for small alphabets.
std::vector<CodeSymbol> code_of_span(const Symbol* chars, int64_t len, int32_t sigma) {
  std::vector<int32_t> seen(static_cast<size_t>(sigma) + 1, 0);
  std::vector<CodeSymbol> code(static_cast<size_t>(len));
  for (int64_t j = 0; j < len; ++j) {
    Symbol c = chars[j];
    int32_t less = 0;
    for (Symbol v = 1; v < c; ++v) less += seen[static_cast<size_t>(v)];
    code[static_cast<size_t>(j)] = CodeSymbol{less, seen[static_cast<size_t>(c)]};
    ++seen[static_cast<size_t>(c)];
  }
  return code;
}

}  // namespace

std::vector<CodeSymbol> compute_code(const Sequence& s) {
  if (s.size() == 0) throw std::invalid_argument("empty sequence");
  return code_of_span(s.chars.data(), s.size(), s.sigma);
}

std::vector<CodeSymbol> compute_code_fragment(const Sequence& s, int64_t start, int64_t len) {
  if (len <= 0 || start < 1 || start + len - 1 > s.size())
    throw std::out_of_range("fragment out of range");
  return code_of_span(s.chars.data() + (start - 1), len, s.sigma);
}

CntTable build_cnt_table(const Sequence& s) {
  const int64_t n = s.size();
  const int32_t sigma = s.sigma;
  CntTable t(n, sigma);
  // One pass per position; row i derives from row i-1 by bumping the counts
  // of every bound x greater than w[i].
  for (int64_t i = 1; i <= n; ++i) {
    Symbol c = s.at1(i);
    for (int32_t x = 0; x <= sigma; ++x) {
      t.at(i, x) = t.cnt(i - 1, x) + (c < x ? 1 : 0);
    }
  }
  return t;
}

CodeSymbol character_oracle(const CntTable& t, const Sequence& s, int64_t i, int64_t j) {
  const int64_t n = s.size();
  if (i < 1 || i > n || j < 1 || j > n - i + 1) throw std::out_of_range("suffix offset out of range");
  const Symbol c = s.at1(i + j - 1);
  const int64_t a = i + j - 2;  // prefix covering the j-1 characters before the target
  const int64_t b = i - 1;     // prefix covering everything before the suffix
  const int32_t less = t.cnt(a, c) - t.cnt(b, c);
  const int32_t eq = (t.less_eq(a, c) - t.cnt(a, c)) - (t.less_eq(b, c) - t.cnt(b, c));
  return CodeSymbol{less, eq};
}

namespace {

// Pairwise-order comparison of two equal-length spans, by definition:
// u[a] <= u[b] iff v[a] <= v[b] for all a, b. Equivalent to code equality.
bool spans_isomorphic(const Symbol* u, const Symbol* v, int64_t len) {
  for (int64_t b = 1; b < len; ++b) {
    for (int64_t a = 0; a < b; ++a) {
      const bool le1 = u[a] <= u[b], le2 = v[a] <= v[b];
      const bool ge1 = u[a] >= u[b], ge2 = v[a] >= v[b];
      if (le1 != le2 || ge1 != ge2) return false;
    }
  }
  return true;
}

}  // namespace

bool is_op_isomorphic(const Sequence& u, const Sequence& v) {
  if (u.size() != v.size()) return false;
  return spans_isomorphic(u.chars.data(), v.chars.data(), u.size());
}

bool is_op_isomorphic_frag(const Sequence& s, int64_t i, int64_t i2, int64_t len) {
  if (len < 0 || i < 1 || i2 < 1 || i + len - 1 > s.size() || i2 + len - 1 > s.size())
    throw std::out_of_range("fragment out of range");
  if (len == 0) return true;
  return spans_isomorphic(s.chars.data() + (i - 1), s.chars.data() + (i2 - 1), len);
}

bool is_op_border(const Sequence& s, int64_t b) {
  const int64_t n = s.size();
  if (b < 0 || b > n) throw std::out_of_range("border length out of range");
  if (b == 0) return true;
  return is_op_isomorphic_frag(s, 1, n - b + 1, b);
}

BlockDecomposition decompose_initial_op_period(const Sequence& s, int64_t p) {
  const int64_t n = s.size();
  if (p < 1 || p > n) throw std::out_of_range("period out of range");
  BlockDecomposition d;
  d.blockLength = p;
  d.fullBlocks = n / p;
  d.incompleteLength = n - d.fullBlocks * p;
  d.valid = true;
  // Full blocks pairwise isomorphic: consecutive checks suffice (isomorphism
  // is transitive), but the fragments are tiny so check all against the first.
  for (int64_t j = 2; j <= d.fullBlocks && d.valid; ++j) {
    if (!is_op_isomorphic_frag(s, 1, (j - 1) * p + 1, p)) d.valid = false;
  }
  const int64_t r = d.incompleteLength;
  for (int64_t j = 1; j <= d.fullBlocks && d.valid && r > 0; ++j) {
    if (!is_op_isomorphic_frag(s, (j - 1) * p + 1, d.fullBlocks * p + 1, r)) d.valid = false;
  }
  return d;
}

}  // namespace opsq
