#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "opsq/opcore.hpp"
#include "opsq/sequence.hpp"

namespace opsq {

// One symbol on a tree edge: either a CodeSymbol or the terminator '#'.
// The terminator compares unequal to every code pair and orders after all of
// them, so child lists have a total order.
struct EdgeSym {
  int32_t less = 0;
  int32_t eq = 0;

  static constexpr int32_t kTermMark = std::numeric_limits<int32_t>::max();
  static EdgeSym terminator() { return EdgeSym{kTermMark, kTermMark}; }
  static EdgeSym from_code(CodeSymbol c) { return EdgeSym{c.prevLess, c.prevEqual}; }
  [[nodiscard]] bool is_terminator() const { return less == kTermMark; }

  friend bool operator==(const EdgeSym&, const EdgeSym&) = default;
  friend bool operator<(const EdgeSym& a, const EdgeSym& b) {
    return std::tie(a.less, a.eq) < std::tie(b.less, b.eq);
  }
};

std::string to_string(const EdgeSym& sym);

// Compacted trie over the coded suffixes code(w[i..n])# for i in [1, n].
// Exactly n leaves; every internal node except possibly the root branches;
// node degree <= 2*sigma + 1. Edge labels are stored as (representative
// suffix, depth range) and resolved lazily through the character oracle.
class OpSuffixTree {
 public:
  struct Edge {
    EdgeSym first;
    int32_t child = -1;
  };
  struct Node {
    int32_t parent = -1;
    int64_t strDepth = 0;   // symbols from the root, terminator included at leaves
    int32_t repSuffix = 0;  // a suffix whose coded string passes through this node
    int32_t leafSuffix = 0; // > 0 iff leaf: the suffix this leaf represents
    std::vector<Edge> edges;
  };

  [[nodiscard]] int64_t node_count() const { return static_cast<int64_t>(nodes_.size()); }
  [[nodiscard]] const Node& node(int32_t v) const { return nodes_[static_cast<size_t>(v)]; }
  [[nodiscard]] int32_t root() const { return 0; }
  [[nodiscard]] int32_t leaf_of(int64_t suffix) const { return leafOf_[static_cast<size_t>(suffix - 1)]; }
  [[nodiscard]] int64_t n() const { return n_; }

  // Symbol at absolute depth d (1-based from the root) on the edge into v.
  [[nodiscard]] EdgeSym symbol_on_edge(int32_t v, int64_t d) const;

  // Largest number of children over all nodes.
  [[nodiscard]] int64_t max_degree() const;

  // Text listing, one node per line: id, parent id, string depth, first
  // symbol of the incoming edge, and the leaf's suffix where applicable.
  // Node ids are canonical (preorder, children ordered by first symbol),
  // so the output is stable for a given input string.
  [[nodiscard]] std::string dump() const;

  friend OpSuffixTree build_op_suffix_tree(const Sequence& s, const CntTable& oracle);

 private:
  std::vector<Node> nodes_;
  std::vector<int32_t> leafOf_;
  const Sequence* seq_ = nullptr;
  const CntTable* cnt_ = nullptr;
  int64_t n_ = 0;

  void canonicalize();
};

// Deterministic insertion construction, shortest suffix first, walking edges
// through the character oracle. O(sigma * n * h) for tree height h.
OpSuffixTree build_op_suffix_tree(const Sequence& s, const CntTable& oracle);

// Reference construction for testing: each coded suffix is inserted
// symbol-by-symbol into an uncompacted trie (symbols computed directly,
// not through the character oracle), which is then compacted. Structurally
// identical to build_op_suffix_tree up to child ordering.
// Throws when |s| exceeds the cap.
struct NaiveTree {
  struct Edge {
    std::vector<EdgeSym> label;
    int32_t child = -1;
  };
  struct Node {
    int32_t parent = -1;
    int64_t strDepth = 0;
    int32_t leafSuffix = 0;
    std::vector<Edge> edges;
  };
  std::vector<Node> nodes;  // preorder, children ordered by first symbol
  int64_t n = 0;

  [[nodiscard]] int64_t max_degree() const;
};

NaiveTree naive_reference_tree(const Sequence& s, int64_t cap = 2000);

// Canonical text form used to compare the two constructions: preorder, child
// edges ordered by first symbol, every edge label fully spelled out (resolved
// through the oracle for the production tree, from stored symbols for the
// reference tree). Equal strings <=> structurally identical trees.
std::string canonical_serialization(const OpSuffixTree& t);
std::string canonical_serialization(const NaiveTree& t);

// Constant-time lowest common ancestor via Euler tour + sparse-table range
// minimum. String depth of lca(leaf(i), leaf(j)) equals the length of the
// longest common prefix of the two coded suffixes.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const OpSuffixTree& t);

  [[nodiscard]] int32_t lca(int32_t u, int32_t v) const;
  [[nodiscard]] int64_t string_depth(int32_t v) const { return strDepth_[static_cast<size_t>(v)]; }

 private:
  std::vector<int32_t> euler_;
  std::vector<int32_t> depth_;     // tree depth along euler_
  std::vector<int32_t> firstOcc_;
  std::vector<int64_t> strDepth_;
  std::vector<std::vector<int32_t>> sparse_;  // positions of minima
  std::vector<int32_t> log2_;

  [[nodiscard]] int32_t argmin_pos(int32_t lo, int32_t hi) const;
};

// w[i..i+len-1] and w[i2..i2+len-1] are order-isomorphic iff the lca of the
// two leaves has string depth >= len. Throws when a fragment overflows w.
bool op_isomorphic_fragments(const OpSuffixTree& t, const LcaIndex& lca, int64_t i, int64_t i2,
                             int64_t len);

// Ancestor-at-string-depth-2^k identifiers. Explicit nodes use node ids,
// implicit (mid-edge) locations use the id of the containing edge; ids are
// dense in [1, 2 * node_count]. Equal identifiers <=> the two length-2^k
// fragments are order-isomorphic.
class FingerprintIndex {
 public:
  FingerprintIndex() = default;
  explicit FingerprintIndex(const OpSuffixTree& t);

  // Identifier of the ancestor of leaf(x) at string depth 2^k. Throws
  // "fragment overflows string" when x + 2^k - 1 > n.
  [[nodiscard]] int64_t fingerprint(int32_t k, int64_t x) const;

 private:
  const OpSuffixTree* tree_ = nullptr;
  std::vector<std::vector<int32_t>> up_;  // binary-lifting ancestors
  int32_t levels_ = 0;
};

OpSuffixTree build_op_suffix_tree(const Sequence& s, const CntTable& oracle);
LcaIndex build_lca_index(const OpSuffixTree& t);
FingerprintIndex build_fingerprint_index(const OpSuffixTree& t);

}  // namespace opsq
