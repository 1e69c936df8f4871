#include "opsq/opsuffixtree.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opsq {

std::string to_string(const EdgeSym& sym) {
  if (sym.is_terminator()) return "#";
  std::ostringstream out;
  out << '(' << sym.less << ',' << sym.eq << ')';
  return out.str();
}

EdgeSym OpSuffixTree::symbol_on_edge(int32_t v, int64_t d) const {
  const Node& node = nodes_[static_cast<size_t>(v)];
  if (v == 0 || d < 1 || d > node.strDepth) throw std::out_of_range("edge depth out of range");
  int64_t rep = node.repSuffix;
  if (d == n_ - rep + 2) return EdgeSym::terminator();
  return EdgeSym::from_code(character_oracle(*cnt_, *seq_, rep, d));
}

int64_t OpSuffixTree::max_degree() const {
  int64_t best = 0;
  for (const Node& node : nodes_) best = std::max(best, static_cast<int64_t>(node.edges.size()));
  return best;
}

std::string OpSuffixTree::dump() const {
  std::ostringstream out;
  out << "nodes " << nodes_.size() << " n " << n_ << '\n';
  for (size_t v = 0; v < nodes_.size(); ++v) {
    const Node& node = nodes_[v];
    out << v << ' ' << node.parent << ' ' << node.strDepth << ' ';
    if (node.parent < 0) {
      out << '-';
    } else {
      out << to_string(symbol_on_edge(static_cast<int32_t>(v), nodes_[static_cast<size_t>(node.parent)].strDepth + 1));
    }
    out << ' ';
    if (node.leafSuffix > 0) {
      out << node.leafSuffix;
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

void OpSuffixTree::canonicalize() {
  for (Node& node : nodes_) {
    std::sort(node.edges.begin(), node.edges.end(),
              [](const Edge& a, const Edge& b) { return a.first < b.first; });
  }
  // Preorder renumbering (children visited smallest symbol first) so node ids
  // are a pure function of the tree shape.
  std::vector<int32_t> newId(nodes_.size(), -1);
  std::vector<int32_t> order;
  order.reserve(nodes_.size());
  std::vector<int32_t> stack{0};
  while (!stack.empty()) {
    int32_t v = stack.back();
    stack.pop_back();
    newId[static_cast<size_t>(v)] = static_cast<int32_t>(order.size());
    order.push_back(v);
    const auto& edges = nodes_[static_cast<size_t>(v)].edges;
    for (size_t idx = edges.size(); idx-- > 0;) stack.push_back(edges[idx].child);
  }
  std::vector<Node> renumbered(nodes_.size());
  for (size_t pos = 0; pos < order.size(); ++pos) {
    Node node = std::move(nodes_[static_cast<size_t>(order[pos])]);
    if (node.parent >= 0) node.parent = newId[static_cast<size_t>(node.parent)];
    for (Edge& e : node.edges) e.child = newId[static_cast<size_t>(e.child)];
    renumbered[pos] = std::move(node);
  }
  nodes_ = std::move(renumbered);
  leafOf_.assign(static_cast<size_t>(n_), -1);
  for (size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].leafSuffix > 0) leafOf_[static_cast<size_t>(nodes_[v].leafSuffix - 1)] = static_cast<int32_t>(v);
  }
}

OpSuffixTree build_op_suffix_tree(const Sequence& s, const CntTable& oracle) {
  OpSuffixTree t;
  t.seq_ = &s;
  t.cnt_ = &oracle;
  t.n_ = s.size();
  const int64_t n = t.n_;
  auto& nodes = t.nodes_;
  nodes.push_back(OpSuffixTree::Node{-1, 0, 1, 0, {}});

  // Symbol at depth d (1-based) of the coded suffix starting at i, with the
  // terminator one past the coded characters.
  auto suffix_symbol = [&](int64_t i, int64_t d) -> EdgeSym {
    if (d == n - i + 2) return EdgeSym::terminator();
    return EdgeSym::from_code(character_oracle(oracle, s, i, d));
  };

  for (int64_t i = n; i >= 1; --i) {
    const int64_t fullLen = n - i + 2;
    int32_t v = 0;     // current node
    int64_t d = 0;     // matched depth (== strDepth of v whenever at a node)
    for (;;) {
      EdgeSym want = suffix_symbol(i, d + 1);
      int32_t next = -1;
      for (const auto& e : nodes[static_cast<size_t>(v)].edges) {
        if (e.first == want) {
          next = e.child;
          break;
        }
      }
      if (next < 0) {
        // No edge starts with the next symbol: attach a fresh leaf here.
        int32_t leaf = static_cast<int32_t>(nodes.size());
        nodes.push_back(OpSuffixTree::Node{v, fullLen, static_cast<int32_t>(i), static_cast<int32_t>(i), {}});
        nodes[static_cast<size_t>(v)].edges.push_back({want, leaf});
        break;
      }
      // Walk the edge into `next`; the first symbol is known to match.
      int64_t edgeEnd = nodes[static_cast<size_t>(next)].strDepth;
      int64_t dd = d + 2;
      while (dd <= edgeEnd && suffix_symbol(i, dd) == t.symbol_on_edge(next, dd)) ++dd;
      if (dd > edgeEnd) {
        v = next;
        d = edgeEnd;
        continue;
      }
      // Mismatch inside the edge at depth dd: split, then hang the new leaf.
      int32_t mid = static_cast<int32_t>(nodes.size());
      nodes.push_back(OpSuffixTree::Node{
          v, dd - 1, nodes[static_cast<size_t>(next)].repSuffix, 0, {}});
      nodes[static_cast<size_t>(mid)].edges.push_back({t.symbol_on_edge(next, dd), next});
      for (auto& e : nodes[static_cast<size_t>(v)].edges) {
        if (e.child == next) {
          e.child = mid;
          break;
        }
      }
      nodes[static_cast<size_t>(next)].parent = mid;
      int32_t leaf = static_cast<int32_t>(nodes.size());
      nodes.push_back(OpSuffixTree::Node{mid, fullLen, static_cast<int32_t>(i), static_cast<int32_t>(i), {}});
      nodes[static_cast<size_t>(mid)].edges.push_back({suffix_symbol(i, dd), leaf});
      break;
    }
  }

  t.canonicalize();
  return t;
}

int64_t NaiveTree::max_degree() const {
  int64_t best = 0;
  for (const Node& node : nodes) best = std::max(best, static_cast<int64_t>(node.edges.size()));
  return best;
}

NaiveTree naive_reference_tree(const Sequence& s, int64_t cap) {
  const int64_t n = s.size();
  if (n > cap) throw std::length_error("reference tree cap exceeded");

  // Uncompacted trie kept in parallel arrays (first-child / next-sibling).
  std::vector<int32_t> firstChild{-1};
  std::vector<int32_t> nextSib{-1};
  std::vector<EdgeSym> sym{EdgeSym{}};
  std::vector<int32_t> leafSuf{0};
  auto new_trie_node = [&](EdgeSym symbol) {
    firstChild.push_back(-1);
    nextSib.push_back(-1);
    sym.push_back(symbol);
    leafSuf.push_back(0);
    return static_cast<int32_t>(firstChild.size() - 1);
  };

  for (int64_t i = 1; i <= n; ++i) {
    std::vector<CodeSymbol> code = compute_code_fragment(s, i, n - i + 1);
    std::vector<EdgeSym> word;
    word.reserve(code.size() + 1);
    for (CodeSymbol c : code) word.push_back(EdgeSym::from_code(c));
    word.push_back(EdgeSym::terminator());
    int32_t cur = 0;
    for (const EdgeSym& symbol : word) {
      int32_t child = firstChild[static_cast<size_t>(cur)];
      while (child >= 0 && !(sym[static_cast<size_t>(child)] == symbol))
        child = nextSib[static_cast<size_t>(child)];
      if (child < 0) {
        child = new_trie_node(symbol);
        nextSib[static_cast<size_t>(child)] = firstChild[static_cast<size_t>(cur)];
        firstChild[static_cast<size_t>(cur)] = child;
      }
      cur = child;
    }
    leafSuf[static_cast<size_t>(cur)] = static_cast<int32_t>(i);
  }

  // Compact: contract every chain of non-branching, non-leaf trie nodes into
  // a single edge.
  NaiveTree out;
  out.n = n;
  out.nodes.push_back(NaiveTree::Node{-1, 0, 0, {}});
  struct Pending {
    int32_t trieNode;   // first trie node on the edge
    int32_t parent;     // compacted parent id
  };
  std::vector<Pending> stack;
  for (int32_t c = firstChild[0]; c >= 0; c = nextSib[static_cast<size_t>(c)])
    stack.push_back({c, 0});
  while (!stack.empty()) {
    Pending p = stack.back();
    stack.pop_back();
    std::vector<EdgeSym> label{sym[static_cast<size_t>(p.trieNode)]};
    int32_t cur = p.trieNode;
    while (leafSuf[static_cast<size_t>(cur)] == 0) {
      int32_t only = firstChild[static_cast<size_t>(cur)];
      if (only < 0 || nextSib[static_cast<size_t>(only)] >= 0) break;
      cur = only;
      label.push_back(sym[static_cast<size_t>(cur)]);
    }
    int32_t id = static_cast<int32_t>(out.nodes.size());
    out.nodes.push_back(NaiveTree::Node{
        p.parent,
        out.nodes[static_cast<size_t>(p.parent)].strDepth + static_cast<int64_t>(label.size()),
        leafSuf[static_cast<size_t>(cur)],
        {}});
    out.nodes[static_cast<size_t>(p.parent)].edges.push_back({std::move(label), id});
    for (int32_t c = firstChild[static_cast<size_t>(cur)]; c >= 0; c = nextSib[static_cast<size_t>(c)])
      stack.push_back({c, id});
  }

  for (NaiveTree::Node& node : out.nodes) {
    std::sort(node.edges.begin(), node.edges.end(),
              [](const NaiveTree::Edge& a, const NaiveTree::Edge& b) {
                return a.label.front() < b.label.front();
              });
  }
  // Preorder renumbering, mirroring the production construction.
  std::vector<int32_t> newId(out.nodes.size(), -1);
  std::vector<int32_t> order;
  order.reserve(out.nodes.size());
  std::vector<int32_t> dfs{0};
  while (!dfs.empty()) {
    int32_t v = dfs.back();
    dfs.pop_back();
    newId[static_cast<size_t>(v)] = static_cast<int32_t>(order.size());
    order.push_back(v);
    const auto& edges = out.nodes[static_cast<size_t>(v)].edges;
    for (size_t idx = edges.size(); idx-- > 0;) dfs.push_back(edges[idx].child);
  }
  std::vector<NaiveTree::Node> renumbered(out.nodes.size());
  for (size_t pos = 0; pos < order.size(); ++pos) {
    NaiveTree::Node node = std::move(out.nodes[static_cast<size_t>(order[pos])]);
    if (node.parent >= 0) node.parent = newId[static_cast<size_t>(node.parent)];
    for (NaiveTree::Edge& e : node.edges) e.child = newId[static_cast<size_t>(e.child)];
    renumbered[pos] = std::move(node);
  }
  out.nodes = std::move(renumbered);
  return out;
}

namespace {

// Shared preorder serializer. `label` spells the incoming edge of a non-root
// node; `children` yields child node ids in canonical order.
template <typename LabelFn, typename ChildrenFn, typename LeafFn>
std::string serialize_tree(int64_t nodeCount, LabelFn&& label, ChildrenFn&& children, LeafFn&& leaf) {
  (void)nodeCount;
  std::ostringstream out;
  struct Item {
    int32_t node;
    bool close;
  };
  std::vector<Item> stack{{0, true}, {0, false}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.close) {
      out << ']';
      continue;
    }
    out << '[';
    if (item.node != 0) {
      out << label(item.node);
      int32_t suffix = leaf(item.node);
      if (suffix > 0) out << ':' << suffix;
    }
    const std::vector<int32_t> kids = children(item.node);
    for (size_t idx = kids.size(); idx-- > 0;) {
      stack.push_back({kids[idx], true});
      stack.push_back({kids[idx], false});
    }
  }
  return out.str();
}

}  // namespace

std::string canonical_serialization(const OpSuffixTree& t) {
  return serialize_tree(
      t.node_count(),
      [&](int32_t v) {
        std::string text;
        int64_t from = t.node(t.node(v).parent).strDepth + 1;
        int64_t to = t.node(v).strDepth;
        for (int64_t d = from; d <= to; ++d) text += to_string(t.symbol_on_edge(v, d));
        return text;
      },
      [&](int32_t v) {
        std::vector<int32_t> kids;
        kids.reserve(t.node(v).edges.size());
        for (const auto& e : t.node(v).edges) kids.push_back(e.child);
        return kids;
      },
      [&](int32_t v) { return t.node(v).leafSuffix; });
}

std::string canonical_serialization(const NaiveTree& t) {
  return serialize_tree(
      static_cast<int64_t>(t.nodes.size()),
      [&](int32_t v) {
        const NaiveTree::Node& node = t.nodes[static_cast<size_t>(v)];
        const NaiveTree::Node& parent = t.nodes[static_cast<size_t>(node.parent)];
        const std::vector<EdgeSym>* label = nullptr;
        for (const auto& e : parent.edges) {
          if (e.child == v) {
            label = &e.label;
            break;
          }
        }
        std::string text;
        for (const EdgeSym& symbol : *label) text += to_string(symbol);
        return text;
      },
      [&](int32_t v) {
        std::vector<int32_t> kids;
        kids.reserve(t.nodes[static_cast<size_t>(v)].edges.size());
        for (const auto& e : t.nodes[static_cast<size_t>(v)].edges) kids.push_back(e.child);
        return kids;
      },
      [&](int32_t v) { return t.nodes[static_cast<size_t>(v)].leafSuffix; });
}

LcaIndex::LcaIndex(const OpSuffixTree& t) {
  const int64_t nodeCount = t.node_count();
  strDepth_.resize(static_cast<size_t>(nodeCount));
  for (int32_t v = 0; v < nodeCount; ++v) strDepth_[static_cast<size_t>(v)] = t.node(v).strDepth;

  firstOcc_.assign(static_cast<size_t>(nodeCount), -1);
  euler_.reserve(static_cast<size_t>(2 * nodeCount));
  depth_.reserve(static_cast<size_t>(2 * nodeCount));
  std::vector<int32_t> treeDepth(static_cast<size_t>(nodeCount), 0);
  struct Frame {
    int32_t node;
    size_t nextChild;
  };
  std::vector<Frame> stack{{0, 0}};
  euler_.push_back(0);
  depth_.push_back(0);
  firstOcc_[0] = 0;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& edges = t.node(frame.node).edges;
    if (frame.nextChild < edges.size()) {
      int32_t child = edges[frame.nextChild].child;
      ++frame.nextChild;
      treeDepth[static_cast<size_t>(child)] = treeDepth[static_cast<size_t>(frame.node)] + 1;
      euler_.push_back(child);
      depth_.push_back(treeDepth[static_cast<size_t>(child)]);
      firstOcc_[static_cast<size_t>(child)] = static_cast<int32_t>(euler_.size() - 1);
      stack.push_back({child, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        euler_.push_back(stack.back().node);
        depth_.push_back(treeDepth[static_cast<size_t>(stack.back().node)]);
      }
    }
  }

  const size_t m = euler_.size();
  log2_.resize(m + 1, 0);
  for (size_t v = 2; v <= m; ++v) log2_[v] = log2_[v / 2] + 1;
  int32_t levels = log2_[m] + 1;
  sparse_.assign(static_cast<size_t>(levels), std::vector<int32_t>(m));
  for (size_t pos = 0; pos < m; ++pos) sparse_[0][pos] = static_cast<int32_t>(pos);
  for (int32_t lvl = 1; lvl < levels; ++lvl) {
    size_t span = static_cast<size_t>(1) << lvl;
    for (size_t pos = 0; pos + span <= m; ++pos) {
      int32_t a = sparse_[static_cast<size_t>(lvl - 1)][pos];
      int32_t b = sparse_[static_cast<size_t>(lvl - 1)][pos + span / 2];
      sparse_[static_cast<size_t>(lvl)][pos] =
          depth_[static_cast<size_t>(a)] <= depth_[static_cast<size_t>(b)] ? a : b;
    }
  }
}

int32_t LcaIndex::argmin_pos(int32_t lo, int32_t hi) const {
  int32_t lvl = log2_[static_cast<size_t>(hi - lo + 1)];
  int32_t a = sparse_[static_cast<size_t>(lvl)][static_cast<size_t>(lo)];
  int32_t b = sparse_[static_cast<size_t>(lvl)][static_cast<size_t>(hi - (1 << lvl) + 1)];
  return depth_[static_cast<size_t>(a)] <= depth_[static_cast<size_t>(b)] ? a : b;
}

int32_t LcaIndex::lca(int32_t u, int32_t v) const {
  int32_t lo = firstOcc_[static_cast<size_t>(u)];
  int32_t hi = firstOcc_[static_cast<size_t>(v)];
  if (lo > hi) std::swap(lo, hi);
  return euler_[static_cast<size_t>(argmin_pos(lo, hi))];
}

bool op_isomorphic_fragments(const OpSuffixTree& t, const LcaIndex& lca, int64_t i, int64_t i2,
                             int64_t len) {
  const int64_t n = t.n();
  if (len <= 0 || i < 1 || i2 < 1 || i + len - 1 > n || i2 + len - 1 > n)
    throw std::out_of_range("fragment out of range");
  if (i == i2) return true;
  int32_t anc = lca.lca(t.leaf_of(i), t.leaf_of(i2));
  return lca.string_depth(anc) >= len;
}

FingerprintIndex::FingerprintIndex(const OpSuffixTree& t) : tree_(&t) {
  const int64_t nodeCount = t.node_count();
  levels_ = 1;
  while ((static_cast<int64_t>(1) << levels_) < nodeCount) ++levels_;
  up_.assign(static_cast<size_t>(levels_), std::vector<int32_t>(static_cast<size_t>(nodeCount), -1));
  for (int32_t v = 0; v < nodeCount; ++v) up_[0][static_cast<size_t>(v)] = t.node(v).parent;
  for (int32_t lvl = 1; lvl < levels_; ++lvl) {
    for (int32_t v = 0; v < nodeCount; ++v) {
      int32_t half = up_[static_cast<size_t>(lvl - 1)][static_cast<size_t>(v)];
      up_[static_cast<size_t>(lvl)][static_cast<size_t>(v)] =
          half < 0 ? -1 : up_[static_cast<size_t>(lvl - 1)][static_cast<size_t>(half)];
    }
  }
}

int64_t FingerprintIndex::fingerprint(int32_t k, int64_t x) const {
  const OpSuffixTree& t = *tree_;
  const int64_t n = t.n();
  if (k < 0 || k >= 62 || x < 1 || x + (static_cast<int64_t>(1) << k) - 1 > n)
    throw std::out_of_range("fragment overflows string");
  const int64_t target = static_cast<int64_t>(1) << k;
  int32_t v = t.leaf_of(x);
  for (int32_t lvl = levels_ - 1; lvl >= 0; --lvl) {
    int32_t anc = up_[static_cast<size_t>(lvl)][static_cast<size_t>(v)];
    if (anc >= 0 && t.node(anc).strDepth >= target) v = anc;
  }
  if (t.node(v).strDepth == target) return v + 1;               // explicit node
  return t.node_count() + v + 1;                                // inside the edge into v
}

LcaIndex build_lca_index(const OpSuffixTree& t) { return LcaIndex(t); }

FingerprintIndex build_fingerprint_index(const OpSuffixTree& t) { return FingerprintIndex(t); }

}  // namespace opsq
