#pragma once

// Labeled rooted trees on [n] with edges oriented towards the root.
//
// Vertices are the labels 1..n. The parent map is dense and uses 0 as the
// root marker, which is also the external text format: `3 3 5 5 0` is the
// tree with root 5, children 3 and 4, and 1, 2 hanging below 3.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treepark/error.hpp"

namespace treepark {

using vertex = int;
inline constexpr vertex root_marker = 0;

class RootedTree {
 public:
  // Validating constructor. parents[i] is the parent of vertex i + 1, or 0
  // for the root.
  static RootedTree from_parents(std::span<const int> parents) {
    const int n = static_cast<int>(parents.size());
    if (n == 0) throw error(errc::no_root, "empty parent list");

    for (int i = 0; i < n; ++i) {
      if (parents[i] < 0 || parents[i] > n) {
        throw error(errc::label_out_of_range,
                    "vertex " + std::to_string(i + 1) + " has parent " + std::to_string(parents[i]),
                    i + 1);
      }
    }

    vertex root = root_marker;
    for (int i = 0; i < n; ++i) {
      if (parents[i] != root_marker) continue;
      if (root != root_marker) {
        throw error(errc::multiple_roots,
                    "vertices " + std::to_string(root) + " and " + std::to_string(i + 1) +
                        " are both roots",
                    i + 1);
      }
      root = i + 1;
    }

    // Colour walk: 0 = unseen, 1 = on the current chain, 2 = known to reach the root.
    std::vector<std::uint8_t> state(n + 1, 0);
    for (vertex start = 1; start <= n; ++start) {
      vertex v = start;
      while (v != root_marker && state[v] == 0) {
        state[v] = 1;
        v = parents[v - 1];
      }
      if (v != root_marker && state[v] == 1) {
        throw error(errc::cycle_detected, "parent chain revisits vertex " + std::to_string(v), v);
      }
      for (vertex u = start; u != root_marker && state[u] == 1; u = parents[u - 1]) state[u] = 2;
    }

    if (root == root_marker) throw error(errc::no_root, "no vertex is marked as root");

    std::vector<vertex> parent(n + 1, root_marker);
    std::copy(parents.begin(), parents.end(), parent.begin() + 1);
    return RootedTree(std::move(parent), root);
  }

  static RootedTree from_parents(std::initializer_list<int> parents) {
    return from_parents(std::span<const int>(parents.begin(), parents.size()));
  }

  int size() const noexcept { return static_cast<int>(parent_.size()) - 1; }
  vertex root() const noexcept { return root_; }
  bool is_root(vertex v) const noexcept { return v == root_; }

  vertex parent(vertex v) const {
    check_vertex(v);
    return parent_[v];
  }

  // Children of v in increasing label order.
  const std::vector<vertex>& children(vertex v) const {
    check_vertex(v);
    return children_[v];
  }

  bool is_leaf(vertex v) const { return children(v).empty(); }

  // Every vertex appears after all vertices of its subtree.
  const std::vector<vertex>& bottom_up() const noexcept { return bottom_up_; }

  // parents()[i] is the parent of vertex i + 1 (0 for the root).
  std::vector<int> parents() const { return {parent_.begin() + 1, parent_.end()}; }

  // |T_v| for every v, indexed by label (entry 0 unused).
  std::vector<int> subtree_sizes() const {
    std::vector<int> sizes(parent_.size(), 1);
    sizes[0] = 0;
    for (vertex v : bottom_up_) {
      if (parent_[v] != root_marker) sizes[parent_[v]] += sizes[v];
    }
    return sizes;
  }

  std::string to_text() const {
    std::ostringstream out;
    for (int v = 1; v <= size(); ++v) {
      if (v > 1) out << ' ';
      out << parent_[v];
    }
    return out.str();
  }

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }
  friend auto operator<=>(const RootedTree& a, const RootedTree& b) { return a.parent_ <=> b.parent_; }

 private:
  RootedTree(std::vector<vertex> parent, vertex root) : parent_(std::move(parent)), root_(root) {
    const int n = size();
    children_.assign(n + 1, {});
    for (vertex v = 1; v <= n; ++v) {
      if (parent_[v] != root_marker) children_[parent_[v]].push_back(v);
    }
    // Reverse breadth-first order lists descendants before ancestors.
    bottom_up_.reserve(n);
    bottom_up_.push_back(root_);
    for (std::size_t head = 0; head < bottom_up_.size(); ++head) {
      for (vertex c : children_[bottom_up_[head]]) bottom_up_.push_back(c);
    }
    std::reverse(bottom_up_.begin(), bottom_up_.end());
  }

  void check_vertex(vertex v) const {
    if (v < 1 || v > size()) {
      throw error(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " not in [1, " +
                                                 std::to_string(size()) + "]",
                  v);
    }
  }

  std::vector<vertex> parent_;
  vertex root_;
  std::vector<std::vector<vertex>> children_;
  std::vector<vertex> bottom_up_;
};

inline RootedTree validate_rooted_tree(std::span<const int> parents) {
  return RootedTree::from_parents(parents);
}

// Number of u with a directed path from u to v, v included.
inline int subtree_size(const RootedTree& tree, vertex v) {
  tree.parent(v);  // range check
  return tree.subtree_sizes()[v];
}

// Path 1 -> 2 -> ... -> n rooted at n, the street of classical parking.
inline RootedTree path_tree(int n) {
  if (n < 1) throw error(errc::vertex_out_of_range, "path needs at least one vertex");
  std::vector<int> parents(n);
  for (int i = 1; i < n; ++i) parents[i - 1] = i + 1;
  parents[n - 1] = root_marker;
  return RootedTree::from_parents(parents);
}

// Whitespace-separated integers; shared by the tree and sequence formats.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r' || text[i] == ','))
      ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    if (text[j] == '-' || text[j] == '+') ++j;
    const std::size_t digits = j;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == digits || (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
                        text[j] != '\r' && text[j] != ',')) {
      throw error(errc::parse_error, "expected an integer near '" +
                                         std::string(text.substr(i, std::min<std::size_t>(8, text.size() - i))) +
                                         "'");
    }
    try {
      values.push_back(std::stoi(std::string(text.substr(i, j - i))));
    } catch (const std::out_of_range&) {
      throw error(errc::parse_error, "integer out of range: " + std::string(text.substr(i, j - i)));
    }
    i = j;
  }
  return values;
}

inline RootedTree parse_rooted_tree(std::string_view text) {
  return RootedTree::from_parents(parse_int_list(text));
}

// ---------------------------------------------------------------------------
// Exhaustive generation.
//
// Rooted tree number k in [0, n^(n-1)) has root (k mod n) + 1 and the
// unrooted shape given by Prüfer sequence number floor(k / n), read as n-2
// base-n digits with the most significant digit first.

inline std::uint64_t rooted_tree_count(int n) {
  std::uint64_t count = 1;
  for (int i = 0; i + 1 < n; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

// Undirected edge list of the tree with Prüfer word `code` over [n].
inline std::vector<std::pair<int, int>> prufer_decode(int n, std::span<const int> code) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  std::vector<int> degree(n + 1, 1);
  for (int a : code) ++degree[a];
  for (int a : code) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  int u = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] != 1) continue;
    if (u == 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
      break;
    }
  }
  return edges;
}

inline RootedTree rooted_tree_at(int n, std::uint64_t index) {
  if (n < 1) throw error(errc::vertex_out_of_range, "tree size must be positive");
  if (index >= rooted_tree_count(n)) throw error(errc::limit_exceeded, "tree index out of range");
  const vertex root = static_cast<vertex>(index % static_cast<std::uint64_t>(n)) + 1;
  std::uint64_t rank = index / static_cast<std::uint64_t>(n);
  std::vector<int> code(n >= 2 ? n - 2 : 0);
  for (auto it = code.rbegin(); it != code.rend(); ++it) {
    *it = static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
    rank /= static_cast<std::uint64_t>(n);
  }

  std::vector<std::vector<int>> adjacent(n + 1);
  for (auto [a, b] : prufer_decode(n, code)) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::vector<int> parents(n, -1);
  parents[root - 1] = root_marker;
  std::vector<int> frontier{root};
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (int w : adjacent[v]) {
      if (parents[w - 1] != -1) continue;
      parents[w - 1] = v;
      frontier.push_back(w);
    }
  }
  return RootedTree::from_parents(parents);
}

// Visits trees with index in [first, last); defaults to all n^(n-1).
template <typename Visitor>
void for_each_rooted_tree(int n, Visitor&& visit, std::uint64_t first = 0,
                          std::uint64_t last = UINT64_MAX) {
  last = std::min(last, rooted_tree_count(n));
  for (std::uint64_t k = first; k < last; ++k) visit(rooted_tree_at(n, k));
}

inline std::vector<RootedTree> enumerate_rooted_trees(int n) {
  std::vector<RootedTree> trees;
  trees.reserve(rooted_tree_count(n));
  for_each_rooted_tree(n, [&](RootedTree t) { trees.push_back(std::move(t)); });
  return trees;
}

}  // namespace treepark
