#pragma once

// Plane (ordered) trees.
//
//   PlaneTree         unlabeled shape; nodes are numbered 0..n-1 in preorder
//                     with node 0 the root, so equal shapes compare equal.
//   LabeledPlaneTree  shape whose non-root nodes carry a bijective labeling
//                     by [n-1]; text form `*[6[3] 2[5 4] 8[7[1]]]`.
//   OrderedTree       shape whose nodes carry a bijective labeling by [n];
//                     an ordered version of a RootedTree, text form
//                     `5[4[2[1] 3]]`.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treepark/error.hpp"
#include "treepark/permutation.hpp"
#include "treepark/tree.hpp"

namespace treepark {

using node_id = int;

class PlaneTree {
 public:
  // The one-node tree.
  PlaneTree() : children_(1), parent_{-1} {}

  // Builds the canonical (preorder-numbered) form of the tree rooted at
  // `root` in an arbitrary node numbering. If `renumber` is given it
  // receives old id -> new id.
  static PlaneTree from_children(const std::vector<std::vector<node_id>>& children, node_id root = 0,
                                 std::vector<node_id>* renumber = nullptr) {
    const int count = static_cast<int>(children.size());
    std::vector<node_id> new_id(count, -1);
    std::vector<node_id> order;
    order.reserve(count);
    std::vector<node_id> stack{root};
    while (!stack.empty()) {
      const node_id v = stack.back();
      stack.pop_back();
      if (v < 0 || v >= count || new_id[v] != -1) {
        throw error(errc::parse_error, "child lists do not describe a tree");
      }
      new_id[v] = static_cast<node_id>(order.size());
      order.push_back(v);
      for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    if (static_cast<int>(order.size()) != count) {
      throw error(errc::parse_error, "child lists contain nodes unreachable from the root");
    }

    PlaneTree t;
    t.children_.assign(count, {});
    t.parent_.assign(count, -1);
    for (node_id old : order) {
      for (node_id c : children[old]) {
        t.children_[new_id[old]].push_back(new_id[c]);
        t.parent_[new_id[c]] = new_id[old];
      }
    }
    if (renumber) *renumber = std::move(new_id);
    return t;
  }

  // A fresh root whose children, left to right, are the given subtrees.
  static PlaneTree join(std::span<const PlaneTree> subtrees) {
    PlaneTree t;
    for (const PlaneTree& sub : subtrees) {
      const node_id offset = t.size();
      t.children_[0].push_back(offset);
      t.parent_.push_back(0);
      t.children_.push_back({});
      for (node_id v = 0; v < sub.size(); ++v) {
        if (v > 0) {
          t.parent_.push_back(sub.parent_[v] + offset);
          t.children_.push_back({});
        }
        for (node_id c : sub.children_[v]) t.children_[v + offset].push_back(c + offset);
      }
    }
    return t;
  }

  int size() const noexcept { return static_cast<int>(children_.size()); }
  const std::vector<node_id>& children(node_id v) const { return children_.at(v); }
  node_id parent(node_id v) const { return parent_.at(v); }

  // Post-order: a node follows its subtree and the subtrees of its left siblings.
  std::vector<node_id> post_order() const {
    std::vector<node_id> order;
    order.reserve(children_.size());
    std::vector<std::pair<node_id, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children_[v].size()) {
        const node_id c = children_[v][next++];
        stack.emplace_back(c, 0);
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
    return order;
  }

  std::vector<int> subtree_sizes() const {
    std::vector<int> sizes(children_.size(), 1);
    // Preorder numbering puts every descendant after its ancestor.
    for (node_id v = size() - 1; v > 0; --v) sizes[parent_[v]] += sizes[v];
    return sizes;
  }

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.children_ == b.children_; }
  friend auto operator<=>(const PlaneTree& a, const PlaneTree& b) { return a.children_ <=> b.children_; }

 private:
  std::vector<std::vector<node_id>> children_;
  std::vector<node_id> parent_;
};

namespace detail {

struct ParsedPlaneTree {
  PlaneTree shape;
  std::vector<int> labels;  // by canonical node id; 0 where the text had `*`
};

class PlaneTreeParser {
 public:
  explicit PlaneTreeParser(std::string_view text) : text_(text) {}

  ParsedPlaneTree parse() {
    std::vector<std::vector<node_id>> children;
    std::vector<int> labels;
    // Explicit stack keeps deep paths off the call stack.
    std::vector<node_id> open;
    node_id root = -1;

    auto read_node = [&](bool is_root) {
      skip_space();
      if (pos_ >= text_.size()) fail("unexpected end of input");
      int label = 0;
      if (text_[pos_] == '*') {
        if (!is_root) fail("only the root may be unlabeled");
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        if (end - pos_ > 9) fail("label too large");
        label = std::stoi(std::string(text_.substr(pos_, end - pos_)));
        pos_ = end;
      } else {
        fail("expected a label or '*'");
      }
      const node_id id = static_cast<node_id>(children.size());
      children.emplace_back();
      labels.push_back(label);
      if (!open.empty()) children[open.back()].push_back(id);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '[') {
        ++pos_;
        open.push_back(id);
      }
      return id;
    };

    root = read_node(true);
    while (!open.empty()) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced '['");
      if (text_[pos_] == ']') {
        ++pos_;
        open.pop_back();
        continue;
      }
      read_node(false);
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");

    std::vector<node_id> renumber;
    ParsedPlaneTree out;
    out.shape = PlaneTree::from_children(children, root, &renumber);
    out.labels.assign(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) out.labels[renumber[i]] = labels[i];
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::parse_error, why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Writes `root[child child ...]`, omitting brackets on leaves.
inline std::string write_plane_text(const PlaneTree& shape, const std::vector<int>& labels, bool star_root) {
  std::string out;
  std::vector<std::pair<node_id, std::size_t>> stack{{0, 0}};
  out += star_root ? std::string("*") : std::to_string(labels[0]);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& kids = shape.children(v);
    if (next < kids.size()) {
      out += next == 0 ? "[" : " ";
      const node_id c = kids[next++];
      out += std::to_string(labels[c]);
      stack.emplace_back(c, 0);
    } else {
      if (!kids.empty()) out += "]";
      stack.pop_back();
    }
  }
  return out;
}

inline void check_bijection(std::span<const int> labels, int first_node, int n_labels) {
  std::vector<bool> seen(n_labels + 1, false);
  for (std::size_t v = first_node; v < labels.size(); ++v) {
    const int l = labels[v];
    if (l < 1 || l > n_labels || seen[l]) {
      throw error(errc::invalid_labeling, "label " + std::to_string(l) + " is out of range or repeated");
    }
    seen[l] = true;
  }
}

}  // namespace detail

// Plane tree on n nodes whose non-root nodes are labeled bijectively by [n-1].
class LabeledPlaneTree {
 public:
  LabeledPlaneTree() : labels_{0} {}

  // labels[v] for each canonical node id; labels[0] is ignored.
  LabeledPlaneTree(PlaneTree shape, std::vector<int> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != shape_.size()) {
      throw error(errc::invalid_labeling, "one label per node required");
    }
    labels_[0] = 0;
    detail::check_bijection(labels_, 1, shape_.size() - 1);
  }

  int size() const noexcept { return shape_.size(); }
  const PlaneTree& shape() const noexcept { return shape_; }
  int label(node_id v) const { return labels_.at(v); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  std::string to_text() const { return detail::write_plane_text(shape_, labels_, true); }

  friend bool operator==(const LabeledPlaneTree&, const LabeledPlaneTree&) = default;
  friend auto operator<=>(const LabeledPlaneTree&, const LabeledPlaneTree&) = default;

 private:
  PlaneTree shape_;
  std::vector<int> labels_;
};

// Plane tree on n nodes labeled bijectively by [n], root included.
class OrderedTree {
 public:
  OrderedTree() : labels_{1} {}

  OrderedTree(PlaneTree shape, std::vector<int> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != shape_.size()) {
      throw error(errc::invalid_labeling, "one label per node required");
    }
    detail::check_bijection(labels_, 0, shape_.size());
  }

  // Orders the children of every vertex of `tree` by increasing `key(child)`.
  template <typename Key>
  static OrderedTree from_rooted(const RootedTree& tree, Key&& key) {
    const int n = tree.size();
    std::vector<std::vector<node_id>> children(n);  // node = label - 1
    for (vertex v = 1; v <= n; ++v) {
      auto& kids = children[v - 1];
      for (vertex c : tree.children(v)) kids.push_back(c - 1);
      std::sort(kids.begin(), kids.end(), [&](node_id a, node_id b) { return key(a + 1) < key(b + 1); });
    }
    std::vector<node_id> renumber;
    PlaneTree shape = PlaneTree::from_children(children, tree.root() - 1, &renumber);
    std::vector<int> labels(n);
    for (vertex v = 1; v <= n; ++v) labels[renumber[v - 1]] = v;
    return OrderedTree(std::move(shape), std::move(labels));
  }

  int size() const noexcept { return shape_.size(); }
  const PlaneTree& shape() const noexcept { return shape_; }
  int label(node_id v) const { return labels_.at(v); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  // Forgets the sibling order.
  RootedTree to_rooted_tree() const {
    std::vector<int> parents(size(), root_marker);
    for (node_id v = 1; v < size(); ++v) parents[labels_[v] - 1] = labels_[shape_.parent(v)];
    return RootedTree::from_parents(parents);
  }

  // Same shape, labels mapped through `sigma`.
  OrderedTree relabeled(const Permutation& sigma) const {
    std::vector<int> labels(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) labels[v] = sigma(labels_[v]);
    return OrderedTree(shape_, std::move(labels));
  }

  bool is_post_order_labeled() const {
    const auto order = shape_.post_order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (labels_[order[i]] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  std::string to_text() const { return detail::write_plane_text(shape_, labels_, false); }

  friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
  friend auto operator<=>(const OrderedTree&, const OrderedTree&) = default;

 private:
  PlaneTree shape_;
  std::vector<int> labels_;
};

inline LabeledPlaneTree parse_labeled_plane_tree(std::string_view text) {
  auto parsed = detail::PlaneTreeParser(text).parse();
  if (parsed.labels[0] != 0) throw error(errc::parse_error, "root of a labeled plane tree must be '*'");
  return LabeledPlaneTree(std::move(parsed.shape), std::move(parsed.labels));
}

inline OrderedTree parse_ordered_tree(std::string_view text) {
  auto parsed = detail::PlaneTreeParser(text).parse();
  if (parsed.labels[0] == 0) throw error(errc::parse_error, "root of an ordered tree needs a label");
  return OrderedTree(std::move(parsed.shape), std::move(parsed.labels));
}

// Post-order labeling of the shape: labels()[v] is the post-order rank of v.
inline OrderedTree post_order_labeled(const PlaneTree& shape) {
  std::vector<int> labels(shape.size());
  const auto order = shape.post_order();
  for (std::size_t i = 0; i < order.size(); ++i) labels[order[i]] = static_cast<int>(i) + 1;
  return OrderedTree(shape, std::move(labels));
}

// Returns sigma with sigma(old label) = post-order rank, and the relabeled tree.
inline std::pair<Permutation, OrderedTree> post_order_relabel(const OrderedTree& tree) {
  std::vector<int> word(tree.size());
  const auto order = tree.shape().post_order();
  for (std::size_t i = 0; i < order.size(); ++i) word[tree.label(order[i]) - 1] = static_cast<int>(i) + 1;
  Permutation sigma = Permutation::from_word(std::move(word));
  OrderedTree relabeled = tree.relabeled(sigma);
  return {std::move(sigma), std::move(relabeled)};
}

// ---------------------------------------------------------------------------
// Exhaustive generation. Shapes on n nodes come out grouped by the sequence
// of root child sizes (a composition of n-1) in lexicographic order; within
// one composition the leftmost child varies slowest.

namespace detail {

template <typename Visitor>
void for_each_composition(int total, std::vector<int>& prefix, Visitor& visit) {
  if (total == 0) {
    visit(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    for_each_composition(total - first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

inline std::vector<PlaneTree> enumerate_plane_trees(int n) {
  if (n < 1) return {};
  std::vector<std::vector<PlaneTree>> by_size(n + 1);
  by_size[1].emplace_back();
  for (int m = 2; m <= n; ++m) {
    auto& out = by_size[m];
    auto visit = [&](const std::vector<int>& parts) {
      std::vector<std::size_t> pick(parts.size(), 0);
      std::vector<PlaneTree> subtrees(parts.size());
      while (true) {
        for (std::size_t i = 0; i < parts.size(); ++i) subtrees[i] = by_size[parts[i]][pick[i]];
        out.push_back(PlaneTree::join(subtrees));
        std::size_t i = parts.size();
        while (i > 0) {
          --i;
          if (++pick[i] < by_size[parts[i]].size()) break;
          pick[i] = 0;
          if (i == 0) return;
        }
        if (parts.empty()) return;
      }
    };
    std::vector<int> prefix;
    detail::for_each_composition(m - 1, prefix, visit);
  }
  return std::move(by_size[n]);
}

// Every plane tree on n nodes with every labeling of its non-root nodes.
template <typename Visitor>
void for_each_labeled_plane_tree(int n, Visitor&& visit) {
  for (const PlaneTree& shape : enumerate_plane_trees(n)) {
    std::vector<int> word(n - 1);
    std::iota(word.begin(), word.end(), 1);
    do {
      std::vector<int> labels(n, 0);
      std::copy(word.begin(), word.end(), labels.begin() + 1);
      visit(LabeledPlaneTree(shape, std::move(labels)));
    } while (std::next_permutation(word.begin(), word.end()));
  }
}

}  // namespace treepark
