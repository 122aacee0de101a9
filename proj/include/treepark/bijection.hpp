#pragma once

// The bijection between prime parking functions (T, p) on n vertices and
// pairs (sigma, P) of a permutation of [n] and a plane tree on n nodes with
// non-root nodes labeled by [n-1]:
//
//   psi = (phi, then alpha on the standardized part)
//
// phi orders siblings by first edge crossing (a sibling whose edge is
// crossed earlier sits further right) and relabels in post-order. alpha
// splits a standardized prime parking function along the edges still unused
// before the last driver and recurses on the pieces.
//
// Also here: Borie's map from 132-avoiding permutations to increasing
// parking functions and the explicit alpha-preimages of labeled paths.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treepark/error.hpp"
#include "treepark/parking.hpp"
#include "treepark/permutation.hpp"
#include "treepark/plane_tree.hpp"
#include "treepark/tree.hpp"

namespace treepark {

// Standardized restricted prime parking function: a post-order labeled
// plane tree with a prime preference sequence whose sibling order matches
// first-crossing order.
struct SRP {
  OrderedTree tree;
  PreferenceSeq prefs;

  friend bool operator==(const SRP&, const SRP&) = default;
  friend auto operator<=>(const SRP&, const SRP&) = default;
};

// Empty when (tree, prefs) is an SRP, otherwise the first violated condition.
inline std::optional<std::string> srp_violation(const OrderedTree& tree, std::span<const int> prefs) {
  if (!tree.is_post_order_labeled()) return "labels are not in post-order";
  const RootedTree rooted = tree.to_rooted_tree();
  if (static_cast<int>(prefs.size()) != rooted.size()) return "sequence length differs from tree size";
  for (int p : prefs) {
    if (p < 1 || p > rooted.size()) return "preference out of range";
  }
  if (SubtreeCriterion(rooted).classify(prefs) != SubtreeCriterion::Status::prime) return "not prime";

  std::vector<int> first_crossed(rooted.size() + 1, -1);
  const auto outcome = park(rooted, prefs);
  for (std::size_t i = 0; i < outcome.first_crossings.size(); ++i) {
    first_crossed[outcome.first_crossings[i].edge.child] = static_cast<int>(i);
  }
  const PlaneTree& shape = tree.shape();
  for (node_id v = 0; v < shape.size(); ++v) {
    const auto& kids = shape.children(v);
    for (std::size_t j = 1; j < kids.size(); ++j) {
      // Right sibling must have been crossed first.
      if (first_crossed[tree.label(kids[j - 1])] <= first_crossed[tree.label(kids[j])]) {
        return "siblings of " + std::to_string(tree.label(v)) + " are not in reverse first-crossing order";
      }
    }
  }
  return std::nullopt;
}

inline bool is_srp(const SRP& x) { return !srp_violation(x.tree, x.prefs).has_value(); }

// ---------------------------------------------------------------------------
// phi

inline std::pair<Permutation, SRP> phi(const RootedTree& tree, std::span<const int> p) {
  if (!is_prime(tree, p)) throw error(errc::not_prime, "phi needs a prime parking function");
  const auto outcome = park(tree, p);
  std::vector<int> rank(tree.size() + 1, 0);
  for (std::size_t i = 0; i < outcome.first_crossings.size(); ++i) {
    rank[outcome.first_crossings[i].edge.child] = static_cast<int>(i);
  }
  // Later first crossing sorts further left.
  const OrderedTree ordered = OrderedTree::from_rooted(tree, [&](vertex c) { return -rank[c]; });
  auto [sigma, relabeled] = post_order_relabel(ordered);
  PreferenceSeq prefs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) prefs[i] = sigma(p[i]);
  return {std::move(sigma), SRP{std::move(relabeled), std::move(prefs)}};
}

inline std::pair<RootedTree, PreferenceSeq> phi_inverse(const Permutation& sigma, const SRP& x) {
  if (sigma.size() != x.tree.size()) throw error(errc::length_mismatch, "permutation and tree sizes differ");
  const Permutation back = sigma.inverse();
  PreferenceSeq prefs(x.prefs.size());
  for (std::size_t i = 0; i < prefs.size(); ++i) prefs[i] = back(x.prefs[i]);
  return {x.tree.relabeled(back).to_rooted_tree(), std::move(prefs)};
}

// ---------------------------------------------------------------------------
// alpha

namespace detail {

// Pieces of an SRP after parking all drivers but the last, in order along
// the path from the last driver's preferred vertex to the root.
struct Decomposition {
  struct Component {
    int offset = 0;           // component vertices are offset+1 .. offset+size
    int size = 0;
    vertex marked = 0;        // p_m for the first piece, else where the previous piece hangs
    std::vector<int> drivers; // A_i, increasing
  };
  std::vector<Component> components;
};

// parents[v] for local labels v = 1..m (entry 0 unused), root m.
inline Decomposition decompose(const std::vector<int>& parents, const std::vector<int>& prefs) {
  const int m = static_cast<int>(prefs.size());
  std::vector<bool> occupied(m + 1, false);
  std::vector<bool> used(m + 1, false);  // edge (v, parent v) used, by child v
  for (int j = 0; j + 1 < m; ++j) {
    vertex v = prefs[j];
    while (occupied[v]) {
      used[v] = true;
      v = parents[v];
      if (v == root_marker) throw std::logic_error("driver failed to park inside an SRP");
    }
    occupied[v] = true;
  }

  auto top = [&](vertex v) {
    while (used[v]) v = parents[v];
    return v;
  };

  Decomposition out;
  std::vector<int> component_of_top(m + 1, -1);
  vertex v = prefs[m - 1];
  while (v != m) {
    const vertex head = top(v);
    component_of_top[head] = static_cast<int>(out.components.size());
    out.components.push_back({0, 0, v, {}});
    v = parents[head];
  }

  std::vector<int> component(m + 1, -1);
  for (vertex u = 1; u < m; ++u) {
    component[u] = component_of_top[top(u)];
    if (component[u] < 0) throw std::logic_error("unused edge off the last driver's path");
    ++out.components[component[u]].size;
  }
  int offset = 0;
  for (auto& c : out.components) {
    c.offset = offset;
    offset += c.size;
  }
  for (vertex u = 1; u < m; ++u) {
    const auto& c = out.components[component[u]];
    if (u <= c.offset || u > c.offset + c.size) throw std::logic_error("component labels are not contiguous");
  }
  for (int j = 1; j < m; ++j) out.components[component[prefs[j - 1]]].drivers.push_back(j);
  for (const auto& c : out.components) {
    if (static_cast<int>(c.drivers.size()) != c.size) throw std::logic_error("component driver count mismatch");
  }
  return out;
}

}  // namespace detail

inline LabeledPlaneTree alpha(const SRP& x) {
  if (auto why = srp_violation(x.tree, x.prefs)) throw error(errc::not_srp, *why);

  // Output nodes in creation order; node 0 is the unlabeled root.
  std::vector<std::vector<node_id>> out_children(1);
  std::vector<int> out_labels(1, 0);

  struct Task {
    std::vector<int> parents;    // local labels 1..m
    std::vector<int> prefs;
    node_id out;                 // the pieces hang below this output node
    std::vector<int> label_map;  // local label 1..m-1 -> final label
  };

  const int n = x.tree.size();
  std::vector<Task> stack;
  {
    Task top;
    top.parents = x.tree.to_rooted_tree().parents();
    top.parents.insert(top.parents.begin(), 0);
    top.prefs = x.prefs;
    top.out = 0;
    top.label_map.resize(n);
    for (int l = 0; l < n; ++l) top.label_map[l] = l;
    stack.push_back(std::move(top));
  }

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.prefs.size() == 1) continue;

    const auto pieces = detail::decompose(task.parents, task.prefs);
    for (const auto& c : pieces.components) {
      const int k = c.marked - c.offset;
      const int marked_driver = c.drivers[k - 1];

      const node_id node = static_cast<node_id>(out_children.size());
      out_children.emplace_back();
      out_labels.push_back(task.label_map[marked_driver]);
      out_children[task.out].push_back(node);

      Task sub;
      sub.out = node;
      sub.label_map.push_back(0);
      for (int d : c.drivers) {
        if (d != marked_driver) sub.label_map.push_back(task.label_map[d]);
      }
      sub.parents.assign(c.size + 1, 0);
      for (int v = 1; v <= c.size; ++v) {
        const int up = task.parents[v + c.offset];
        sub.parents[v] = (up > c.offset && up <= c.offset + c.size) ? up - c.offset : root_marker;
      }
      for (int d : c.drivers) sub.prefs.push_back(task.prefs[d - 1] - c.offset);
      stack.push_back(std::move(sub));
    }
  }

  std::vector<node_id> renumber;
  PlaneTree shape = PlaneTree::from_children(out_children, 0, &renumber);
  std::vector<int> labels(out_labels.size());
  for (std::size_t v = 0; v < out_labels.size(); ++v) labels[renumber[v]] = out_labels[v];
  return LabeledPlaneTree(std::move(shape), std::move(labels));
}

inline SRP alpha_inverse(const LabeledPlaneTree& tree) {
  const int n = tree.size();
  const PlaneTree& shape = tree.shape();
  const std::vector<int> subtree = shape.subtree_sizes();

  std::vector<int> parent(n + 1, root_marker);
  std::vector<std::vector<node_id>> kids(n);  // by label - 1, left to right
  PreferenceSeq prefs(n, 0);

  struct Task {
    node_id node;               // its subtree, minus the node itself, is the input
    std::vector<int> local;     // local label of every node in the subtree (by node id), 0 elsewhere
    int offset;                 // output vertex = offset + local vertex
    std::vector<int> driver_map;  // local driver 1..m -> output driver
  };

  auto collect = [&](node_id root) {
    std::vector<node_id> nodes{root};
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      for (node_id c : shape.children(nodes[head])) nodes.push_back(c);
    }
    return nodes;
  };

  std::vector<Task> stack;
  {
    Task top{0, tree.labels(), 0, {}};
    top.driver_map.resize(n + 1);
    for (int j = 0; j <= n; ++j) top.driver_map[j] = j;
    stack.push_back(std::move(top));
  }

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const int m = subtree[task.node];
    if (m == 1) {
      prefs[task.driver_map[1] - 1] = task.offset + 1;
      continue;
    }

    const auto& pieces = shape.children(task.node);
    const std::size_t r = pieces.size();
    std::vector<int> offsets(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i) offsets[i + 1] = offsets[i] + subtree[pieces[i]];

    std::vector<std::vector<int>> drivers(r);  // A_i, increasing
    std::vector<int> mark_rank(r);
    std::vector<std::vector<node_id>> members(r);
    for (std::size_t i = 0; i < r; ++i) {
      members[i] = collect(pieces[i]);
      for (node_id v : members[i]) drivers[i].push_back(task.local[v]);
      std::sort(drivers[i].begin(), drivers[i].end());
      const int mark = task.local[pieces[i]];
      mark_rank[i] = static_cast<int>(std::lower_bound(drivers[i].begin(), drivers[i].end(), mark) -
                                      drivers[i].begin()) + 1;
    }

    // Piece i's root is its last post-order vertex; it hangs from the
    // vertex of piece i+1 singled out by that piece's mark, leftmost among
    // siblings; the last piece hangs from the local root m.
    for (std::size_t i = 0; i < r; ++i) {
      const int piece_root = task.offset + offsets[i] + subtree[pieces[i]];
      const int attach = i + 1 < r ? task.offset + offsets[i + 1] + mark_rank[i + 1] : task.offset + m;
      parent[piece_root] = attach;
      kids[attach - 1].push_back(piece_root - 1);
    }
    prefs[task.driver_map[m] - 1] = task.offset + mark_rank[0];

    for (std::size_t i = 0; i < r; ++i) {
      Task sub;
      sub.node = pieces[i];
      sub.offset = task.offset + offsets[i];
      sub.local.assign(n, 0);
      const int mark = task.local[pieces[i]];
      std::vector<int> unmarked;
      for (int d : drivers[i]) {
        if (d != mark) unmarked.push_back(d);
      }
      for (node_id v : members[i]) {
        if (v == pieces[i]) continue;
        sub.local[v] = static_cast<int>(std::lower_bound(unmarked.begin(), unmarked.end(), task.local[v]) -
                                        unmarked.begin()) + 1;
      }
      sub.driver_map.push_back(0);
      for (int d : drivers[i]) sub.driver_map.push_back(task.driver_map[d]);
      stack.push_back(std::move(sub));
    }
  }

  std::vector<node_id> renumber;
  PlaneTree ordered = PlaneTree::from_children(kids, n - 1, &renumber);
  std::vector<int> labels(n);
  for (int v = 1; v <= n; ++v) labels[renumber[v - 1]] = v;
  return SRP{OrderedTree(std::move(ordered), std::move(labels)), std::move(prefs)};
}

// ---------------------------------------------------------------------------
// psi

struct PsiImage {
  Permutation sigma;
  LabeledPlaneTree tree;

  friend bool operator==(const PsiImage&, const PsiImage&) = default;
  friend auto operator<=>(const PsiImage&, const PsiImage&) = default;
};

inline PsiImage psi(const RootedTree& tree, std::span<const int> p) {
  auto [sigma, standardized] = phi(tree, p);
  return {std::move(sigma), alpha(standardized)};
}

inline std::pair<RootedTree, PreferenceSeq> psi_inverse(const Permutation& sigma, const LabeledPlaneTree& tree) {
  if (sigma.size() != tree.size()) throw error(errc::length_mismatch, "permutation and plane tree sizes differ");
  return phi_inverse(sigma, alpha_inverse(tree));
}

// ---------------------------------------------------------------------------
// 132-avoiding permutations and paths

// No i < j < k with sigma_i < sigma_k < sigma_j.
inline bool is_132_avoiding(const Permutation& sigma) {
  const auto& w = sigma.word();
  const std::size_t n = w.size();
  int smallest_before = w.empty() ? 0 : w[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (smallest_before < w[k] && w[k] < w[j]) return false;
    }
    smallest_before = std::min(smallest_before, w[j]);
  }
  return true;
}

// |{i : at least m letters left of position i are larger than sigma_i}|
inline int mmp(const Permutation& sigma, int m) {
  const auto& w = sigma.word();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int larger = 0;
    for (std::size_t j = 0; j < i; ++j) larger += w[j] > w[i];
    count += larger >= m;
  }
  return count;
}

// (mmp(n) + 1, mmp(n - 1) + 1, ..., mmp(1) + 1)
inline PreferenceSeq borie_map(const Permutation& sigma) {
  if (!is_132_avoiding(sigma)) throw error(errc::not_132_avoiding, "permutation " + sigma.to_text() + " contains 132");
  const int n = sigma.size();
  PreferenceSeq out;
  out.reserve(n);
  for (int m = n; m >= 1; --m) out.push_back(mmp(sigma, m) + 1);
  return out;
}

// The sequence s of length n + 1 on the path with s_1 = 1 and
// s_i = |{j > n+2-i : sigma_j < sigma_{n+2-i}}| + 1 for i >= 2.
inline PreferenceSeq path_preimage_seq(const Permutation& sigma) {
  const int n = sigma.size();
  PreferenceSeq s(n + 1);
  s[0] = 1;
  for (int i = 2; i <= n + 1; ++i) {
    const int pos = n + 2 - i;
    int smaller_after = 0;
    for (int j = pos + 1; j <= n; ++j) smaller_after += sigma(j) < sigma(pos);
    s[i - 1] = smaller_after + 1;
  }
  return s;
}

// Root, then sigma_1, sigma_2, ..., sigma_n going away from the root.
inline LabeledPlaneTree labeled_path(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::vector<node_id>> children(n + 1);
  for (int v = 0; v < n; ++v) children[v].push_back(v + 1);
  std::vector<int> labels(n + 1, 0);
  for (int v = 1; v <= n; ++v) labels[v] = sigma(v);
  return LabeledPlaneTree(PlaneTree::from_children(children), std::move(labels));
}

// The path 1 -> 2 -> ... -> n as an ordered tree; its labels are post-order.
inline OrderedTree ordered_path(int n) {
  return OrderedTree::from_rooted(path_tree(n), [](vertex v) { return v; });
}

}  // namespace treepark
