#pragma once

// The tree parking procedure and the subtree-count characterizations of
// parking functions, used edges and prime parking functions.
//
// Driver i (1-based) tries s_i; if taken she follows parent pointers and
// parks in the first free vertex, or leaves if she passes the root.

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "treepark/error.hpp"
#include "treepark/tree.hpp"

namespace treepark {

using PreferenceSeq = std::vector<int>;

inline constexpr vertex failed_to_park = 0;

struct Edge {
  vertex child;
  vertex parent;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// First traversal of an edge; (driver, step) totally orders crossings.
struct Crossing {
  Edge edge;
  int driver;  // 1-based
  int step;    // 1 for the edge leaving the preferred spot
};

struct ParkingOutcome {
  std::vector<vertex> spot_of_driver;  // failed_to_park for drivers who left
  std::vector<Crossing> first_crossings;

  bool all_parked() const {
    return std::none_of(spot_of_driver.begin(), spot_of_driver.end(),
                        [](vertex v) { return v == failed_to_park; });
  }

  std::vector<Edge> crossed_edges() const {
    std::vector<Edge> edges;
    edges.reserve(first_crossings.size());
    for (const Crossing& c : first_crossings) edges.push_back(c.edge);
    return edges;
  }
};

inline void check_sequence(const RootedTree& tree, std::span<const int> s) {
  if (static_cast<int>(s.size()) != tree.size()) {
    throw error(errc::length_mismatch, "sequence has " + std::to_string(s.size()) + " entries, tree has " +
                                           std::to_string(tree.size()) + " vertices");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > tree.size()) {
      throw error(errc::label_out_of_range,
                  "driver " + std::to_string(i + 1) + " prefers nonexistent vertex " + std::to_string(s[i]), s[i]);
    }
  }
}

inline ParkingOutcome park(const RootedTree& tree, std::span<const int> s) {
  check_sequence(tree, s);
  const int n = tree.size();
  std::vector<bool> occupied(n + 1, false);
  std::vector<bool> crossed(n + 1, false);  // by child endpoint
  ParkingOutcome out;
  out.spot_of_driver.assign(n, failed_to_park);

  for (int driver = 1; driver <= n; ++driver) {
    vertex v = s[driver - 1];
    int step = 0;
    while (occupied[v]) {
      const vertex up = tree.parent(v);
      if (up == root_marker) {
        v = failed_to_park;
        break;
      }
      ++step;
      if (!crossed[v]) {
        crossed[v] = true;
        out.first_crossings.push_back({{v, up}, driver, step});
      }
      v = up;
    }
    if (v != failed_to_park) {
      occupied[v] = true;
      out.spot_of_driver[driver - 1] = v;
    }
  }
  return out;
}

// Evaluates the subtree counts |{i : s_i in T_v}| against |T_v| for one
// fixed tree. Reuses its buffers, so a single instance is not thread-safe;
// use one per thread.
class SubtreeCriterion {
 public:
  enum class Status { not_parking, parking, prime };

  explicit SubtreeCriterion(const RootedTree& tree)
      : order_(tree.bottom_up()), parent_(tree.size() + 1), size_(tree.subtree_sizes()), count_(tree.size() + 1) {
    for (vertex v = 1; v <= tree.size(); ++v) parent_[v] = tree.parent(v);
  }

  // |{i : s_i in T_v}| indexed by label.
  const std::vector<int>& counts(std::span<const int> s) {
    std::fill(count_.begin(), count_.end(), 0);
    for (int p : s) ++count_[p];
    for (vertex v : order_) {
      if (parent_[v] != root_marker) count_[parent_[v]] += count_[v];
    }
    return count_;
  }

  Status classify(std::span<const int> s) {
    counts(s);
    bool prime = true;
    for (vertex v : order_) {
      if (count_[v] < size_[v]) return Status::not_parking;
      if (parent_[v] != root_marker && count_[v] == size_[v]) prime = false;
    }
    return prime ? Status::prime : Status::parking;
  }

  const std::vector<int>& subtree_sizes() const noexcept { return size_; }

 private:
  std::vector<vertex> order_;
  std::vector<vertex> parent_;
  std::vector<int> size_;
  std::vector<int> count_;
};

// Subtree criterion: every T_v receives at least |T_v| preferences.
inline bool is_parking_function(const RootedTree& tree, std::span<const int> s) {
  check_sequence(tree, s);
  return SubtreeCriterion(tree).classify(s) != SubtreeCriterion::Status::not_parking;
}

// Edges used by a parking function, in order of first crossing. The edge
// (u, parent(u)) is used exactly when T_u receives more than |T_u|
// preferences; the simulated crossing set must agree with that.
inline std::vector<Edge> used_edges(const RootedTree& tree, std::span<const int> s) {
  check_sequence(tree, s);
  SubtreeCriterion criterion(tree);
  if (criterion.classify(s) == SubtreeCriterion::Status::not_parking) {
    throw error(errc::not_a_parking_function, "used edges are only defined for parking functions");
  }
  const auto& counts = criterion.counts(s);
  const auto& sizes = criterion.subtree_sizes();
  std::vector<Edge> by_criterion;
  for (vertex u = 1; u <= tree.size(); ++u) {
    if (!tree.is_root(u) && sizes[u] < counts[u]) by_criterion.push_back({u, tree.parent(u)});
  }

  std::vector<Edge> chronological = park(tree, s).crossed_edges();
  std::vector<Edge> sorted = chronological;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != by_criterion) {
    throw std::logic_error("used-edge criterion disagrees with simulation for tree " + tree.to_text());
  }
  return chronological;
}

// Prime: every non-root T_v receives strictly more than |T_v| preferences.
// Cross-checked against the simulation (a parking function using all n-1
// edges); disagreement is a bug and throws std::logic_error.
inline bool is_prime(const RootedTree& tree, std::span<const int> s) {
  check_sequence(tree, s);
  const bool by_criterion = SubtreeCriterion(tree).classify(s) == SubtreeCriterion::Status::prime;
  const ParkingOutcome outcome = park(tree, s);
  const bool by_edges =
      outcome.all_parked() && static_cast<int>(outcome.first_crossings.size()) == tree.size() - 1;
  if (by_criterion != by_edges) {
    throw std::logic_error("prime criterion disagrees with used-edge count for tree " + tree.to_text());
  }
  return by_criterion;
}

inline bool is_weakly_increasing(std::span<const int> s) { return std::is_sorted(s.begin(), s.end()); }

inline bool is_parking_distribution(const RootedTree& tree, std::span<const int> s) {
  check_sequence(tree, s);
  return is_weakly_increasing(s) && is_parking_function(tree, s);
}

inline std::string sequence_to_text(std::span<const int> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  return out.str();
}

inline PreferenceSeq parse_sequence(std::string_view text) { return parse_int_list(text); }

}  // namespace treepark
