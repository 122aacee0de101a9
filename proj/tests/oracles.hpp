#pragma once

// Naive reference implementations used only by tests. They share no code
// with the library beyond plain containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// parents[i] for vertex i+1, 0 for the root.
struct ParkResult {
  std::vector<int> spots;             // 0 = failed
  std::vector<std::pair<int, int>> used;  // chronological, first traversal
};

inline ParkResult park(const std::vector<int>& parents, const std::vector<int>& s) {
  const int n = static_cast<int>(parents.size());
  std::vector<int> taken(n + 1, 0);
  std::set<std::pair<int, int>> seen;
  ParkResult r;
  for (int driver = 0; driver < n; ++driver) {
    int v = s[driver];
    while (v != 0 && taken[v]) {
      const int up = parents[v - 1];
      if (up != 0 && seen.insert({v, up}).second) r.used.push_back({v, up});
      v = up;
    }
    if (v != 0) taken[v] = 1;
    r.spots.push_back(v);
  }
  return r;
}

inline bool parks(const std::vector<int>& parents, const std::vector<int>& s) {
  const auto r = park(parents, s);
  return std::find(r.spots.begin(), r.spots.end(), 0) == r.spots.end();
}

inline bool prime(const std::vector<int>& parents, const std::vector<int>& s) {
  const auto r = park(parents, s);
  return std::find(r.spots.begin(), r.spots.end(), 0) == r.spots.end() && r.used.size() + 1 == parents.size();
}

// Every parent list in [0, n]^n with exactly one root and no cycle.
inline std::vector<std::vector<int>> all_trees(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, 0);
  while (true) {
    int roots = 0;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      if (p[v - 1] == v) ok = false;
      roots += p[v - 1] == 0;
    }
    if (ok && roots == 1) {
      for (int v = 1; v <= n && ok; ++v) {
        int u = v;
        for (int steps = 0; u != 0 && steps <= n; ++steps) u = p[u - 1];
        ok = u == 0;
      }
      if (ok) out.push_back(p);
    }
    int i = n - 1;
    while (i >= 0 && p[i] == n) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

inline std::vector<std::vector<int>> all_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(n, 1);
  while (true) {
    out.push_back(s);
    int i = n - 1;
    while (i >= 0 && s[i] == n) s[i--] = 1;
    if (i < 0) break;
    ++s[i];
  }
  return out;
}

// O(n^3) pattern scan.
inline bool avoids_132(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (w[i] < w[k] && w[k] < w[j]) return false;
  return true;
}

// Positions with at least m larger letters to their left.
inline int mmp(const std::vector<int>& w, int m) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int larger = 0;
    for (std::size_t j = 0; j < i; ++j) larger += w[j] > w[i];
    count += larger >= m;
  }
  return count;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// ((n-1)!)^2 sum_{i<n} (n-i)(2n)^i / i!, kept integral by folding one
// (n-1)! into each term.
inline std::uint64_t parking_count(int n) {
  std::uint64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t term = n - i;
    for (int k = 0; k < i; ++k) term *= 2 * n;
    term *= factorial(n - 1) / factorial(i);
    sum += term;
  }
  return factorial(n - 1) * sum;
}

// C_{k+1} = sum C_i C_{k-i}
inline std::vector<std::uint64_t> catalan(int max) {
  std::vector<std::uint64_t> c(max + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= max; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c;
}

// Schroeder paths: steps (1,1), (1,-1), (2,0) from (0,0) to (2n,0), never
// below the axis.
inline std::vector<std::uint64_t> schroder(int max) {
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= max; ++n) {
    std::map<std::pair<int, int>, std::uint64_t> ways{{{0, 0}, 1}};
    std::uint64_t total = 0;
    for (int x = 0; x <= 2 * n; ++x) {
      for (int h = 0; h <= 2 * n; ++h) {
        auto it = ways.find({x, h});
        if (it == ways.end()) continue;
        const std::uint64_t w = it->second;
        if (x == 2 * n) {
          if (h == 0) total += w;
          continue;
        }
        ways[{x + 1, h + 1}] += w;
        if (h > 0) ways[{x + 1, h - 1}] += w;
        if (x + 2 <= 2 * n) ways[{x + 2, h}] += w;
      }
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace oracle
