#pragma once

// Exhaustive censuses and bijection suites. Every count here comes from
// enumerating objects; the closed forms only appear as the expected column.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "treepark/bijection.hpp"
#include "treepark/error.hpp"
#include "treepark/parking.hpp"
#include "treepark/permutation.hpp"
#include "treepark/plane_tree.hpp"
#include "treepark/series_lab.hpp"
#include "treepark/tree.hpp"

namespace treepark {

// ---------------------------------------------------------------------------
// Sequence enumeration.

// All of [n]^n in lexicographic order.
template <typename Visitor>
void for_each_sequence(int n, Visitor&& visit) {
  std::vector<int> s(n, 1);
  while (true) {
    visit(static_cast<const std::vector<int>&>(s));
    int i = n - 1;
    while (i >= 0 && s[i] == n) s[i--] = 1;
    if (i < 0) return;
    ++s[i];
  }
}

// Weakly increasing sequences in [n]^n, binom(2n-1, n) of them.
template <typename Visitor>
void for_each_weakly_increasing(int n, Visitor&& visit) {
  std::vector<int> s(n, 1);
  while (true) {
    visit(static_cast<const std::vector<int>&>(s));
    int i = n - 1;
    while (i >= 0 && s[i] == n) --i;
    if (i < 0) return;
    const int v = s[i] + 1;
    std::fill(s.begin() + i, s.end(), v);
  }
}

inline std::string describe(const RootedTree& tree, std::span<const int> s) {
  return "tree [" + tree.to_text() + "] seq [" + sequence_to_text(s) + "]";
}

// ---------------------------------------------------------------------------
// Census.

struct CensusCounts {
  std::uint64_t parking = 0;               // F_n
  std::uint64_t prime = 0;                 // P_n
  std::uint64_t distributions = 0;         // F~_n
  std::uint64_t prime_distributions = 0;   // P~_n
  std::uint64_t marked_prime = 0;          // P*_n
  std::uint64_t marked = 0;                // F*_n
  std::uint64_t checked_by_simulation = 0;
  std::string first_disagreement;          // criterion vs. simulation

  CensusCounts& operator+=(const CensusCounts& o) {
    parking += o.parking;
    prime += o.prime;
    distributions += o.distributions;
    prime_distributions += o.prime_distributions;
    marked_prime += o.marked_prime;
    marked += o.marked;
    checked_by_simulation += o.checked_by_simulation;
    if (first_disagreement.empty()) first_disagreement = o.first_disagreement;
    return *this;
  }
};

inline constexpr int census_max_default = 5;
inline constexpr int census_max_large = 6;

// Counts over trees with index in [first, last). With `cross_check` every
// sequence is also parked and the outcome compared with the criterion.
inline CensusCounts census_shard(int n, std::uint64_t first, std::uint64_t last, bool cross_check) {
  CensusCounts counts;
  for_each_rooted_tree(
      n,
      [&](const RootedTree& tree) {
        SubtreeCriterion criterion(tree);
        std::uint64_t leaves = 0;
        for (vertex v = 1; v <= n; ++v) leaves += tree.is_leaf(v);

        for_each_sequence(n, [&](const std::vector<int>& s) {
          const auto status = criterion.classify(s);
          if (status == SubtreeCriterion::Status::not_parking) return;
          ++counts.parking;
          if (status == SubtreeCriterion::Status::prime) ++counts.prime;
        });

        if (cross_check) {
          for_each_sequence(n, [&](const std::vector<int>& s) {
            const auto status = criterion.classify(s);
            const auto outcome = park(tree, s);
            const bool parks = outcome.all_parked();
            const bool prime = parks && static_cast<int>(outcome.first_crossings.size()) == n - 1;
            ++counts.checked_by_simulation;
            if ((status != SubtreeCriterion::Status::not_parking) != parks ||
                (status == SubtreeCriterion::Status::prime) != prime) {
              if (counts.first_disagreement.empty()) counts.first_disagreement = describe(tree, s);
            }
          });
        }

        std::uint64_t dist = 0;
        std::uint64_t prime_dist = 0;
        for_each_weakly_increasing(n, [&](const std::vector<int>& s) {
          const auto status = criterion.classify(s);
          if (status == SubtreeCriterion::Status::not_parking) return;
          ++dist;
          if (status == SubtreeCriterion::Status::prime) ++prime_dist;
        });
        counts.distributions += dist;
        counts.prime_distributions += prime_dist;
        counts.marked += leaves * dist;
        counts.marked_prime += leaves * prime_dist;
      },
      first, last);
  return counts;
}

// Brute-force |SRP_n|: every post-order labeled plane tree against every
// sequence in [n]^n.
inline std::uint64_t count_srp(int n) {
  std::uint64_t count = 0;
  for (const PlaneTree& shape : enumerate_plane_trees(n)) {
    const OrderedTree tree = post_order_labeled(shape);
    const RootedTree rooted = tree.to_rooted_tree();
    SubtreeCriterion criterion(rooted);
    for_each_sequence(n, [&](const std::vector<int>& s) {
      if (criterion.classify(s) != SubtreeCriterion::Status::prime) return;
      if (!srp_violation(tree, s)) ++count;
    });
  }
  return count;
}

struct ColumnCheck {
  std::string name;
  BigInt counted;
  BigInt expected;
  bool pass() const { return counted == expected; }
};

struct CensusReport {
  int n = 0;
  CensusCounts counts;
  std::uint64_t srp = 0;
  std::vector<ColumnCheck> columns;
  double seconds = 0;

  bool passed() const {
    return counts.first_disagreement.empty() &&
           std::all_of(columns.begin(), columns.end(), [](const ColumnCheck& c) { return c.pass(); });
  }
};

struct CensusOptions {
  bool allow_large = false;
  unsigned threads = 1;
  bool cross_check = true;  // ignored above census_max_default
};

inline CensusReport census(int n, const CensusOptions& options = {}) {
  const int limit = options.allow_large ? census_max_large : census_max_default;
  if (n < 1 || n > limit) {
    throw error(errc::limit_exceeded, "census supports 1 <= n <= " + std::to_string(limit) +
                                          (options.allow_large ? "" : " (n = 6 needs --allow-large)"));
  }
  const auto start = std::chrono::steady_clock::now();
  const bool cross_check = options.cross_check && n <= census_max_default;
  const std::uint64_t trees = rooted_tree_count(n);
  const unsigned shards = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(trees)));

  CensusReport report;
  report.n = n;
  if (shards == 1) {
    report.counts = census_shard(n, 0, trees, cross_check);
  } else {
    std::vector<CensusCounts> parts(shards);
    {
      std::vector<std::jthread> workers;
      for (unsigned k = 0; k < shards; ++k) {
        workers.emplace_back([&, k] {
          parts[k] = census_shard(n, trees * k / shards, trees * (k + 1) / shards, cross_check);
        });
      }
    }
    for (const auto& part : parts) report.counts += part;
  }
  report.srp = count_srp(n);

  const CountRow expected = closed_counts(n).rows.back();
  const auto& c = report.counts;
  report.columns = {
      {"F", c.parking, expected.F},
      {"P", c.prime, expected.P},
      {"Ftilde", c.distributions, expected.Ftilde},
      {"Ptilde", c.prime_distributions, expected.Ptilde},
      {"Pstar", c.marked_prime, expected.Pstar},
      {"Fstar", c.marked, expected.Fstar},
      {"SRP", report.srp, factorial(n - 1) * expected.catalan},
      {"P=n!SRP", c.prime, factorial(n) * BigInt(report.srp)},
  };
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Suites with a single verdict.

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  bool passed = true;
  std::string detail{};  // first counterexample on failure
  double seconds = 0;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(SuiteReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline constexpr int roundtrip_max = 4;

// psi then psi^-1 on every prime parking function, psi^-1 then psi on every
// (sigma, labeled plane tree), and no two prime parking functions sharing
// an image.
inline SuiteReport roundtrip_suite(int n, bool allow_large = false) {
  if (n < 1 || n > (allow_large ? roundtrip_max + 1 : roundtrip_max)) {
    throw error(errc::limit_exceeded, "roundtrip suite supports 1 <= n <= " + std::to_string(roundtrip_max));
  }
  SuiteReport report{"roundtrip", n};
  detail::SuiteTimer timer(report);

  std::set<PsiImage> images;
  std::uint64_t forward = 0;
  for_each_rooted_tree(n, [&](const RootedTree& tree) {
    SubtreeCriterion criterion(tree);
    for_each_sequence(n, [&](const std::vector<int>& p) {
      if (criterion.classify(p) != SubtreeCriterion::Status::prime) return;
      ++forward;
      PsiImage image = psi(tree, p);
      const auto [back_tree, back_seq] = psi_inverse(image.sigma, image.tree);
      if (back_tree != tree || back_seq != p) report.fail("psi^-1(psi(x)) != x for " + describe(tree, p));
      if (!images.insert(std::move(image)).second) report.fail("duplicate psi image from " + describe(tree, p));
    });
  });

  std::uint64_t backward = 0;
  for_each_permutation(n, [&](const Permutation& sigma) {
    for_each_labeled_plane_tree(n, [&](const LabeledPlaneTree& ptree) {
      ++backward;
      const auto [tree, p] = psi_inverse(sigma, ptree);
      const std::string where = "sigma [" + sigma.to_text() + "] ptree " + ptree.to_text();
      if (!is_prime(tree, p)) {
        report.fail("psi^-1 is not prime for " + where);
        return;
      }
      if (psi(tree, p) != PsiImage{sigma, ptree}) report.fail("psi(psi^-1(y)) != y for " + where);
    });
  });

  const BigInt expected = prime_parking_function_count(n);
  if (BigInt(forward) != expected) report.fail("prime count " + std::to_string(forward) + " != " + expected.str());
  if (BigInt(backward) != expected) report.fail("pair count " + std::to_string(backward) + " != " + expected.str());
  if (BigInt(images.size()) != expected) report.fail("image has " + std::to_string(images.size()) + " elements");
  report.checked = forward + backward;
  return report;
}

inline constexpr int theorem53_max = 7;

// For every 132-avoiding sigma: alpha^-1 of the labeled path read off sigma
// is the path with (1, borie_map(sigma)).
inline SuiteReport theorem53_suite(int n) {
  if (n < 1 || n > theorem53_max) {
    throw error(errc::limit_exceeded, "Borie suite supports 1 <= n <= " + std::to_string(theorem53_max));
  }
  SuiteReport report{"thm53", n};
  detail::SuiteTimer timer(report);
  const OrderedTree path = ordered_path(n + 1);
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (!is_132_avoiding(sigma)) return;
    ++report.checked;
    const SRP pre = alpha_inverse(labeled_path(sigma));
    const std::string where = "sigma [" + sigma.to_text() + "]";
    if (pre.tree != path) {
      report.fail("alpha^-1 of the path is not the path for " + where);
      return;
    }
    const PreferenceSeq tail(pre.prefs.begin() + 1, pre.prefs.end());
    if (pre.prefs.front() != 1 || tail != borie_map(sigma)) {
      report.fail("borie_map differs from alpha^-1 tail for " + where + ": [" + sequence_to_text(borie_map(sigma)) +
                  "] vs [" + sequence_to_text(pre.prefs) + "]");
    }
  });
  if (BigInt(report.checked) != catalan_number(n)) {
    report.fail(std::to_string(report.checked) + " avoiders, expected " + catalan_number(n).str());
  }
  return report;
}

// Growth sequences on the path with n+1 vertices (s_1 = 1, s_i <= i - 1)
// map under alpha onto all n! labeled paths, each from path_preimage_seq.
inline SuiteReport path_preimage_suite(int n) {
  if (n < 1 || n > 7) throw error(errc::limit_exceeded, "path suite supports 1 <= n <= 7");
  SuiteReport report{"paths", n};
  detail::SuiteTimer timer(report);
  const OrderedTree path = ordered_path(n + 1);
  const RootedTree rooted = path.to_rooted_tree();
  std::set<Permutation> seen;

  std::vector<int> s(n + 1, 1);
  while (true) {
    ++report.checked;
    const std::string where = "seq [" + sequence_to_text(s) + "]";
    if (!is_prime(rooted, s)) {
      report.fail("not prime: " + where);
    } else {
      const LabeledPlaneTree image = alpha(SRP{path, s});
      std::vector<int> word;
      bool is_path = true;
      for (node_id v = 0; v < image.size(); ++v) {
        const auto& kids = image.shape().children(v);
        if (kids.size() > 1 || (kids.empty() && v + 1 != image.size())) is_path = false;
        if (v > 0) word.push_back(image.label(v));
      }
      if (!is_path) {
        report.fail("alpha image is not a path: " + where + " -> " + image.to_text());
      } else {
        const Permutation sigma = Permutation::from_word(word);
        if (path_preimage_seq(sigma) != s) report.fail("path_preimage_seq disagrees for " + where);
        seen.insert(sigma);
      }
    }
    // Next growth sequence: position i (0-based, i >= 1) ranges over [1, i].
    int i = n;
    while (i >= 1 && s[i] == i) s[i--] = 1;
    if (i < 1) break;
    ++s[i];
  }
  if (BigInt(seen.size()) != factorial(n)) {
    report.fail(std::to_string(seen.size()) + " distinct paths, expected " + factorial(n).str());
  }
  return report;
}

// phi lands in SRP_n, phi^-1 undoes it, and the image is all of SRP_n.
inline SuiteReport srp_suite(int n) {
  if (n < 1 || n > census_max_default) throw error(errc::limit_exceeded, "SRP suite supports 1 <= n <= 5");
  SuiteReport report{"srp", n};
  detail::SuiteTimer timer(report);
  std::set<SRP> image;
  std::uint64_t primes = 0;
  for_each_rooted_tree(n, [&](const RootedTree& tree) {
    SubtreeCriterion criterion(tree);
    for_each_sequence(n, [&](const std::vector<int>& p) {
      if (criterion.classify(p) != SubtreeCriterion::Status::prime) return;
      ++primes;
      auto [sigma, x] = phi(tree, p);
      if (!is_srp(x)) report.fail("phi output is not an SRP for " + describe(tree, p));
      const auto [t, q] = phi_inverse(sigma, x);
      if (t != tree || q != p) report.fail("phi^-1(phi(x)) != x for " + describe(tree, p));
      image.insert(std::move(x));
    });
  });
  const std::uint64_t brute = count_srp(n);
  report.checked = primes;
  if (image.size() != brute) {
    report.fail("phi reaches " + std::to_string(image.size()) + " SRPs, enumeration finds " + std::to_string(brute));
  }
  if (BigInt(brute) != factorial(n - 1) * catalan_number(n - 1)) report.fail("|SRP_n| = " + std::to_string(brute));
  if (BigInt(primes) != factorial(n) * BigInt(brute)) report.fail("P_n != n! |SRP_n|");
  return report;
}

// ---------------------------------------------------------------------------
// Parking properties.

namespace detail {

inline std::vector<Edge> sorted_edges(std::vector<Edge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

// Checks every single-instance property of (tree, s); `shuffles` are
// rearrangements to test permutation invariance against.
inline void check_parking_properties(const RootedTree& tree, const std::vector<int>& s,
                                     const std::vector<std::vector<int>>& shuffles, SuiteReport& report) {
  const int n = tree.size();
  SubtreeCriterion criterion(tree);
  const auto status = criterion.classify(s);
  const bool criterion_parks = status != SubtreeCriterion::Status::not_parking;
  const bool criterion_prime = status == SubtreeCriterion::Status::prime;
  const auto outcome = park(tree, s);
  ++report.checked;

  if (criterion_parks != outcome.all_parked()) {
    report.fail("criterion/simulation disagree on " + describe(tree, s));
    return;
  }
  if (criterion_prime && !criterion_parks) report.fail("prime but not parking: " + describe(tree, s));
  if (!criterion_parks) {
    for (const auto& order : shuffles) {
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i) t[i] = s[order[i]];
      if (is_parking_function(tree, t)) report.fail("parking status not permutation invariant: " + describe(tree, s));
    }
    return;
  }

  const auto used = used_edges(tree, s);
  const bool all_used = static_cast<int>(used.size()) == n - 1;
  if (all_used != criterion_prime) report.fail("prime <-> all edges used fails on " + describe(tree, s));
  if (criterion_prime && outcome.spot_of_driver.back() != tree.root()) {
    report.fail("last driver misses the root on " + describe(tree, s));
  }
  const auto used_set = sorted_edges(used);
  for (const auto& order : shuffles) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = s[order[i]];
    if (!is_parking_function(tree, t)) {
      report.fail("parking status not permutation invariant: " + describe(tree, s));
    } else if (sorted_edges(used_edges(tree, t)) != used_set) {
      report.fail("used edges not permutation invariant: " + describe(tree, s));
    }
  }
}

}  // namespace detail

// Exhaustive for n <= 4: every tree, sequence and rearrangement.
inline SuiteReport property_suite_exhaustive(int n) {
  if (n < 1 || n > 5) throw error(errc::limit_exceeded, "exhaustive property suite supports 1 <= n <= 5");
  SuiteReport report{"properties", n};
  detail::SuiteTimer timer(report);
  std::vector<std::vector<int>> shuffles;
  for_each_permutation(n, [&](const Permutation& sigma) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = sigma(i + 1) - 1;
    shuffles.push_back(std::move(order));
  });
  for_each_rooted_tree(n, [&](const RootedTree& tree) {
    for_each_sequence(n, [&](const std::vector<int>& s) { detail::check_parking_properties(tree, s, shuffles, report); });
  });
  return report;
}

// `samples` uniform (tree, sequence) pairs plus `samples` uniform prime
// parking functions drawn by rejection, each tested against a few random
// rearrangements.
inline SuiteReport property_suite_random(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > 12) throw error(errc::limit_exceeded, "random property suite supports 1 <= n <= 12");
  SuiteReport report{"properties-random", n};
  detail::SuiteTimer timer(report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_tree(0, rooted_tree_count(n) - 1);
  std::uniform_int_distribution<int> pick_spot(1, n);

  auto draw = [&](RootedTree& tree, std::vector<int>& s) {
    tree = rooted_tree_at(n, pick_tree(rng));
    for (int& v : s) v = pick_spot(rng);
  };
  auto shuffles = [&] {
    std::vector<std::vector<int>> out(3, std::vector<int>(n));
    for (auto& order : out) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
    }
    return out;
  };

  RootedTree tree = path_tree(n);
  std::vector<int> s(n);
  for (std::uint64_t k = 0; k < samples; ++k) {
    draw(tree, s);
    detail::check_parking_properties(tree, s, shuffles(), report);
  }
  // A fixed batch of sequences per drawn tree keeps every (tree, sequence)
  // pair equally likely while amortizing the tree construction.
  constexpr int batch = 32;
  std::uint64_t primes = 0;
  while (primes < samples) {
    tree = rooted_tree_at(n, pick_tree(rng));
    SubtreeCriterion criterion(tree);
    for (int b = 0; b < batch && primes < samples; ++b) {
      for (int& v : s) v = pick_spot(rng);
      if (criterion.classify(s) != SubtreeCriterion::Status::prime) continue;
      ++primes;
      detail::check_parking_properties(tree, s, shuffles(), report);
    }
  }
  return report;
}

}  // namespace treepark
