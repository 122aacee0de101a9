#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "treepark/error.hpp"
#include "treepark/tree.hpp"

namespace treepark {

// A permutation of [n] in one-line notation: word()[i - 1] == sigma(i).
class Permutation {
 public:
  Permutation() = default;

  static Permutation from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<bool> seen(n + 1, false);
    for (int value : word) {
      if (value < 1 || value > n || seen[value]) {
        throw error(errc::invalid_permutation,
                    "entry " + std::to_string(value) + " is out of range or repeated");
      }
      seen[value] = true;
    }
    Permutation p;
    p.word_ = std::move(word);
    return p;
  }

  static Permutation identity(int n) {
    Permutation p;
    p.word_.resize(n);
    std::iota(p.word_.begin(), p.word_.end(), 1);
    return p;
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_.at(i - 1); }
  const std::vector<int>& word() const noexcept { return word_; }

  Permutation inverse() const {
    Permutation p;
    p.word_.resize(word_.size());
    for (int i = 1; i <= size(); ++i) p.word_[word_[i - 1] - 1] = i;
    return p;
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i) {
      if (word_[i - 1] != i) return false;
    }
    return true;
  }

  // Entries separated by single spaces.
  std::string to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < word_.size(); ++i) out << (i ? " " : "") << word_[i];
    return out.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Accepts either whitespace-separated entries or, for n <= 9, a compact
// digit string such as `51243`.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> word;
  const bool compact = text.find_first_of(" \t,") == std::string_view::npos;
  if (compact) {
    for (char c : text) {
      if (c == '\n' || c == '\r') continue;
      if (c < '1' || c > '9') throw error(errc::parse_error, "bad permutation digit '" + std::string(1, c) + "'");
      word.push_back(c - '0');
    }
  } else {
    word = parse_int_list(text);
  }
  return Permutation::from_word(std::move(word));
}

// All of S_n in lexicographic order.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation::from_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace treepark
