#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using Letter = std::uint32_t;

// Letters are positive integers. Repeats are allowed; whether a word is a
// valid r-permutation is checked explicitly (see perm_core.hpp).
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Parses "5 4 4 5" (whitespace or comma separated) or the compact digit form
/// "5445". A single token of two or more digits is read in compact form, so a
/// lone multi-digit letter needs a separator, e.g. "12 ". Letter 0 is rejected.
Word parse_word(std::string_view text);

/// Space-separated decimal letters.
std::string format_word(WordView w);

/// Digits run together when every letter is at most 9, otherwise the same as
/// format_word.
std::string format_word_compact(WordView w);

/// Counts (k_0, ..., k_r) of descents by type.
class DescentVector {
 public:
  DescentVector() = default;
  explicit DescentVector(std::size_t types) : counts_(types, 0) {}
  explicit DescentVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::size_t types() const { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  std::uint64_t& operator[](std::size_t i) { return counts_[i]; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const;

  DescentVector& operator+=(const DescentVector& other);

  auto operator<=>(const DescentVector&) const = default;
  bool operator==(const DescentVector&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

std::string format_descent_vector(const DescentVector& k);

/// Cut positions 0 < cut_0 < ... < cut_l = r of the generalized sorter.
class Lambda {
 public:
  /// Throws InvalidInput unless the cuts are strictly increasing, positive,
  /// and end at r.
  Lambda(std::vector<unsigned> cuts, unsigned r);

  /// The trivial lambda (r), for which the generalized sorter is plain S.
  static Lambda trivial(unsigned r) { return Lambda({r}, r); }

  unsigned r() const { return r_; }
  const std::vector<unsigned>& cuts() const { return cuts_; }
  /// Number of copies of the maximum emitted, minus one.
  std::size_t l() const { return cuts_.size() - 1; }

  bool operator==(const Lambda&) const = default;

 private:
  std::vector<unsigned> cuts_;
  unsigned r_;
};

/// Parses "1,2" or "1 2".
std::vector<unsigned> parse_unsigned_list(std::string_view text);

/// Ordered tuple of letter-disjoint words whose concatenation is an
/// r-permutation.
struct KTuple {
  std::vector<Word> components;
  unsigned r = 1;

  Word concatenation() const;
  std::size_t letter_count() const;  // total length
};

/// Components separated by '|'; empty components allowed ("11||22").
std::vector<Word> parse_tuple(std::string_view text);
std::string format_tuple(const std::vector<Word>& components);

}  // namespace stacksort
