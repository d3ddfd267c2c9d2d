#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace subshift {

/// Index into the alphabet of the ambient shift.
using Letter = std::uint8_t;

/// A finite word over an alphabet of letter indices. The empty word plays the
/// role of the identity for concatenation. Comparison is lexicographic in
/// alphabet order, with a proper prefix ordered before its extensions.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  void pop_back() { letters_.pop_back(); }
  Word& operator+=(const Word& other);

  /// First `n` letters (the whole word if shorter).
  Word prefix(std::size_t n) const;
  /// Last `n` letters (the whole word if shorter).
  Word suffix(std::size_t n) const;
  /// The word with its first `n` letters removed.
  Word drop(std::size_t n) const;
  Word slice(std::size_t pos, std::size_t len) const;
  Word power(std::size_t n) const;

  bool starts_with(const Word& p) const noexcept;
  bool ends_with(const Word& s) const noexcept;

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Length of the longest common prefix.
std::size_t common_prefix_length(const Word& a, const Word& b);
/// Length of the longest common suffix.
std::size_t common_suffix_length(const Word& a, const Word& b);

// Word combinatorics: common roots of commuting words and primitivity.

struct CommutingRoot {
  Word root;
  std::size_t first_exponent;   // alpha = root^first_exponent
  std::size_t second_exponent;  // beta  = root^second_exponent
};

/// For non-empty commuting words alpha, beta returns c with alpha = c^n,
/// beta = c^m and |c| = gcd(|alpha|, |beta|), found by Euclidean descent on
/// the lengths. Throws NotCommuting if alpha·beta != beta·alpha.
CommutingRoot commuting_root(const Word& alpha, const Word& beta);

/// Same conclusion from the hypothesis alpha^p = beta^q (p, q >= 1).
/// Throws PowersDiffer otherwise.
CommutingRoot common_power_root(const Word& alpha, const Word& beta, std::size_t p, std::size_t q);

struct MultiRoot {
  Word root;
  std::vector<std::size_t> exponents;  // words[i] = root^exponents[i]
};

/// Given words c_i and powers p_i with all c_i^{p_i} equal, returns c and q_i
/// with c_i = c^{q_i}. Reduces pairwise, folding each new word into the root
/// of the previous ones. Throws Inconsistent when the powers disagree.
MultiRoot multi_common_root(std::span<const Word> words, std::span<const std::size_t> powers);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};

/// Shortest c with alpha = c^k; c is primitive.
PrimitiveRoot primitive_root(const Word& alpha);

/// True iff no beta with 1 <= |beta| < |alpha| satisfies beta·alpha^inf =
/// alpha^inf. Evaluated on infinite words directly; the result is checked
/// against primitive_root and a disagreement throws std::logic_error.
bool is_minimal_cycle_word(const Word& alpha);

// Eventually periodic points.

/// The sequence preperiod · period^inf. Canonical instances have a primitive
/// period and a preperiod that cannot be absorbed into the period; two
/// canonical points are equal iff they denote the same sequence.
struct EpPoint {
  Word preperiod;
  Word period;

  Letter at(std::size_t i) const;
  Word prefix(std::size_t n) const;

  friend bool operator==(const EpPoint&, const EpPoint&) = default;
  friend auto operator<=>(const EpPoint&, const EpPoint&) = default;
};

EpPoint ep_normalize(Word preperiod, Word period);
EpPoint ep_shift(const EpPoint& x);
/// alpha^inf in canonical form.
EpPoint periodic_point(const Word& alpha);
/// prefix · x in canonical form.
EpPoint ep_prepend(const Word& prefix, const EpPoint& x);

}  // namespace subshift
