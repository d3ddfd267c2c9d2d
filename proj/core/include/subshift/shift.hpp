#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// A shift of finite type over a finite alphabet of single-character symbols.
/// Construct through `make`, which validates and normalizes: forbidden words
/// are deduplicated, words containing another forbidden word as a factor are
/// dropped, and the rest is sorted.
struct SftSpec {
  std::vector<char> alphabet;
  std::vector<Word> forbidden;
  std::size_t memory = 1;  // max(1, longest forbidden word - 1)

  static SftSpec make(std::vector<char> alphabet, std::vector<Word> forbidden);

  friend bool operator==(const SftSpec&, const SftSpec&) = default;
};

/// The pruned memory-m block automaton of an SFT. States are the legal words
/// of length m in lexicographic order; reading letter a from state u moves to
/// the last m letters of u·a. Every retained state has an outgoing edge, so
/// the infinite paths are exactly the points of the shift.
class FollowerGraph {
 public:
  /// Throws EmptyShift when pruning removes every state.
  explicit FollowerGraph(SftSpec spec);

  const SftSpec& spec() const noexcept { return spec_; }
  std::size_t memory() const noexcept { return spec_.memory; }
  std::size_t alphabet_size() const noexcept { return spec_.alphabet.size(); }
  std::size_t state_count() const noexcept { return states_.size(); }
  const std::vector<Word>& states() const noexcept { return states_; }

  std::optional<std::size_t> state_index(const Word& w) const;
  /// Target of the edge labelled `a`, if present.
  std::optional<std::size_t> edge(std::size_t state, Letter a) const;
  std::size_t out_degree(std::size_t state) const;
  /// Follows `w` from `state`.
  std::optional<std::size_t> walk(std::size_t state, const Word& w) const;

  /// True iff Z_w is non-empty.
  bool is_prefix_legal(const Word& w) const;
  /// All prefix-legal words of length n, lexicographically ordered.
  std::vector<Word> enumerate_prefix_legal(std::size_t n) const;
  /// All prefix-legal words of length n that start with `prefix`, ordered.
  std::vector<Word> extensions(const Word& prefix, std::size_t n) const;

  /// Symbols of `w`; the empty word spells as "_".
  std::string spell(const Word& w) const;
  /// Inverse of `spell`; throws UnknownLetter.
  Word parse_word(std::string_view text) const;

 private:
  void extend_from(std::size_t state, Word& current, std::size_t n, std::vector<Word>& out) const;

  SftSpec spec_;
  std::vector<Word> states_;
  std::vector<std::int32_t> edges_;  // state * alphabet_size + letter, -1 if absent
};

using Shift = std::shared_ptr<const FollowerGraph>;

Shift build_follower_graph(SftSpec spec);

}  // namespace subshift
