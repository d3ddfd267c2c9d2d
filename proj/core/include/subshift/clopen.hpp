#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subshift/shift.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// A clopen subset of the shift: the union of Z_w over a set of prefix-legal
/// words w of one common length N (the resolution, N >= m). Equality is
/// semantic: both sides are refined to a common resolution before comparing.
///
/// Every set the algebra needs is of this form. For a memory-m SFT a point
/// u·x lies in X iff x does and u·x[0,m) is prefix-legal, so
/// C(alpha, beta) = union of Z_{beta p} over |p| = m with alpha·p and beta·p
/// prefix-legal.
class ClopenSet {
 public:
  /// `words` must be sorted, unique, prefix-legal and of length `resolution`.
  ClopenSet(Shift shift, std::size_t resolution, std::vector<Word> words);

  const Shift& shift() const noexcept { return shift_; }
  const FollowerGraph& graph() const noexcept { return *shift_; }
  std::size_t resolution() const noexcept { return resolution_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  bool empty() const noexcept { return words_.empty(); }

  friend bool operator==(const ClopenSet& a, const ClopenSet& b);

 private:
  Shift shift_;
  std::size_t resolution_;
  std::vector<Word> words_;
};

ClopenSet empty_set(const Shift& g);
ClopenSet full_set(const Shift& g);
/// Z_beta at resolution max(m, |beta|) + m.
ClopenSet cylinder(const Shift& g, const Word& beta);
/// C(alpha, beta) at resolution |beta| + m.
ClopenSet c_set(const Shift& g, const Word& alpha, const Word& beta);
/// F_alpha = C(alpha, omega).
ClopenSet follower(const Shift& g, const Word& alpha);

ClopenSet refine(const ClopenSet& a, std::size_t resolution);
/// Lowers the resolution while every word's sibling family is complete.
ClopenSet compact(const ClopenSet& a);

ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
/// Relative to X.
ClopenSet complement(const ClopenSet& a);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);
bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool equals(const ClopenSet& a, const ClopenSet& b);
bool is_empty(const ClopenSet& a);

/// r(A, alpha) = { x in X : alpha·x in A }.
ClopenSet relative_range(const ClopenSet& a, const Word& alpha);

/// Membership of an eventually periodic sequence (false if it is not in X).
bool contains(const ClopenSet& a, const EpPoint& x);

/// The unique point of Z_w when the path from w's state is forced.
/// Requires w prefix-legal with |w| >= m.
std::optional<EpPoint> unique_extension(const FollowerGraph& g, const Word& w);
std::optional<EpPoint> as_singleton(const ClopenSet& a);

struct CycleClass {
  enum class Kind { NotACycle, CycleWithExit, CycleWithoutExit };
  Kind kind;
  bool minimal = false;  // only meaningful for CycleWithoutExit

  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

/// A pair (A, alpha) with A non-empty and A contained in r(A, alpha).
struct Cycle {
  ClopenSet set;
  Word word;
};

CycleClass classify_cycle(const ClopenSet& a, const Word& alpha);

}  // namespace subshift
