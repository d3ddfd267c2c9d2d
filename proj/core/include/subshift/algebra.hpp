#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "subshift/clopen.hpp"
#include "subshift/ring.hpp"
#include "subshift/shift.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// The free group element u·v^-1, kept reduced (u and v do not end in the
/// same letter).
struct GroupWordPair {
  Word u;
  Word v;

  /// Cancels the common suffix of u and v.
  static GroupWordPair reduced(const Word& u, const Word& v);

  friend bool operator==(const GroupWordPair&, const GroupWordPair&) = default;
  friend auto operator<=>(const GroupWordPair&, const GroupWordPair&) = default;
};

/// The locally constant function sum c_w·1_{Z_w} over words w of one length.
/// Zero values are never stored. Functions held by an AlgebraElement are
/// always at their coarsest resolution (>= m), so equality is structural.
struct CoeffFunction {
  std::size_t resolution = 0;
  std::map<Word, RingValue> values;

  bool empty() const noexcept { return values.empty(); }

  friend bool operator==(const CoeffFunction&, const CoeffFunction&) = default;
};

CoeffFunction indicator(const ClopenSet& a, const RingValue& c);
CoeffFunction refine(const FollowerGraph& g, const CoeffFunction& f, std::size_t resolution);
CoeffFunction compact(const FollowerGraph& g, CoeffFunction f);
/// Moves the mass on from·p to to·p, keeping only words where to·p is
/// prefix-legal; mass outside Z_from is dropped.
CoeffFunction translate(const FollowerGraph& g, const CoeffFunction& f, const Word& from, const Word& to);
ClopenSet support(const Shift& g, const CoeffFunction& f);

/// An element of the algebra in its skew group ring normal form: a finite map
/// from group elements u·v^-1 to functions supported on C(v, u).
class AlgebraElement {
 public:
  AlgebraElement(Shift shift, Ring ring) : shift_(std::move(shift)), ring_(std::move(ring)) {}

  const Shift& shift() const noexcept { return shift_; }
  const FollowerGraph& graph() const noexcept { return *shift_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::map<GroupWordPair, CoeffFunction>& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  /// Stores `f` (compacted) at `key`, or erases the component if `f` is empty.
  void set_component(const GroupWordPair& key, CoeffFunction f);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  Shift shift_;
  Ring ring_;
  std::map<GroupWordPair, CoeffFunction> components_;
};

/// Generators of the algebra over a fixed shift and base ring.
class Algebra {
 public:
  Algebra(Shift shift, Ring ring) : shift_(std::move(shift)), ring_(std::move(ring)) {}

  const Shift& shift() const noexcept { return shift_; }
  const Ring& ring() const noexcept { return ring_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement constant(const RingValue& c) const;
  AlgebraElement s(Letter a) const;
  AlgebraElement s_star(Letter a) const;
  AlgebraElement p(const ClopenSet& a) const;
  /// s_alpha = s_{a1}···s_{an}; s_omega = 1.
  AlgebraElement s_word(const Word& alpha) const;
  AlgebraElement s_star_word(const Word& alpha) const;
  /// s_alpha·p_A·s_beta^*.
  AlgebraElement mono(const Word& alpha, const ClopenSet& a, const Word& beta) const;

 private:
  Shift shift_;
  Ring ring_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement negate(const AlgebraElement& x);
AlgebraElement scale(const RingValue& r, const AlgebraElement& x);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement star(const AlgebraElement& x);

bool is_zero(const AlgebraElement& x);
bool equals(const AlgebraElement& x, const AlgebraElement& y);

/// Sum of the components u·v^-1 with |u| - |v| = n.
AlgebraElement z_grade_component(const AlgebraElement& x, long n);
std::vector<GroupWordPair> f_grade_support(const AlgebraElement& x);
/// The single component of x at `key` as an element (zero if absent).
AlgebraElement component_element(const AlgebraElement& x, const GroupWordPair& key);
/// First letter a in alphabet order with x·s_a != 0; empty only for x = 0.
std::optional<Letter> extension_letter(const AlgebraElement& x);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return add(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return sub(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x) { return negate(x); }
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }

}  // namespace subshift
