#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "subshift/algebra.hpp"
#include "subshift/clopen.hpp"
#include "subshift/ring.hpp"

namespace subshift {

/// A Laurent polynomial over the base ring; zero coefficients are not stored.
struct LaurentPoly {
  std::map<long, RingValue> coeffs;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly laurent_add(const Ring& ring, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const Ring& ring, const LaurentPoly& a, const LaurentPoly& b);

/// Cycles without exit: one (Z_w, alpha) per cycle of forced states, where w
/// is the least state on the cycle and Z_w = {alpha^inf}. Ordered by w.
std::vector<Cycle> find_cycles_without_exit(const Shift& g);

/// p_A·x·p_A.
AlgebraElement corner_project(const AlgebraElement& x, const ClopenSet& a);
/// Reads x = sum gamma_n s_c^n p_A (negative n meaning (s_c^*)^|n|).
/// Throws NotMinimalCycle unless (A, c) is a minimal cycle without exit, and
/// NotInCorner unless x = p_A x p_A lies in the span of those monomials.
LaurentPoly corner_to_laurent(const AlgebraElement& x, const ClopenSet& a, const Word& c);
AlgebraElement laurent_to_corner(const Algebra& alg, const LaurentPoly& l, const ClopenSet& a, const Word& c);

/// Reduces x and checks that the reduced element does not square to zero.
/// Throws NotADomain over rings with zero divisors and ZeroInput for x = 0.
bool square_nonzero_check(const AlgebraElement& x);

struct SelftestReport {
  std::size_t checks = 0;
  std::vector<std::string> residuals;

  bool clean() const noexcept { return residuals.empty(); }
};

/// Evaluates the defining relations on all legal words up to `max_len`:
/// the Boolean relations among cylinders and followers, s_a s_a^* s_a = s_a
/// and s_a^* s_a s_a^* = s_a^*, and s_b s_a^* s_a s_b^* = p_{C(a,b)} for words.
SelftestReport relations_selftest(const Shift& g, const Ring& ring, std::size_t max_len);

}  // namespace subshift
