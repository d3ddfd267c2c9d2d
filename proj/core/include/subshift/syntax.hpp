#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "subshift/algebra.hpp"
#include "subshift/clopen.hpp"
#include "subshift/reduction.hpp"
#include "subshift/shift.hpp"
#include "subshift/structure.hpp"

namespace subshift {

// Shift files:
//   alphabet: a b
//   forbidden: bb, ab
// Blank lines and lines starting with '#' are ignored. Symbols are single
// printable characters other than ( ) , _ : # | & ! * + - . and whitespace.

SftSpec parse_shift(std::string_view text);
/// Canonical text; parse_shift(print_shift(s)) == s.
std::string print_shift(const SftSpec& spec);

// Set expressions: Z(w) F(w) C(w,w) X, with ! > & > | and parentheses.
// '_' denotes the empty word.
struct SetAst {
  enum class Kind { Cylinder, Follower, CSet, Full, Not, And, Or };
  Kind kind = Kind::Full;
  Word first;
  Word second;
  std::vector<SetAst> children;
};

// Algebra expressions: s(w) st(w) p(set) and integer constants, combined with
// + - * and parentheses; `k.` or `k/m.` scales the factor that follows.
struct ExprAst {
  enum class Kind { S, SStar, P, Constant, Scale, Neg, Add, Sub, Mul };
  Kind kind = Kind::Constant;
  Word word;
  SetAst set;
  mpz_class num = 0;
  mpz_class den = 1;
  std::vector<ExprAst> children;
};

/// Throws SyntaxError (with the column) or UnknownLetter.
SetAst parse_set_expr(std::string_view text, const SftSpec& spec);
ExprAst parse_expr(std::string_view text, const SftSpec& spec);
ClopenSet evaluate(const SetAst& ast, const Shift& g);
/// Throws BadScalarForRing when a scalar does not exist in the ring.
AlgebraElement evaluate(const ExprAst& ast, const Algebra& alg);
AlgebraElement parse_element(std::string_view text, const Algebra& alg);
ClopenSet parse_set(std::string_view text, const Shift& g);

/// One line per component: `u v^-1 | c w ; c w`, or `0`.
std::string format_nf(const AlgebraElement& x);
/// An expression that parses back to x.
std::string format_expr(const AlgebraElement& x);
/// `{w1,w2}@N` after compaction.
std::string format_set(const ClopenSet& a);
/// A set expression that parses back to a.
std::string format_set_expr(const ClopenSet& a);
/// `c x^n + ...` in increasing exponent order, or `0`.
std::string format_laurent(const LaurentPoly& l);
std::string format_form(const ReducedForm& form);

}  // namespace subshift
