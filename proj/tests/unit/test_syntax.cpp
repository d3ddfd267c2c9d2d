#include <doctest.h>

#include "oracles.hpp"
#include "subshift/error.hpp"
#include "subshift/syntax.hpp"

using namespace subshift;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("shift files") {
    SftSpec g = parse_shift("alphabet: a b\nforbidden: bb");
    CHECK(g.alphabet == std::vector<char>{'a', 'b'});
    CHECK(g.forbidden.size() == 1);
    CHECK(parse_shift("alphabet: a b\nforbidden:").forbidden.empty());
    CHECK(parse_shift("# comment\n\nalphabet: x y z\nforbidden: xy, zz\n").alphabet.size() == 3);
    CHECK(code_of([] { parse_shift("alphabet: a a\nforbidden:\n"); }) == ErrorCode::DuplicateSymbol);
    CHECK(code_of([] { parse_shift("alphabet:\nforbidden:\n"); }) == ErrorCode::EmptyAlphabet);
    CHECK(code_of([] { parse_shift("alphabet: a b\nforbidden: ac\n"); }) == ErrorCode::IllegalForbiddenWord);
    CHECK(parse_shift("alphabet: a b\n").forbidden.empty());
    CHECK(code_of([] { parse_shift("alphabet: a b\ncolors: red\n"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_shift("forbidden: ab\n"); }) == ErrorCode::EmptyAlphabet);
    CHECK(code_of([] { parse_shift("alphabet: ( b\nforbidden:\n"); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("shift printing round-trips") {
    for (const char* text : {"alphabet: a b\nforbidden: bb, ab\n", "alphabet: b a\nforbidden:\n",
                             "alphabet: x y z\nforbidden: zz, xyz, xy\n"}) {
      SftSpec s = parse_shift(text);
      std::string printed = print_shift(s);
      CHECK(parse_shift(printed) == s);
      CHECK(print_shift(parse_shift(printed)) == printed);
    }
    CHECK(print_shift(parse_shift("alphabet: a b\nforbidden: bb, ab\n")) == "alphabet: a b\nforbidden: ab, bb\n");
  }

  TEST_CASE("expressions") {
    auto g = oracle::fixtures()[1].g;
    Algebra alg(g, Ring::integer());
    CHECK(parse_element("s(a)*st(a)", alg) == alg.p(cylinder(g, g->parse_word("a"))));
    CHECK(parse_element("1", alg) == alg.one());
    CHECK(parse_element("0", alg).is_zero());
    CHECK(parse_element("s(a) - s(a)", alg).is_zero());
    CHECK(parse_element("2.s(a)", alg) == alg.s(0) + alg.s(0));
    CHECK(parse_element("-s(a)+s(a)*s(a)", alg) == negate(alg.s(0)) + alg.s(0) * alg.s(0));
    CHECK(parse_element("p(X)", alg) == alg.one());
    CHECK(parse_element("p(!Z(a))", alg) == alg.p(cylinder(g, g->parse_word("b"))));
    CHECK(parse_element("p(Z(a)|Z(b)&F(b))", alg) ==
          alg.p(unite(cylinder(g, g->parse_word("a")),
                      intersect(cylinder(g, g->parse_word("b")), follower(g, g->parse_word("b"))))));
    CHECK(parse_element("p(C(b,a))", alg) == alg.p(cylinder(g, g->parse_word("aa"))));
    CHECK(parse_element("s(_)", alg) == alg.one());
    CHECK(code_of([&] { parse_element("s(ab", alg); }) == ErrorCode::SyntaxError);
    CHECK(code_of([&] { parse_element("s(ac)", alg); }) == ErrorCode::UnknownLetter);
    CHECK(code_of([&] { parse_element("1/2.s(a)", alg); }) == ErrorCode::BadScalarForRing);
    Algebra q(g, Ring::rational());
    CHECK(parse_element("1/2.s(a)+1/2.s(a)", q) == q.s(0));
  }

  TEST_CASE("printers") {
    auto g = oracle::fixtures()[1].g;
    Algebra alg(g, Ring::integer());
    CHECK(format_nf(alg.zero()) == "0\n");
    CHECK(format_nf(alg.s(1)) == "b _^-1 | 1 b\n");
    CHECK(format_set(cylinder(g, g->parse_word("b"))) == "{b}@1");
    CHECK(format_set(empty_set(g)) == "{}@1");
    LaurentPoly l;
    l.coeffs.emplace(-1, alg.ring().from_integer(-3));
    l.coeffs.emplace(1, alg.ring().from_integer(2));
    CHECK(format_laurent(l) == "-3 x^-1 + 2 x^1");
    CHECK(format_laurent(LaurentPoly{}) == "0");
  }

  TEST_CASE("printed expressions parse back") {
    oracle::RandomElements gen(17);
    for (const auto& f : oracle::fixtures())
      for (Ring ring : {Ring::integer(), Ring::rational(), Ring::integer_mod(5)}) {
        Algebra alg(f.g, ring);
        for (int i = 0; i < 50; ++i) {
          AlgebraElement x = gen.element(alg);
          std::string text = format_expr(x);
          INFO(text);
          CHECK(parse_element(text, alg) == x);
        }
        for (int i = 0; i < 20; ++i) {
          ClopenSet a = gen.set(f.g);
          CHECK(parse_set(format_set_expr(a), f.g) == a);
          CHECK(parse_set(format_set_expr(complement(a)), f.g) == complement(a));
        }
      }
  }
}
