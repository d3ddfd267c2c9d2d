#include <doctest.h>

#include "oracles.hpp"
#include "subshift/clopen.hpp"
#include "subshift/syntax.hpp"

using namespace subshift;

namespace {

ClopenSet set_of(const Shift& g, std::size_t res, std::initializer_list<const char*> ws) {
  std::vector<Word> words;
  for (const char* w : ws) words.push_back(g->parse_word(w));
  return ClopenSet(g, res, words);
}

std::string show(const ClopenSet& a) { return format_set(a); }

}  // namespace

TEST_SUITE("clopen") {
  TEST_CASE("cylinders, followers and C-sets") {
    auto fx = oracle::fixtures();
    const Shift& full = fx[0].g;
    const Shift& g = fx[1].g;
    const Shift& y = fx[2].g;

    CHECK(cylinder(g, g->parse_word("b")) == set_of(g, 2, {"ba"}));
    CHECK(cylinder(g, Word{}) == full_set(g));
    CHECK(is_empty(cylinder(g, g->parse_word("bb"))));

    CHECK(follower(g, g->parse_word("b")) == set_of(g, 2, {"aa", "ab"}));
    CHECK(follower(g, Word{}) == full_set(g));
    CHECK(follower(y, y->parse_word("b")) == set_of(y, 2, {"bb"}));

    CHECK(c_set(g, g->parse_word("b"), g->parse_word("a")) == cylinder(g, g->parse_word("aa")));
    CHECK(c_set(full, Word{}, Word{}) == full_set(full));
    CHECK(is_empty(c_set(g, g->parse_word("bb"), Word{})));
  }

  TEST_CASE("refinement and Boolean operations") {
    auto fx = oracle::fixtures();
    const Shift& full = fx[0].g;
    const Shift& g = fx[1].g;

    ClopenSet ba = set_of(g, 2, {"ba"});
    ClopenSet r = refine(ba, 3);
    CHECK(r.resolution() == 3);
    CHECK(show(ClopenSet(g, 3, r.words())) == show(ba));
    CHECK(r.words() == std::vector<Word>{g->parse_word("baa"), g->parse_word("bab")});
    CHECK(refine(set_of(full, 1, {"a"}), 2).words() ==
          std::vector<Word>{full->parse_word("aa"), full->parse_word("ab")});
    CHECK(refine(empty_set(g), 4).empty());

    CHECK(complement(cylinder(full, full->parse_word("a"))) == cylinder(full, full->parse_word("b")));
    CHECK(is_empty(intersect(cylinder(g, g->parse_word("ab")), cylinder(g, g->parse_word("aa")))));
    ClopenSet u = unite(unite(cylinder(g, g->parse_word("aa")), cylinder(g, g->parse_word("ab"))),
                        cylinder(g, g->parse_word("ba")));
    CHECK(u == full_set(g));
    CHECK(is_subset(cylinder(g, g->parse_word("ab")), cylinder(g, g->parse_word("a"))));
    CHECK_FALSE(is_subset(cylinder(g, g->parse_word("a")), cylinder(g, g->parse_word("ab"))));
    CHECK(difference(full_set(g), cylinder(g, g->parse_word("a"))) == cylinder(g, g->parse_word("b")));
    CHECK(compact(refine(cylinder(g, g->parse_word("a")), 5)).resolution() == 1);
  }

  TEST_CASE("sets agree with the point oracle") {
    for (const auto& f : oracle::fixtures()) {
      const auto& spec = f.g->spec();
      auto sample = oracle::sample_points(spec, 6, 2);
      auto words = oracle::all_words_upto(2, 3);
      for (const Word& alpha : words) {
        INFO(f.name, " alpha=", f.g->spell(alpha));
        CHECK(oracle::agrees(cylinder(f.g, alpha), oracle::z_pred(alpha), sample));
        CHECK(oracle::agrees(follower(f.g, alpha), oracle::f_pred(spec, alpha), sample));
        for (const Word& beta : oracle::all_words_upto(2, 2))
          CHECK(oracle::agrees(c_set(f.g, alpha, beta), oracle::c_pred(spec, alpha, beta), sample));
      }
      ClopenSet za = cylinder(f.g, f.g->parse_word("a"));
      ClopenSet fb = follower(f.g, f.g->parse_word("b"));
      auto in_a = oracle::z_pred(f.g->parse_word("a"));
      auto in_b = oracle::f_pred(spec, f.g->parse_word("b"));
      CHECK(oracle::agrees(unite(za, fb), [&](const auto& p) { return in_a(p) || in_b(p); }, sample));
      CHECK(oracle::agrees(intersect(za, fb), [&](const auto& p) { return in_a(p) && in_b(p); }, sample));
      CHECK(oracle::agrees(complement(za), [&](const auto& p) { return !in_a(p); }, sample));
    }
  }

  TEST_CASE("relative ranges") {
    for (const auto& f : oracle::fixtures()) {
      const auto& spec = f.g->spec();
      auto sample = oracle::sample_points(spec, 6, 2);
      auto words = oracle::all_words_upto(2, 3);
      for (const Word& alpha : words) {
        CHECK(relative_range(full_set(f.g), alpha) == follower(f.g, alpha));
        for (const Word& beta : words)
          if (f.g->is_prefix_legal(alpha + beta))
            CHECK(relative_range(follower(f.g, alpha), beta) == follower(f.g, alpha + beta));
        for (const Word& w : oracle::all_words_upto(2, 3)) {
          auto zw = oracle::z_pred(w);
          auto pred = [&](const oracle::Point& p) { return oracle::in_x(spec, p.prepend(alpha)) && zw(p.prepend(alpha)); };
          CHECK(oracle::agrees(relative_range(cylinder(f.g, w), alpha), pred, sample));
        }
      }
    }
    auto g = oracle::fixtures()[1].g;
    CHECK(is_empty(relative_range(cylinder(g, g->parse_word("a")), g->parse_word("b"))));
  }

  TEST_CASE("unique extensions and singletons") {
    auto fx = oracle::fixtures();
    const Shift& full = fx[0].g;
    const Shift& g = fx[1].g;
    const Shift& y = fx[2].g;

    CHECK(unique_extension(*y, y->parse_word("b")) == EpPoint{Word{}, y->parse_word("b")});
    CHECK_FALSE(unique_extension(*g, g->parse_word("a")).has_value());
    for (const Word& w : full->enumerate_prefix_legal(3)) CHECK_FALSE(unique_extension(*full, w).has_value());

    CHECK(as_singleton(cylinder(y, y->parse_word("b"))) == EpPoint{Word{}, y->parse_word("b")});
    CHECK(as_singleton(cylinder(y, y->parse_word("abbb"))) == EpPoint{y->parse_word("a"), y->parse_word("b")});
    CHECK_FALSE(as_singleton(cylinder(g, g->parse_word("b"))).has_value());
    CHECK_FALSE(as_singleton(empty_set(g)).has_value());
  }

  TEST_CASE("cycle classification") {
    auto fx = oracle::fixtures();
    const Shift& g = fx[1].g;
    const Shift& y = fx[2].g;
    using K = CycleClass::Kind;
    CHECK(classify_cycle(cylinder(y, y->parse_word("b")), y->parse_word("b")) == CycleClass{K::CycleWithoutExit, true});
    CHECK(classify_cycle(cylinder(y, y->parse_word("b")), y->parse_word("bb")) == CycleClass{K::CycleWithoutExit, false});
    CHECK(classify_cycle(cylinder(g, g->parse_word("a")), g->parse_word("a")).kind == K::CycleWithExit);
    CHECK(classify_cycle(cylinder(g, g->parse_word("b")), g->parse_word("a")).kind == K::NotACycle);
    CHECK(classify_cycle(empty_set(g), g->parse_word("a")).kind == K::NotACycle);
  }

  TEST_CASE("membership of points") {
    auto y = oracle::fixtures()[2].g;
    CHECK(contains(cylinder(y, y->parse_word("b")), EpPoint{Word{}, y->parse_word("b")}));
    CHECK_FALSE(contains(full_set(y), EpPoint{Word{}, y->parse_word("ab")}));
    CHECK(contains(full_set(y), EpPoint{y->parse_word("aa"), y->parse_word("b")}));
  }
}
