#pragma once

// Brute-force reference implementations used to derive expected values.
// Nothing here calls the library's algorithms; only the Word container and
// the parsed SftSpec are shared.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subshift/algebra.hpp"
#include "subshift/shift.hpp"
#include "subshift/syntax.hpp"
#include "subshift/word.hpp"

namespace oracle {

using subshift::Letter;
using subshift::Word;

struct Fixture {
  std::string name;
  subshift::Shift g;
};

inline subshift::Shift shift_from(const std::string& text) {
  return subshift::build_follower_graph(subshift::parse_shift(text));
}

inline std::vector<Fixture> fixtures() {
  return {{"full2", shift_from("alphabet: a b\nforbidden:\n")},
          {"golden", shift_from("alphabet: a b\nforbidden: bb\n")},
          {"Y", shift_from("alphabet: a b\nforbidden: ba\n")}};
}

inline Word w(const subshift::Shift& g, const std::string& s) { return g->parse_word(s); }

/// Every word over `k` letters of length exactly n, lexicographic.
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& x : out)
      for (std::size_t a = 0; a < k; ++a) {
        Word y = x;
        y.push_back(static_cast<Letter>(a));
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> all_words_upto(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (Word& x : all_words(k, i)) out.push_back(std::move(x));
  return out;
}

inline bool has_forbidden_factor(const subshift::SftSpec& spec, const Word& x) {
  for (const Word& f : spec.forbidden)
    for (std::size_t i = 0; i + f.size() <= x.size(); ++i)
      if (x.slice(i, f.size()) == f) return true;
  return false;
}

/// Words of length n with no forbidden factor and a factor-free extension of
/// length n + m + k^m (long enough to force a repeated m-block, hence an
/// infinite continuation).
inline std::vector<Word> legal_words(const subshift::SftSpec& spec, std::size_t n) {
  const std::size_t k = spec.alphabet.size();
  std::size_t blocks = 1;
  for (std::size_t i = 0; i < spec.memory; ++i) blocks *= k;
  const std::size_t horizon = n + spec.memory + blocks;
  std::function<bool(Word&)> extends = [&](Word& x) {
    if (has_forbidden_factor(spec, x)) return false;
    if (x.size() >= horizon) return true;
    for (std::size_t a = 0; a < k; ++a) {
      x.push_back(static_cast<Letter>(a));
      bool ok = extends(x);
      x.pop_back();
      if (ok) return true;
    }
    return false;
  };
  std::vector<Word> out;
  for (Word x : all_words(k, n))
    if (extends(x)) out.push_back(x);
  return out;
}

// Eventually periodic sequences pre·per^inf, compared through long prefixes.

struct Point {
  Word pre;
  Word per;

  Letter at(std::size_t i) const { return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()]; }
  Word prefix(std::size_t n) const {
    Word out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
  }
  /// Two points with preperiods and periods this small agree iff their
  /// 64-letter prefixes do.
  Word key() const { return prefix(64); }
  Point prepend(const Word& u) const { return {u + pre, per}; }
  Point drop(std::size_t n) const {
    Point p = *this;
    while (n > 0 && !p.pre.empty()) {
      p.pre = p.pre.drop(1);
      --n;
    }
    for (; n > 0; --n) {
      Word rot = p.per.drop(1);
      rot.push_back(p.per[0]);
      p.per = rot;
    }
    return p;
  }
  bool starts_with(const Word& u) const { return prefix(u.size()) == u; }
};

/// Every window of length <= longest forbidden word is checked; windows
/// starting after the preperiod repeat with the period.
inline bool in_x(const subshift::SftSpec& spec, const Point& p) {
  std::size_t longest = 1;
  for (const Word& f : spec.forbidden) longest = std::max(longest, f.size());
  return !has_forbidden_factor(spec, p.prefix(p.pre.size() + p.per.size() + longest));
}

/// Points of X with preperiod up to `max_pre` and period up to `max_per`;
/// every cylinder of length <= max_pre that meets X contains one of them when
/// the shift has memory 1.
inline std::vector<Point> sample_points(const subshift::SftSpec& spec, std::size_t max_pre, std::size_t max_per) {
  const std::size_t k = spec.alphabet.size();
  std::map<Word, Point> seen;
  for (std::size_t lp = 1; lp <= max_per; ++lp)
    for (const Word& per : all_words(k, lp))
      for (std::size_t l = 0; l <= max_pre; ++l)
        for (const Word& pre : all_words(k, l)) {
          Point p{pre, per};
          if (in_x(spec, p)) seen.emplace(p.key(), p);
        }
  std::vector<Point> out;
  for (auto& [key, p] : seen) out.push_back(p);
  return out;
}

using SetPredicate = std::function<bool(const Point&)>;

inline SetPredicate z_pred(const Word& beta) {
  return [beta](const Point& p) { return p.starts_with(beta); };
}

inline SetPredicate f_pred(const subshift::SftSpec& spec, const Word& alpha) {
  return [spec, alpha](const Point& p) { return in_x(spec, p.prepend(alpha)); };
}

/// C(alpha, beta) = { beta·y in X : alpha·y in X }.
inline SetPredicate c_pred(const subshift::SftSpec& spec, const Word& alpha, const Word& beta) {
  return [spec, alpha, beta](const Point& p) {
    return p.starts_with(beta) && in_x(spec, p.drop(beta.size()).prepend(alpha));
  };
}

/// Library membership vs. predicate on all sample points.
inline bool agrees(const subshift::ClopenSet& a, const SetPredicate& pred, const std::vector<Point>& sample) {
  for (const Point& p : sample) {
    subshift::EpPoint e{p.pre, p.per};
    if (subshift::contains(a, e) != pred(p)) return false;
  }
  return true;
}

// The action of the algebra on finitely supported vectors over points:
// s_a e_x = e_{ax} (0 if ax is not in X), s_a^* e_x = e_{sigma x} if x starts
// with a, p_A e_x = [x in A] e_x.

struct Vec {
  std::map<Word, std::pair<Point, mpq_class>> terms;

  void add(const Point& p, const mpq_class& c) {
    auto [it, fresh] = terms.emplace(p.key(), std::make_pair(p, c));
    if (!fresh) it->second.second += c;
    if (it->second.second == 0) terms.erase(it);
  }
  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (auto ia = a.terms.begin(), ib = b.terms.begin(); ia != a.terms.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.second != ib->second.second) return false;
    return true;
  }
};

inline Vec basis(const Point& p) {
  Vec v;
  v.add(p, 1);
  return v;
}

using Op = std::function<Vec(const Vec&)>;

inline Op op_s(const subshift::SftSpec& spec, const Word& alpha) {
  return [spec, alpha](const Vec& v) {
    Vec out;
    for (const auto& [k, t] : v.terms) {
      Point q = t.first.prepend(alpha);
      if (in_x(spec, q)) out.add(q, t.second);
    }
    return out;
  };
}

inline Op op_s_star(const Word& alpha) {
  return [alpha](const Vec& v) {
    Vec out;
    for (const auto& [k, t] : v.terms)
      if (t.first.starts_with(alpha)) out.add(t.first.drop(alpha.size()), t.second);
    return out;
  };
}

inline Op op_p(SetPredicate pred) {
  return [pred](const Vec& v) {
    Vec out;
    for (const auto& [k, t] : v.terms)
      if (pred(t.first)) out.add(t.first, t.second);
    return out;
  };
}

inline Op compose(Op f, Op g) {
  return [f, g](const Vec& v) { return f(g(v)); };
}

inline Op op_sum(std::vector<std::pair<mpq_class, Op>> parts) {
  return [parts](const Vec& v) {
    Vec out;
    for (const auto& [c, op] : parts)
      for (const auto& [k, t] : op(v).terms) out.add(t.first, c * t.second);
    return out;
  };
}

/// The action read straight off a normal form: component u·v^-1 with
/// function f sends e_{v y} to f(u y) e_{u y}.
inline Vec apply_normal_form(const subshift::AlgebraElement& x, const Vec& v) {
  const auto& spec = x.graph().spec();
  Vec out;
  for (const auto& [key, t] : v.terms) {
    const Point& p = t.first;
    for (const auto& [pair, f] : x.components()) {
      if (!p.starts_with(pair.v)) continue;
      Point q = p.drop(pair.v.size()).prepend(pair.u);
      if (!in_x(spec, q)) continue;
      auto it = f.values.find(q.prefix(f.resolution));
      if (it == f.values.end()) continue;
      out.add(q, t.second * it->second.value());
    }
  }
  return out;
}

// Word combinatorics by exhaustive search.

inline bool is_power_of(const Word& x, const Word& c) {
  return !c.empty() && x.size() % c.size() == 0 && c.power(x.size() / c.size()) == x;
}

/// Shortest c with x = c^k, by scanning every divisor length.
inline std::pair<Word, std::size_t> brute_primitive(const Word& x) {
  for (std::size_t d = 1; d <= x.size(); ++d)
    if (x.size() % d == 0 && is_power_of(x, x.prefix(d))) return {x.prefix(d), x.size() / d};
  return {x, 1};
}

/// Some c of length gcd(|x|,|y|) with x, y both powers of c, if one exists.
inline std::optional<Word> brute_common_root(const Word& x, const Word& y) {
  std::size_t g = std::gcd(x.size(), y.size());
  for (const Word& c : all_words(2, g))
    if (is_power_of(x, c) && is_power_of(y, c)) return c;
  return std::nullopt;
}

// Free group arithmetic on signed letters, for grading checks.

inline std::vector<std::pair<Letter, int>> group_word(const subshift::GroupWordPair& t) {
  std::vector<std::pair<Letter, int>> out;
  for (Letter a : t.u) out.push_back({a, 1});
  for (auto it = t.v.letters().rbegin(); it != t.v.letters().rend(); ++it) out.push_back({*it, -1});
  return out;
}

/// Product s·t in the free group, if it has the shape u·v^-1.
inline std::optional<subshift::GroupWordPair> group_product(const subshift::GroupWordPair& s,
                                                           const subshift::GroupWordPair& t) {
  std::vector<std::pair<Letter, int>> stack;
  auto push = [&](std::pair<Letter, int> x) {
    if (!stack.empty() && stack.back().first == x.first && stack.back().second == -x.second)
      stack.pop_back();
    else
      stack.push_back(x);
  };
  for (auto x : group_word(s)) push(x);
  for (auto x : group_word(t)) push(x);
  subshift::GroupWordPair out;
  std::size_t i = 0;
  for (; i < stack.size() && stack[i].second == 1; ++i) out.u.push_back(stack[i].first);
  std::vector<Letter> neg;
  for (; i < stack.size(); ++i) {
    if (stack[i].second != -1) return std::nullopt;
    neg.push_back(stack[i].first);
  }
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.v.push_back(*it);
  return out;
}

// Random monomial sums sum c_i s_alpha p_A s_beta^*.

struct RandomElements {
  std::mt19937_64 rng;
  std::size_t max_word = 3;
  int max_coeff = 3;
  std::size_t max_terms = 3;

  explicit RandomElements(std::uint64_t seed) : rng(seed) {}

  Word word(const subshift::Shift& g, std::size_t max_len) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    auto words = g->enumerate_prefix_legal(n);
    return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
  }

  subshift::ClopenSet set(const subshift::Shift& g) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: return subshift::full_set(g);
      case 1: return subshift::follower(g, word(g, 2));
      default: return subshift::cylinder(g, word(g, 2));
    }
  }

  subshift::AlgebraElement element(const subshift::Algebra& alg) {
    const auto& g = alg.shift();
    subshift::AlgebraElement x = alg.zero();
    std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    for (std::size_t i = 0; i < terms; ++i) {
      int c = 0;
      while (c == 0) c = std::uniform_int_distribution<int>(-max_coeff, max_coeff)(rng);
      Word alpha = word(g, max_word);
      Word beta = word(g, max_word);
      x = x + subshift::scale(alg.ring().from_integer(c), alg.mono(alpha, set(g), beta));
    }
    return x;
  }

  subshift::AlgebraElement nonzero_element(const subshift::Algebra& alg) {
    for (;;) {
      auto x = element(alg);
      if (!x.is_zero()) return x;
    }
  }
};

}  // namespace oracle
