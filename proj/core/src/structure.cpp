#include "subshift/structure.hpp"

#include <stdexcept>

#include "subshift/error.hpp"
#include "subshift/reduction.hpp"

namespace subshift {

namespace {

void require_minimal_cycle(const ClopenSet& a, const Word& c) {
  if (c.empty() || !(classify_cycle(a, c) == CycleClass{CycleClass::Kind::CycleWithoutExit, true}))
    throw Error(ErrorCode::NotMinimalCycle, "(A, c) is not a minimal cycle without exit");
}

void put(const Ring& ring, LaurentPoly& l, long n, const RingValue& c) {
  auto [it, fresh] = l.coeffs.emplace(n, c);
  if (!fresh) it->second = ring.add(it->second, c);
  if (it->second.is_zero()) l.coeffs.erase(it);
}

}  // namespace

LaurentPoly laurent_add(const Ring& ring, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [n, c] : b.coeffs) put(ring, out, n, c);
  return out;
}

LaurentPoly laurent_mul(const Ring& ring, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [n, c] : a.coeffs)
    for (const auto& [k, d] : b.coeffs) put(ring, out, n + k, ring.mul(c, d));
  return out;
}

std::vector<Cycle> find_cycles_without_exit(const Shift& g) {
  std::vector<Cycle> out;
  const std::size_t count = g->state_count();
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t state = s;
    bool least = true;
    bool closed = false;
    for (std::size_t step = 0; step < count && least; ++step) {
      if (g->out_degree(state) != 1) {
        least = false;
        break;
      }
      for (std::size_t a = 0; a < g->alphabet_size(); ++a)
        if (auto t = g->edge(state, static_cast<Letter>(a))) {
          state = *t;
          break;
        }
      if (state == s) {
        closed = true;
        break;
      }
      least = state > s;
    }
    if (!closed || !least) continue;

    const Word& w = g->states()[s];
    auto point = unique_extension(*g, w);
    if (!point || !point->preperiod.empty()) throw std::logic_error("forced cycle without a periodic point");
    out.push_back({cylinder(g, w), point->period});
  }
  return out;
}

AlgebraElement corner_project(const AlgebraElement& x, const ClopenSet& a) {
  AlgebraElement pa = Algebra(x.shift(), x.ring()).p(a);
  return pa * x * pa;
}

LaurentPoly corner_to_laurent(const AlgebraElement& x, const ClopenSet& a, const Word& c) {
  require_minimal_cycle(a, c);
  if (!(corner_project(x, a) == x)) throw Error(ErrorCode::NotInCorner, "x differs from p_A x p_A");

  LaurentPoly out;
  for (const auto& [key, f] : x.components()) {
    if (!key.u.empty() && !key.v.empty()) throw Error(ErrorCode::NotInCorner, "mixed component");
    const Word& w = key.u.empty() ? key.v : key.u;
    if (w.size() % c.size() != 0 || c.power(w.size() / c.size()) != w)
      throw Error(ErrorCode::NotInCorner, "component word is not a power of c");
    long n = static_cast<long>(w.size() / c.size());
    if (key.u.empty()) n = -n;
    const RingValue& value = f.values.begin()->second;
    for (const auto& [word, v] : f.values)
      if (!(v == value)) throw Error(ErrorCode::NotInCorner, "non-constant coefficient");
    out.coeffs.emplace(n, value);
  }
  return out;
}

AlgebraElement laurent_to_corner(const Algebra& alg, const LaurentPoly& l, const ClopenSet& a, const Word& c) {
  require_minimal_cycle(a, c);
  AlgebraElement pa = alg.p(a);
  AlgebraElement out = alg.zero();
  for (const auto& [n, coeff] : l.coeffs) {
    Word w = c.power(static_cast<std::size_t>(n < 0 ? -n : n));
    AlgebraElement mono = (n < 0 ? alg.s_star_word(w) : alg.s_word(w)) * pa;
    out = out + scale(coeff, mono);
  }
  return out;
}

bool square_nonzero_check(const AlgebraElement& x) {
  if (!x.ring().is_domain()) throw Error(ErrorCode::NotADomain, x.ring().name() + " has zero divisors");
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "square check of the zero element");
  ReductionWitness w = reduce(x);
  AlgebraElement y = w.mu * x * w.nu;
  return !(y * y).is_zero();
}

SelftestReport relations_selftest(const Shift& g, const Ring& ring, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("relations_selftest needs max_len >= 1");
  Algebra alg(g, ring);
  SelftestReport report;
  auto check = [&](const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& label) {
    ++report.checks;
    if (!(lhs == rhs)) report.residuals.push_back(label);
  };

  std::vector<Word> words;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (Word& w : g->enumerate_prefix_legal(n)) words.push_back(std::move(w));

  // Generators multiplied out letter by letter, so s_alpha is not taken from
  // the word constructor it is compared against.
  auto s_of = [&](const Word& w) {
    AlgebraElement out = alg.one();
    for (Letter a : w) out = out * alg.s(a);
    return out;
  };
  auto s_star_of = [&](const Word& w) {
    AlgebraElement out = alg.one();
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out = out * alg.s_star(*it);
    return out;
  };

  check(alg.p(full_set(g)), alg.one(), "(i) p_X = 1");
  check(alg.p(empty_set(g)), alg.zero(), "(i) p_empty = 0");
  std::vector<std::pair<std::string, ClopenSet>> sets;
  for (const Word& w : words) {
    sets.emplace_back("Z(" + g->spell(w) + ")", cylinder(g, w));
    sets.emplace_back("F(" + g->spell(w) + ")", follower(g, w));
  }
  for (const auto& [na, a] : sets)
    for (const auto& [nb, b] : sets) {
      AlgebraElement pa = alg.p(a);
      AlgebraElement pb = alg.p(b);
      AlgebraElement pab = alg.p(intersect(a, b));
      check(pa * pb, pab, "(i) p_A p_B = p_(A&B) for A=" + na + " B=" + nb);
      check(pa + pb - pab, alg.p(unite(a, b)), "(i) p_(A|B) for A=" + na + " B=" + nb);
    }

  for (std::size_t a = 0; a < g->alphabet_size(); ++a) {
    Letter l = static_cast<Letter>(a);
    std::string name = g->spell(Word{l});
    check(alg.s(l) * alg.s_star(l) * alg.s(l), alg.s(l), "(ii) s s* s = s for " + name);
    check(alg.s_star(l) * alg.s(l) * alg.s_star(l), alg.s_star(l), "(ii) s* s s* = s* for " + name);
  }

  for (const Word& alpha : words) {
    AlgebraElement sa = s_of(alpha);
    AlgebraElement sa_star = s_star_of(alpha);
    check(sa, alg.s_word(alpha), "s_alpha as a product for alpha=" + g->spell(alpha));
    for (const Word& beta : words) {
      AlgebraElement lhs = s_of(beta) * sa_star * sa * s_star_of(beta);
      check(lhs, alg.p(c_set(g, alpha, beta)),
            "(iii) alpha=" + g->spell(alpha) + " beta=" + g->spell(beta));
    }
  }
  return report;
}

}  // namespace subshift
