#include "subshift/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "subshift/error.hpp"

namespace subshift {

namespace {

void require_compatible(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.ring() == y.ring())) throw Error(ErrorCode::RingMismatch, x.ring().name() + " vs " + y.ring().name());
  if (x.shift() != y.shift() && x.graph().spec() != y.graph().spec())
    throw Error(ErrorCode::ShiftMismatch, "elements live over different shifts");
}

// Product of f·delta_{u v^-1} and h·delta_{u2 v2^-1}.
std::optional<std::pair<GroupWordPair, CoeffFunction>> multiply_components(
    const Shift& shift, const Ring& ring, const GroupWordPair& s, const CoeffFunction& f,
    const GroupWordPair& t, const CoeffFunction& h) {
  const FollowerGraph& g = *shift;
  const std::size_t k = common_prefix_length(s.v, t.u);
  if (k < s.v.size() && k < t.u.size()) return std::nullopt;

  CoeffFunction pulled = translate(g, f, s.u, s.v);
  std::size_t n = std::max(pulled.resolution, h.resolution);
  CoeffFunction lhs = refine(g, pulled, n);
  CoeffFunction rhs = refine(g, h, n);
  CoeffFunction prod{n, {}};
  auto li = lhs.values.begin();
  auto ri = rhs.values.begin();
  while (li != lhs.values.end() && ri != rhs.values.end()) {
    if (li->first < ri->first) {
      ++li;
    } else if (ri->first < li->first) {
      ++ri;
    } else {
      RingValue c = ring.mul(li->second, ri->second);
      if (!c.is_zero()) prod.values.emplace(li->first, std::move(c));
      ++li;
      ++ri;
    }
  }
  if (prod.empty()) return std::nullopt;

  CoeffFunction pushed = translate(g, prod, s.v, s.u);
  Word p = s.u;
  Word q = t.v;
  if (t.u.size() >= s.v.size())
    p += t.u.drop(s.v.size());
  else
    q += s.v.drop(t.u.size());
  GroupWordPair key = GroupWordPair::reduced(p, q);

  ClopenSet domain = c_set(shift, key.v, key.u);
  std::size_t m = std::max(pushed.resolution, domain.resolution());
  CoeffFunction fine = refine(g, pushed, m);
  ClopenSet dom = refine(domain, m);
  CoeffFunction out{m, {}};
  for (auto& [w, c] : fine.values)
    if (std::binary_search(dom.words().begin(), dom.words().end(), w)) out.values.emplace(w, c);
  if (out.empty()) return std::nullopt;
  return std::make_pair(std::move(key), compact(g, std::move(out)));
}

void accumulate(const FollowerGraph& g, const Ring& ring, std::map<GroupWordPair, CoeffFunction>& into,
                const GroupWordPair& key, const CoeffFunction& f) {
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, f);
    return;
  }
  std::size_t n = std::max(it->second.resolution, f.resolution);
  CoeffFunction sum = refine(g, it->second, n);
  for (auto& [w, c] : refine(g, f, n).values) {
    auto [pos, fresh] = sum.values.emplace(w, c);
    if (!fresh) {
      pos->second = ring.add(pos->second, c);
      if (pos->second.is_zero()) sum.values.erase(pos);
    }
  }
  it->second = std::move(sum);
}

AlgebraElement from_map(const Shift& shift, const Ring& ring, std::map<GroupWordPair, CoeffFunction> parts) {
  AlgebraElement out(shift, ring);
  for (auto& [key, f] : parts) out.set_component(key, std::move(f));
  return out;
}

}  // namespace

GroupWordPair GroupWordPair::reduced(const Word& u, const Word& v) {
  std::size_t c = common_suffix_length(u, v);
  return {u.prefix(u.size() - c), v.prefix(v.size() - c)};
}

CoeffFunction indicator(const ClopenSet& a, const RingValue& c) {
  CoeffFunction f{a.resolution(), {}};
  if (c.is_zero()) return f;
  for (const Word& w : a.words()) f.values.emplace(w, c);
  return f;
}

CoeffFunction refine(const FollowerGraph& g, const CoeffFunction& f, std::size_t resolution) {
  if (resolution < f.resolution) throw std::invalid_argument("refine to a coarser resolution");
  if (resolution == f.resolution) return f;
  CoeffFunction out{resolution, {}};
  for (const auto& [w, c] : f.values)
    for (Word& e : g.extensions(w, resolution)) out.values.emplace_hint(out.values.end(), std::move(e), c);
  return out;
}

CoeffFunction compact(const FollowerGraph& g, CoeffFunction f) {
  while (f.resolution > g.memory()) {
    const std::size_t n = f.resolution;
    CoeffFunction coarse{n - 1, {}};
    bool ok = true;
    for (auto it = f.values.begin(); it != f.values.end() && ok;) {
      Word head = it->first.prefix(n - 1);
      const RingValue& c = it->second;
      std::size_t count = 0;
      for (; it != f.values.end() && it->first.starts_with(head); ++it, ++count)
        if (!(it->second == c)) ok = false;
      ok = ok && count == g.extensions(head, n).size();
      if (ok) coarse.values.emplace_hint(coarse.values.end(), std::move(head), c);
    }
    if (!ok) break;
    f = std::move(coarse);
  }
  if (f.values.empty()) f.resolution = g.memory();
  return f;
}

CoeffFunction translate(const FollowerGraph& g, const CoeffFunction& f, const Word& from, const Word& to) {
  std::size_t n = std::max(f.resolution, from.size() + g.memory());
  CoeffFunction fine = refine(g, f, n);
  CoeffFunction out{to.size() + n - from.size(), {}};
  for (auto it = fine.values.lower_bound(from); it != fine.values.end() && it->first.starts_with(from); ++it) {
    Word moved = to + it->first.drop(from.size());
    if (g.is_prefix_legal(moved)) out.values.emplace(std::move(moved), it->second);
  }
  return out;
}

ClopenSet support(const Shift& g, const CoeffFunction& f) {
  std::vector<Word> words;
  words.reserve(f.values.size());
  for (const auto& [w, c] : f.values) words.push_back(w);
  return ClopenSet(g, std::max(f.resolution, g->memory()), std::move(words));
}

void AlgebraElement::set_component(const GroupWordPair& key, CoeffFunction f) {
  if (f.empty()) {
    components_.erase(key);
    return;
  }
  components_[key] = compact(*shift_, std::move(f));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ring() == b.ring() && a.graph().spec() == b.graph().spec() && a.components() == b.components();
}

AlgebraElement Algebra::zero() const { return AlgebraElement(shift_, ring_); }

AlgebraElement Algebra::one() const { return constant(ring_.one()); }

AlgebraElement Algebra::constant(const RingValue& c) const {
  AlgebraElement out(shift_, ring_);
  out.set_component({}, indicator(full_set(shift_), c));
  return out;
}

AlgebraElement Algebra::s(Letter a) const { return s_word(Word{a}); }

AlgebraElement Algebra::s_star(Letter a) const { return s_star_word(Word{a}); }

AlgebraElement Algebra::p(const ClopenSet& a) const {
  AlgebraElement out(shift_, ring_);
  out.set_component({}, indicator(a, ring_.one()));
  return out;
}

AlgebraElement Algebra::s_word(const Word& alpha) const {
  AlgebraElement out(shift_, ring_);
  out.set_component({alpha, {}}, indicator(cylinder(shift_, alpha), ring_.one()));
  return out;
}

AlgebraElement Algebra::s_star_word(const Word& alpha) const {
  AlgebraElement out(shift_, ring_);
  out.set_component({{}, alpha}, indicator(follower(shift_, alpha), ring_.one()));
  return out;
}

AlgebraElement Algebra::mono(const Word& alpha, const ClopenSet& a, const Word& beta) const {
  return s_word(alpha) * p(a) * s_star_word(beta);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  auto parts = x.components();
  for (const auto& [key, f] : y.components()) accumulate(x.graph(), x.ring(), parts, key, f);
  return from_map(x.shift(), x.ring(), std::move(parts));
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) { return add(x, negate(y)); }

AlgebraElement negate(const AlgebraElement& x) { return scale(x.ring().neg(x.ring().one()), x); }

AlgebraElement scale(const RingValue& r, const AlgebraElement& x) {
  AlgebraElement out(x.shift(), x.ring());
  for (const auto& [key, f] : x.components()) {
    CoeffFunction scaled{f.resolution, {}};
    for (const auto& [w, c] : f.values) {
      RingValue v = x.ring().mul(r, c);
      if (!v.is_zero()) scaled.values.emplace_hint(scaled.values.end(), w, std::move(v));
    }
    out.set_component(key, std::move(scaled));
  }
  return out;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  std::map<GroupWordPair, CoeffFunction> parts;
  for (const auto& [s, f] : x.components())
    for (const auto& [t, h] : y.components())
      if (auto term = multiply_components(x.shift(), x.ring(), s, f, t, h))
        accumulate(x.graph(), x.ring(), parts, term->first, term->second);
  return from_map(x.shift(), x.ring(), std::move(parts));
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out(x.shift(), x.ring());
  for (const auto& [key, f] : x.components())
    out.set_component({key.v, key.u}, translate(x.graph(), f, key.u, key.v));
  return out;
}

bool is_zero(const AlgebraElement& x) { return x.is_zero(); }

bool equals(const AlgebraElement& x, const AlgebraElement& y) { return x == y; }

AlgebraElement z_grade_component(const AlgebraElement& x, long n) {
  AlgebraElement out(x.shift(), x.ring());
  for (const auto& [key, f] : x.components())
    if (static_cast<long>(key.u.size()) - static_cast<long>(key.v.size()) == n) out.set_component(key, f);
  return out;
}

std::vector<GroupWordPair> f_grade_support(const AlgebraElement& x) {
  std::vector<GroupWordPair> out;
  for (const auto& [key, f] : x.components()) out.push_back(key);
  return out;
}

AlgebraElement component_element(const AlgebraElement& x, const GroupWordPair& key) {
  AlgebraElement out(x.shift(), x.ring());
  auto it = x.components().find(key);
  if (it != x.components().end()) out.set_component(key, it->second);
  return out;
}

std::optional<Letter> extension_letter(const AlgebraElement& x) {
  Algebra alg(x.shift(), x.ring());
  for (std::size_t a = 0; a < x.graph().alphabet_size(); ++a)
    if (!mul(x, alg.s(static_cast<Letter>(a))).is_zero()) return static_cast<Letter>(a);
  return std::nullopt;
}

}  // namespace subshift
