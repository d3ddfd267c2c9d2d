#include "subshift/clopen.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include "subshift/error.hpp"

namespace subshift {

namespace {

void require_same_shift(const ClopenSet& a, const ClopenSet& b) {
  if (a.shift() != b.shift() && a.graph().spec() != b.graph().spec())
    throw Error(ErrorCode::ShiftMismatch, "sets live over different shifts");
}

template <class Op>
ClopenSet combine(const ClopenSet& a, const ClopenSet& b, Op op) {
  require_same_shift(a, b);
  std::size_t n = std::max(a.resolution(), b.resolution());
  ClopenSet ra = refine(a, n);
  ClopenSet rb = refine(b, n);
  std::vector<Word> out;
  op(ra.words().begin(), ra.words().end(), rb.words().begin(), rb.words().end(), std::back_inserter(out));
  return ClopenSet(a.shift(), n, std::move(out));
}

}  // namespace

ClopenSet::ClopenSet(Shift shift, std::size_t resolution, std::vector<Word> words)
    : shift_(std::move(shift)), resolution_(resolution), words_(std::move(words)) {
  if (resolution_ < shift_->memory()) throw std::invalid_argument("ClopenSet resolution below memory");
}

bool operator==(const ClopenSet& a, const ClopenSet& b) { return equals(a, b); }

ClopenSet empty_set(const Shift& g) { return ClopenSet(g, g->memory(), {}); }

ClopenSet full_set(const Shift& g) { return ClopenSet(g, g->memory(), g->states()); }

ClopenSet cylinder(const Shift& g, const Word& beta) {
  std::size_t n = std::max(g->memory(), beta.size()) + g->memory();
  return ClopenSet(g, n, g->extensions(beta, n));
}

ClopenSet c_set(const Shift& g, const Word& alpha, const Word& beta) {
  const std::size_t n = beta.size() + g->memory();
  std::vector<Word> words;
  if (g->is_prefix_legal(alpha)) {
    for (Word& q : g->extensions(beta, n))
      if (g->is_prefix_legal(alpha + q.drop(beta.size()))) words.push_back(std::move(q));
  }
  return ClopenSet(g, n, std::move(words));
}

ClopenSet follower(const Shift& g, const Word& alpha) { return c_set(g, alpha, Word{}); }

ClopenSet refine(const ClopenSet& a, std::size_t resolution) {
  if (resolution < a.resolution()) throw std::invalid_argument("refine to a coarser resolution");
  if (resolution == a.resolution()) return a;
  std::vector<Word> out;
  for (const Word& w : a.words()) {
    auto ext = a.graph().extensions(w, resolution);
    std::move(ext.begin(), ext.end(), std::back_inserter(out));
  }
  return ClopenSet(a.shift(), resolution, std::move(out));
}

ClopenSet compact(const ClopenSet& a) {
  const FollowerGraph& g = a.graph();
  std::size_t n = a.resolution();
  std::vector<Word> words = a.words();
  while (n > g.memory()) {
    std::vector<Word> coarse;
    bool complete = true;
    for (std::size_t i = 0; i < words.size() && complete;) {
      Word head = words[i].prefix(n - 1);
      std::size_t j = i;
      while (j < words.size() && words[j].starts_with(head)) ++j;
      complete = (j - i) == g.extensions(head, n).size();
      coarse.push_back(std::move(head));
      i = j;
    }
    if (!complete) break;
    words = std::move(coarse);
    --n;
  }
  return ClopenSet(a.shift(), n, std::move(words));
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}

ClopenSet complement(const ClopenSet& a) {
  auto all = a.graph().enumerate_prefix_legal(a.resolution());
  std::vector<Word> out;
  std::set_difference(all.begin(), all.end(), a.words().begin(), a.words().end(), std::back_inserter(out));
  return ClopenSet(a.shift(), a.resolution(), std::move(out));
}

bool is_subset(const ClopenSet& a, const ClopenSet& b) { return difference(a, b).empty(); }

bool equals(const ClopenSet& a, const ClopenSet& b) {
  require_same_shift(a, b);
  std::size_t n = std::max(a.resolution(), b.resolution());
  return refine(a, n).words() == refine(b, n).words();
}

bool is_empty(const ClopenSet& a) { return a.empty(); }

ClopenSet relative_range(const ClopenSet& a, const Word& alpha) {
  const FollowerGraph& g = a.graph();
  const std::size_t n = a.resolution();
  if (n <= alpha.size()) {
    bool hit = std::binary_search(a.words().begin(), a.words().end(), alpha.prefix(n));
    return hit ? follower(a.shift(), alpha) : empty_set(a.shift());
  }
  const std::size_t r = std::max(g.memory(), n - alpha.size());
  std::vector<Word> out;
  auto first = std::lower_bound(a.words().begin(), a.words().end(), alpha);
  for (auto it = first; it != a.words().end() && it->starts_with(alpha); ++it)
    for (Word& q : g.extensions(it->drop(alpha.size()), r))
      if (g.is_prefix_legal(alpha + q)) out.push_back(std::move(q));
  return ClopenSet(a.shift(), r, std::move(out));
}

bool contains(const ClopenSet& a, const EpPoint& x) {
  const FollowerGraph& g = a.graph();
  std::size_t horizon = x.preperiod.size() + x.period.size() + g.memory() + a.resolution();
  if (!g.is_prefix_legal(x.prefix(horizon))) return false;
  return std::binary_search(a.words().begin(), a.words().end(), x.prefix(a.resolution()));
}

std::optional<EpPoint> unique_extension(const FollowerGraph& g, const Word& w) {
  if (w.size() < g.memory()) throw std::invalid_argument("unique_extension needs |w| >= m");
  auto s = g.state_index(w.suffix(g.memory()));
  if (!s || !g.is_prefix_legal(w)) return std::nullopt;

  std::map<std::size_t, std::size_t> visited;  // state -> position in path
  Word path;
  std::size_t state = *s;
  while (!visited.count(state)) {
    if (g.out_degree(state) != 1) return std::nullopt;
    visited.emplace(state, path.size());
    for (std::size_t a = 0; a < g.alphabet_size(); ++a)
      if (auto t = g.edge(state, static_cast<Letter>(a))) {
        path.push_back(static_cast<Letter>(a));
        state = *t;
        break;
      }
  }
  std::size_t loop = visited.at(state);
  return ep_normalize(w + path.prefix(loop), path.drop(loop));
}

std::optional<EpPoint> as_singleton(const ClopenSet& a) {
  if (a.words().size() != 1) return std::nullopt;
  return unique_extension(a.graph(), a.words().front());
}

CycleClass classify_cycle(const ClopenSet& a, const Word& alpha) {
  if (alpha.empty()) throw std::invalid_argument("classify_cycle needs a non-empty word");
  if (a.empty() || !is_subset(a, relative_range(a, alpha))) return {CycleClass::Kind::NotACycle};
  auto point = as_singleton(compact(a));
  if (point && *point == periodic_point(alpha))
    return {CycleClass::Kind::CycleWithoutExit, is_minimal_cycle_word(alpha)};
  return {CycleClass::Kind::CycleWithExit};
}

}  // namespace subshift
