#include "subshift/shift.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

namespace {

bool contains_factor(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  return false;
}

}  // namespace

SftSpec SftSpec::make(std::vector<char> alphabet, std::vector<Word> forbidden) {
  if (alphabet.empty()) throw Error(ErrorCode::EmptyAlphabet, "alphabet is empty");
  if (alphabet.size() > 255) throw Error(ErrorCode::DuplicateSymbol, "alphabet too large");
  std::set<char> seen;
  for (char c : alphabet)
    if (!seen.insert(c).second) throw Error(ErrorCode::DuplicateSymbol, std::string("symbol '") + c + "' repeated");

  for (const Word& f : forbidden) {
    if (f.empty()) throw Error(ErrorCode::IllegalForbiddenWord, "forbidden word is empty");
    for (Letter a : f)
      if (a >= alphabet.size()) throw Error(ErrorCode::IllegalForbiddenWord, "forbidden word uses an unknown letter");
  }

  std::sort(forbidden.begin(), forbidden.end(),
            [](const Word& x, const Word& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  std::vector<Word> kept;
  for (const Word& f : forbidden) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& k) { return contains_factor(f, k); });
    if (!redundant) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());

  std::size_t longest = 0;
  for (const Word& f : kept) longest = std::max(longest, f.size());

  SftSpec out;
  out.alphabet = std::move(alphabet);
  out.forbidden = std::move(kept);
  out.memory = std::max<std::size_t>(1, longest == 0 ? 0 : longest - 1);
  return out;
}

FollowerGraph::FollowerGraph(SftSpec spec) : spec_(std::move(spec)) {
  const std::size_t m = spec_.memory;
  const std::size_t k = spec_.alphabet.size();

  auto has_forbidden_suffix = [&](const Word& w) {
    return std::any_of(spec_.forbidden.begin(), spec_.forbidden.end(), [&](const Word& f) { return w.ends_with(f); });
  };

  // Candidate states: factor-free words of length m, built letter by letter so
  // that only suffixes need checking.
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len < m; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (std::size_t a = 0; a < k; ++a) {
        Word e = w;
        e.push_back(static_cast<Letter>(a));
        if (!has_forbidden_suffix(e)) next.push_back(std::move(e));
      }
    layer = std::move(next);
  }

  std::vector<Word> candidates = std::move(layer);
  std::vector<bool> alive(candidates.size(), true);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) index.emplace(candidates[i], i);

  std::vector<std::vector<std::int32_t>> raw(candidates.size(), std::vector<std::int32_t>(k, -1));
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      Word ua = candidates[i];
      ua.push_back(static_cast<Letter>(a));
      if (has_forbidden_suffix(ua)) continue;
      auto it = index.find(ua.suffix(m));
      if (it != index.end()) raw[i][a] = static_cast<std::int32_t>(it->second);
    }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!alive[i]) continue;
      bool has_out = std::any_of(raw[i].begin(), raw[i].end(), [&](std::int32_t t) { return t >= 0 && alive[t]; });
      if (!has_out) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  std::vector<std::int32_t> renumber(candidates.size(), -1);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (alive[i]) {
      renumber[i] = static_cast<std::int32_t>(states_.size());
      states_.push_back(candidates[i]);
    }
  if (states_.empty()) throw Error(ErrorCode::EmptyShift, "the shift space is empty");

  edges_.assign(states_.size() * k, -1);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t a = 0; a < k; ++a) {
      std::int32_t t = raw[i][a];
      if (t >= 0 && alive[t]) edges_[renumber[i] * k + a] = renumber[t];
    }
  }
}

std::optional<std::size_t> FollowerGraph::state_index(const Word& w) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), w);
  if (it == states_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> FollowerGraph::edge(std::size_t state, Letter a) const {
  if (a >= alphabet_size()) return std::nullopt;
  std::int32_t t = edges_[state * alphabet_size() + a];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::size_t FollowerGraph::out_degree(std::size_t state) const {
  std::size_t d = 0;
  for (std::size_t a = 0; a < alphabet_size(); ++a) d += edges_[state * alphabet_size() + a] >= 0;
  return d;
}

std::optional<std::size_t> FollowerGraph::walk(std::size_t state, const Word& w) const {
  std::optional<std::size_t> s = state;
  for (Letter a : w) {
    s = edge(*s, a);
    if (!s) return std::nullopt;
  }
  return s;
}

bool FollowerGraph::is_prefix_legal(const Word& w) const {
  const std::size_t m = memory();
  if (w.size() >= m) {
    auto s = state_index(w.prefix(m));
    return s && walk(*s, w.drop(m)).has_value();
  }
  auto it = std::lower_bound(states_.begin(), states_.end(), w);
  return it != states_.end() && it->starts_with(w);
}

std::vector<Word> FollowerGraph::enumerate_prefix_legal(std::size_t n) const { return extensions(Word{}, n); }

void FollowerGraph::extend_from(std::size_t state, Word& current, std::size_t n, std::vector<Word>& out) const {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (std::size_t a = 0; a < alphabet_size(); ++a) {
    std::int32_t t = edges_[state * alphabet_size() + a];
    if (t < 0) continue;
    current.push_back(static_cast<Letter>(a));
    extend_from(static_cast<std::size_t>(t), current, n, out);
    current.pop_back();
  }
}

std::vector<Word> FollowerGraph::extensions(const Word& prefix, std::size_t n) const {
  std::vector<Word> out;
  if (n < prefix.size()) return out;
  const std::size_t m = memory();
  if (prefix.size() >= m) {
    auto s = state_index(prefix.prefix(m));
    if (!s) return out;
    s = walk(*s, prefix.drop(m));
    if (!s) return out;
    Word current = prefix;
    extend_from(*s, current, n, out);
    return out;
  }
  for (auto it = std::lower_bound(states_.begin(), states_.end(), prefix);
       it != states_.end() && it->starts_with(prefix); ++it) {
    if (n <= m) {
      Word w = it->prefix(n);
      if (out.empty() || out.back() != w) out.push_back(std::move(w));
    } else {
      Word current = *it;
      extend_from(static_cast<std::size_t>(it - states_.begin()), current, n, out);
    }
  }
  return out;
}

std::string FollowerGraph::spell(const Word& w) const {
  if (w.empty()) return "_";
  std::string out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(spec_.alphabet.at(a));
  return out;
}

Word FollowerGraph::parse_word(std::string_view text) const {
  Word out;
  if (text == "_") return out;
  for (char c : text) {
    auto it = std::find(spec_.alphabet.begin(), spec_.alphabet.end(), c);
    if (it == spec_.alphabet.end()) throw Error(ErrorCode::UnknownLetter, std::string("unknown letter '") + c + "'");
    out.push_back(static_cast<Letter>(it - spec_.alphabet.begin()));
  }
  return out;
}

Shift build_follower_graph(SftSpec spec) { return std::make_shared<const FollowerGraph>(std::move(spec)); }

}  // namespace subshift
