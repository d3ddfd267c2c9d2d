#include "subshift/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "subshift/error.hpp"

namespace subshift {

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
}

Word Word::drop(std::size_t n) const {
  n = std::min(n, size());
  return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, size());
  len = std::min(len, size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::power(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool Word::starts_with(const Word& p) const noexcept {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const noexcept {
  return s.size() <= size() && std::equal(s.begin(), s.end(), end() - s.size());
}

std::size_t common_prefix_length(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::size_t common_suffix_length(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
  return i;
}

namespace {

bool is_power_of(const Word& w, const Word& root) {
  if (root.empty() || w.size() % root.size() != 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != root[i % root.size()]) return false;
  return true;
}

}  // namespace

CommutingRoot commuting_root(const Word& alpha, const Word& beta) {
  if (alpha.empty() || beta.empty()) throw Error(ErrorCode::NotCommuting, "commuting_root needs non-empty words");
  if (alpha + beta != beta + alpha) throw Error(ErrorCode::NotCommuting, "words do not commute");

  // long = short^n · short(1,r) and short(1,r) commutes with short; descend
  // until the remainder vanishes.
  Word longer = alpha.size() >= beta.size() ? alpha : beta;
  Word shorter = alpha.size() >= beta.size() ? beta : alpha;
  while (longer.size() != shorter.size()) {
    std::size_t r = longer.size() % shorter.size();
    if (r == 0) break;
    Word rem = shorter.prefix(r);
    longer = std::move(shorter);
    shorter = std::move(rem);
  }

  CommutingRoot out{shorter, alpha.size() / shorter.size(), beta.size() / shorter.size()};
  if (!is_power_of(alpha, out.root) || !is_power_of(beta, out.root))
    throw std::logic_error("commuting_root: descent produced a non-root");
  return out;
}

CommutingRoot common_power_root(const Word& alpha, const Word& beta, std::size_t p, std::size_t q) {
  if (alpha.empty() || beta.empty() || p == 0 || q == 0)
    throw Error(ErrorCode::PowersDiffer, "common_power_root needs non-empty words and positive powers");
  if (alpha.size() * p != beta.size() * q || alpha.power(p) != beta.power(q))
    throw Error(ErrorCode::PowersDiffer, "alpha^p != beta^q");

  // Cut both words into blocks of length gcd; they become powers of one block.
  std::size_t g = std::gcd(alpha.size(), beta.size());
  Word root = alpha.prefix(g);
  if (!is_power_of(alpha, root) || !is_power_of(beta, root))
    throw std::logic_error("common_power_root: block decomposition failed");
  return {root, alpha.size() / g, beta.size() / g};
}

MultiRoot multi_common_root(std::span<const Word> words, std::span<const std::size_t> powers) {
  if (words.empty() || words.size() != powers.size())
    throw Error(ErrorCode::Inconsistent, "multi_common_root needs matching, non-empty inputs");
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty() || powers[i] == 0)
      throw Error(ErrorCode::Inconsistent, "multi_common_root needs non-empty words and positive powers");
    if (words[i].power(powers[i]) != words[0].power(powers[0]))
      throw Error(ErrorCode::Inconsistent, "c_i^{p_i} differ for index " + std::to_string(i));
  }

  MultiRoot out{words[0], {1}};
  for (std::size_t k = 1; k < words.size(); ++k) {
    // root^{exponents[0] * powers[0]} = words[0]^{powers[0]} = words[k]^{powers[k]}
    auto [c, m, n] = common_power_root(out.root, words[k], out.exponents[0] * powers[0], powers[k]);
    for (auto& e : out.exponents) e *= m;
    out.exponents.push_back(n);
    out.root = std::move(c);
  }
  return out;
}

PrimitiveRoot primitive_root(const Word& alpha) {
  if (alpha.empty()) throw std::invalid_argument("primitive_root of the empty word");
  const std::size_t n = alpha.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Word c = alpha.prefix(d);
    if (is_power_of(alpha, c)) return {c, n / d};
  }
  return {alpha, 1};
}

bool is_minimal_cycle_word(const Word& alpha) {
  if (alpha.empty()) throw std::invalid_argument("is_minimal_cycle_word of the empty word");
  const std::size_t n = alpha.size();
  auto periodic = [&](std::size_t i) { return alpha[i % n]; };

  bool minimal = true;
  for (std::size_t len = 1; len < n && minimal; ++len) {
    // beta must agree with alpha^inf on its first len letters; both sides are
    // periodic with period n from position len on, so len + n letters decide.
    Word beta = alpha.power(2).prefix(len);
    bool equal = true;
    for (std::size_t i = 0; i < len + n && equal; ++i) {
      Letter lhs = i < len ? beta[i] : periodic(i - len);
      equal = lhs == periodic(i);
    }
    if (equal) minimal = false;
  }

  if (minimal != (primitive_root(alpha).exponent == 1))
    throw std::logic_error("is_minimal_cycle_word disagrees with primitive_root");
  return minimal;
}

Letter EpPoint::at(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

Word EpPoint::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return Word(std::move(out));
}

EpPoint ep_normalize(Word preperiod, Word period) {
  if (period.empty()) throw std::invalid_argument("ep_normalize: empty period");
  Word per = primitive_root(period).root;
  Word pre = std::move(preperiod);
  while (!pre.empty() && pre.back() == per.back()) {
    Letter last = per.back();
    pre.pop_back();
    Word rotated{last};
    rotated += per.prefix(per.size() - 1);
    per = std::move(rotated);
  }
  return {std::move(pre), std::move(per)};
}

EpPoint ep_shift(const EpPoint& x) {
  if (!x.preperiod.empty()) return ep_normalize(x.preperiod.drop(1), x.period);
  Word rotated = x.period.drop(1);
  rotated.push_back(x.period.front());
  return ep_normalize(Word{}, std::move(rotated));
}

EpPoint periodic_point(const Word& alpha) { return ep_normalize(Word{}, alpha); }

EpPoint ep_prepend(const Word& prefix, const EpPoint& x) {
  return ep_normalize(prefix + x.preperiod, x.period);
}

}  // namespace subshift
