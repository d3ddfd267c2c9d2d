#include "subshift/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "subshift/error.hpp"

namespace subshift {

namespace {

std::size_t total_negative_length(const AlgebraElement& x) {
  std::size_t n = 0;
  for (const auto& [key, f] : x.components()) n += key.v.size();
  return n;
}

bool shorter_first(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

UniformForm require_uniform(const AlgebraElement& x, const char* where) {
  auto uf = read_uniform(x);
  if (!uf) throw std::logic_error(std::string(where) + ": element lost its uniform shape");
  return *uf;
}

ClopenSet level_set(const Shift& g, const CoeffFunction& f, const RingValue& c) {
  std::vector<Word> words;
  for (const auto& [w, v] : f.values)
    if (v == c) words.push_back(w);
  return ClopenSet(g, f.resolution, std::move(words));
}

}  // namespace

Progress::Progress(AlgebraElement x)
    : x_(x), mu_(Algebra(x.shift(), x.ring()).one()), nu_(Algebra(x.shift(), x.ring()).one()) {}

void Progress::accept(AlgebraElement next, const std::string& step) {
  if (next.is_zero()) throw Error(ErrorCode::InternalNonzeroViolation, step + " annihilated the element");
  // Some letter extends every nonzero element; failing to find one means the
  // multiplication itself is broken.
  if (!extension_letter(next)) throw Error(ErrorCode::InternalNonzeroViolation, step + ": no extension letter");
  x_ = std::move(next);
}

void Progress::left(const AlgebraElement& factor, const std::string& step) {
  AlgebraElement next = factor * x_;
  if (next == x_) return;
  accept(std::move(next), step);
  mu_ = factor * mu_;
  trace_.push_back({TraceEntry::Side::Left, step, factor});
}

void Progress::right(const AlgebraElement& factor, const std::string& step) {
  AlgebraElement next = x_ * factor;
  if (next == x_) return;
  accept(std::move(next), step);
  nu_ = nu_ * factor;
  trace_.push_back({TraceEntry::Side::Right, step, factor});
}

void Progress::sandwich(const AlgebraElement& l, const AlgebraElement& r, const std::string& step) {
  AlgebraElement next = l * x_ * r;
  if (next == x_) return;
  accept(std::move(next), step);
  mu_ = l * mu_;
  nu_ = nu_ * r;
  trace_.push_back({TraceEntry::Side::Left, step, l});
  trace_.push_back({TraceEntry::Side::Right, step, r});
}

std::optional<ProjectionMultiple> Progress::projection_form() const {
  if (x_.components().size() != 1) return std::nullopt;
  const auto& [key, f] = *x_.components().begin();
  if (!key.u.empty() || !key.v.empty()) return std::nullopt;
  const RingValue& c = f.values.begin()->second;
  for (const auto& [w, v] : f.values)
    if (!(v == c)) return std::nullopt;
  return ProjectionMultiple{c, support(x_.shift(), f)};
}

std::optional<UniformForm> read_uniform(const AlgebraElement& x) {
  if (x.is_zero()) return std::nullopt;
  std::optional<ClopenSet> common;
  std::vector<UniformTerm> terms;
  for (const auto& [key, f] : x.components()) {
    if (!key.v.empty()) return std::nullopt;
    CoeffFunction g = translate(x.graph(), f, key.u, Word{});
    if (g.empty()) return std::nullopt;
    const RingValue& c = g.values.begin()->second;
    for (const auto& [w, v] : g.values)
      if (!(v == c)) return std::nullopt;
    ClopenSet s = support(x.shift(), g);
    if (common && !equals(*common, s)) return std::nullopt;
    if (!common) common = s;
    terms.push_back({key.u, c});
  }
  std::sort(terms.begin(), terms.end(), [](const UniformTerm& a, const UniformTerm& b) { return shorter_first(a.word, b.word); });
  return UniformForm{compact(*common), std::move(terms)};
}

void step_positive(Progress& p) {
  Algebra alg = p.algebra();
  for (;;) {
    const GroupWordPair* target = nullptr;
    for (const auto& [key, f] : p.x().components())
      if (!key.v.empty() && (!target || key.v.size() > target->v.size())) target = &key;
    if (!target) return;

    AlgebraElement piece = component_element(p.x(), *target);
    auto letter = extension_letter(piece);
    if (!letter) throw Error(ErrorCode::InternalNonzeroViolation, "positive: no letter keeps the component alive");

    std::size_t before = total_negative_length(p.x());
    p.right(alg.s(*letter), "positive");
    if (total_negative_length(p.x()) >= before)
      throw std::logic_error("positive: total inverse length did not decrease");
  }
}

void step_prefix_nest(Progress& p) {
  std::optional<Word> beta;
  for (const auto& [key, f] : p.x().components()) {
    if (!key.v.empty()) throw std::logic_error("prefix-nest: element is not positive");
    if (!beta || key.u.size() > beta->size()) beta = key.u;
  }
  if (!beta || beta->empty()) return;
  Algebra alg = p.algebra();
  p.left(alg.s_word(*beta) * alg.s_star_word(*beta), "prefix-nest");
  for (const auto& [key, f] : p.x().components())
    if (!beta->starts_with(key.u)) throw std::logic_error("prefix-nest: words do not form a chain");
}

UniformForm step_common_projection(Progress& p) {
  Algebra alg = p.algebra();
  std::vector<Word> order;
  for (const auto& [key, f] : p.x().components()) {
    if (!key.v.empty()) throw std::logic_error("common-projection: element is not positive");
    order.push_back(key.u);
  }
  std::sort(order.begin(), order.end(), shorter_first);

  for (const Word& w : order) {
    auto it = p.x().components().find({w, {}});
    if (it == p.x().components().end()) continue;
    CoeffFunction g = translate(p.x().graph(), it->second, w, Word{});
    ClopenSet level = level_set(p.x().shift(), g, g.values.begin()->second);
    p.right(alg.p(level), "common-projection");
  }
  for (const Word& w : order)
    if (p.x().components().count({w, {}})) p.right(alg.p(follower(p.x().shift(), w)), "common-projection");

  return require_uniform(p.x(), "common-projection");
}

std::optional<ProjectionMultiple> restore_cylinder_containment(Progress& p) {
  Algebra alg = p.algebra();
  UniformForm uf = require_uniform(p.x(), "cylinder-containment");
  if (!uf.terms.front().word.empty()) throw std::logic_error("cylinder-containment: no constant term");
  if (uf.terms.size() == 1) return p.projection_form();

  std::optional<Word> deepest;
  for (std::size_t i = 1; i < uf.terms.size(); ++i)
    if (!intersect(uf.set, cylinder(p.x().shift(), uf.terms[i].word)).empty()) deepest = uf.terms[i].word;
  if (!deepest) {
    p.left(alg.p(uf.set), "cylinder-containment");
    auto pm = p.projection_form();
    if (!pm) throw std::logic_error("cylinder-containment: higher terms survived a disjoint projection");
    return pm;
  }

  ClopenSet z = cylinder(p.x().shift(), *deepest);
  p.right(alg.p(z), "cylinder-containment");
  ClopenSet b = intersect(uf.set, z);
  bool stray = false;
  for (std::size_t i = 1; i < uf.terms.size(); ++i)
    stray = stray || intersect(b, cylinder(p.x().shift(), uf.terms[i].word)).empty();
  if (stray) {
    p.left(alg.p(b), "cylinder-containment");
    uf = step_common_projection(p);
  }
  if (auto pm = p.projection_form()) return pm;
  return std::nullopt;
}

std::optional<ProjectionMultiple> step_strip_constant(Progress& p) {
  UniformForm uf = require_uniform(p.x(), "strip");
  const Word& first = uf.terms.front().word;
  if (!first.empty()) p.left(p.algebra().s_star_word(first), "strip");
  if (auto pm = p.projection_form()) return pm;
  return restore_cylinder_containment(p);
}

std::optional<ProjectionMultiple> step_cycle_pump(Progress& p) {
  Algebra alg = p.algebra();
  for (;;) {
    UniformForm uf = require_uniform(p.x(), "pump");
    if (uf.terms.size() < 2) return p.projection_form();
    const Word& b2 = uf.terms[1].word;
    ClopenSet range = relative_range(uf.set, b2);
    if (is_subset(uf.set, range)) return std::nullopt;

    ClopenSet d = difference(uf.set, range);
    std::size_t before = uf.terms.size();
    p.left(alg.p(d) * alg.s_star_word(b2), "pump");
    step_common_projection(p);
    if (auto pm = restore_cylinder_containment(p)) return pm;
    if (require_uniform(p.x(), "pump").terms.size() >= before)
      throw std::logic_error("pump: term count did not decrease");
  }
}

std::optional<ProjectionMultiple> step_power_align(Progress& p) {
  Algebra alg = p.algebra();
  UniformForm uf = require_uniform(p.x(), "align");
  if (uf.terms.size() < 2) return p.projection_form();
  const Word alpha = uf.terms[1].word;
  const std::size_t longest = uf.terms.back().word.size();
  const std::size_t n = std::max<std::size_t>(1, (longest + alpha.size() - 1) / alpha.size());
  Word power = alpha.power(n);

  p.sandwich(alg.p(cylinder(p.x().shift(), alpha)) * alg.s_star_word(power), alg.s_word(power) * alg.p(uf.set),
             "align");
  step_common_projection(p);
  return restore_cylinder_containment(p);
}

RootedForm step_word_gcd(const UniformForm& form) {
  if (form.terms.size() < 2 || !form.terms.front().word.empty())
    throw Error(ErrorCode::RootExtractionFailure, "gcd: expected a constant term and a higher term");
  const Word& alpha = form.terms[1].word;

  std::vector<Word> roots{alpha};
  std::vector<std::size_t> powers{1};
  std::vector<std::size_t> multiplicity{1};
  try {
    for (std::size_t i = 2; i < form.terms.size(); ++i) {
      CommutingRoot cr = commuting_root(alpha, form.terms[i].word);
      roots.push_back(cr.root);
      powers.push_back(cr.first_exponent);
      multiplicity.push_back(cr.second_exponent);
    }
    MultiRoot mr = multi_common_root(roots, powers);

    RootedForm out{form.set, mr.root, {}, {}};
    for (const UniformTerm& t : form.terms) out.gammas.push_back(t.gamma);
    for (std::size_t i = 0; i < mr.exponents.size(); ++i) out.exps.push_back(mr.exponents[i] * multiplicity[i]);
    for (std::size_t i = 0; i < out.exps.size(); ++i) {
      if (i > 0 && out.exps[i] <= out.exps[i - 1]) throw Error(ErrorCode::RootExtractionFailure, "exponents not increasing");
      if (out.root.power(out.exps[i]) != form.terms[i + 1].word)
        throw Error(ErrorCode::RootExtractionFailure, "root does not reproduce a word");
    }
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RootExtractionFailure) throw;
    throw Error(ErrorCode::RootExtractionFailure, e.what());
  }
}

ReducedForm step_exit_kill(Progress& p, const RootedForm& form) {
  const Word& c = form.root;
  auto point = as_singleton(form.set);
  if (point && *point == periodic_point(c)) {
    PrimitiveRoot pr = primitive_root(c);
    CycleForm out{form.set, pr.root, form.gammas, {}};
    for (std::size_t e : form.exps) out.exps.push_back(e * pr.exponent);
    return out;
  }

  const Shift& g = p.x().shift();
  const std::size_t cap = (form.set.resolution() + g->state_count()) / c.size() + 1;
  for (std::size_t m = 0; m <= cap; ++m) {
    ClopenSet outside = difference(form.set, cylinder(g, c.power(m + 1)));
    if (outside.empty()) continue;
    ClopenSet fine = refine(outside, std::max(outside.resolution(), (m + 1) * c.size()));
    const Word& witness = fine.words().front();
    Word target = witness.prefix((m + 1) * c.size());
    p.left(p.algebra().p(cylinder(g, target)), "exit-kill");
    auto pm = p.projection_form();
    if (!pm) throw std::logic_error("exit-kill: higher terms survived the exit projection");
    if (!(pm->gamma == form.gammas.front())) throw std::logic_error("exit-kill: constant term changed");
    return *pm;
  }
  throw std::logic_error("exit-kill: no exit found although the set is not the periodic point");
}

ReductionWitness reduce(const AlgebraElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot reduce the zero element");
  Progress p(x);
  auto finish = [&](ReducedForm form) { return ReductionWitness{p.mu(), p.nu(), std::move(form), p.trace()}; };

  if (auto pm = p.projection_form()) return finish(*pm);
  step_positive(p);
  if (auto pm = p.projection_form()) return finish(*pm);
  step_prefix_nest(p);
  if (auto pm = p.projection_form()) return finish(*pm);
  step_common_projection(p);
  if (auto pm = p.projection_form()) return finish(*pm);
  if (auto pm = step_strip_constant(p)) return finish(*pm);

  for (;;) {
    if (auto pm = step_cycle_pump(p)) return finish(*pm);
    const Word alpha = require_uniform(p.x(), "reduce").terms[1].word;
    if (auto pm = step_power_align(p)) return finish(*pm);
    UniformForm uf = require_uniform(p.x(), "reduce");
    if (uf.terms[1].word == alpha && is_subset(uf.set, relative_range(uf.set, alpha))) break;
  }

  RootedForm rooted = step_word_gcd(require_uniform(p.x(), "reduce"));
  return finish(step_exit_kill(p, rooted));
}

AlgebraElement embed(const Algebra& alg, const ReducedForm& form) {
  if (const auto* pm = std::get_if<ProjectionMultiple>(&form)) return scale(pm->gamma, alg.p(pm->set));
  const auto& cf = std::get<CycleForm>(form);
  AlgebraElement pa = alg.p(cf.set);
  AlgebraElement out = scale(cf.gammas.at(0), pa);
  for (std::size_t i = 0; i < cf.exps.size() && i + 1 < cf.gammas.size(); ++i)
    out = out + scale(cf.gammas[i + 1], alg.s_word(cf.beta.power(cf.exps[i])) * pa);
  return out;
}

bool verify(const ReductionWitness& w, const AlgebraElement& x) {
  Algebra alg(x.shift(), x.ring());
  if (const auto* pm = std::get_if<ProjectionMultiple>(&w.form)) {
    if (pm->gamma.is_zero() || pm->set.empty()) return false;
  } else {
    const auto& cf = std::get<CycleForm>(w.form);
    if (cf.beta.empty() || cf.gammas.size() != cf.exps.size() + 1) return false;
    for (const RingValue& g : cf.gammas)
      if (g.is_zero()) return false;
    for (std::size_t i = 0; i < cf.exps.size(); ++i)
      if (cf.exps[i] == 0 || (i > 0 && cf.exps[i] <= cf.exps[i - 1])) return false;
    if (!(classify_cycle(cf.set, cf.beta) == CycleClass{CycleClass::Kind::CycleWithoutExit, true})) return false;
  }
  AlgebraElement target = embed(alg, w.form);
  return !target.is_zero() && w.mu * x * w.nu == target;
}

}  // namespace subshift
