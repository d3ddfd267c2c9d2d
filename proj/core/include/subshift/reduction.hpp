#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subshift/algebra.hpp"
#include "subshift/clopen.hpp"
#include "subshift/ring.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// gamma·p_D with gamma != 0 and D non-empty.
struct ProjectionMultiple {
  RingValue gamma;
  ClopenSet set;

  friend bool operator==(const ProjectionMultiple&, const ProjectionMultiple&) = default;
};

/// gammas[0]·p_A + sum_{i>=1} gammas[i]·s_{beta^{exps[i-1]}}·p_A where (A, beta)
/// is a minimal cycle without exit and exps is strictly increasing.
struct CycleForm {
  ClopenSet set;
  Word beta;
  std::vector<RingValue> gammas;
  std::vector<std::size_t> exps;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

using ReducedForm = std::variant<ProjectionMultiple, CycleForm>;

struct TraceEntry {
  enum class Side { Left, Right };
  Side side;
  std::string step;
  AlgebraElement factor;
};

/// mu·x·nu = embed(form) != 0.
struct ReductionWitness {
  AlgebraElement mu;
  AlgebraElement nu;
  ReducedForm form;
  std::vector<TraceEntry> trace;
};

/// Running state of a reduction: x is always mu·x0·nu. Every multiplication
/// re-checks that x stays nonzero; factors that leave x unchanged are skipped.
class Progress {
 public:
  explicit Progress(AlgebraElement x);

  const AlgebraElement& x() const noexcept { return x_; }
  const AlgebraElement& mu() const noexcept { return mu_; }
  const AlgebraElement& nu() const noexcept { return nu_; }
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }
  Algebra algebra() const { return Algebra(x_.shift(), x_.ring()); }

  void left(const AlgebraElement& factor, const std::string& step);
  void right(const AlgebraElement& factor, const std::string& step);
  /// Applies l·x·r as one move (skipped only if the pair is a no-op).
  void sandwich(const AlgebraElement& l, const AlgebraElement& r, const std::string& step);

  /// gamma·p_D if x has that shape.
  std::optional<ProjectionMultiple> projection_form() const;

 private:
  void accept(AlgebraElement next, const std::string& step);

  AlgebraElement x_;
  AlgebraElement mu_;
  AlgebraElement nu_;
  std::vector<TraceEntry> trace_;
};

/// sum gamma_i·s_{w_i}·p_A with the words sorted by length.
struct UniformTerm {
  Word word;
  RingValue gamma;
};
struct UniformForm {
  ClopenSet set;
  std::vector<UniformTerm> terms;
};

/// Reads x as a uniform form, if it is one.
std::optional<UniformForm> read_uniform(const AlgebraElement& x);

// The stages of the reduction, in pipeline order. Each one acts on `p` in
// place; those returning a ProjectionMultiple stop the pipeline early.

/// Right-multiplies by letters until every component has the form (u, omega).
void step_positive(Progress& p);
/// Left-multiplies by s_beta·s_beta^* for a longest beta; the words form a chain.
void step_prefix_nest(Progress& p);
/// Right-multiplies by level sets until x = sum gamma_j s_{w_j} p_A.
UniformForm step_common_projection(Progress& p);
/// Makes A lie in Z_w for every higher word w, or finds a projection multiple.
std::optional<ProjectionMultiple> restore_cylinder_containment(Progress& p);
/// Left-multiplies by s_{w_1}^* so the shortest word becomes omega.
std::optional<ProjectionMultiple> step_strip_constant(Progress& p);
/// Shrinks until A is contained in r(A, w_2).
std::optional<ProjectionMultiple> step_cycle_pump(Progress& p);
/// Sandwiches with powers of w_2 so the surviving words commute with w_2.
std::optional<ProjectionMultiple> step_power_align(Progress& p);

/// x = gammas[0] p_A + sum gammas[i] s_{root^{exps[i-1]}} p_A.
struct RootedForm {
  ClopenSet set;
  Word root;
  std::vector<RingValue> gammas;
  std::vector<std::size_t> exps;
};
/// Throws RootExtractionFailure if the words are not powers of a common root.
RootedForm step_word_gcd(const UniformForm& form);
ReducedForm step_exit_kill(Progress& p, const RootedForm& form);

/// Throws ZeroInput for x = 0.
ReductionWitness reduce(const AlgebraElement& x);
AlgebraElement embed(const Algebra& alg, const ReducedForm& form);
/// Recomputes mu·x·nu and compares with the embedded form; also re-checks the
/// shape constraints of the form.
bool verify(const ReductionWitness& w, const AlgebraElement& x);

}  // namespace subshift
