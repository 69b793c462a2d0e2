#pragma once
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "envelope.hpp"
#include "errors.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace tradeoff {

/// What the minimizers at one alpha say about G.
///
/// g_min / g_max are inf / sup of G over the exact argmin (g_min is R(alpha)
/// in the monotonicity argument). g_plus / g_minus are the largest limsup and
/// smallest liminf of G along minimizing sequences, read off the envelope as
/// its left and right slopes. `certified` is false on the approx backend,
/// whose verdicts are indicative only.
template <Scalar S>
struct InvarianceReport {
  S alpha;
  S value;
  std::vector<std::size_t> argmin;
  S g_min;
  S g_max;
  S g_plus;
  S g_minus;
  bool exceptional = false;
  bool certified = scalar_traits<S>::exact;

  S spread() const { return g_max - g_min; }
};

template <Scalar S>
InvarianceReport<S> analyze_alpha(const ObjectiveTable<S>& table, const ConcavePLFunction<S>& env,
                                  const S& alpha) {
  if (table.regularizers() != 1) throw input_error("analyze_alpha needs m = 1");
  if (alpha < S(0)) throw input_error("alpha must be non-negative");
  if (env.domain_end() && *env.domain_end() < alpha)
    throw unbounded_error("inf H_alpha = -inf here, so no limiting G value is defined");

  const auto ev = env.evaluate(alpha);
  InvarianceReport<S> r;
  r.alpha = alpha;
  r.value = ev.value;
  r.argmin = argmin_at(table, alpha);
  r.g_min = table.g(r.argmin.front());
  r.g_max = r.g_min;
  for (std::size_t i : r.argmin) {
    r.g_min = min_of(r.g_min, table.g(i));
    r.g_max = max_of(r.g_max, table.g(i));
  }
  // At alpha = 0 there is no left derivative; on a finite table the
  // supremum over minimizing sequences is the max over exact minimizers.
  r.g_plus = S(0) < alpha ? ev.left_slope : r.g_max;
  r.g_minus = ev.right_slope;
  r.exceptional = r.g_min < r.g_max;

  if (!(r.g_minus <= r.g_min && r.g_min <= r.g_max && r.g_max <= r.g_plus))
    throw theorem_violation("expected g_minus <= g_min <= g_max <= g_plus at an analyzed alpha");
  if (r.exceptional && S(0) < alpha && !env.is_breakpoint(alpha))
    throw theorem_violation("exceptional alpha that is not an envelope breakpoint");
  return r;
}

/// All alpha >= 0 at which minimizers disagree on G, in increasing order.
/// Candidates are alpha = 0 and the envelope breakpoints, so the list has at
/// most n - 1 entries.
template <Scalar S>
std::vector<InvarianceReport<S>> exceptional_set(const ObjectiveTable<S>& table,
                                                 const ConcavePLFunction<S>& env) {
  std::vector<InvarianceReport<S>> out;
  auto consider = [&](const S& alpha) {
    auto r = analyze_alpha(table, env, alpha);
    if (r.exceptional) out.push_back(std::move(r));
  };
  consider(S(0));
  for (const S& b : env.breakpoints()) consider(b);

  std::size_t finite = 0;
  for (std::size_t i = 0; i < table.size(); ++i) finite += table.finite(i) ? 1 : 0;
  if (out.size() + 1 > finite)
    throw theorem_violation("more exceptional values than n - 1");
  return out;
}

/// alpha -> G_alpha as a step function over the envelope's segments.
template <Scalar S>
class GStepFunction {
 public:
  GStepFunction(std::vector<S> breakpoints, std::vector<S> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1) throw input_error("step function size mismatch");
  }

  const std::vector<S>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<S>& values() const noexcept { return values_; }

  /// (G^+, G^-) at breakpoint k: the left and right segment values.
  std::pair<S, S> jump(std::size_t k) const { return {values_.at(k), values_.at(k + 1)}; }

  S g_plus_at(const S& alpha) const {
    const auto [k, at_break] = locate(alpha);
    return values_[k];
  }
  S g_minus_at(const S& alpha) const {
    const auto [k, at_break] = locate(alpha);
    return at_break ? values_[k + 1] : values_[k];
  }

  /// Points where the step function jumps.
  std::vector<S> discontinuities() const {
    std::vector<S> out;
    for (std::size_t k = 0; k < breakpoints_.size(); ++k)
      if (!(values_[k] == values_[k + 1])) out.push_back(breakpoints_[k]);
    return out;
  }

  bool non_increasing() const {
    for (std::size_t k = 1; k < values_.size(); ++k)
      if (values_[k - 1] < values_[k]) return false;
    return true;
  }

 private:
  std::pair<std::size_t, bool> locate(const S& alpha) const {
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
      if (alpha == breakpoints_[k]) return {k, true};
      if (alpha < breakpoints_[k]) return {k, false};
    }
    return {breakpoints_.size(), false};
  }

  std::vector<S> breakpoints_;
  std::vector<S> values_;
};

template <Scalar S>
GStepFunction<S> g_step(const ConcavePLFunction<S>& env) {
  GStepFunction<S> step(env.breakpoints(), env.slopes());
  if (!step.non_increasing()) throw theorem_violation("G step function increases");
  return step;
}

/// The compared quantities for alpha1 < alpha2:
///   inf_{argmin(alpha1)} G >= sup_{argmin(alpha2)} G
///   G+(alpha1) >= G-(alpha1) >= G+(alpha2) >= G-(alpha2)
template <Scalar S>
struct MonotonicityVerdict {
  S alpha1, alpha2;
  S inf_g1, sup_g2;
  S g_plus1, g_minus1, g_plus2, g_minus2;
};

template <Scalar S>
MonotonicityVerdict<S> check_monotonicity(const ObjectiveTable<S>& table,
                                          const ConcavePLFunction<S>& env, const S& alpha1,
                                          const S& alpha2) {
  if (!(alpha1 < alpha2)) throw input_error("check_monotonicity needs alpha1 < alpha2");
  const auto r1 = analyze_alpha(table, env, alpha1);
  const auto r2 = analyze_alpha(table, env, alpha2);
  MonotonicityVerdict<S> v{alpha1,     alpha2,     r1.g_min,    r2.g_max,
                           r1.g_plus,  r1.g_minus, r2.g_plus,   r2.g_minus};
  if (!(v.sup_g2 <= v.inf_g1))
    throw theorem_violation("inf of G over argmin at alpha1 is below sup at alpha2");
  if (!(v.g_minus1 <= v.g_plus1 && v.g_plus2 <= v.g_minus1 && v.g_minus2 <= v.g_plus2))
    throw theorem_violation("G+/G- chain is not monotone");
  return v;
}

/// One finite-difference probe. `left` / `right` are the quotients
/// (H(a) - H(a-h)) / h and (H(a+h) - H(a)) / h; `*_checked` says whether h
/// was below the distance to the neighbouring breakpoint, so that the quotient
/// had to equal the one-sided slope exactly.
template <Scalar S>
struct QuotientProbe {
  S h;
  std::optional<S> left;
  std::optional<S> right;
  bool left_checked = false;
  bool right_checked = false;
};

template <Scalar S>
struct DerivativeReport {
  S alpha;
  S g_plus;   // left derivative
  S g_minus;  // right derivative
  bool derivative_exists = false;
  std::optional<bool> exceptional;  // from the argmin spread, when a table was given
  std::vector<QuotientProbe<S>> probes;
};

template <Scalar S>
DerivativeReport<S> derivative_identities(const ConcavePLFunction<S>& env, const S& alpha,
                                          std::span<const S> h_schedule) {
  if (!(S(0) < alpha)) throw input_error("derivative identities need alpha > 0");
  if (env.domain_end() && !(alpha < *env.domain_end()))
    throw input_error("derivative identities need alpha inside the finite-value domain");
  for (std::size_t i = 0; i < h_schedule.size(); ++i) {
    if (!(S(0) < h_schedule[i])) throw input_error("step sizes must be positive");
    if (i > 0 && !(h_schedule[i] < h_schedule[i - 1]))
      throw input_error("step sizes must be strictly decreasing");
  }

  const auto ev = env.evaluate(alpha);
  const auto& bps = env.breakpoints();
  std::optional<S> below, above;
  for (const S& b : bps) {
    if (b < alpha) below = b;
    if (alpha < b && !above) above = b;
  }
  if (!above && env.domain_end()) above = env.domain_end();
  const S gap_left = alpha - below.value_or(S(0));

  DerivativeReport<S> rep{alpha, ev.left_slope, ev.right_slope, ev.left_slope == ev.right_slope,
                          std::nullopt, {}};
  for (const S& h : h_schedule) {
    QuotientProbe<S> p{h, std::nullopt, std::nullopt, false, false};
    if (h <= alpha) {
      p.left = (ev.value - env.value(alpha - h)) / h;
      if (h <= gap_left) {
        p.left_checked = true;
        if (!(*p.left == ev.left_slope))
          throw theorem_violation("left difference quotient differs from the left slope");
      }
    }
    if (!env.domain_end() || alpha + h <= *env.domain_end()) {
      p.right = (env.value(alpha + h) - ev.value) / h;
      if (!above || h <= *above - alpha) {
        p.right_checked = true;
        if (!(*p.right == ev.right_slope))
          throw theorem_violation("right difference quotient differs from the right slope");
      }
    }
    rep.probes.push_back(std::move(p));
  }
  if (rep.derivative_exists != (rep.g_plus == rep.g_minus))
    throw theorem_violation("derivative existence disagrees with G+ = G-");
  if (rep.derivative_exists == env.is_breakpoint(alpha))
    throw theorem_violation("derivative existence disagrees with the breakpoint structure");
  return rep;
}

/// As above, and also checks "derivative exists <=> alpha not exceptional"
/// against the argmin spread computed from the table.
template <Scalar S>
DerivativeReport<S> derivative_identities(const ObjectiveTable<S>& table,
                                          const ConcavePLFunction<S>& env, const S& alpha,
                                          std::span<const S> h_schedule) {
  auto rep = derivative_identities(env, alpha, h_schedule);
  const auto r = analyze_alpha(table, env, alpha);
  rep.exceptional = r.exceptional;
  if (rep.derivative_exists == r.exceptional)
    throw theorem_violation("derivative exists at an exceptional alpha, or fails at a regular one");
  if (!(r.g_plus == rep.g_plus && r.g_minus == rep.g_minus))
    throw theorem_violation("one-sided slopes differ from G+ / G-");
  return rep;
}

enum class SequencePolicy { adversarial_max, adversarial_min, random, alternating, constant };

inline std::string_view policy_name(SequencePolicy p) {
  switch (p) {
    case SequencePolicy::adversarial_max: return "adversarial-max";
    case SequencePolicy::adversarial_min: return "adversarial-min";
    case SequencePolicy::random: return "random";
    case SequencePolicy::alternating: return "alternating";
    case SequencePolicy::constant: return "constant";
  }
  return "?";
}

inline SequencePolicy parse_policy(std::string_view name) {
  for (auto p : {SequencePolicy::adversarial_max, SequencePolicy::adversarial_min,
                 SequencePolicy::random, SequencePolicy::alternating, SequencePolicy::constant})
    if (policy_name(p) == name) return p;
  throw input_error("unknown sequence policy '" + std::string(name) + "'");
}

template <Scalar S>
struct SequenceEntry {
  std::size_t candidate;
  S eps;
  S h_value;
  S g_value;
  std::size_t eps_set_size;  // |{u : H(u) <= inf H + eps}|
};

/// A minimizing sequence drawn from shrinking eps-argmin sets.
template <Scalar S>
struct EpsSequence {
  S alpha;
  S value;
  SequencePolicy policy;
  std::uint64_t seed = 0;
  std::vector<SequenceEntry<S>> entries;
};

/// eps_i = first * ratio^i for i = 0..count-1.
template <Scalar S>
std::vector<S> geometric_schedule(const S& first, const S& ratio, std::size_t count) {
  std::vector<S> out;
  S eps = first;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(eps);
    eps *= ratio;
  }
  return out;
}

template <Scalar S>
EpsSequence<S> generate_eps_sequence(const ObjectiveTable<S>& table, const ConcavePLFunction<S>& env,
                                     const S& alpha, std::span<const S> schedule,
                                     SequencePolicy policy, std::uint64_t seed = 0) {
  if (schedule.empty()) throw input_error("empty eps schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(S(0) < schedule[i])) throw input_error("eps values must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1]))
      throw input_error("eps schedule must be strictly decreasing");
  }
  if (table.regularizers() != 1) throw input_error("sequences need m = 1");

  EpsSequence<S> seq{alpha, env.value(alpha), policy, seed, {}};
  std::mt19937_64 rng(seed);
  std::vector<S> h(table.size());
  std::optional<std::size_t> anchor;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table.finite(i)) continue;
    h[i] = eval_h(table, i, alpha);
    if (!anchor && h[i] == seq.value) anchor = i;
  }
  if (!anchor) throw theorem_violation("envelope value is not attained by any candidate");

  for (std::size_t step = 0; step < schedule.size(); ++step) {
    const S& eps = schedule[step];
    const S level = seq.value + eps;
    std::vector<std::size_t> near;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table.finite(i) && h[i] <= level) near.push_back(i);

    auto pick_extreme = [&](bool largest) {
      std::size_t best = near.front();
      for (std::size_t i : near)
        if (largest ? table.g(best) < table.g(i) : table.g(i) < table.g(best)) best = i;
      return best;
    };
    std::size_t pick = near.front();
    switch (policy) {
      case SequencePolicy::adversarial_max: pick = pick_extreme(true); break;
      case SequencePolicy::adversarial_min: pick = pick_extreme(false); break;
      case SequencePolicy::alternating: pick = pick_extreme(step % 2 == 0); break;
      case SequencePolicy::random: pick = near[static_cast<std::size_t>(rng() % near.size())]; break;
      case SequencePolicy::constant: pick = *anchor; break;
    }
    seq.entries.push_back({pick, eps, h[pick], table.g(pick), near.size()});
  }
  return seq;
}

template <Scalar S>
struct SequenceVerdict {
  std::optional<std::size_t> stable_from;  // first index whose eps-argmin is the true argmin
  bool bracket_holds = true;
  bool convergence_asserted = false;
  bool eventually_constant = false;
  std::optional<S> tail_max;  // limsup of the g-trace (tail is exact on finite tables)
  std::optional<S> tail_min;  // liminf

  std::optional<S> oscillation() const {
    if (!tail_max) return std::nullopt;
    return *tail_max - *tail_min;
  }
};

/// Checks that a sequence of eps-minimizers has its tail G-values inside
/// [G-, G+], and, off the exceptional set, that the trace is eventually
/// constant at G_alpha.
template <Scalar S>
SequenceVerdict<S> verify_sequence_bracket(const EpsSequence<S>& seq, const InvarianceReport<S>& report) {
  if (!(seq.alpha == report.alpha)) throw input_error("sequence and report are for different alpha");
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    if (!(S(0) < e.eps) || (i > 0 && !(e.eps < seq.entries[i - 1].eps)))
      throw precondition_error("eps values must be positive and strictly decreasing");
    if (report.value + e.eps < e.h_value)
      throw precondition_error("entry " + std::to_string(i) + " is not an eps-minimizer");
    if (e.h_value < report.value)
      throw precondition_error("entry " + std::to_string(i) + " lies below the infimum");
  }

  SequenceVerdict<S> v;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if (seq.entries[i].eps_set_size == report.argmin.size()) {
      v.stable_from = i;
      break;
    }
  }
  if (!v.stable_from) return v;

  for (std::size_t i = *v.stable_from; i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    if (!(e.h_value == report.value))
      throw precondition_error("entry " + std::to_string(i) +
                               " has an eps-argmin equal to the argmin but is not a minimizer");
    v.tail_max = v.tail_max ? max_of(*v.tail_max, e.g_value) : e.g_value;
    v.tail_min = v.tail_min ? min_of(*v.tail_min, e.g_value) : e.g_value;
    if (e.g_value < report.g_minus || report.g_plus < e.g_value) v.bracket_holds = false;
  }
  if (!v.bracket_holds) throw theorem_violation("tail G value escapes [G-, G+]");

  v.eventually_constant = *v.tail_max == *v.tail_min;
  if (!report.exceptional) {
    v.convergence_asserted = true;
    if (!v.eventually_constant || !(*v.tail_max == report.g_plus))
      throw theorem_violation("G trace does not settle at G_alpha off the exceptional set");
  }
  return v;
}

}  // namespace tradeoff
