#pragma once
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace tradeoff {

/// One element u of the candidate set, with F(u) and G_1(u)..G_m(u).
/// `u` is an optional coordinate vector used only for reporting.
template <Scalar S>
struct Candidate {
  std::string id;
  std::optional<std::vector<S>> u;
  S f{};
  std::vector<S> g;
  bool f_infinite = false;  // F(u) = +inf; such a candidate never minimizes
};

/// Finite candidate set. Each candidate defines the affine map
/// alpha -> f + sum_j alpha_j g_j. Duplicates are kept as given.
template <Scalar S>
class ObjectiveTable {
 public:
  ObjectiveTable(std::size_t regularizers, std::vector<Candidate<S>> candidates)
      : m_(regularizers), candidates_(std::move(candidates)) {
    if (m_ < 1) throw input_error("table needs at least one regularizer");
    if (candidates_.empty()) throw input_error("table has no candidates");
    bool any_finite = false;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (candidates_[i].g.size() != m_)
        throw input_error("candidate " + std::to_string(i) + " has " +
                          std::to_string(candidates_[i].g.size()) + " g-values, expected " +
                          std::to_string(m_));
      any_finite = any_finite || !candidates_[i].f_infinite;
    }
    if (!any_finite) throw input_error("every candidate has f = +inf");
  }

  std::size_t size() const noexcept { return candidates_.size(); }
  std::size_t regularizers() const noexcept { return m_; }

  const Candidate<S>& operator[](std::size_t i) const { return candidates_.at(i); }
  const std::vector<Candidate<S>>& candidates() const noexcept { return candidates_; }

  bool finite(std::size_t i) const { return !candidates_.at(i).f_infinite; }
  const S& f(std::size_t i) const { return candidates_.at(i).f; }
  const S& g(std::size_t i, std::size_t j = 0) const { return candidates_.at(i).g.at(j); }

 private:
  std::size_t m_;
  std::vector<Candidate<S>> candidates_;
};

template <Scalar S>
void check_alpha(const ObjectiveTable<S>& table, std::span<const S> alpha) {
  if (alpha.size() != table.regularizers())
    throw input_error("alpha has " + std::to_string(alpha.size()) + " entries, table has m = " +
                      std::to_string(table.regularizers()));
  for (const S& a : alpha)
    if (a < S(0)) throw input_error("regularization weights must be non-negative");
}

/// H_alpha(u) = F(u) + sum_j alpha_j G_j(u) for one candidate.
template <Scalar S>
S eval_h(const ObjectiveTable<S>& table, std::size_t index, std::span<const S> alpha) {
  if (index >= table.size())
    throw input_error("candidate index " + std::to_string(index) + " out of range (n = " +
                      std::to_string(table.size()) + ")");
  check_alpha(table, alpha);
  const Candidate<S>& c = table[index];
  if (c.f_infinite) throw input_error("candidate '" + c.id + "' has f = +inf");
  S h = c.f;
  for (std::size_t j = 0; j < alpha.size(); ++j) h += alpha[j] * c.g[j];
  return h;
}

template <Scalar S>
S eval_h(const ObjectiveTable<S>& table, std::size_t index, const S& alpha) {
  return eval_h(table, index, std::span<const S>(&alpha, 1));
}

/// min_u H_alpha(u) by a plain scan over the table.
template <Scalar S>
S direct_min(const ObjectiveTable<S>& table, std::span<const S> alpha) {
  check_alpha(table, alpha);
  std::optional<S> best;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table.finite(i)) continue;
    S h = eval_h(table, i, alpha);
    if (!best || scalar_traits<S>::order_less(h, *best)) best = std::move(h);
  }
  return *best;
}

/// Grid restriction of the counterexample with F(u) = sum_i 2^-i (u-i+1)_+
/// and G(u) = -u on U = {0, 1, ..., n}.
inline ObjectiveTable<Rational> remark12_fixture(int n) {
  if (n < 1) throw input_error("fixture size must be >= 1");
  std::vector<Candidate<Rational>> cands;
  cands.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational f = 0;
    Rational weight(1, 2);
    for (int i = 1; i <= k; ++i) {
      f += weight * Rational(k - i + 1);
      weight *= Rational(1, 2);
    }
    cands.push_back({std::to_string(k), std::vector<Rational>{Rational(k)}, f, {Rational(-k)}, false});
  }
  return ObjectiveTable<Rational>(1, std::move(cands));
}

/// Adds G_2 = 0 to the grid fixture, giving a two-parameter table.
inline ObjectiveTable<Rational> remark12_fixture_2d(int n) {
  auto base = remark12_fixture(n);
  std::vector<Candidate<Rational>> cands = base.candidates();
  for (auto& c : cands) c.g.push_back(Rational(0));
  return ObjectiveTable<Rational>(2, std::move(cands));
}

/// Converts an exact table to another backend.
template <Scalar S>
ObjectiveTable<S> convert_table(const ObjectiveTable<Rational>& table, double tol = kDefaultTolerance) {
  using T = scalar_traits<S>;
  std::vector<Candidate<S>> out;
  out.reserve(table.size());
  for (const auto& c : table.candidates()) {
    Candidate<S> d;
    d.id = c.id;
    if (c.u) {
      std::vector<S> coords;
      for (const auto& x : *c.u) coords.push_back(T::from_rational(x, tol));
      d.u = std::move(coords);
    }
    d.f = T::from_rational(c.f, tol);
    d.f_infinite = c.f_infinite;
    for (const auto& x : c.g) d.g.push_back(T::from_rational(x, tol));
    out.push_back(std::move(d));
  }
  return ObjectiveTable<S>(table.regularizers(), std::move(out));
}

/// Convex piecewise-linear F on [0, inf) with kinks t_0 = 0 < t_1 < ... < t_K
/// and slopes s_1 < ... < s_{K+1}; slope s_{k+1} applies on [t_k, t_{k+1}].
/// G(u) = c u.
template <Scalar S>
struct PLRayDomain {
  std::vector<S> breakpoints;
  std::vector<S> slopes;
  S c{};
  S f0{};

  void validate() const {
    if (breakpoints.empty() || !(breakpoints.front() == S(0)))
      throw input_error("ray breakpoints must start at 0");
    for (std::size_t k = 1; k < breakpoints.size(); ++k)
      if (!(breakpoints[k - 1] < breakpoints[k]))
        throw input_error("ray breakpoints must be strictly increasing");
    if (slopes.size() != breakpoints.size())
      throw input_error("ray needs exactly one slope per kink (K+1 slopes for K+1 kinks incl. 0)");
    for (std::size_t k = 1; k < slopes.size(); ++k)
      if (!(slopes[k - 1] < slopes[k])) throw input_error("ray slopes must be strictly increasing");
    if (slopes.back() < S(0))
      throw input_error("final ray slope must be >= 0 so that F is bounded below at alpha = 0");
  }

  /// F at each kink t_k.
  std::vector<S> kink_values() const {
    std::vector<S> values{f0};
    for (std::size_t k = 1; k < breakpoints.size(); ++k)
      values.push_back(values.back() + slopes[k - 1] * (breakpoints[k] - breakpoints[k - 1]));
    return values;
  }
};

/// Truncation of the counterexample's F to its first n summands, as a ray.
inline PLRayDomain<Rational> remark12_ray(int n) {
  if (n < 1) throw input_error("ray size must be >= 1");
  PLRayDomain<Rational> ray;
  Rational slope = 0;
  Rational weight(1, 2);
  for (int k = 0; k < n; ++k) {
    ray.breakpoints.push_back(Rational(k));
    slope += weight;
    weight *= Rational(1, 2);
    ray.slopes.push_back(slope);
  }
  ray.c = Rational(-1);
  ray.f0 = Rational(0);
  return ray;
}

/// The candidate table made of the ray's kinks, whose lower envelope equals
/// the ray's value function wherever it is finite.
template <Scalar S>
ObjectiveTable<S> ray_vertex_table(const PLRayDomain<S>& ray) {
  ray.validate();
  const auto values = ray.kink_values();
  std::vector<Candidate<S>> cands;
  for (std::size_t k = 0; k < ray.breakpoints.size(); ++k)
    cands.push_back({"t" + std::to_string(k), std::vector<S>{ray.breakpoints[k]}, values[k],
                     {ray.c * ray.breakpoints[k]}, false});
  return ObjectiveTable<S>(1, std::move(cands));
}

}  // namespace tradeoff
