#pragma once
#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace tradeoff {

/// Concave piecewise-linear value function alpha -> min_u (f_u + alpha g_u)
/// on [0, domain_end]. Segment k lies between breakpoints k-1 and k (with 0
/// and domain_end at the ends) and follows the line intercepts[k] + alpha slopes[k].
template <Scalar S>
class ConcavePLFunction {
 public:
  struct Evaluation {
    S value;
    S left_slope;
    S right_slope;
  };

  ConcavePLFunction(std::vector<S> breakpoints, std::vector<S> slopes, std::vector<S> intercepts,
                    std::vector<std::vector<std::size_t>> active,
                    std::optional<S> domain_end = std::nullopt)
      : breakpoints_(std::move(breakpoints)),
        slopes_(std::move(slopes)),
        intercepts_(std::move(intercepts)),
        active_(std::move(active)),
        domain_end_(std::move(domain_end)) {
    if (slopes_.empty() || slopes_.size() != breakpoints_.size() + 1 ||
        intercepts_.size() != slopes_.size() || active_.size() != slopes_.size())
      throw input_error("inconsistent envelope segment counts");
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
      if (!(S(0) < breakpoints_[k])) throw input_error("envelope breakpoints must be positive");
      if (k > 0 && !(breakpoints_[k - 1] < breakpoints_[k]))
        throw input_error("envelope breakpoints must be strictly increasing");
      if (!(slopes_[k + 1] < slopes_[k]))
        throw input_error("envelope slopes must be strictly decreasing");
    }
    if (domain_end_ && !breakpoints_.empty() && !(breakpoints_.back() < *domain_end_))
      throw input_error("envelope breakpoints must precede the domain end");
  }

  const std::vector<S>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<S>& slopes() const noexcept { return slopes_; }
  const std::vector<S>& intercepts() const noexcept { return intercepts_; }
  const std::vector<std::vector<std::size_t>>& active() const noexcept { return active_; }
  const std::optional<S>& domain_end() const noexcept { return domain_end_; }
  std::size_t segment_count() const noexcept { return slopes_.size(); }

  /// Value at alpha = 0.
  const S& anchor() const { return intercepts_.front(); }

  /// Index of the breakpoint equal to alpha, if any.
  std::optional<std::size_t> breakpoint_index(const S& alpha) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), alpha,
                                     scalar_traits<S>::order_less);
    const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx < breakpoints_.size() && breakpoints_[idx] == alpha) return idx;
    if (idx > 0 && breakpoints_[idx - 1] == alpha) return idx - 1;
    return std::nullopt;
  }

  bool is_breakpoint(const S& alpha) const { return breakpoint_index(alpha).has_value(); }

  /// Segment whose closed interval contains alpha; at a breakpoint, the left one.
  std::size_t segment_at(const S& alpha) const {
    if (auto b = breakpoint_index(alpha)) return *b;
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), alpha,
                                     scalar_traits<S>::order_less);
    return static_cast<std::size_t>(it - breakpoints_.begin());
  }

  void check_domain(const S& alpha) const {
    if (alpha < S(0)) throw input_error("alpha must be non-negative");
    if (domain_end_ && *domain_end_ < alpha)
      throw unbounded_error("value function is -inf beyond alpha = " + describe(*domain_end_));
  }

  Evaluation evaluate(const S& alpha) const {
    check_domain(alpha);
    if (auto b = breakpoint_index(alpha)) {
      return {intercepts_[*b] + alpha * slopes_[*b], slopes_[*b], slopes_[*b + 1]};
    }
    const std::size_t k = segment_at(alpha);
    return {intercepts_[k] + alpha * slopes_[k], slopes_[k], slopes_[k]};
  }

  S value(const S& alpha) const {
    check_domain(alpha);
    const std::size_t k = segment_at(alpha);
    return intercepts_[k] + alpha * slopes_[k];
  }

 private:
  static std::string describe(const S& x) {
    if constexpr (scalar_traits<S>::exact) return x.str();
    else return std::to_string(scalar_traits<S>::to_double(x));
  }

  std::vector<S> breakpoints_;
  std::vector<S> slopes_;
  std::vector<S> intercepts_;
  std::vector<std::vector<std::size_t>> active_;
  std::optional<S> domain_end_;
};

namespace detail {

template <Scalar S>
struct Line {
  S f;
  S g;
  std::vector<std::size_t> members;
};

// alpha where line a (larger slope) meets line b.
template <Scalar S>
S crossing(const Line<S>& a, const Line<S>& b) {
  return (b.f - a.f) / (a.g - b.g);
}

}  // namespace detail

/// Lower envelope of alpha -> f_u + alpha g_u over alpha >= 0. Lines are
/// sorted by decreasing slope and pruned with the convex-hull trick; lines of
/// equal slope keep only the lowest intercept, and three or more lines through
/// one vertex collapse to a single breakpoint. O(n log n).
template <Scalar S>
ConcavePLFunction<S> build_envelope(const ObjectiveTable<S>& table,
                                    std::optional<S> domain_end = std::nullopt) {
  using T = scalar_traits<S>;
  if (table.regularizers() != 1)
    throw input_error("envelope needs a single-regularizer table (m = 1)");

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.finite(i)) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (T::order_less(table.g(b), table.g(a))) return true;
    if (T::order_less(table.g(a), table.g(b))) return false;
    return T::order_less(table.f(a), table.f(b));
  });

  std::vector<detail::Line<S>> lines;
  for (std::size_t pos = 0; pos < order.size();) {
    const std::size_t lead = order[pos];
    detail::Line<S> line{table.f(lead), table.g(lead), {lead}};
    std::size_t next = pos + 1;
    while (next < order.size() && table.g(order[next]) == line.g) {
      if (table.f(order[next]) == line.f) line.members.push_back(order[next]);
      ++next;
    }
    std::sort(line.members.begin(), line.members.end());
    lines.push_back(std::move(line));
    pos = next;
  }

  std::vector<detail::Line<S>> hull;
  for (auto& line : lines) {
    while (hull.size() >= 2 &&
           detail::crossing(hull[hull.size() - 2], line) <= detail::crossing(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(std::move(line));
  }

  // trim the part of the hull living in alpha <= 0
  std::size_t start = 0;
  while (hull.size() - start >= 2 && detail::crossing(hull[start], hull[start + 1]) <= S(0)) ++start;

  std::vector<S> breakpoints, slopes, intercepts;
  std::vector<std::vector<std::size_t>> active;
  for (std::size_t k = start; k < hull.size(); ++k) {
    if (k > start) breakpoints.push_back(detail::crossing(hull[k - 1], hull[k]));
    slopes.push_back(hull[k].g);
    intercepts.push_back(hull[k].f);
    active.push_back(hull[k].members);
  }

  // drop segments that start at or beyond a finite domain end
  if (domain_end) {
    while (!breakpoints.empty() && *domain_end <= breakpoints.back()) {
      breakpoints.pop_back();
      slopes.pop_back();
      intercepts.pop_back();
      active.pop_back();
    }
  }
  return ConcavePLFunction<S>(std::move(breakpoints), std::move(slopes), std::move(intercepts),
                              std::move(active), std::move(domain_end));
}

template <Scalar S>
typename ConcavePLFunction<S>::Evaluation evaluate(const ConcavePLFunction<S>& env, const S& alpha) {
  return env.evaluate(alpha);
}

/// Exact minimizer set at alpha by a direct scan of the table, so lines that
/// touch the envelope only at a vertex are included. O(n).
template <Scalar S>
std::vector<std::size_t> argmin_at(const ObjectiveTable<S>& table, const S& alpha) {
  if (table.regularizers() != 1) throw input_error("argmin_at needs m = 1");
  const S best = direct_min(table, std::span<const S>(&alpha, 1));
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.finite(i) && eval_h(table, i, alpha) == best) result.push_back(i);
  return result;
}

/// Value function of min_{u >= 0} F(u) + alpha c u. Minimizers sit at kinks;
/// for c < 0 the value is -inf once s_{K+1} + alpha c < 0.
template <Scalar S>
ConcavePLFunction<S> build_ray_envelope(const PLRayDomain<S>& ray) {
  std::optional<S> end;
  if (ray.c < S(0)) end = ray.slopes.back() / (-ray.c);
  return build_envelope(ray_vertex_table(ray), end);
}

}  // namespace tradeoff
