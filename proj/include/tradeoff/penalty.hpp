#pragma once
#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envelope.hpp"
#include "invariance.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace tradeoff {

/// Penalty relaxation of  min |u - c|^2  s.t.  u_1 + u_2 = 1  on a square
/// grid: F(u) = |u - c|^2 with c = (1, 1) and G(u) = (u_1 + u_2 - 1)^2 >= 0.
inline ObjectiveTable<Rational> penalty_table(int points_per_axis = 41, const Rational& lo = Rational(-2),
                                              const Rational& hi = Rational(2)) {
  if (points_per_axis < 2) throw input_error("penalty grid needs at least 2 points per axis");
  const Rational step = (hi - lo) / Rational(points_per_axis - 1);
  const Rational cx = 1, cy = 1;
  std::vector<Candidate<Rational>> cands;
  cands.reserve(static_cast<std::size_t>(points_per_axis) * static_cast<std::size_t>(points_per_axis));
  for (int i = 0; i < points_per_axis; ++i) {
    const Rational x = lo + step * Rational(i);
    for (int j = 0; j < points_per_axis; ++j) {
      const Rational y = lo + step * Rational(j);
      const Rational violation = x + y - Rational(1);
      cands.push_back({"u[" + std::to_string(i) + "," + std::to_string(j) + "]",
                       std::vector<Rational>{x, y},
                       (x - cx) * (x - cx) + (y - cy) * (y - cy),
                       {violation * violation},
                       false});
    }
  }
  return ObjectiveTable<Rational>(1, std::move(cands));
}

/// Default sweep: alpha = k/5 for k = 0..49.
inline std::vector<Rational> penalty_alphas() {
  std::vector<Rational> out;
  for (long k = 0; k < 50; ++k) out.push_back(Rational(k, 5));
  return out;
}

template <Scalar S>
struct PenaltyRow {
  InvarianceReport<S> report;
  std::optional<S> shared_g;  // the common constraint value when all minimizers agree
};

template <Scalar S>
struct PenaltyScan {
  std::vector<PenaltyRow<S>> rows;
  bool step_non_increasing = true;  // over the rows with a shared G
};

/// For each alpha: minimizers, their constraint values, and whether they
/// agree. Rows are in the given alpha order; monotonicity is checked in
/// increasing alpha.
template <Scalar S>
PenaltyScan<S> penalty_scan(const ObjectiveTable<S>& table, const ConcavePLFunction<S>& env,
                            std::span<const S> alphas) {
  PenaltyScan<S> scan;
  for (const S& a : alphas) {
    PenaltyRow<S> row{analyze_alpha(table, env, a), std::nullopt};
    if (!row.report.exceptional) row.shared_g = row.report.g_min;
    scan.rows.push_back(std::move(row));
  }
  std::vector<const PenaltyRow<S>*> sorted;
  for (const auto& r : scan.rows)
    if (r.shared_g) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return scalar_traits<S>::order_less(a->report.alpha, b->report.alpha);
  });
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (*sorted[k - 1]->shared_g < *sorted[k]->shared_g) scan.step_non_increasing = false;
  if (!scan.step_non_increasing) throw theorem_violation("constraint value increases with the penalty weight");
  return scan;
}

}  // namespace tradeoff
