#pragma once
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "envelope.hpp"
#include "errors.hpp"
#include "invariance.hpp"
#include "parallel.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace tradeoff {

/// Axis-product grid over [0, A_1] x ... x [0, A_m]; points are visited in
/// lexicographic order (last axis fastest).
template <Scalar S>
class AlphaGrid {
 public:
  explicit AlphaGrid(std::vector<std::vector<S>> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw input_error("grid needs at least one axis");
    for (const auto& axis : axes_) {
      if (axis.size() < 2) throw input_error("each grid axis needs at least 2 points");
      if (axis.front() < S(0)) throw input_error("grid points must be non-negative");
      for (std::size_t k = 1; k < axis.size(); ++k)
        if (!(axis[k - 1] < axis[k])) throw input_error("grid axes must be strictly increasing");
    }
  }

  /// `cells` equal cells per axis on [0, upper].
  static AlphaGrid uniform(std::size_t m, const S& upper, std::size_t cells) {
    if (cells < 1) throw input_error("need at least one cell per axis");
    std::vector<S> axis;
    for (std::size_t k = 0; k <= cells; ++k)
      axis.push_back(upper * S(static_cast<long>(k)) / S(static_cast<long>(cells)));
    return AlphaGrid(std::vector<std::vector<S>>(m, axis));
  }

  std::size_t dimension() const noexcept { return axes_.size(); }
  const std::vector<S>& axis(std::size_t j) const { return axes_.at(j); }

  /// Every combination of the axes other than `skip`, lexicographically.
  std::vector<std::vector<S>> lines(std::size_t skip) const {
    std::vector<std::vector<S>> out{{}};
    for (std::size_t j = 0; j < axes_.size(); ++j) {
      if (j == skip) continue;
      std::vector<std::vector<S>> next;
      for (const auto& prefix : out)
        for (const S& x : axes_[j]) {
          auto p = prefix;
          p.push_back(x);
          next.push_back(std::move(p));
        }
      out = std::move(next);
    }
    return out;
  }

 private:
  std::vector<std::vector<S>> axes_;
};

/// Single-parameter table along axis j: intercepts f + sum_{i != j} alpha_i g_i,
/// slopes g_j. `fixed` lists the other coordinates in axis order.
template <Scalar S>
ObjectiveTable<S> slice_table(const ObjectiveTable<S>& table, std::size_t axis, std::span<const S> fixed) {
  const std::size_t m = table.regularizers();
  if (axis >= m) throw input_error("axis " + std::to_string(axis + 1) + " out of range (m = " + std::to_string(m) + ")");
  if (fixed.size() + 1 != m) throw input_error("slice needs m - 1 fixed coordinates");
  for (const S& a : fixed)
    if (a < S(0)) throw input_error("fixed coordinates must be non-negative");
  std::vector<Candidate<S>> out;
  out.reserve(table.size());
  for (const auto& c : table.candidates()) {
    Candidate<S> d{c.id, c.u, c.f, {c.g[axis]}, c.f_infinite};
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == axis) continue;
      d.f += fixed[k++] * c.g[i];
    }
    out.push_back(std::move(d));
  }
  return ObjectiveTable<S>(1, std::move(out));
}

template <Scalar S>
ConcavePLFunction<S> slice_envelope(const ObjectiveTable<S>& table, std::size_t axis, std::span<const S> fixed) {
  return build_envelope(slice_table(table, axis, fixed));
}

template <Scalar S>
struct ConcavityVerdict {
  std::size_t triples = 0;
  std::size_t equalities = 0;  // triples where the concavity inequality is tight
};

/// Random convex combinations of grid points; checks
/// H(t a + (1-t) b) >= t H(a) + (1-t) H(b) with H by direct minimization.
template <Scalar S>
ConcavityVerdict<S> concavity_check(const ObjectiveTable<S>& table, const AlphaGrid<S>& grid,
                                    std::uint64_t seed = 0, std::size_t triples = 500) {
  const std::size_t m = table.regularizers();
  if (grid.dimension() != m) throw input_error("grid dimension differs from m");
  std::mt19937_64 rng(seed);
  const S thetas[] = {S(1) / S(4), S(1) / S(2), S(3) / S(4)};
  auto random_point = [&] {
    std::vector<S> p;
    for (std::size_t j = 0; j < m; ++j) p.push_back(grid.axis(j)[rng() % grid.axis(j).size()]);
    return p;
  };
  ConcavityVerdict<S> v;
  for (std::size_t t = 0; t < triples; ++t) {
    const auto a = random_point();
    const auto b = random_point();
    const S& theta = thetas[rng() % 3];
    std::vector<S> mix;
    for (std::size_t j = 0; j < m; ++j) mix.push_back(theta * a[j] + (S(1) - theta) * b[j]);
    const S lhs = direct_min<S>(table, mix);
    const S rhs = theta * direct_min<S>(table, a) + (S(1) - theta) * direct_min<S>(table, b);
    if (lhs < rhs) throw theorem_violation("value function fails the concavity inequality");
    ++v.triples;
    if (lhs == rhs) ++v.equalities;
  }
  return v;
}

template <Scalar S>
struct LineReport {
  std::vector<S> fixed;
  std::vector<S> exceptional;  // exceptional alpha_j inside the axis range
};

template <Scalar S>
struct ExceptionalMeasure {
  std::size_t axis = 0;
  std::vector<LineReport<S>> lines;
  std::size_t max_count = 0;
  S measure_estimate{};  // sum over lines of count * 0
  std::size_t cells_total = 0;
  std::size_t cells_hit = 0;

  Rational cell_fraction() const {
    return Rational(static_cast<long>(cells_hit), static_cast<long>(cells_total));
  }
};

/// Exceptional set of every grid line parallel to `axis`. Each line meets the
/// set in at most n - 1 points, so integrating the line counts gives measure
/// zero; the fraction of grid cells touched by an exceptional point is the
/// diagnostic that shrinks under refinement. A cell counts when an
/// exceptional point of one of its bounding axis-parallel lines lies in its
/// closed extent along the axis.
template <Scalar S>
ExceptionalMeasure<S> exceptional_measure(const ObjectiveTable<S>& table, const AlphaGrid<S>& grid,
                                          std::size_t axis, unsigned threads = 1) {
  const std::size_t m = table.regularizers();
  if (m < 2) throw input_error("exceptional_measure needs m >= 2");
  if (grid.dimension() != m) throw input_error("grid dimension differs from m");
  if (axis >= m) throw input_error("axis " + std::to_string(axis + 1) + " out of range (m = " + std::to_string(m) + ")");

  const auto& ax = grid.axis(axis);
  ExceptionalMeasure<S> out;
  out.axis = axis;
  const auto fixed = grid.lines(axis);
  out.lines.resize(fixed.size());
  std::size_t finite = 0;
  for (std::size_t i = 0; i < table.size(); ++i) finite += table.finite(i) ? 1 : 0;

  parallel_for(fixed.size(), threads, [&](std::size_t l) {
    const auto slice = slice_table<S>(table, axis, fixed[l]);
    const auto env = build_envelope(slice);
    LineReport<S> rep{fixed[l], {}};
    for (const auto& r : exceptional_set(slice, env))
      if (ax.front() <= r.alpha && r.alpha <= ax.back()) rep.exceptional.push_back(r.alpha);
    if (rep.exceptional.size() + 1 > finite)
      throw theorem_violation("line carries more than n - 1 exceptional points");
    out.lines[l] = std::move(rep);
  });

  for (const auto& l : out.lines) out.max_count = std::max(out.max_count, l.exceptional.size());
  out.measure_estimate = S(0);
  for (const auto& l : out.lines) out.measure_estimate += S(static_cast<long>(l.exceptional.size())) * S(0);

  // hit[l][c]: line l has an exceptional point in axis cell c
  const std::size_t axis_cells = ax.size() - 1;
  std::vector<std::vector<char>> hit(out.lines.size(), std::vector<char>(axis_cells, 0));
  for (std::size_t l = 0; l < out.lines.size(); ++l)
    for (const S& a : out.lines[l].exceptional)
      for (std::size_t c = 0; c < axis_cells; ++c)
        if (ax[c] <= a && a <= ax[c + 1]) hit[l][c] = 1;

  // other axes, in the order used by grid.lines()
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < m; ++j)
    if (j != axis) others.push_back(j);
  std::vector<std::size_t> sizes;
  for (std::size_t j : others) sizes.push_back(grid.axis(j).size());

  std::size_t other_cells = 1;
  for (std::size_t s : sizes) other_cells *= s - 1;
  out.cells_total = other_cells * axis_cells;

  std::vector<std::size_t> cell(others.size(), 0);
  for (std::size_t oc = 0; oc < other_cells; ++oc) {
    std::size_t rem = oc;
    for (std::size_t d = others.size(); d-- > 0;) {
      cell[d] = rem % (sizes[d] - 1);
      rem /= sizes[d] - 1;
    }
    for (std::size_t c = 0; c < axis_cells; ++c) {
      bool any = false;
      for (std::size_t corner = 0; corner < (std::size_t{1} << others.size()) && !any; ++corner) {
        std::size_t line = 0;
        for (std::size_t d = 0; d < others.size(); ++d)
          line = line * sizes[d] + cell[d] + ((corner >> d) & 1u);
        any = hit[line][c] != 0;
      }
      if (any) ++out.cells_hit;
    }
  }
  return out;
}

/// Cell fraction of `axis` on uniform grids [0, upper]^m with the given
/// numbers of cells per axis.
template <Scalar S>
std::vector<Rational> cell_fraction_refinement(const ObjectiveTable<S>& table, const S& upper, std::size_t axis,
                                               std::span<const std::size_t> cells_per_axis, unsigned threads = 1) {
  std::vector<Rational> out;
  for (std::size_t cells : cells_per_axis) {
    const auto grid = AlphaGrid<S>::uniform(table.regularizers(), upper, cells);
    out.push_back(exceptional_measure(table, grid, axis, threads).cell_fraction());
  }
  return out;
}

template <Scalar S>
struct SemicontinuityVerdict {
  std::size_t lines = 0;
  std::size_t breakpoints_checked = 0;
  std::size_t bound_checks = 0;
  S bound{};  // max_u |g_j(u)|
};

/// Along every axis-parallel grid line: G^{j,+} is left-continuous and
/// G^{j,-} right-continuous at each slice breakpoint inside the axis range,
/// and |G^{j,+-}| never exceeds max_u |g_j(u)|.
template <Scalar S>
SemicontinuityVerdict<S> semicontinuity_check(const ObjectiveTable<S>& table, const AlphaGrid<S>& grid,
                                              std::size_t axis) {
  const std::size_t m = table.regularizers();
  if (grid.dimension() != m) throw input_error("grid dimension differs from m");
  if (axis >= m) throw input_error("axis out of range");
  const auto& ax = grid.axis(axis);

  SemicontinuityVerdict<S> v;
  bool first = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table.finite(i)) continue;
    const S mag = abs(table.g(i, axis));
    v.bound = first ? mag : max_of(v.bound, mag);
    first = false;
  }

  auto within = [&](const S& x) { return !(v.bound < abs(x)); };
  for (const auto& fixed : grid.lines(axis)) {
    const auto slice = slice_table<S>(table, axis, fixed);
    const auto env = build_envelope(slice);
    const auto step = g_step(env);
    const auto& bps = env.breakpoints();
    ++v.lines;
    for (std::size_t k = 0; k < bps.size(); ++k) {
      const S& b = bps[k];
      if (b <= ax.front() || ax.back() <= b) continue;
      const S prev = k > 0 ? bps[k - 1] : S(0);
      const S next = k + 1 < bps.size() ? bps[k + 1] : b + S(1);
      const S gp = step.g_plus_at(b);
      const S gm = step.g_minus_at(b);
      for (const S& frac : {S(1) / S(2), S(1) / S(1024)}) {
        if (!(step.g_plus_at(b - (b - prev) * frac) == gp))
          throw theorem_violation("G+ is not left-continuous at a slice breakpoint");
        if (!(step.g_minus_at(b + (next - b) * frac) == gm))
          throw theorem_violation("G- is not right-continuous at a slice breakpoint");
      }
      if (!within(gp) || !within(gm)) throw theorem_violation("|G+-| exceeds max |g_j|");
      ++v.breakpoints_checked;
    }
    for (const S& a : ax) {
      const auto r = analyze_alpha(slice, env, a);
      if (!within(r.g_plus) || !within(r.g_minus)) throw theorem_violation("|G+-| exceeds max |g_j|");
      ++v.bound_checks;
    }
  }
  return v;
}

}  // namespace tradeoff
