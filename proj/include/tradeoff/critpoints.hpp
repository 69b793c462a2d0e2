#pragma once
#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace tradeoff {

/// F and G on a compact window [lo, hi] that stands in for the compact set K.
struct PolynomialPair {
  Polynomial f;
  Polynomial g;
  Rational lo;
  Rational hi;

  void validate() const {
    if (f.degree() < 2) throw input_error("F must have degree >= 2");
    if (!(lo < hi)) throw input_error("window needs lo < hi");
  }

  Polynomial h(const Rational& alpha) const { return f + alpha * g; }
};

/// 2^-40, the default isolation width.
inline Rational default_root_width() { return Rational(mpq_class(1, mpz_class(1) << 40)); }

/// 2^-30, the default equal-H grouping tolerance.
inline Rational default_equal_h_tolerance() { return Rational(mpq_class(1, mpz_class(1) << 30)); }

namespace detail {

inline void isolate(const Polynomial& q, const SturmSequence& sturm, Rational a, Rational b, int count,
                    const Rational& width, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (q(b).sign() == 0) {
      out.push_back({b, b});
      return;
    }
    while (width < b - a) {
      const Rational m = (a + b) / Rational(2);
      if (q(m).sign() == 0) {
        out.push_back({m, m});
        return;
      }
      if (sturm.count(a, m) == 1) b = m;
      else a = m;
    }
    out.push_back({a, b});
    return;
  }
  const Rational m = (a + b) / Rational(2);
  const int left = sturm.count(a, m);
  isolate(q, sturm, a, m, left, width, out);
  isolate(q, sturm, m, b, count - left, width, out);
}

}  // namespace detail

/// Real roots of F' + alpha G' in the window, each isolated in an interval
/// of width <= `width` (a point interval when the root was hit exactly).
/// Isolation runs on the squarefree part with Sturm counts.
inline std::vector<Interval> critical_points(const PolynomialPair& pair, const Rational& alpha,
                                             const Rational& width = default_root_width()) {
  pair.validate();
  const Polynomial d = pair.h(alpha).derivative();
  if (d.is_zero()) throw degenerate_error("F' + alpha G' vanishes identically: every point is critical");
  std::vector<Interval> roots;
  if (d.degree() == 0) return roots;
  const Polynomial q = d.squarefree();
  const SturmSequence sturm(q);
  if (q(pair.lo).sign() == 0) roots.push_back({pair.lo, pair.lo});
  detail::isolate(q, sturm, pair.lo, pair.hi, sturm.count(pair.lo, pair.hi), width, roots);
  return roots;
}

struct CriticalPoint {
  Interval root;
  Interval h;  // enclosure of H_alpha over the root interval
  Interval g;  // enclosure of G
};

/// Critical points whose H-enclosures chain within the tolerance. A group is
/// a certified violation when two members have disjoint G-enclosures;
/// `g_gap` is then a lower bound on the true G spread.
struct CriticalGroup {
  std::vector<std::size_t> members;
  bool certified = false;
  Rational g_gap;
};

struct CriticalReport {
  Rational alpha;
  std::vector<CriticalPoint> points;
  std::vector<CriticalGroup> groups;  // only groups with >= 2 members

  bool flagged() const {
    return std::any_of(groups.begin(), groups.end(), [](const CriticalGroup& g) { return g.certified; });
  }
  /// Largest certified gap, 0 if none.
  Rational max_gap() const {
    Rational best = 0;
    for (const auto& g : groups)
      if (g.certified && best < g.g_gap) best = g.g_gap;
    return best;
  }
};

inline CriticalReport analyze_critical(const PolynomialPair& pair, const Rational& alpha,
                                       const Rational& equal_h_tol = default_equal_h_tolerance(),
                                       const Rational& width = default_root_width()) {
  if (!(Rational(0) < equal_h_tol)) throw input_error("equal-H tolerance must be positive");
  if (alpha < Rational(0)) throw input_error("alpha must be non-negative");
  CriticalReport rep{alpha, {}, {}};
  const Polynomial h = pair.h(alpha);
  for (const auto& r : critical_points(pair, alpha, width)) rep.points.push_back({r, h(r), pair.g(r)});

  std::vector<std::size_t> order(rep.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rep.points[a].h.lo < rep.points[b].h.lo; });

  auto close_group = [&](std::vector<std::size_t> members) {
    if (members.size() < 2) return;
    std::sort(members.begin(), members.end());
    CriticalGroup grp{std::move(members), false, 0};
    Rational max_lo = rep.points[grp.members.front()].g.lo;
    Rational min_hi = rep.points[grp.members.front()].g.hi;
    for (std::size_t i : grp.members) {
      if (max_lo < rep.points[i].g.lo) max_lo = rep.points[i].g.lo;
      if (rep.points[i].g.hi < min_hi) min_hi = rep.points[i].g.hi;
    }
    if (min_hi < max_lo) {
      grp.certified = true;
      grp.g_gap = max_lo - min_hi;
    }
    rep.groups.push_back(std::move(grp));
  };

  std::vector<std::size_t> current;
  Rational reach;
  for (std::size_t i : order) {
    const auto& p = rep.points[i];
    if (!current.empty() && reach + equal_h_tol < p.h.lo) {
      close_group(std::move(current));
      current.clear();
    }
    if (current.empty() || reach < p.h.hi) reach = p.h.hi;
    current.push_back(i);
  }
  close_group(std::move(current));
  return rep;
}

/// analyze_critical over a list of alpha; the flagged alphas form the
/// empirical exceptional set.
inline std::vector<CriticalReport> invariance_scan(const PolynomialPair& pair, std::span<const Rational> alphas,
                                                   const Rational& equal_h_tol = default_equal_h_tolerance()) {
  std::vector<CriticalReport> out;
  out.reserve(alphas.size());
  for (const auto& a : alphas) out.push_back(analyze_critical(pair, a, equal_h_tol));
  return out;
}

}  // namespace tradeoff
