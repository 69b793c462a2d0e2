#pragma once
// Test-only reference computations. These work on raw mpq_class values and
// plain loops so they share no code path with the library routines they check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <tradeoff/table.hpp>

namespace oracle {

struct RawLine {
  mpq_class f;
  std::vector<mpq_class> g;
};

inline std::vector<RawLine> raw(const tradeoff::ObjectiveTable<tradeoff::Rational>& t) {
  std::vector<RawLine> out;
  for (const auto& c : t.candidates()) {
    if (c.f_infinite) continue;
    RawLine l{c.f.mpq(), {}};
    for (const auto& x : c.g) l.g.push_back(x.mpq());
    out.push_back(std::move(l));
  }
  return out;
}

/// f + sum alpha_j g_j, term by term.
inline mpq_class naive_h(const RawLine& l, const std::vector<mpq_class>& alpha) {
  mpq_class acc = l.f;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    mpq_class term = alpha[j];
    term *= l.g[j];
    acc += term;
  }
  return acc;
}

inline mpq_class brute_min(const std::vector<RawLine>& lines, const std::vector<mpq_class>& alpha) {
  mpq_class best = naive_h(lines.front(), alpha);
  for (const auto& l : lines) best = std::min(best, mpq_class(naive_h(l, alpha)));
  return best;
}

inline mpq_class brute_min(const std::vector<RawLine>& lines, const mpq_class& alpha) {
  return brute_min(lines, std::vector<mpq_class>{alpha});
}

/// Spread max G - min G over the exact minimizers at alpha (m = 1).
inline mpq_class brute_spread(const std::vector<RawLine>& lines, const mpq_class& alpha) {
  const mpq_class best = brute_min(lines, alpha);
  bool first = true;
  mpq_class lo, hi;
  for (const auto& l : lines) {
    if (naive_h(l, {alpha}) != best) continue;
    if (first || l.g[0] < lo) lo = l.g[0];
    if (first || l.g[0] > hi) hi = l.g[0];
    first = false;
  }
  return hi - lo;
}

/// Exceptional alpha by brute force: every pairwise crossing in [0, inf)
/// plus alpha = 0, kept when the minimizers disagree on G.
inline std::vector<mpq_class> brute_exceptional(const std::vector<RawLine>& lines) {
  std::set<mpq_class> candidates{mpq_class(0)};
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].g[0] == lines[b].g[0]) continue;
      mpq_class x = (lines[b].f - lines[a].f) / (lines[a].g[0] - lines[b].g[0]);
      if (x >= 0) candidates.insert(x);
    }
  std::vector<mpq_class> out;
  for (const auto& x : candidates)
    if (brute_spread(lines, x) > 0) out.push_back(x);
  return out;
}

/// Random exact table with small-denominator values, so ties, duplicate
/// slopes and concurrent lines actually occur.
inline tradeoff::ObjectiveTable<tradeoff::Rational> random_table(std::mt19937_64& rng, std::size_t n,
                                                                 std::size_t m = 1) {
  using tradeoff::Rational;
  auto small = [&](long range, long max_den) {
    const long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_den));
    const long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * range * den + 1)) - range * den;
    return Rational(num, den);
  };
  std::vector<tradeoff::Candidate<Rational>> cands;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng() % 10 == 0) {  // exact duplicate
      auto dup = cands[rng() % cands.size()];
      dup.id = "c" + std::to_string(i);
      cands.push_back(std::move(dup));
      continue;
    }
    tradeoff::Candidate<Rational> c;
    c.id = "c" + std::to_string(i);
    c.f = small(20, 4);
    for (std::size_t j = 0; j < m; ++j) c.g.push_back(small(10, 3));
    cands.push_back(std::move(c));
  }
  return tradeoff::ObjectiveTable<Rational>(m, std::move(cands));
}

/// Random rational in [0, hi) with denominator up to `max_den`.
inline tradeoff::Rational random_alpha(std::mt19937_64& rng, long hi, long max_den) {
  const long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_den));
  return tradeoff::Rational(static_cast<long>(rng() % static_cast<unsigned long>(hi * den)), den);
}

}  // namespace oracle
