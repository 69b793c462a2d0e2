#pragma once
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace tradeoff {

/// Closed interval with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool is_point() const { return lo == hi; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r{p[0], p[0]};
    for (const auto& x : p) {
      if (x < r.lo) r.lo = x;
      if (r.hi < x) r.hi = x;
    }
    return r;
  }
};

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial parse(const std::string& csv);

  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Enclosure of the range over an interval (Horner form).
  Interval operator()(const Interval& x) const {
    Interval acc{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Interval{*it, *it};
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> r = p.c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw input_error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    std::vector<Rational> quot(rem.size() >= divisor.c_.size() ? rem.size() - divisor.c_.size() + 1 : 0, Rational(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
      const Rational factor = rem[static_cast<std::size_t>(k)] / divisor.leading();
      if (factor.sign() == 0) continue;
      quot[static_cast<std::size_t>(k - dd)] = factor;
      for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= factor * divisor.c_[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * *this;
  }

  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// p / gcd(p, p'): same real roots, all simple.
  Polynomial squarefree() const {
    if (degree() < 1) return *this;
    const auto g = gcd(*this, derivative());
    return divmod(g).first.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Polynomial Polynomial::parse(const std::string& csv) {
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) coeffs.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

/// Sturm sequence p, p', -rem(p, p'), ... for root counting.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw input_error("Sturm sequence of the zero polynomial");
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
      auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
      seq_.push_back(Rational(-1) * r);
    }
    seq_.pop_back();
  }

  int sign_variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
      const int s = p(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return sign_variations(a) - sign_variations(b); }

 private:
  std::vector<Polynomial> seq_;
};

}  // namespace tradeoff
