#pragma once
#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace tradeoff {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw input_error("rational with zero denominator");
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q", and decimal forms such as "-1.25" or "3e-2".
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return q_; }

  int sign() const noexcept { return sgn(q_); }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// Canonical "p/q" (or "p" for integers).
  std::string str() const { return q_.get_str(); }

  /// Rounded to `digits` fractional decimal digits (half away from zero).
  std::string decimal(int digits) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw input_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.q_))); }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw input_error("cannot parse rational from '" + std::string(text) + "'");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '+'; }),
          s.end());
  if (s.empty()) return fail();
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) return fail();
      return Rational(mpq_class(num, den));
    }
    // decimal: [-]digits[.digits][e[-]digits]
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      const std::string exp_text = s.substr(e + 1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) return fail();
    }
    bool negative = false;
    if (!mantissa.empty() && mantissa.front() == '-') {
      negative = true;
      mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
      if (c == '.') {
        if (seen_point) return fail();
        seen_point = true;
      } else if (c >= '0' && c <= '9') {
        digits.push_back(c);
        if (seen_point) ++frac_digits;
      } else {
        return fail();
      }
    }
    if (digits.empty()) return fail();
    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long shift = exponent - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) return Rational(mpq_class(num * pow10, 1));
    return Rational(mpq_class(num, pow10));
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

inline std::string Rational::decimal(int digits) const {
  if (digits < 0) return str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = ::abs(q_) * scale;
  // round half away from zero
  mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool zero = rounded == 0;
  return (sign() < 0 && !zero ? "-" : "") + body;
}

inline constexpr double kDefaultTolerance = 1e-9;

/// Binary64 value with a comparison tolerance. Equality means
/// |a-b| <= tol * max(1, |a|, |b|); the tolerance travels through arithmetic
/// as the max of the operands' tolerances.
class Approx {
 public:
  Approx() = default;

  template <class T>
    requires std::is_arithmetic_v<T>
  Approx(T value, double tol = kDefaultTolerance)  // NOLINT(implicit)
      : value_(static_cast<double>(value)), tol_(tol) {
    if (!(tol > 0)) throw input_error("approx tolerance must be positive");
  }

  double value() const noexcept { return value_; }
  double tolerance() const noexcept { return tol_; }
  int sign() const noexcept { return *this == Approx(0.0, tol_) ? 0 : (value_ < 0 ? -1 : 1); }

  Approx& operator+=(const Approx& o) { value_ += o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator-=(const Approx& o) { value_ -= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator*=(const Approx& o) { value_ *= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  Approx& operator/=(const Approx& o) {
    if (o.value_ == 0.0) throw input_error("division by zero");
    value_ /= o.value_;
    tol_ = std::max(tol_, o.tol_);
    return *this;
  }

  friend Approx operator+(Approx a, const Approx& b) { return a += b; }
  friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
  friend Approx operator*(Approx a, const Approx& b) { return a *= b; }
  friend Approx operator/(Approx a, const Approx& b) { return a /= b; }
  friend Approx operator-(const Approx& a) { return Approx(-a.value_, a.tol_); }

  friend bool operator==(const Approx& a, const Approx& b) {
    const double tol = std::max(a.tol_, b.tol_);
    const double scale = std::max({1.0, std::fabs(a.value_), std::fabs(b.value_)});
    return std::fabs(a.value_ - b.value_) <= tol * scale;
  }
  friend bool operator<(const Approx& a, const Approx& b) { return !(a == b) && a.value_ < b.value_; }
  friend bool operator>(const Approx& a, const Approx& b) { return b < a; }
  friend bool operator<=(const Approx& a, const Approx& b) { return !(b < a); }
  friend bool operator>=(const Approx& a, const Approx& b) { return !(a < b); }

  friend Approx abs(const Approx& a) { return Approx(std::fabs(a.value_), a.tol_); }

 private:
  double value_ = 0.0;
  double tol_ = kDefaultTolerance;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";
  static Rational from_rational(const Rational& q, double /*tol*/) { return q; }
  static double to_double(const Rational& x) { return x.to_double(); }
  static double tolerance(const Rational&) { return 0.0; }
  /// Strict weak order used for sorting.
  static bool order_less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct scalar_traits<Approx> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "approx";
  static Approx from_rational(const Rational& q, double tol) { return Approx(q.to_double(), tol); }
  static double to_double(const Approx& x) { return x.value(); }
  static double tolerance(const Approx& x) { return x.tolerance(); }
  static bool order_less(const Approx& a, const Approx& b) { return a.value() < b.value(); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a <= b } -> std::convertible_to<bool>;
  { abs(a) } -> std::convertible_to<S>;
  { scalar_traits<S>::exact } -> std::convertible_to<bool>;
};

template <Scalar S>
S max_of(const S& a, const S& b) {
  return a < b ? b : a;
}

template <Scalar S>
S min_of(const S& a, const S& b) {
  return b < a ? b : a;
}

}  // namespace tradeoff
