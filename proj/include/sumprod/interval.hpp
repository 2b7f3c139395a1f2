#pragma once

#include "sumprod/core.hpp"

#include <mpfr.h>

#include <string>

namespace sumprod {

/// Closed real interval [lo, hi] with 200-bit MPFR endpoints and outward
/// rounding on every operation, so the true value is always enclosed.
class Interval {
 public:
  static constexpr mpfr_prec_t precision = 200;

  Interval();
  explicit Interval(long value);
  explicit Interval(const BigInt& value);
  explicit Interval(const Rat& value);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws DomainError when b contains 0.
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval log(const Interval& x);   // requires x > 0
  friend Interval exp(const Interval& x);
  friend Interval sqrt(const Interval& x);  // requires x >= 0
  /// base^exponent for base > 0, as exp(exponent * log(base)).
  friend Interval pow(const Interval& base, const Interval& exponent);
  /// Real n-th root of x >= 0.
  friend Interval root(const Interval& x, unsigned long n);

  /// Every point of this interval is below every point of `other`.
  bool certainly_less(const Interval& other) const;
  bool certainly_less_equal(const Interval& other) const;

  double lower() const;
  double upper() const;
  /// Midpoint to `digits` significant digits.
  std::string approx(int digits = 30) const;
  /// Point interval at an upper bound of |x| over the interval.
  Interval magnitude() const;
  bool contains_zero() const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace sumprod
