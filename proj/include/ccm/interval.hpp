#pragma once

// Exact rational intervals with open/closed and infinite endpoints, and the
// handful of monotone images the catalog needs to decide totality of the
// doubling/negation/monoid maps analytically.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ccm {

using Rational = mpq_class;

/// n/d in canonical form. Throws Error(kDomain) when d = 0.
Rational make_rational(long n, long d = 1);
/// Parses "n", "-n" or "n/d". Throws Error(kParse).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

/// A rational or ±∞.
class Extended {
 public:
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  static Extended infinity(int sign);

  bool finite() const noexcept { return sign_ == 0; }
  int infinity_sign() const noexcept { return sign_; }
  const Rational& value() const;

  Extended operator+(const Extended& other) const;
  Extended operator*(const Rational& factor) const;

  friend bool operator==(const Extended& x, const Extended& y);
  friend bool operator<(const Extended& x, const Extended& y);
  friend bool operator<=(const Extended& x, const Extended& y) { return !(y < x); }

  std::string to_string() const;

 private:
  Extended() = default;
  Rational value_{0};
  int sign_ = 0;
};

struct Bound {
  Extended value;
  bool closed;  // ignored (always open) for infinite values
};

class Interval {
 public:
  /// `integral` restricts the interval to its integer points.
  Interval(Bound lower, Bound upper, bool integral = false);

  static Interval closed(Rational lo, Rational hi);
  static Interval reals();
  static Interval integers();

  const Bound& lower() const noexcept { return lower_; }
  const Bound& upper() const noexcept { return upper_; }
  bool integral() const noexcept { return integral_; }

  bool contains(const Rational& q) const;
  bool contains(double x) const;
  /// Subset test. An integral interval only contains integral intervals.
  bool contains(const Interval& other) const;

  /// {slope·x + intercept}. Integrality is kept only for integer slope and
  /// intercept.
  Interval affine_image(const Rational& slope, const Rational& intercept) const;
  /// {x + y : x ∈ this, y ∈ other}.
  Interval minkowski_sum(const Interval& other) const;
  /// {x·y}; both intervals must be non-negative.
  Interval product(const Interval& other) const;
  /// {k / x} for k > 0 on a positive interval.
  Interval reciprocal_image(const Rational& k) const;

  /// "]0,1]", "[0,inf[", "Z ∩ [0,inf[", ...
  std::string to_string() const;

 private:
  Bound lower_;
  Bound upper_;
  bool integral_;
};

}  // namespace ccm
