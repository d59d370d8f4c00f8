#include "ccm/interval.hpp"

#include <cmath>

#include "ccm/error.hpp"

namespace ccm {

Rational make_rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::kDomain, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto valid = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos &&
                     s.find('/') == s.rfind('/') && s.back() != '/' && s.front() != '/';
  Rational q;
  if (!valid || q.set_str(s, 10) != 0)
    throw Error(ErrorKind::kParse, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Extended Extended::infinity(int sign) {
  Extended e;
  e.sign_ = sign < 0 ? -1 : 1;
  return e;
}

const Rational& Extended::value() const {
  if (!finite()) throw Error(ErrorKind::kDomain, "value of an infinite endpoint");
  return value_;
}

Extended Extended::operator+(const Extended& other) const {
  if (finite() && other.finite()) return Extended(value_ + other.value_);
  if (!finite() && !other.finite() && sign_ != other.sign_)
    throw Error(ErrorKind::kDomain, "inf - inf");
  return infinity(finite() ? other.sign_ : sign_);
}

Extended Extended::operator*(const Rational& factor) const {
  if (finite()) return Extended(value_ * factor);
  if (factor == 0) throw Error(ErrorKind::kDomain, "0 * inf");
  return infinity(factor > 0 ? sign_ : -sign_);
}

bool operator==(const Extended& x, const Extended& y) {
  if (x.finite() != y.finite()) return false;
  return x.finite() ? x.value_ == y.value_ : x.sign_ == y.sign_;
}

bool operator<(const Extended& x, const Extended& y) {
  if (x.finite() && y.finite()) return x.value_ < y.value_;
  if (x.finite()) return y.sign_ > 0;
  if (y.finite()) return x.sign_ < 0;
  return x.sign_ < y.sign_;
}

std::string Extended::to_string() const {
  if (finite()) return ccm::to_string(value_);
  return sign_ > 0 ? "inf" : "-inf";
}

Interval::Interval(Bound lower, Bound upper, bool integral)
    : lower_(std::move(lower)), upper_(std::move(upper)), integral_(integral) {
  if (!lower_.value.finite()) lower_.closed = false;
  if (!upper_.value.finite()) upper_.closed = false;
  if (upper_.value < lower_.value ||
      (upper_.value == lower_.value && !(lower_.closed && upper_.closed)))
    throw Error(ErrorKind::kDomain, "empty interval");
}

Interval Interval::closed(Rational lo, Rational hi) {
  return Interval({Extended(std::move(lo)), true}, {Extended(std::move(hi)), true});
}

Interval Interval::reals() {
  return Interval({Extended::infinity(-1), false}, {Extended::infinity(1), false});
}

Interval Interval::integers() {
  return Interval({Extended::infinity(-1), false}, {Extended::infinity(1), false}, true);
}

bool Interval::contains(const Rational& q) const {
  if (integral_ && !is_integer(q)) return false;
  const Extended x(q);
  const bool above = lower_.closed ? lower_.value <= x : lower_.value < x;
  const bool below = upper_.closed ? x <= upper_.value : x < upper_.value;
  return above && below;
}

bool Interval::contains(double x) const {
  if (!std::isfinite(x)) return false;
  if (integral_ && std::floor(x) != x) return false;
  const auto as_double = [](const Extended& e) {
    return e.finite() ? e.value().get_d()
                      : e.infinity_sign() * std::numeric_limits<double>::infinity();
  };
  const auto lo = as_double(lower_.value);
  const auto hi = as_double(upper_.value);
  const bool above = lower_.closed ? lo <= x : lo < x;
  const bool below = upper_.closed ? x <= hi : x < hi;
  return above && below;
}

bool Interval::contains(const Interval& other) const {
  if (integral_ && !other.integral_) return false;
  const bool lower_ok =
      lower_.value < other.lower_.value ||
      (lower_.value == other.lower_.value && (lower_.closed || !other.lower_.closed));
  const bool upper_ok =
      other.upper_.value < upper_.value ||
      (upper_.value == other.upper_.value && (upper_.closed || !other.upper_.closed));
  return lower_ok && upper_ok;
}

Interval Interval::affine_image(const Rational& slope, const Rational& intercept) const {
  if (slope == 0) throw Error(ErrorKind::kDomain, "affine image with zero slope");
  Bound lo{lower_.value * slope + Extended(intercept), lower_.closed};
  Bound hi{upper_.value * slope + Extended(intercept), upper_.closed};
  if (slope < 0) std::swap(lo, hi);
  return Interval(lo, hi, integral_ && is_integer(slope) && is_integer(intercept));
}

Interval Interval::minkowski_sum(const Interval& other) const {
  return Interval({lower_.value + other.lower_.value, lower_.closed && other.lower_.closed},
                  {upper_.value + other.upper_.value, upper_.closed && other.upper_.closed},
                  integral_ && other.integral_);
}

Interval Interval::product(const Interval& other) const {
  const Extended zero(Rational(0));
  if (lower_.value < zero || other.lower_.value < zero)
    throw Error(ErrorKind::kDomain, "interval product needs non-negative intervals");
  const auto times = [](const Extended& x, const Extended& y) {
    if (!x.finite() || !y.finite()) return Extended::infinity(1);
    return Extended(x.value() * y.value());
  };
  return Interval({times(lower_.value, other.lower_.value), lower_.closed && other.lower_.closed},
                  {times(upper_.value, other.upper_.value), upper_.closed && other.upper_.closed},
                  integral_ && other.integral_);
}

Interval Interval::reciprocal_image(const Rational& k) const {
  const Extended zero(Rational(0));
  if (k <= 0 || lower_.value < zero)
    throw Error(ErrorKind::kDomain, "reciprocal image needs k > 0 and a non-negative interval");
  const auto divide = [&k](const Extended& x) {
    if (!x.finite()) return Extended(Rational(0));
    if (x.value() == 0) return Extended::infinity(1);
    return Extended(Rational(k / x.value()));
  };
  return Interval({divide(upper_.value), upper_.closed && upper_.value.finite()},
                  {divide(lower_.value), lower_.closed && !(lower_.value == zero)});
}

std::string Interval::to_string() const {
  std::string s = lower_.closed ? "[" : "]";
  s += lower_.value.to_string() + "," + upper_.value.to_string();
  s += upper_.closed ? "]" : "[";
  return integral_ ? "Z ∩ " + s : s;
}

}  // namespace ccm
