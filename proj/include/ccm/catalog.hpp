#pragma once

// Infinite ccm-magmas on real intervals. Every family is presented as a
// conjugate φ(x⊕y) = core(φ(x), φ(y)) of a one-line core operation on an
// interval U = φ(A); totality of the doubling, negation and monoid maps is
// then an interval inclusion inside U that can be decided exactly.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccm/internal.hpp"
#include "ccm/interval.hpp"

namespace ccm {

inline constexpr double kFloatTolerance = 1e-9;

enum class ArithmeticMode { kExact, kFloat };
std::string_view to_string(ArithmeticMode mode);

/// u = (p·x + q) / (r·x + s).
struct Mobius {
  Rational p, q, r, s;
};
enum class Transcendental { kCube, kLog, kExp };
using Conjugacy = std::variant<Mobius, Transcendental>;

/// α(u + v) + β.
struct AffineCore {
  Rational alpha, beta;
};
/// γ·u·v.
struct MultiplicativeCore {
  Rational gamma;
};
using Core = std::variant<AffineCore, MultiplicativeCore>;

struct ParametricFamily {
  std::string id;
  std::string formula;
  ArithmeticMode mode;
  Interval domain;
  Interval core_domain;  // φ(domain)
  Conjugacy conjugacy;
  Core core;
  std::function<Rational(const Rational&, const Rational&)> exact_op;  // empty in float mode
  std::function<double(double, double)> float_op;
  std::optional<Rational> unit;
  std::optional<Label> expected;
  Interval window;  // range of the default sample grid
};

template <class T>
struct Evaluation {
  T value;
  bool closed;  // value lies in the domain
};

/// Exact mode only. Throws Error(kDomain) for inputs outside the domain or a
/// vanishing denominator.
Evaluation<Rational> evaluate(const ParametricFamily& f, const Rational& x, const Rational& y);
Evaluation<double> evaluate_float(const ParametricFamily& f, double x, double y);

/// The in-domain x with x⊕a = b. Throws Error(kDomain) for a degenerate core
/// (α = 0) and Error(kTheoremViolation) if the solution does not check out.
std::optional<Rational> solve_left(const ParametricFamily& f, const Rational& a,
                                   const Rational& b);
std::optional<double> solve_left_float(const ParametricFamily& f, double a, double b);

/// k/steps grid over the window, intersected with the domain, plus the unit.
std::vector<Rational> default_samples(const ParametricFamily& f, unsigned steps = 16);

struct SampleReport {
  std::string family;
  ArithmeticMode mode = ArithmeticMode::kExact;
  std::size_t samples = 0;
  bool m1 = true, m2 = true, m3 = true;
  std::optional<std::string> m1_witness, m2_witness, m3_witness;
  double worst_residual = 0.0;  // always 0 in exact mode
  std::size_t closure_violations = 0;
  std::size_t sampled_idempotents = 0;

  bool holds() const noexcept { return m1 && m2 && m3 && closure_violations == 0; }
};

/// M1 on all pairs, M2 by injectivity plus solver round trips, M3 on all
/// quadruples. Throws Error(kDomain) if a sample lies outside the domain.
SampleReport sampled_axiom_check(const ParametricFamily& f, const std::vector<Rational>& samples);

/// Idempotents of the core: β/(1−2α) (affine) or 1/γ (multiplicative), pulled
/// back through φ. `all` is set when every element is idempotent.
struct IdempotentSummary {
  bool all = false;
  std::vector<Rational> points;
};
IdempotentSummary analytic_idempotents(const ParametricFamily& f);

struct PropertyEvidence {
  bool analytic = false;  // image inclusion in U
  bool sampled = false;   // solver succeeded on every witness
  std::optional<std::string> witness;  // first witness where the solver failed

  bool holds() const noexcept { return analytic && sampled; }
};

struct FamilyClassification {
  ClassificationLabel result;
  PropertyEvidence expansive, symmetric, monoid;
  std::optional<Label> expected;

  bool matches() const noexcept { return !expected || *expected == result.label; }
};

/// Throws Error(kPrecondition) without a unit, Error(kNotIdempotent) if the
/// unit is not idempotent, Error(kTheoremViolation) if the analytic verdict is
/// contradicted by a witness.
FamilyClassification classify_family(const ParametricFamily& f,
                                     const std::vector<Rational>& witnesses);

/// θ(x,y) with θ⊕e = x⊕y; absent when it leaves the domain.
std::optional<Rational> family_star(const ParametricFamily& f, const Rational& x,
                                    const Rational& y);
std::optional<double> family_star_float(const ParametricFamily& f, double x, double y);

/// Associativity of θ on all sample triples where θ is defined.
bool star_associativity_check(const ParametricFamily& f, const std::vector<Rational>& samples);

/// For 2ab/(a+b) on ]0,1] with e = 1: θ(x,y) = xy/(x+y−xy) on all sample pairs.
bool monoid_formula_check(const std::vector<Rational>& samples);

/// Inverse of a in the harmonic monoid, by the closed form x(2a−1) = a and by
/// solving x⊕a = 1. Throws Error(kTheoremViolation) if the routes disagree.
std::optional<Rational> harmonic_monoid_inverse(const Rational& a);

/// 1/2 has no inverse and the harmonic family is not a group at e = 1.
bool half_has_no_inverse_check();

/// Fixed catalog in a stable order.
const std::vector<ParametricFamily>& catalog();

/// α(x+y)+β over ℚ ("affine-Q") or ℤ ("affine-Z").
ParametricFamily affine_family(bool integral, const Rational& alpha, const Rational& beta);

/// Catalog id or "affine-Q:α,β" / "affine-Z:α,β". Throws Error(kUnknownFamily).
ParametricFamily find_family(std::string_view id);

}  // namespace ccm
