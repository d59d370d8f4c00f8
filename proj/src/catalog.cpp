#include "ccm/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ccm/error.hpp"

namespace ccm {

namespace {

using ExactOp = std::function<Rational(const Rational&, const Rational&)>;
using FloatOp = std::function<double(double, double)>;

Rational quotient(const Rational& n, const Rational& d) {
  if (d == 0) throw Error(ErrorKind::kDomain, "division by zero");
  return Rational(n / d);
}

// "[0,1]", "]0,inf[", "Z[0,inf[" and so on.
Interval interval(std::string_view text) {
  bool integral = false;
  if (!text.empty() && text.front() == 'Z') {
    integral = true;
    text.remove_prefix(1);
  }
  const auto comma = text.find(',');
  const auto endpoint = [](std::string_view s) {
    if (s == "inf") return Extended::infinity(1);
    if (s == "-inf") return Extended::infinity(-1);
    return Extended(parse_rational(s));
  };
  return Interval({endpoint(text.substr(1, comma - 1)), text.front() == '['},
                  {endpoint(text.substr(comma + 1, text.size() - comma - 2)), text.back() == ']'},
                  integral);
}

const Mobius kIdentity{1, 0, 0, 1};
const Mobius kReciprocal{0, 1, 1, 0};

Rational forward(const Conjugacy& c, const Rational& x) {
  if (const auto* m = std::get_if<Mobius>(&c)) return quotient(m->p * x + m->q, m->r * x + m->s);
  if (std::get<Transcendental>(c) == Transcendental::kCube) return Rational(x * x * x);
  throw Error(ErrorKind::kPrecondition, "conjugacy has no exact form");
}

Rational backward(const Conjugacy& c, const Rational& u) {
  if (const auto* m = std::get_if<Mobius>(&c)) return quotient(m->s * u - m->q, m->p - m->r * u);
  if (std::get<Transcendental>(c) == Transcendental::kCube && u == 0) return Rational(0);
  throw Error(ErrorKind::kPrecondition, "conjugacy has no exact inverse");
}

double forward(const Conjugacy& c, double x) {
  if (const auto* m = std::get_if<Mobius>(&c))
    return (m->p.get_d() * x + m->q.get_d()) / (m->r.get_d() * x + m->s.get_d());
  switch (std::get<Transcendental>(c)) {
    case Transcendental::kCube: return x * x * x;
    case Transcendental::kLog: return std::log(x);
    case Transcendental::kExp: return std::exp(x);
  }
  return 0.0;
}

double backward(const Conjugacy& c, double u) {
  if (const auto* m = std::get_if<Mobius>(&c))
    return (m->s.get_d() * u - m->q.get_d()) / (m->p.get_d() - m->r.get_d() * u);
  switch (std::get<Transcendental>(c)) {
    case Transcendental::kCube: return std::cbrt(u);
    case Transcendental::kLog: return std::exp(u);
    case Transcendental::kExp: return std::log(u);
  }
  return 0.0;
}

// x with core(x, a) = b.
Rational core_solve(const Core& core, const Rational& a, const Rational& b) {
  if (const auto* affine = std::get_if<AffineCore>(&core)) {
    if (affine->alpha == 0) throw Error(ErrorKind::kDomain, "degenerate core: alpha = 0");
    return Rational((b - affine->beta) / affine->alpha - a);
  }
  const auto& gamma = std::get<MultiplicativeCore>(core).gamma;
  return quotient(b, gamma * a);
}

double core_solve(const Core& core, double a, double b) {
  if (const auto* affine = std::get_if<AffineCore>(&core)) {
    if (affine->alpha == 0) throw Error(ErrorKind::kDomain, "degenerate core: alpha = 0");
    return (b - affine->beta.get_d()) / affine->alpha.get_d() - a;
  }
  return b / (std::get<MultiplicativeCore>(core).gamma.get_d() * a);
}

double core_apply(const Core& core, double u, double v) {
  if (const auto* affine = std::get_if<AffineCore>(&core))
    return affine->alpha.get_d() * (u + v) + affine->beta.get_d();
  return std::get<MultiplicativeCore>(core).gamma.get_d() * u * v;
}

// Forward residual, or the relative backward error in U where the forward one
// is ill-conditioned (cube roots near 0).
bool float_solution_ok(const ParametricFamily& f, double x, double a, double b) {
  if (std::abs(f.float_op(x, a) - b) <= kFloatTolerance) return true;
  const auto ub = forward(f.conjugacy, b);
  const auto image = core_apply(f.core, forward(f.conjugacy, x), forward(f.conjugacy, a));
  return std::abs(image - ub) <= kFloatTolerance * std::max(1.0, std::abs(ub));
}

void require_in_domain(const ParametricFamily& f, const auto& x) {
  if (!f.domain.contains(x)) {
    std::ostringstream out;
    out << "argument " << x << " outside the domain " << f.domain.to_string() << " of " << f.id;
    throw Error(ErrorKind::kDomain, out.str());
  }
}

// Exact and float arithmetic behind one interface for the sampling loops.
template <class T>
struct Arith;

template <>
struct Arith<Rational> {
  static Rational op(const ParametricFamily& f, const Rational& x, const Rational& y) {
    return f.exact_op(x, y);
  }
  static std::optional<Rational> solve(const ParametricFamily& f, const Rational& a,
                                       const Rational& b) {
    return solve_left(f, a, b);
  }
  static std::optional<Rational> star(const ParametricFamily& f, const Rational& x,
                                      const Rational& y) {
    return family_star(f, x, y);
  }
  static double residual(const Rational& x, const Rational& y) {
    return x == y ? 0.0 : std::numeric_limits<double>::infinity();
  }
  static bool same(const Rational& x, const Rational& y) { return x == y; }
  static bool agree(const ParametricFamily&, const Rational& x, const Rational& y) {
    return x == y;
  }
  static bool solves(const ParametricFamily& f, const Rational& x, const Rational& a,
                     const Rational& b) {
    return f.exact_op(x, a) == b;
  }
  static Rational convert(const Rational& q) { return q; }
};

template <>
struct Arith<double> {
  static double op(const ParametricFamily& f, double x, double y) { return f.float_op(x, y); }
  static std::optional<double> solve(const ParametricFamily& f, double a, double b) {
    return solve_left_float(f, a, b);
  }
  static std::optional<double> star(const ParametricFamily& f, double x, double y) {
    return family_star_float(f, x, y);
  }
  static double residual(double x, double y) { return std::abs(x - y); }
  static bool solves(const ParametricFamily& f, double x, double a, double b) {
    return float_solution_ok(f, x, a, b);
  }
  static bool same(double x, double y) { return x == y; }
  // Equal up to tolerance, measured in U when that is better conditioned.
  static bool agree(const ParametricFamily& f, double x, double y) {
    if (std::abs(x - y) <= kFloatTolerance) return true;
    const auto ux = forward(f.conjugacy, x);
    return std::abs(ux - forward(f.conjugacy, y)) <= kFloatTolerance * std::max(1.0, std::abs(ux));
  }
  static double convert(const Rational& q) { return q.get_d(); }
};

template <class T>
bool close(const T& x, const T& y) {
  return Arith<T>::residual(x, y) <= kFloatTolerance;
}

template <class... Ts>
std::string tuple_text(const Ts&... values) {
  std::ostringstream out;
  out << '(';
  const char* sep = "";
  ((out << sep << values, sep = ","), ...);
  out << ')';
  return out.str();
}

template <class T>
std::vector<T> converted(const std::vector<Rational>& samples) {
  std::vector<T> out;
  out.reserve(samples.size());
  for (const auto& q : samples) out.push_back(Arith<T>::convert(q));
  return out;
}

template <class T>
void check_samples(const ParametricFamily& f, const std::vector<T>& s, SampleReport& report) {
  const auto n = s.size();
  std::vector<T> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = Arith<T>::op(f, s[i], s[j]);

  for (std::size_t i = 0; i < n; ++i) {
    if (close(table[i * n + i], s[i])) ++report.sampled_idempotents;
    for (std::size_t j = i; j < n; ++j)
      if (!f.domain.contains(table[i * n + j])) ++report.closure_violations;
  }

  const auto record = [&report](double r) {
    if (std::isfinite(r)) report.worst_residual = std::max(report.worst_residual, r);
  };

  for (std::size_t i = 0; i < n && report.m1; ++i)
    for (std::size_t j = i + 1; j < n && report.m1; ++j) {
      const auto r = Arith<T>::residual(table[i * n + j], table[j * n + i]);
      record(r);
      if (r > kFloatTolerance) {
        report.m1 = false;
        report.m1_witness = tuple_text(s[i], s[j]);
      }
    }

  // Injectivity of every translation, then the solver inverts it.
  for (std::size_t c = 0; c < n && report.m2; ++c)
    for (std::size_t a = 0; a < n && report.m2; ++a)
      for (std::size_t b = a + 1; b < n && report.m2; ++b)
        if (Arith<T>::same(table[a * n + c], table[b * n + c])) {
          report.m2 = false;
          report.m2_witness = tuple_text(s[a], s[b], s[c]);
        }
  for (std::size_t a = 0; a < n && report.m2; ++a)
    for (std::size_t c = 0; c < n && report.m2; ++c) {
      const auto& b = table[a * n + c];
      if (!f.domain.contains(b)) continue;
      std::optional<T> x;
      try {
        x = Arith<T>::solve(f, s[c], b);
      } catch (const Error&) {
        x.reset();
      }
      if (!x || !Arith<T>::solves(f, *x, s[c], b) ||
          (std::is_same_v<T, Rational> && !Arith<T>::same(*x, s[a]))) {
        report.m2 = false;
        report.m2_witness = tuple_text(s[a], s[c]);
      }
    }

  std::vector<std::optional<std::string>> witness(n);
  std::vector<double> worst(n, 0.0);
  const auto rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < n && !witness[a]; ++b)
      for (std::size_t c = 0; c < n && !witness[a]; ++c)
        for (std::size_t d = 0; d < n && !witness[a]; ++d) {
          const auto lhs = Arith<T>::op(f, table[a * n + b], table[c * n + d]);
          const auto rhs = Arith<T>::op(f, table[a * n + c], table[b * n + d]);
          const auto r = Arith<T>::residual(lhs, rhs);
          if (std::isfinite(r)) worst[a] = std::max(worst[a], r);
          if (r > kFloatTolerance) witness[a] = tuple_text(s[a], s[b], s[c], s[d]);
        }
  }
  for (std::size_t a = 0; a < n; ++a) {
    record(worst[a]);
    if (witness[a] && report.m3) {
      report.m3 = false;
      report.m3_witness = witness[a];
    }
  }
}

struct AnalyticImages {
  Interval doubling, negation, monoid;
};

// Images in U of a ↦ 2_e(a), a ↦ −_e(a), (x,y) ↦ θ(x,y) for the unit e_u = φ(e).
AnalyticImages analytic_images(const ParametricFamily& f, const Rational& eu) {
  const auto& u = f.core_domain;
  if (const auto* affine = std::get_if<AffineCore>(&f.core)) {
    if (affine->alpha == 0) throw Error(ErrorKind::kDomain, "degenerate core: alpha = 0");
    const Rational inv = 1 / affine->alpha;
    return {u.affine_image(inv, Rational(-affine->beta * inv - eu)),
            u.affine_image(Rational(-1), Rational((eu - affine->beta) * inv)),
            u.minkowski_sum(u).affine_image(Rational(1), Rational(-eu))};
  }
  const auto& gamma = std::get<MultiplicativeCore>(f.core).gamma;
  if (eu <= 0 || gamma <= 0)
    throw Error(ErrorKind::kPrecondition, "multiplicative core needs a positive unit and gamma");
  return {u.affine_image(Rational(1 / (gamma * eu)), Rational(0)),
          u.reciprocal_image(Rational(eu / gamma)),
          u.product(u).affine_image(Rational(1 / eu), Rational(0))};
}

template <class T>
void sample_evidence(const ParametricFamily& f, const std::vector<T>& w, const T& e,
                     FamilyClassification& out) {
  const auto fail = [](PropertyEvidence& p, std::string text) {
    if (p.sampled) {
      p.sampled = false;
      p.witness = std::move(text);
    }
  };
  out.expansive.sampled = out.symmetric.sampled = out.monoid.sampled = true;
  for (const auto& a : w) {
    if (!Arith<T>::solve(f, e, a)) fail(out.expansive, tuple_text(a));
    if (!Arith<T>::solve(f, a, e)) fail(out.symmetric, tuple_text(a));
  }
  for (const auto& x : w)
    for (const auto& y : w) {
      const auto z = Arith<T>::op(f, x, y);
      if (f.domain.contains(z) && !Arith<T>::solve(f, e, z)) fail(out.monoid, tuple_text(x, y));
    }
}

template <class T>
bool star_associative(const ParametricFamily& f, const std::vector<T>& s) {
  for (const auto& x : s)
    for (const auto& y : s) {
      const auto xy = Arith<T>::star(f, x, y);
      if (!xy) continue;
      for (const auto& z : s) {
        const auto yz = Arith<T>::star(f, y, z);
        if (!yz) continue;
        const auto left = Arith<T>::star(f, *xy, z);
        const auto right = Arith<T>::star(f, x, *yz);
        if (left.has_value() != right.has_value()) return false;
        if (left && !Arith<T>::agree(f, *left, *right)) return false;
      }
    }
  return true;
}

ParametricFamily exact_family(std::string id, std::string formula, std::string_view domain,
                              std::string_view core_domain, Conjugacy conjugacy, Core core,
                              ExactOp op, std::optional<Rational> unit,
                              std::optional<Label> expected, std::string_view window) {
  FloatOp float_op = [op](double x, double y) { return op(Rational(x), Rational(y)).get_d(); };
  return ParametricFamily{std::move(id), std::move(formula), ArithmeticMode::kExact,
                          interval(domain), interval(core_domain), std::move(conjugacy),
                          std::move(core), std::move(op), std::move(float_op), std::move(unit),
                          expected, interval(window)};
}

ParametricFamily float_family(std::string id, std::string formula, std::string_view domain,
                              std::string_view core_domain, Transcendental conjugacy, Core core,
                              FloatOp op, std::optional<Rational> unit,
                              std::optional<Label> expected, std::string_view window) {
  return ParametricFamily{std::move(id), std::move(formula), ArithmeticMode::kFloat,
                          interval(domain), interval(core_domain), conjugacy, std::move(core),
                          nullptr, std::move(op), std::move(unit), expected, interval(window)};
}

AffineCore affine(long num, long den = 1, long beta = 0) {
  return {make_rational(num, den), make_rational(beta)};
}

std::vector<ParametricFamily> build_catalog() {
  const auto mean = [](const Rational& a, const Rational& b) { return Rational((a + b) / 2); };
  const auto harmonic = [](const Rational& a, const Rational& b) {
    return quotient(2 * a * b, a + b);
  };
  const auto doubled = [](const Rational& a, const Rational& b) { return Rational(2 * (a + b)); };
  const auto third = [](const Rational& a, const Rational& b) { return Rational((a + b) / 3); };
  const auto sum = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  const auto reciprocal_sum = [](const Rational& a, const Rational& b) {
    return quotient(a * b, a + b);
  };
  const Rational zero(0), one(1);
  using enum Label;

  std::vector<ParametricFamily> c;
  c.push_back(exact_family("midpoint-R", "(a+b)/2", "]-inf,inf[", "]-inf,inf[", kIdentity,
                           affine(1, 2), mean, zero, kI, "[-1,1]"));
  c.push_back(exact_family("midpoint-[0,inf)", "(a+b)/2", "[0,inf[", "[0,inf[", kIdentity,
                           affine(1, 2), mean, zero, kII, "[0,2]"));
  c.push_back(exact_family("midpoint-[0,1]", "(a+b)/2", "[0,1]", "[0,1]", kIdentity, affine(1, 2),
                           mean, make_rational(1, 2), kIII, "[0,1]"));
  c.push_back(exact_family("midpoint-R+", "(a+b)/2", "]0,inf[", "]0,inf[", kIdentity,
                           affine(1, 2), mean, one, kIV, "[0,2]"));
  c.push_back(float_family("cubic-mean-R", "((a^3+b^3)/2)^(1/3)", "]-inf,inf[", "]-inf,inf[",
                           Transcendental::kCube, affine(1, 2),
                           [](double a, double b) { return std::cbrt((a * a * a + b * b * b) / 2); },
                           zero, kI, "[-1,1]"));
  c.push_back(exact_family("harmonic-(0,1]", "2ab/(a+b)", "]0,1]", "[1,inf[", kReciprocal,
                           affine(1, 2), harmonic, one, kII, "[0,1]"));
  c.push_back(exact_family("harmonic-(1,inf)", "2ab/(a+b)", "]1,inf[", "]0,1[", kReciprocal,
                           affine(1, 2), harmonic, Rational(2), kIII, "[1,3]"));
  c.push_back(exact_family("harmonic-R+", "2ab/(a+b)", "]0,inf[", "]0,inf[", kReciprocal,
                           affine(1, 2), harmonic, one, kIV, "[0,2]"));
  c.push_back(exact_family("doubling-R", "2(a+b)", "]-inf,inf[", "]-inf,inf[", kIdentity,
                           affine(2), doubled, zero, kI, "[-1,1]"));
  c.push_back(float_family("doubling-cube-R", "2(a^3+b^3)^(1/3)", "]-inf,inf[", "]-inf,inf[",
                           Transcendental::kCube, affine(8),
                           [](double a, double b) { return 2 * std::cbrt(a * a * a + b * b * b); },
                           zero, kI, "[-1,1]"));
  c.push_back(exact_family("doubling-[0,inf)", "2(a+b)", "[0,inf[", "[0,inf[", kIdentity,
                           affine(2), doubled, zero, kII, "[0,2]"));
  c.push_back(exact_family("third-[-1,1]", "(a+b)/3", "[-1,1]", "[-1,1]", kIdentity,
                           affine(1, 3), third, zero, kIII, "[-1,1]"));
  c.push_back(exact_family("third-[0,1]", "(a+b)/3", "[0,1]", "[0,1]", kIdentity, affine(1, 3),
                           third, zero, kIV, "[0,1]"));
  c.push_back(exact_family("doubling-N0", "2(a+b)", "Z[0,inf[", "Z[0,inf[", kIdentity, affine(2),
                           doubled, zero, kV, "[0,16]"));
  c.push_back(exact_family("doubling-Z", "2(a+b)", "Z]-inf,inf[", "Z]-inf,inf[", kIdentity,
                           affine(2), doubled, zero, kVI, "[-8,8]"));
  c.push_back(exact_family("sum-R", "a+b", "]-inf,inf[", "]-inf,inf[", kIdentity, affine(1), sum,
                           zero, kI, "[-1,1]"));
  c.push_back(exact_family("sum-[0,inf)", "a+b", "[0,inf[", "[0,inf[", kIdentity, affine(1), sum,
                           zero, kII, "[0,2]"));
  c.push_back(exact_family(
      "sum-minus-product-[0,1)", "a+b-ab", "[0,1[", "]0,1]", Mobius{-1, 1, 0, 1},
      MultiplicativeCore{1}, [](const Rational& a, const Rational& b) { return Rational(a + b - a * b); },
      zero, kII, "[0,1]"));

  c.push_back(exact_family("midpoint-plus-one-R", "(a+b)/2+1", "]-inf,inf[", "]-inf,inf[",
                           kIdentity, affine(1, 2, 1),
                           [](const Rational& a, const Rational& b) { return Rational((a + b) / 2 + 1); },
                           std::nullopt, std::nullopt, "[-1,1]"));
  c.push_back(exact_family("harmonic3-R+", "3ab/(a+b)", "]0,inf[", "]0,inf[", kReciprocal,
                           affine(1, 3),
                           [](const Rational& a, const Rational& b) { return quotient(3 * a * b, a + b); },
                           std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("doubling-R+", "2(a+b)", "]0,inf[", "]0,inf[", kIdentity, affine(2),
                           doubled, std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("sum-plus-one-[0,inf)", "a+b+1", "[0,inf[", "[0,inf[", kIdentity,
                           affine(1, 1, 1),
                           [](const Rational& a, const Rational& b) { return Rational(a + b + 1); },
                           std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("reciprocal-sum-R+", "ab/(a+b)", "]0,inf[", "]0,inf[", kReciprocal,
                           affine(1), reciprocal_sum, std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("reciprocal-sum-(0,1]", "ab/(a+b)", "]0,1]", "[1,inf[", kReciprocal,
                           affine(1), reciprocal_sum, std::nullopt, std::nullopt, "[0,1]"));
  c.push_back(exact_family(
      "sum-plus-product-R+", "a+b+ab", "]0,inf[", "]1,inf[", Mobius{1, 1, 0, 1},
      MultiplicativeCore{1}, [](const Rational& a, const Rational& b) { return Rational(a + b + a * b); },
      std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("sum-R+", "a+b", "]0,inf[", "]0,inf[", kIdentity, affine(1), sum,
                           std::nullopt, std::nullopt, "[0,2]"));
  c.push_back(exact_family("velocity-(0,1)", "(a+b)/(1+ab)", "]0,1[", "]1,inf[",
                           Mobius{1, 1, -1, 1}, MultiplicativeCore{1},
                           [](const Rational& a, const Rational& b) { return quotient(a + b, 1 + a * b); },
                           std::nullopt, std::nullopt, "[0,1]"));
  c.push_back(float_family("log-sum-exp-R", "log(e^a+e^b)", "]-inf,inf[", "]0,inf[",
                           Transcendental::kExp, affine(1),
                           [](double a, double b) {
                             const auto m = std::max(a, b);
                             return m + std::log(std::exp(a - m) + std::exp(b - m));
                           },
                           std::nullopt, std::nullopt, "[-10,10]"));
  c.push_back(float_family("geometric-(0,1)", "sqrt(ab)", "]0,1[", "]-inf,0[",
                           Transcendental::kLog, affine(1, 2),
                           [](double a, double b) { return std::sqrt(a * b); }, std::nullopt,
                           std::nullopt, "[0,1]"));
  return c;
}

}  // namespace

std::string_view to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::kExact ? "exact" : "float";
}

Evaluation<Rational> evaluate(const ParametricFamily& f, const Rational& x, const Rational& y) {
  if (f.mode != ArithmeticMode::kExact)
    throw Error(ErrorKind::kPrecondition, f.id + " has no exact evaluator");
  require_in_domain(f, x);
  require_in_domain(f, y);
  auto value = f.exact_op(x, y);
  const bool closed = f.domain.contains(value);
  return {std::move(value), closed};
}

Evaluation<double> evaluate_float(const ParametricFamily& f, double x, double y) {
  require_in_domain(f, x);
  require_in_domain(f, y);
  const auto value = f.float_op(x, y);
  return {value, f.domain.contains(value)};
}

std::optional<Rational> solve_left(const ParametricFamily& f, const Rational& a,
                                   const Rational& b) {
  if (f.mode != ArithmeticMode::kExact)
    throw Error(ErrorKind::kPrecondition, f.id + " has no exact solver");
  require_in_domain(f, a);
  require_in_domain(f, b);
  const auto xu = core_solve(f.core, forward(f.conjugacy, a), forward(f.conjugacy, b));
  if (!f.core_domain.contains(xu)) return std::nullopt;
  auto x = backward(f.conjugacy, xu);
  if (!f.domain.contains(x)) return std::nullopt;
  if (f.exact_op(x, a) != b)
    throw Error(ErrorKind::kTheoremViolation,
                "solver for " + f.id + " returned " + to_string(x) + " which does not solve x⊕" +
                    to_string(a) + "=" + to_string(b));
  return x;
}

std::optional<double> solve_left_float(const ParametricFamily& f, double a, double b) {
  require_in_domain(f, a);
  require_in_domain(f, b);
  const auto xu = core_solve(f.core, forward(f.conjugacy, a), forward(f.conjugacy, b));
  if (!f.core_domain.contains(xu)) return std::nullopt;
  const auto x = backward(f.conjugacy, xu);
  if (!f.domain.contains(x)) return std::nullopt;
  if (!float_solution_ok(f, x, a, b))
    throw Error(ErrorKind::kTheoremViolation, "float solver residual above tolerance for " + f.id);
  return x;
}

std::vector<Rational> default_samples(const ParametricFamily& f, unsigned steps) {
  if (steps == 0) throw Error(ErrorKind::kPrecondition, "at least one grid step is required");
  const auto& lo = f.window.lower().value.value();
  const Rational width = f.window.upper().value.value() - lo;
  std::vector<Rational> out;
  for (unsigned k = 0; k <= steps; ++k) {
    Rational x = lo + width * k / steps;
    x.canonicalize();
    if (f.domain.contains(x)) out.push_back(std::move(x));
  }
  for (const auto* bound : {&f.domain.lower(), &f.domain.upper()})
    if (bound->closed) out.push_back(bound->value.value());
  if (f.unit) out.push_back(*f.unit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SampleReport sampled_axiom_check(const ParametricFamily& f, const std::vector<Rational>& samples) {
  for (const auto& s : samples) require_in_domain(f, s);
  SampleReport report;
  report.family = f.id;
  report.mode = f.mode;
  report.samples = samples.size();
  if (f.mode == ArithmeticMode::kExact)
    check_samples(f, samples, report);
  else
    check_samples(f, converted<double>(samples), report);
  return report;
}

IdempotentSummary analytic_idempotents(const ParametricFamily& f) {
  IdempotentSummary out;
  Rational u;
  if (const auto* a = std::get_if<AffineCore>(&f.core)) {
    // α(u+u)+β = u.
    if (2 * a->alpha == 1) {
      out.all = a->beta == 0;
      return out;
    }
    u = a->beta / (1 - 2 * a->alpha);
  } else {
    u = 1 / std::get<MultiplicativeCore>(f.core).gamma;
  }
  if (f.core_domain.contains(u)) out.points.push_back(backward(f.conjugacy, u));
  return out;
}

FamilyClassification classify_family(const ParametricFamily& f,
                                     const std::vector<Rational>& witnesses) {
  if (!f.unit) throw Error(ErrorKind::kPrecondition, f.id + " has no designated unit");
  const auto& e = *f.unit;
  require_in_domain(f, e);
  const bool idempotent = f.mode == ArithmeticMode::kExact
                              ? f.exact_op(e, e) == e
                              : std::abs(f.float_op(e.get_d(), e.get_d()) - e.get_d()) <=
                                    kFloatTolerance;
  if (!idempotent)
    throw Error(ErrorKind::kNotIdempotent, "unit " + to_string(e) + " of " + f.id +
                                               " is not idempotent");
  for (const auto& w : witnesses) require_in_domain(f, w);

  FamilyClassification out{};
  out.expected = f.expected;
  const auto images = analytic_images(f, forward(f.conjugacy, e));
  out.expansive.analytic = f.core_domain.contains(images.doubling);
  out.symmetric.analytic = f.core_domain.contains(images.negation);
  out.monoid.analytic = f.core_domain.contains(images.monoid);

  if (f.mode == ArithmeticMode::kExact)
    sample_evidence(f, witnesses, e, out);
  else
    sample_evidence(f, converted<double>(witnesses), e.get_d(), out);

  for (const auto* p : {&out.expansive, &out.symmetric, &out.monoid})
    if (p->analytic && !p->sampled)
      throw Error(ErrorKind::kTheoremViolation,
                  f.id + ": closed form says total but the solver fails at " + *p->witness);

  PropertyFlags flags{out.expansive.holds(), out.symmetric.holds(), out.monoid.holds(), false};
  flags.group = flags.monoid && flags.symmetric;
  out.result = classify(flags);
  return out;
}

std::optional<Rational> family_star(const ParametricFamily& f, const Rational& x,
                                    const Rational& y) {
  if (!f.unit) throw Error(ErrorKind::kPrecondition, f.id + " has no designated unit");
  const auto z = evaluate(f, x, y);
  if (!z.closed) return std::nullopt;
  return solve_left(f, *f.unit, z.value);
}

std::optional<double> family_star_float(const ParametricFamily& f, double x, double y) {
  if (!f.unit) throw Error(ErrorKind::kPrecondition, f.id + " has no designated unit");
  const auto z = evaluate_float(f, x, y);
  if (!z.closed) return std::nullopt;
  return solve_left_float(f, f.unit->get_d(), z.value);
}

bool star_associativity_check(const ParametricFamily& f, const std::vector<Rational>& samples) {
  if (f.mode == ArithmeticMode::kExact) return star_associative(f, samples);
  return star_associative(f, converted<double>(samples));
}

bool monoid_formula_check(const std::vector<Rational>& samples) {
  const auto h = find_family("harmonic-(0,1]");
  for (const auto& x : samples)
    for (const auto& y : samples) {
      const auto theta = family_star(h, x, y);
      if (!theta || *theta != quotient(x * y, x + y - x * y)) return false;
    }
  return true;
}

std::optional<Rational> harmonic_monoid_inverse(const Rational& a) {
  const auto h = find_family("harmonic-(0,1]");
  require_in_domain(h, a);
  // θ(x,a) = 1 ⟺ xa = x + a − xa ⟺ x(2a − 1) = a.
  std::optional<Rational> closed_form;
  if (2 * a - 1 != 0) {
    Rational x = a / (2 * a - 1);
    if (h.domain.contains(x)) closed_form = std::move(x);
  }
  // θ(x,a) = 1 ⟺ x⊕a = 1⊕1 = 1.
  const auto solved = solve_left(h, a, Rational(1));
  if (closed_form != solved)
    throw Error(ErrorKind::kTheoremViolation, "harmonic inverse routes disagree at " + to_string(a));
  return solved;
}

bool half_has_no_inverse_check() {
  const auto h = find_family("harmonic-(0,1]");
  const auto verdict = classify_family(h, default_samples(h));
  return !harmonic_monoid_inverse(make_rational(1, 2)) && !verdict.result.flags.group;
}

const std::vector<ParametricFamily>& catalog() {
  static const std::vector<ParametricFamily> families = build_catalog();
  return families;
}

ParametricFamily affine_family(bool integral, const Rational& alpha, const Rational& beta) {
  if (integral && (!is_integer(alpha) || !is_integer(beta)))
    throw Error(ErrorKind::kPrecondition, "affine-Z needs integer alpha and beta");
  std::optional<Rational> unit;
  if (2 * alpha != 1) {
    Rational u = beta / (1 - 2 * alpha);
    if (!integral || is_integer(u)) unit = std::move(u);
  } else if (beta == 0) {
    unit = Rational(0);
  }
  const std::string_view domain = integral ? "Z]-inf,inf[" : "]-inf,inf[";
  return exact_family(std::string(integral ? "affine-Z:" : "affine-Q:") + to_string(alpha) + "," +
                          to_string(beta),
                      to_string(alpha) + "(a+b)+" + to_string(beta), domain, domain, kIdentity,
                      AffineCore{alpha, beta},
                      [alpha, beta](const Rational& a, const Rational& b) {
                        return Rational(alpha * (a + b) + beta);
                      },
                      std::move(unit), std::nullopt, integral ? "[-8,8]" : "[-1,1]");
}

ParametricFamily find_family(std::string_view id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  for (const auto& [prefix, integral] : {std::pair{std::string_view("affine-Q:"), false},
                                         std::pair{std::string_view("affine-Z:"), true}}) {
    if (!id.starts_with(prefix)) continue;
    const auto params = id.substr(prefix.size());
    const auto comma = params.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::kParse, "expected " + std::string(prefix) + "alpha,beta");
    return affine_family(integral, parse_rational(params.substr(0, comma)),
                         parse_rational(params.substr(comma + 1)));
  }
  std::string known;
  for (const auto& f : catalog()) known += (known.empty() ? "" : ", ") + f.id;
  throw Error(ErrorKind::kUnknownFamily, "unknown family '" + std::string(id) +
                                             "'; known: " + known + ", affine-Q:a,b, affine-Z:a,b");
}

}  // namespace ccm
