#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ccm/catalog.hpp"
#include "support.hpp"

using namespace ccm;
using support::kind_of;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

using ExactFormula = std::function<Rational(const Rational&, const Rational&)>;
using FloatFormula = std::function<double(double, double)>;

// Formulas written out independently of the catalog's conjugate forms.
const std::map<std::string, ExactFormula>& exact_formulas() {
  static const std::map<std::string, ExactFormula> table = [] {
    const ExactFormula mid = [](const Rational& a, const Rational& b) { return Rational((a + b) / 2); };
    const ExactFormula harm = [](const Rational& a, const Rational& b) { return Rational(2 * a * b / (a + b)); };
    const ExactFormula dbl = [](const Rational& a, const Rational& b) { return Rational(2 * (a + b)); };
    const ExactFormula third = [](const Rational& a, const Rational& b) { return Rational((a + b) / 3); };
    const ExactFormula sum = [](const Rational& a, const Rational& b) { return Rational(a + b); };
    const ExactFormula rsum = [](const Rational& a, const Rational& b) { return Rational(a * b / (a + b)); };
    return std::map<std::string, ExactFormula>{
        {"midpoint-R", mid},
        {"midpoint-[0,inf)", mid},
        {"midpoint-[0,1]", mid},
        {"midpoint-R+", mid},
        {"harmonic-(0,1]", harm},
        {"harmonic-(1,inf)", harm},
        {"harmonic-R+", harm},
        {"doubling-R", dbl},
        {"doubling-[0,inf)", dbl},
        {"third-[-1,1]", third},
        {"third-[0,1]", third},
        {"doubling-N0", dbl},
        {"doubling-Z", dbl},
        {"sum-R", sum},
        {"sum-[0,inf)", sum},
        {"sum-minus-product-[0,1)", [](const Rational& a, const Rational& b) { return Rational(a + b - a * b); }},
        {"midpoint-plus-one-R", [](const Rational& a, const Rational& b) { return Rational((a + b) / 2 + 1); }},
        {"harmonic3-R+", [](const Rational& a, const Rational& b) { return Rational(3 * a * b / (a + b)); }},
        {"doubling-R+", dbl},
        {"sum-plus-one-[0,inf)", [](const Rational& a, const Rational& b) { return Rational(a + b + 1); }},
        {"reciprocal-sum-R+", rsum},
        {"reciprocal-sum-(0,1]", rsum},
        {"sum-plus-product-R+", [](const Rational& a, const Rational& b) { return Rational(a + b + a * b); }},
        {"sum-R+", sum},
        {"velocity-(0,1)", [](const Rational& a, const Rational& b) { return Rational((a + b) / (1 + a * b)); }},
    };
  }();
  return table;
}

const std::map<std::string, FloatFormula>& float_formulas() {
  static const std::map<std::string, FloatFormula> table{
      {"cubic-mean-R", [](double a, double b) { return std::cbrt((a * a * a + b * b * b) / 2); }},
      {"doubling-cube-R", [](double a, double b) { return 2 * std::cbrt(a * a * a + b * b * b); }},
      {"log-sum-exp-R", [](double a, double b) { return std::log(std::exp(a) + std::exp(b)); }},
      {"geometric-(0,1)", [](double a, double b) { return std::sqrt(a * b); }},
  };
  return table;
}

const std::map<std::string, Label>& expected_labels() {
  static const std::map<std::string, Label> table{
      {"midpoint-R", Label::kI},         {"midpoint-[0,inf)", Label::kII},
      {"midpoint-[0,1]", Label::kIII},   {"midpoint-R+", Label::kIV},
      {"harmonic-(0,1]", Label::kII},    {"harmonic-(1,inf)", Label::kIII},
      {"harmonic-R+", Label::kIV},       {"third-[-1,1]", Label::kIII},
      {"third-[0,1]", Label::kIV},       {"doubling-R", Label::kI},
      {"doubling-[0,inf)", Label::kII},  {"doubling-N0", Label::kV},
      {"doubling-Z", Label::kVI},        {"sum-R", Label::kI},
      {"sum-[0,inf)", Label::kII},       {"sum-minus-product-[0,1)", Label::kII},
  };
  return table;
}

std::vector<Rational> grid(long denominator, long from, long to) {
  std::vector<Rational> out;
  for (long k = from; k <= to; ++k) out.push_back(q(k, denominator));
  return out;
}

}  // namespace

TEST_CASE("catalog ids are unique and every formula has an oracle") {
  std::set<std::string> ids;
  for (const auto& f : catalog()) {
    CHECK(ids.insert(f.id).second);
    if (f.mode == ArithmeticMode::kExact)
      CHECK(exact_formulas().count(f.id) == 1);
    else
      CHECK(float_formulas().count(f.id) == 1);
  }
  CHECK(ids.size() == exact_formulas().size() + float_formulas().size());
}

TEST_CASE("harmonic evaluation") {
  const auto h = find_family("harmonic-(0,1]");
  CHECK(evaluate(h, q(1, 2), q(1, 2)).value == q(1, 2));
  CHECK(evaluate(h, q(1, 2), q(1)).value == q(2, 3));
  CHECK(evaluate(h, q(1, 2), q(1)).closed);
  CHECK(kind_of([&] { evaluate(h, q(0), q(1)); }) == ErrorKind::kDomain);
  CHECK(kind_of([&] { evaluate(h, q(2), q(1)); }) == ErrorKind::kDomain);
  const auto mid = find_family("midpoint-[0,1]");
  CHECK(evaluate(mid, q(0), q(1)).value == q(1, 2));
  CHECK(kind_of([] { evaluate(find_family("geometric-(0,1)"), q(1, 2), q(1, 2)); }) == ErrorKind::kPrecondition);
}

TEST_CASE("catalog operations match the written-out formulas [property]") {
  std::mt19937_64 rng(9001);
  for (const auto& f : catalog()) {
    const auto samples = default_samples(f);
    REQUIRE(samples.size() >= 4);
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
    for (int k = 0; k < 40; ++k) {
      const auto& x = samples[pick(rng)];
      const auto& y = samples[pick(rng)];
      if (f.mode == ArithmeticMode::kExact) {
        const auto r = evaluate(f, x, y);
        CHECK(r.value == exact_formulas().at(f.id)(x, y));
        CHECK(r.closed);
        CHECK(f.domain.contains(r.value));
      } else {
        const double a = x.get_d(), b = y.get_d();
        const auto r = evaluate_float(f, a, b);
        CHECK(std::abs(r.value - float_formulas().at(f.id)(a, b)) <= 1e-9 * std::max(1.0, std::abs(r.value)));
        CHECK(r.closed);
      }
    }
  }
}

TEST_CASE("left division examples") {
  const auto h = find_family("harmonic-(0,1]");
  CHECK(solve_left(h, q(1), q(1, 2)) == q(1, 3));
  const auto mid = find_family("midpoint-[0,1]");
  CHECK_FALSE(solve_left(mid, q(1, 2), q(1)));
  CHECK(solve_left(mid, q(1, 2), q(1, 2)) == q(1, 2));
  CHECK(solve_left(h, q(1), q(1)) == q(1));
  CHECK(solve_left(find_family("doubling-Z"), q(0), q(3)) == std::nullopt);
  CHECK(solve_left(find_family("doubling-Z"), q(0), q(4)) == q(2));
  CHECK(kind_of([] { solve_left(find_family("affine-Q:0,1"), q(0), q(1)); }) == ErrorKind::kDomain);
}

TEST_CASE("solver results are exact solutions in the domain [property]") {
  for (const auto& f : catalog()) {
    if (f.mode != ArithmeticMode::kExact) continue;
    const auto samples = default_samples(f, 8);
    const auto& op = exact_formulas().at(f.id);
    int solved = 0;
    for (const auto& a : samples)
      for (const auto& b : samples)
        if (const auto x = solve_left(f, a, b)) {
          CHECK(f.domain.contains(*x));
          CHECK(op(*x, a) == b);
          ++solved;
        } else {
          // No sampled x solves it either.
          for (const auto& x : samples) CHECK(op(x, a) != b);
        }
    CHECK(solved > 0);
  }
}

TEST_CASE("float solver round trips [property]") {
  for (const auto& f : catalog()) {
    if (f.mode != ArithmeticMode::kFloat) continue;
    const auto samples = default_samples(f, 8);
    for (const auto& a : samples)
      for (const auto& b : samples) {
        const auto x = solve_left_float(f, a.get_d(), b.get_d());
        if (!x) continue;
        CHECK(f.domain.contains(*x));
      }
  }
}

TEST_CASE("sampled axiom checks") {
  const auto h = sampled_axiom_check(find_family("harmonic-(0,1]"), grid(8, 1, 8));
  CHECK(h.holds());
  CHECK(h.samples == 8);
  CHECK(h.worst_residual == 0.0);
  CHECK(h.sampled_idempotents == 8);

  const auto mid = sampled_axiom_check(find_family("midpoint-[0,1]"), grid(4, 0, 4));
  CHECK(mid.holds());

  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> pick(1, 999);
  std::vector<Rational> random_samples;
  for (int k = 0; k < 16; ++k) random_samples.push_back(q(pick(rng), 1000));
  const auto g = sampled_axiom_check(find_family("geometric-(0,1)"), random_samples);
  CHECK(g.holds());
  CHECK(g.mode == ArithmeticMode::kFloat);
  CHECK(g.worst_residual <= kFloatTolerance);

  CHECK(kind_of([] { sampled_axiom_check(find_family("harmonic-(0,1]"), {q(2)}); }) == ErrorKind::kDomain);
}

TEST_CASE("every catalog family passes its sampled axiom check") {
  for (const auto& f : catalog()) {
    CAPTURE(f.id);
    const auto r = sampled_axiom_check(f, default_samples(f));
    CHECK(r.holds());
    CHECK(r.closure_violations == 0);
  }
}

TEST_CASE("affine families need an invertible slope") {
  const auto bad = find_family("affine-Q:0,1");
  const auto r = sampled_axiom_check(bad, default_samples(bad));
  CHECK(r.m1);
  CHECK_FALSE(r.m2);
  CHECK(r.m2_witness.has_value());
  for (const auto* id : {"affine-Q:2,0", "affine-Q:-1/3,5", "affine-Z:3,1", "affine-Z:-1,0"})
    CHECK(sampled_axiom_check(find_family(id), default_samples(find_family(id))).holds());
  CHECK(kind_of([] { find_family("affine-Z:1/2,0"); }) == ErrorKind::kPrecondition);
  CHECK(kind_of([] { find_family("affine-Q:2"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { find_family("nope"); }) == ErrorKind::kUnknownFamily);
}

TEST_CASE("classification examples") {
  CHECK(classify_family(find_family("harmonic-(0,1]"), default_samples(find_family("harmonic-(0,1]"))).result.label ==
        Label::kII);
  CHECK(classify_family(find_family("midpoint-[0,1]"), default_samples(find_family("midpoint-[0,1]"))).result.label ==
        Label::kIII);
  const auto z = classify_family(find_family("affine-Z:2,0"), default_samples(find_family("affine-Z:2,0")));
  CHECK(z.result.label == Label::kVI);
  CHECK_FALSE(z.expansive.holds());
  CHECK(z.symmetric.holds());
  CHECK(z.monoid.holds());
  CHECK(classify_family(find_family("affine-Z:1,0"), default_samples(find_family("affine-Z:1,0"))).result.label ==
        Label::kI);
}

TEST_CASE("every labelled family reproduces its label") {
  std::size_t labelled = 0;
  for (const auto& f : catalog()) {
    CAPTURE(f.id);
    const auto it = expected_labels().find(f.id);
    if (f.expected) {
      ++labelled;
      if (it != expected_labels().end()) CHECK(*f.expected == it->second);
    }
    if (!f.unit) continue;
    const auto c = classify_family(f, default_samples(f));
    CHECK(c.matches());
    if (it != expected_labels().end()) CHECK(c.result.label == it->second);
  }
  CHECK(labelled == expected_labels().size() + 2);
}

TEST_CASE("classification input errors") {
  CHECK(kind_of([] { classify_family(find_family("sum-R+"), {q(1)}); }) == ErrorKind::kPrecondition);
  auto f = find_family("midpoint-[0,1]");
  f.unit = q(1, 2);
  CHECK_NOTHROW(classify_family(f, {q(1, 2)}));
  auto h = find_family("harmonic-(0,1]");
  h.unit = q(1, 2);  // idempotent too
  CHECK_NOTHROW(classify_family(h, default_samples(h)));
  auto s = find_family("sum-R");
  s.unit = q(1);
  CHECK(kind_of([&] { classify_family(s, {q(1)}); }) == ErrorKind::kNotIdempotent);
}

TEST_CASE("families without idempotents have none analytically or on samples") {
  for (const auto* id : {"midpoint-plus-one-R", "harmonic3-R+", "doubling-R+", "sum-plus-one-[0,inf)",
                         "reciprocal-sum-R+", "reciprocal-sum-(0,1]", "sum-plus-product-R+", "sum-R+",
                         "velocity-(0,1)", "log-sum-exp-R"}) {
    CAPTURE(id);
    const auto f = find_family(id);
    const auto i = analytic_idempotents(f);
    CHECK_FALSE(i.all);
    CHECK(i.points.empty());
    CHECK_FALSE(f.unit);
    CHECK(sampled_axiom_check(f, default_samples(f)).sampled_idempotents == 0);
  }
  CHECK(analytic_idempotents(find_family("midpoint-R")).all);
  CHECK(analytic_idempotents(find_family("sum-minus-product-[0,1)")).points == std::vector<Rational>{q(0)});
}

TEST_CASE("harmonic monoid") {
  const auto h = find_family("harmonic-(0,1]");
  CHECK(family_star(h, q(1, 2), q(1, 2)) == q(1, 3));
  CHECK(family_star(h, q(1), q(3, 7)) == q(3, 7));
  CHECK(family_star(h, q(1, 2), q(1, 3)) == q(1, 4));
  CHECK(evaluate(h, *family_star(h, q(1, 2), q(1, 3)), q(1)).value == evaluate(h, q(1, 2), q(1, 3)).value);
  CHECK(monoid_formula_check(grid(16, 1, 16)));
  CHECK(half_has_no_inverse_check());
  CHECK_FALSE(harmonic_monoid_inverse(q(1, 2)));
  CHECK(harmonic_monoid_inverse(q(1)) == q(1));
  CHECK(harmonic_monoid_inverse(q(1, 3)) == std::nullopt);
  CHECK_FALSE(classify_family(h, default_samples(h)).result.flags.group);
}

TEST_CASE("monoid formula on random rationals [property]") {
  std::mt19937_64 rng(4711);
  std::uniform_int_distribution<long> num(1, 60), den(1, 60);
  std::vector<Rational> samples;
  while (samples.size() < 24) {
    auto n = num(rng), d = den(rng);
    if (n <= d) samples.push_back(q(n, d));
  }
  CHECK(monoid_formula_check(samples));
  const auto h = find_family("harmonic-(0,1]");
  for (const auto& x : samples)
    for (const auto& y : samples) CHECK(family_star(h, x, y) == Rational(x * y / (x + y - x * y)));
}

TEST_CASE("star operations are associative wherever the monoid exists") {
  for (const auto& f : catalog()) {
    if (!f.unit) continue;
    CAPTURE(f.id);
    CHECK(star_associativity_check(f, default_samples(f, 8)));
  }
}

TEST_CASE("default samples stay in the domain") {
  for (const auto& f : catalog()) {
    CAPTURE(f.id);
    const auto s = default_samples(f);
    CHECK(std::is_sorted(s.begin(), s.end()));
    for (const auto& x : s) CHECK(f.domain.contains(x));
    if (f.unit) CHECK(std::find(s.begin(), s.end(), *f.unit) != s.end());
  }
  const auto mid = default_samples(find_family("midpoint-[0,1]"));
  CHECK(mid.size() == 17);
  CHECK(mid.front() == 0);
  CHECK(mid.back() == 1);
}
