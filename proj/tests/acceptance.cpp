// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ccm/catalog.hpp"
#include "ccm/error.hpp"
#include "ccm/fixtures.hpp"
#include "ccm/generation.hpp"
#include "ccm/internal.hpp"
#include "ccm/relation.hpp"

using namespace ccm;
namespace fx = ccm::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_ + " | " + detail};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t generated_order(std::uint64_t seed) { return 2 + seed % 31; }

// k with k⊕e = x⊕y by linear search.
std::optional<Element> solve_by_search(const FiniteMagma& m, Element e, Element target) {
  for (Element k = 0; k < m.order(); ++k)
    if (m.op(k, e) == target) return k;
  return std::nullopt;
}

std::vector<FiniteMagma> fixtures_list() {
  return {fx::a2(), fx::a3(), fx::f5a(), fx::z9a(), fx::singleton()};
}

Outcome c1_fixtures() {
  Tally t;
  const auto start_a2 = Clock::now();
  const auto a2 = check_axioms(fx::a2());
  const double a2_ms = ms_since(start_a2);
  const auto start_a3 = Clock::now();
  const auto a3 = check_axioms(fx::a3());
  const double a3_ms = ms_since(start_a3);
  t.expect(a2.is_ccm(), "A2 fails M1-M3");
  t.expect(a2.idempotents.size() == 3, "A2 idempotent count");
  t.expect(!a2.associative.holds(), "A2 associative");
  t.expect(a3.is_ccm(), "A3 fails M1-M3");
  t.expect(a3.idempotents.empty(), "A3 idempotent count");
  t.expect(a2_ms < 1.0 && a3_ms < 1.0, "runtime >= 1 ms");
  std::ostringstream s;
  s << "A2 idempotents=" << a2.idempotents.size() << " associative=" << a2.associative.holds()
    << "; A3 idempotents=" << a3.idempotents.size() << "; " << a2_ms << " ms / " << a3_ms << " ms";
  return t.outcome(s.str());
}

Outcome c2_harmonic_monoid() {
  Tally t;
  const auto h = find_family("harmonic-(0,1]");
  std::vector<Rational> eighths;
  for (long k = 1; k <= 8; ++k) eighths.push_back(make_rational(k, 8));
  int pairs = 0;
  for (const auto& x : eighths)
    for (const auto& y : eighths) {
      const auto theta = family_star(h, x, y);
      const Rational expected = x * y / (x + y - x * y);
      t.expect(theta && *theta == expected, "theta(" + to_string(x) + "," + to_string(y) + ")");
      if (theta) t.expect(evaluate(h, *theta, 1).value == evaluate(h, x, y).value, "theta+1 != x+y");
      ++pairs;
    }
  t.expect(monoid_formula_check(eighths), "monoid_formula_check");
  t.expect(half_has_no_inverse_check(), "1/2 has an inverse");
  t.expect(!harmonic_monoid_inverse(make_rational(1, 2)), "inverse of 1/2 found");
  return t.outcome(std::to_string(pairs) + " pairs exact; 1/2 not invertible");
}

Outcome c3_classification_table() {
  Tally t;
  const std::map<std::string, Label> table{
      {"midpoint-R", Label::kI},         {"midpoint-[0,inf)", Label::kII},
      {"midpoint-[0,1]", Label::kIII},   {"midpoint-R+", Label::kIV},
      {"cubic-mean-R", Label::kI},       {"harmonic-(0,1]", Label::kII},
      {"harmonic-(1,inf)", Label::kIII}, {"harmonic-R+", Label::kIV},
      {"doubling-R", Label::kI},         {"doubling-cube-R", Label::kI},
      {"doubling-[0,inf)", Label::kII},  {"third-[-1,1]", Label::kIII},
      {"third-[0,1]", Label::kIV},       {"doubling-N0", Label::kV},
      {"doubling-Z", Label::kVI},        {"sum-R", Label::kI},
      {"sum-[0,inf)", Label::kII},       {"sum-minus-product-[0,1)", Label::kII},
  };
  int labelled = 0, axiom_only = 0;
  for (const auto& f : catalog()) {
    const auto samples = default_samples(f);
    const auto report = sampled_axiom_check(f, samples);
    t.expect(report.holds(), f.id + " sampled axioms");
    const auto it = table.find(f.id);
    if (it == table.end()) {
      const auto idem = analytic_idempotents(f);
      t.expect(!f.unit && !f.expected, f.id + " has a unit but no table entry");
      t.expect(f.mode == ArithmeticMode::kFloat || (idem.points.empty() && !idem.all),
               f.id + " should have no idempotent");
      ++axiom_only;
      continue;
    }
    const auto c = classify_family(f, samples);
    t.expect(c.result.label == it->second, f.id + " label " + std::string(to_string(c.result.label)));
    t.expect(c.matches(), f.id + " does not match its expected label");
    ++labelled;
  }
  t.expect(labelled == static_cast<int>(table.size()), "a labelled family is missing from the catalog");
  return t.outcome(std::to_string(labelled) + " labels reproduced, " + std::to_string(axiom_only) +
                   " unlabelled families pass axioms");
}

Outcome c4_six_combinations() {
  Tally t;
  std::map<std::string, int> seen;
  const auto record = [&](const PropertyFlags& f, const std::string& where) {
    try {
      seen[std::string(to_string(classify(f).label))]++;
    } catch (const Error&) {
      t.expect(false, "impossible flags at " + where);
    }
  };
  for (const auto& m : fixtures_list())
    for (Element e : idempotents(m)) record(finite_flags(m, e), "fixture");
  for (const auto& f : catalog())
    if (f.unit) record(classify_family(f, default_samples(f)).result.flags, f.id);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = generate_quasigroup(generated_order(seed), seed);
    for (Element e : idempotents(g.magma)) record(finite_flags(g.magma, e), "seed " + std::to_string(seed));
  }
  std::string labels;
  for (const auto& [label, count] : seen) labels += label + ":" + std::to_string(count) + " ";
  return t.outcome("observed " + labels);
}

Outcome c5_generation_round_trip() {
  Tally t;
  const auto start = Clock::now();
  std::size_t units = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = generate_quasigroup(generated_order(seed), seed);
    const auto tag = "seed " + std::to_string(seed);
    t.expect(check_axioms(g.magma).is_ccm(), tag + " fails M1-M3");
    const auto count = idempotents(g.magma).size();
    t.expect(count == 0 || count % 2 == 1, tag + " has an even idempotent count");
    const auto generating = group_table(g.params.group);
    for (Element e = 0; e < g.magma.order(); ++e) {
      const auto group = extract_group(g.magma, e);
      t.expect(group.has_value() && abelian_group_identity(*group) == e, tag + " extraction");
      if (group) t.expect(groups_isomorphic(*group, generating), tag + " group not isomorphic");
      ++units;
    }
  }
  const double seconds = ms_since(start) / 1000.0;
  t.expect(seconds < 60.0, "over the 60 s budget");
  std::ostringstream s;
  s << "200 magmas, " << units << " extractions, " << seconds << " s";
  return t.outcome(s.str());
}

Outcome c6_internal_monoid() {
  Tally t;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto m = generate_quasigroup(generated_order(seed), seed).magma;
    for (Element e : idempotents(m)) {
      const auto tag = "seed " + std::to_string(seed) + " e=" + std::to_string(e);
      const auto s = internal_monoid(m, e);
      t.expect(s.has_value(), tag + " no monoid");
      if (!s) continue;
      t.expect(!monoid_invariant_failure(m, e, s->star), tag + " invariants");
      t.expect(extract_group(m, e) == s->star, tag + " differs from extract_group");
      for (Element x = 0; x < m.order(); ++x)
        for (Element y = 0; y < m.order(); ++y)
          t.expect(solve_by_search(m, e, m.op(x, y)) == s->star.op(x, y), tag + " reconstruction");
      ++checked;
    }
  }
  return t.outcome(std::to_string(checked) + " (magma, idempotent) pairs");
}

Outcome c7_monoid_isomorphism() {
  Tally t;
  std::size_t magmas = 0, pairs = 0;
  const auto audit = [&](const FiniteMagma& m, const std::string& tag) {
    const auto units = idempotents(m);
    if (units.size() < 2) return;
    ++magmas;
    for (Element u : units)
      for (Element v : units) {
        if (u == v) continue;
        const auto f = monoid_isomorphism(m, u, v);
        const auto su = internal_monoid(m, u), sv = internal_monoid(m, v);
        t.expect(su && sv, tag + " missing monoid");
        if (!su || !sv) continue;
        t.expect(f(u) == v, tag + " f(u) != v");
        for (Element a = 0; a < m.order(); ++a) {
          const auto back = doubling(m, v, m.op(f(a), u));
          t.expect(back == a, tag + " inverse");
          for (Element b = 0; b < m.order(); ++b) {
            t.expect(f(su->star.op(a, b)) == sv->star.op(f(a), f(b)), tag + " not a monoid map");
            t.expect(su->star.op(a, b) == su->star.op(sv->star.op(a, b), v), tag + " interchange");
          }
        }
        ++pairs;
      }
  };
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    audit(generate_quasigroup(generated_order(seed), seed).magma, "seed " + std::to_string(seed));
  const auto generated = magmas;
  audit(fx::a2(), "A2");
  audit(fx::z9a(), "Z9a");
  t.expect(pairs > 0, "no magma with two idempotents");
  return t.outcome(std::to_string(generated) + " generated magmas with >= 2 idempotents, plus A2 and Z9a; " +
                   std::to_string(pairs) + " ordered unit pairs");
}

// All endomorphisms of a small magma by exhaustive search.
std::vector<Homomorphism> endomorphisms(const FiniteMagma& m) {
  std::vector<Homomorphism> out;
  const auto n = m.order();
  std::vector<Element> map(n, 0);
  while (true) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = map[m.op(a, b)] == m.op(map[a], map[b]);
    if (ok) out.emplace_back(m, m, map);
    std::size_t i = 0;
    while (i < n && ++map[i] == n) map[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<Homomorphism> scalings_and_constants(const FiniteMagma& m) {
  std::vector<Homomorphism> out;
  for (Element k = 0; k < m.order(); ++k) {
    std::vector<Element> map(m.order());
    for (Element x = 0; x < m.order(); ++x) map[x] = static_cast<Element>((k * x) % m.order());
    out.emplace_back(m, m, map);
  }
  for (Element e : idempotents(m)) out.push_back(constant_hom(m, m, e));
  return out;
}

Outcome c8_relations() {
  Tally t;
  std::mt19937_64 rng(8);
  const std::vector<std::pair<FiniteMagma, std::vector<Homomorphism>>> pools{
      {fx::a2(), endomorphisms(fx::a2())},
      {fx::f5a(), endomorphisms(fx::f5a())},
      {fx::z9a(), scalings_and_constants(fx::z9a())},
  };
  int equal_diagonal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [m, homs] = pools[trial % pools.size()];
    std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
    const auto& f1 = homs[pick(rng)];
    const auto& f2 = homs[pick(rng)];
    const auto f = pair_hom(f1, f2);
    // Every other trial swaps the components, which forces equal diagonals.
    const auto g = trial % 2 ? pair_hom(f2, f1) : pair_hom(homs[pick(rng)], homs[pick(rng)]);
    const auto r = equalizer_relation(m, m, f, g);
    t.expect(is_difunctional(r).holds(), "equalizer not difunctional");
    bool diagonal = true;
    const PairCodec codec{m.order()};
    for (Element x = 0; x < m.order(); ++x) diagonal &= f(codec.encode(x, x)) == g(codec.encode(x, x));
    if (diagonal) {
      ++equal_diagonal;
      t.expect(is_congruence(r).holds(), "equal-diagonal equalizer not a congruence");
    }
  }

  int subalgebras = 0;
  std::vector<FiniteMagma> carriers = fixtures_list();
  for (std::uint64_t seed = 0; seed < 40; ++seed) carriers.push_back(generate_quasigroup(2 + seed % 15, seed).magma);
  for (const auto& m : carriers)
    for (Element e : idempotents(m))
      for (Element x = 0; x < m.order(); ++x) {
        const std::vector<Element> seed{std::min(e, x), std::max(e, x)};
        const auto sub = subalgebra_closure(m, seed);
        const auto r = subalgebra_relation(m, sub, e);
        t.expect(is_internal(r).holds(), "subalgebra relation not internal");
        t.expect(is_reflexive(r).holds(), "subalgebra relation not reflexive");
        t.expect(transitivity_criterion(m, sub, e) == is_transitive(r).holds(), "criterion disagrees");
        ++subalgebras;
      }

  const auto z9 = fx::z9a();
  const auto mod3 = subalgebra_relation(z9, std::vector<Element>{0, 3, 6}, 0);
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) t.expect(mod3.contains(a, b) == ((a + 9 - b) % 3 == 0), "Z9a not mod 3");
  t.expect(is_congruence(mod3).holds(), "Z9a mod 3 not a congruence");

  return t.outcome("100 equalizers (" + std::to_string(equal_diagonal) + " equal-diagonal), " +
                   std::to_string(subalgebras) + " subalgebra relations, Z9a {0,3,6} = mod 3");
}

Outcome c9_kite() {
  Tally t;
  const auto f5 = fx::f5a();
  const auto one = fx::singleton();
  const auto to_one = constant_hom(f5, one, 0);
  const auto at0 = constant_hom(one, f5, 0);
  const auto corollary = KiteInput::make(to_one, at0, to_one, at0, identity_hom(f5), at0, identity_hom(f5));
  const auto span = build_pullback(corollary);
  const auto theta = kite_theta(corollary);
  const auto star = internal_monoid(f5, 0);
  t.expect(theta && star, "F5a corollary kite");
  if (theta && star)
    for (std::size_t p = 0; p < span.carrier.pairs.size(); ++p) {
      const auto [a, c] = span.carrier.pairs[p];
      t.expect((*theta)(static_cast<Element>(p)) == star->star.op(a, c), "theta != star");
    }

  const auto z9 = fx::z9a();
  const auto z3 = affine_mod_magma(3, 2, 0);
  std::vector<Element> reduce(9);
  for (Element x = 0; x < 9; ++x) reduce[x] = x % 3;
  const Homomorphism p(z9, z3, reduce);
  const auto z9_carrier = pullback_carrier(p, p);
  t.expect(z9_carrier.pairs.size() == 27, "Z9a carrier size");

  // Split kite with a carrier of the same size: A = C = T×T over B = T.
  const auto tt = product_magma(z3, z3);
  const PairCodec codec{3};
  std::vector<Element> first(9), section(3);
  for (Element x = 0; x < 9; ++x) first[x] = codec.decode(x).first;
  for (Element b = 0; b < 3; ++b) section[b] = codec.encode(b, 0);
  const Homomorphism f(tt, z3, first), r(z3, tt, section);
  const auto split = KiteInput::make(f, r, f, r, identity_hom(tt), r, identity_hom(tt));
  const auto split_span = build_pullback(split);
  t.expect(split_span.carrier.pairs.size() == 27, "split carrier size");
  const auto split_theta = kite_theta(split);
  t.expect(split_theta.has_value(), "split kite theta missing");
  if (split_theta) {
    t.expect(is_homomorphism(*split_theta).holds(), "theta not a homomorphism");
    for (Element a = 0; a < 9; ++a) {
      t.expect((*split_theta)(split_span.e1[a]) == a, "theta e1 != u");
      t.expect((*split_theta)(split_span.e2[a]) == a, "theta e2 != w");
    }
  }
  return t.outcome("F5a theta = star (25 pairs); Z9a pullback carrier " +
                   std::to_string(z9_carrier.pairs.size()) + "; split kite carrier " +
                   std::to_string(split_span.carrier.pairs.size()) + " with verified theta");
}

Outcome c10_weak_maltsev() {
  Tally t;
  auto magmas = fixtures_list();
  for (std::uint64_t seed = 0; seed < 50; ++seed) magmas.push_back(generate_quasigroup(generated_order(seed), seed).magma);
  for (const auto& m : magmas) {
    const auto n = static_cast<Element>(m.order());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        t.expect(weak_maltsev_p(m, x, y, y) == weak_maltsev_p(m, y, y, x), "p(x,y,y) != p(y,y,x)");
        for (Element a = 0; a < n; ++a)
          if (x != y) t.expect(weak_maltsev_p(m, x, a, a) != weak_maltsev_p(m, y, a, a), "p(-,a,a) not injective");
      }
  }
  return t.outcome(std::to_string(magmas.size()) + " magmas");
}

Outcome c11_doubling_additivity() {
  Tally t;
  std::vector<FiniteMagma> magmas{fx::a2(), fx::z9a()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) magmas.push_back(generate_quasigroup(1 + seed % 16, seed).magma);
  std::size_t quadruples = 0;
  for (const auto& m : magmas)
    for (Element u = 0; u < m.order(); ++u)
      for (Element v = 0; v < m.order(); ++v) {
        t.expect(doubling_additivity_check(m, u, v), "additivity fails");
        quadruples += m.order() * m.order();
      }
  return t.outcome(std::to_string(magmas.size()) + " magmas, " + std::to_string(quadruples) + " quadruples");
}

Outcome c12_midpoint_distributivity() {
  Tally t;
  const auto a2 = internal_monoid(fx::a2(), 0);
  const auto f5 = internal_monoid(fx::f5a(), 0);
  t.expect(a2 && f5, "monoid missing");
  if (!a2 || !f5) return t.outcome("");
  const auto ra = midpoint_distributivity_check(fx::a2(), *a2);
  const auto rf = midpoint_distributivity_check(fx::f5a(), *f5);
  t.expect(ra.distributive && ra.all_idempotent, "A2");
  t.expect(!rf.distributive && !rf.all_idempotent, "F5a");
  std::ostringstream s;
  s << "A2 (idempotent, distributive) = (" << ra.all_idempotent << "," << ra.distributive << "); F5a = ("
    << rf.all_idempotent << "," << rf.distributive << ")";
  return t.outcome(s.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixtures A2/A3", c1_fixtures},
      {"harmonic monoid formula", c2_harmonic_monoid},
      {"classification table", c3_classification_table},
      {"six flag combinations", c4_six_combinations},
      {"generation round trip", c5_generation_round_trip},
      {"internal monoid uniqueness", c6_internal_monoid},
      {"monoid isomorphism", c7_monoid_isomorphism},
      {"relation theorems", c8_relations},
      {"kite construction", c9_kite},
      {"weak Mal'tsev term", c10_weak_maltsev},
      {"doubling additivity", c11_doubling_additivity},
      {"midpoint distributivity", c12_midpoint_distributivity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
