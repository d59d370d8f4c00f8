#include "ccm/internal.hpp"

#include <array>

#include "ccm/error.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

namespace {

void require_idempotent(const FiniteMagma& m, Element e) {
  if (!m.contains(e))
    throw Error(ErrorKind::kPrecondition, "unit " + std::to_string(e) + " not in carrier");
  if (m.op(e, e) != e)
    throw Error(ErrorKind::kNotIdempotent, std::to_string(e) + " is not idempotent (" +
                                               std::to_string(e) + "⊕" + std::to_string(e) +
                                               "=" + std::to_string(m.op(e, e)) + ")");
}

}  // namespace

std::optional<Element> doubling(const FiniteMagma& m, Element e, Element a) {
  for (Element x = 0; x < m.order(); ++x)
    if (m.op(x, e) == a) return x;
  return std::nullopt;
}

std::optional<Element> negation(const FiniteMagma& m, Element e, Element a) {
  for (Element x = 0; x < m.order(); ++x)
    if (m.op(x, a) == e) return x;
  return std::nullopt;
}

bool is_expansive(const FiniteMagma& m, Element e) {
  for (Element a = 0; a < m.order(); ++a)
    if (!doubling(m, e, a)) return false;
  return true;
}

bool is_symmetric(const FiniteMagma& m, Element e) {
  for (Element a = 0; a < m.order(); ++a)
    if (!negation(m, e, a)) return false;
  return true;
}

bool is_homogeneous(const FiniteMagma& m) {
  for (Element e = 0; e < m.order(); ++e)
    if (!is_expansive(m, e)) return false;
  return true;
}

std::optional<Element> homogeneity_witness(const FiniteMagma& m, Element e, Element u,
                                           Element v) {
  const auto neg_u = negation(m, e, u);
  if (!neg_u) return std::nullopt;
  const auto inner = doubling(m, e, m.op(v, m.op(e, *neg_u)));
  if (!inner) return std::nullopt;
  return doubling(m, e, *inner);
}

std::optional<std::string> monoid_invariant_failure(const FiniteMagma& base, Element unit,
                                                    const FiniteMagma& star) {
  const auto n = static_cast<Element>(base.order());
  if (star.order() != n) return "star table has the wrong order";
  if (base.op(unit, unit) != unit) return "unit is not idempotent";
  for (Element x = 0; x < n; ++x)
    if (star.op(unit, x) != x || star.op(x, unit) != x) return "unit law";
  if (kernels::parallel::commutativity_violation(star)) return "commutativity";
  if (kernels::parallel::associativity_violation(star)) return "associativity";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (base.op(star.op(x, y), unit) != base.op(x, y)) return "defining identity";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w)
          if (base.op(star.op(x, y), star.op(z, w)) != star.op(base.op(x, z), base.op(y, w)))
            return "compatibility with ⊕";
  return std::nullopt;
}

std::optional<MonoidStructure> internal_monoid(const FiniteMagma& m, Element e) {
  require_idempotent(m, e);
  const auto n = m.order();

  // solution[v] = the θ with θ⊕e = v, when one exists.
  std::vector<std::optional<Element>> solution(n);
  for (Element t = 0; t < n; ++t)
    if (!solution[m.op(t, e)]) solution[m.op(t, e)] = t;

  std::vector<Element> star(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto theta = solution[m.op(x, y)];
      if (!theta) return std::nullopt;
      star[x * n + y] = *theta;
    }

  MonoidStructure result{m, e, FiniteMagma(n, std::move(star))};
  if (const auto failure = monoid_invariant_failure(m, e, result.star))
    throw Error(ErrorKind::kTheoremViolation,
                "constructed star table violates " + *failure + "; input is not a ccm-magma");
  return result;
}

std::optional<GroupStructure> internal_group(const FiniteMagma& m, Element e) {
  auto monoid = internal_monoid(m, e);
  if (!monoid) return std::nullopt;
  std::vector<Element> inverse(m.order());
  for (Element a = 0; a < m.order(); ++a) {
    const auto neg = negation(m, e, a);
    if (!neg) return std::nullopt;
    inverse[a] = *neg;
  }
  for (Element a = 0; a < m.order(); ++a)
    if (monoid->star.op(inverse[a], a) != e)
      throw Error(ErrorKind::kTheoremViolation,
                  "-_e(" + std::to_string(a) + ") is not a *_e inverse");
  return GroupStructure{std::move(*monoid), std::move(inverse)};
}

Homomorphism monoid_isomorphism(const FiniteMagma& m, Element u, Element v) {
  require_idempotent(m, u);
  require_idempotent(m, v);
  const auto n = static_cast<Element>(m.order());

  const auto transport = [&](Element from, Element to) {
    std::vector<Element> map(n);
    for (Element a = 0; a < n; ++a) {
      const auto d = doubling(m, from, m.op(a, to));
      if (!d)
        throw Error(ErrorKind::kPrecondition,
                    "magma is not " + std::to_string(from) + "-expansive");
      map[a] = *d;
    }
    return map;
  };
  const auto f = transport(u, v);
  const auto g = transport(v, u);

  const auto star_u = internal_monoid(m, u);
  const auto star_v = internal_monoid(m, v);
  if (!star_u || !star_v)
    throw Error(ErrorKind::kTheoremViolation, "missing internal monoid on an expansive magma");
  const auto& su = star_u->star;
  const auto& sv = star_v->star;

  if (f[u] != v) throw Error(ErrorKind::kTheoremViolation, "f(u) != v");
  for (Element a = 0; a < n; ++a) {
    if (g[f[a]] != a || f[g[a]] != a)
      throw Error(ErrorKind::kTheoremViolation, "f and g are not mutually inverse");
    for (Element b = 0; b < n; ++b) {
      if (f[su.op(a, b)] != sv.op(f[a], f[b]))
        throw Error(ErrorKind::kTheoremViolation, "f does not preserve the star operation");
      if (su.op(a, b) != su.op(sv.op(a, b), v))
        throw Error(ErrorKind::kTheoremViolation, "a *_u b != (a *_v b) *_u v");
    }
  }
  return Homomorphism(m, m, f);
}

bool doubling_additivity_check(const FiniteMagma& m, Element u, Element v) {
  const auto uv = m.op(u, v);
  for (Element a = 0; a < m.order(); ++a)
    for (Element b = 0; b < m.order(); ++b) {
      const auto da = doubling(m, u, a);
      const auto db = doubling(m, v, b);
      const auto dab = doubling(m, uv, m.op(a, b));
      if (!da || !db || !dab || m.op(*da, *db) != *dab) return false;
    }
  return true;
}

AssociativityEquivalences associativity_equivalences(const FiniteMagma& m, Element e) {
  require_idempotent(m, e);
  AssociativityEquivalences r{};
  r.associative = !kernels::parallel::associativity_violation(m).has_value();
  r.unit = true;
  r.doubling_identity = true;
  for (Element a = 0; a < m.order(); ++a) {
    if (m.op(a, e) != a || m.op(e, a) != a) r.unit = false;
    if (doubling(m, e, a) != a) r.doubling_identity = false;
  }
  r.monoid = !monoid_invariant_failure(m, e, m).has_value();
  if (!r.agree())
    throw Error(ErrorKind::kTheoremViolation,
                "associativity equivalences disagree; input is not a ccm-magma");
  return r;
}

MidpointDistributivity midpoint_distributivity_check(const FiniteMagma& m,
                                                     const MonoidStructure& s) {
  MidpointDistributivity r{idempotents(m).size() == m.order(), true};
  const auto n = static_cast<Element>(m.order());
  for (Element x = 0; x < n && r.distributive; ++x)
    for (Element y = 0; y < n && r.distributive; ++y)
      for (Element z = 0; z < n; ++z)
        if (s.star.op(x, m.op(y, z)) != m.op(s.star.op(x, y), s.star.op(x, z))) {
          r.distributive = false;
          break;
        }
  if (r.all_idempotent != r.distributive)
    throw Error(ErrorKind::kTheoremViolation,
                "midpoint flag and distributivity flag disagree");
  return r;
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kI: return "I";
    case Label::kII: return "II";
    case Label::kIII: return "III";
    case Label::kIV: return "IV";
    case Label::kV: return "V";
    case Label::kVI: return "VI";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view text) {
  for (auto l : {Label::kI, Label::kII, Label::kIII, Label::kIV, Label::kV, Label::kVI})
    if (to_string(l) == text) return l;
  return std::nullopt;
}

ClassificationLabel classify(PropertyFlags flags) {
  // Columns in table order: expansive, symmetric, monoid, group.
  static constexpr std::array<std::pair<Label, PropertyFlags>, 6> kColumns{{
      {Label::kI, {true, true, true, true}},
      {Label::kII, {true, false, true, false}},
      {Label::kIII, {false, true, false, false}},
      {Label::kIV, {false, false, false, false}},
      {Label::kV, {false, false, true, false}},
      {Label::kVI, {false, true, true, true}},
  }};
  for (const auto& [label, column] : kColumns)
    if (column == flags) return {label, flags};
  throw Error(ErrorKind::kInvalidCombination,
              std::string("flag combination (expansive=") + (flags.expansive ? "yes" : "no") +
                  ", symmetric=" + (flags.symmetric ? "yes" : "no") +
                  ", monoid=" + (flags.monoid ? "yes" : "no") +
                  ", group=" + (flags.group ? "yes" : "no") + ") is not one of the six");
}

PropertyFlags finite_flags(const FiniteMagma& m, Element e) {
  PropertyFlags flags{};
  flags.expansive = is_expansive(m, e);
  flags.symmetric = is_symmetric(m, e);
  flags.monoid = internal_monoid(m, e).has_value();
  flags.group = internal_group(m, e).has_value();
  return flags;
}

}  // namespace ccm
