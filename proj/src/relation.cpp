#include "ccm/relation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccm/error.hpp"
#include "text_format.hpp"

namespace ccm {

namespace {

void require_square(const BinaryRelation& r, std::string_view what) {
  if (!(r.left() == r.right()))
    throw Error(ErrorKind::kSignatureMismatch,
                std::string(what) + " needs a relation on a single carrier");
}

std::vector<bool> membership(const FiniteMagma& m, std::span<const Element> subset) {
  std::vector<bool> in(m.order(), false);
  for (auto x : subset) {
    if (!m.contains(x))
      throw Error(ErrorKind::kPrecondition, "element " + std::to_string(x) + " not in carrier");
    in[x] = true;
  }
  return in;
}

void require_relation_inputs(const FiniteMagma& m, std::span<const Element> subalgebra,
                             Element e) {
  if (!is_closed(m, subalgebra)) {
    const auto closure = subalgebra_closure(m, subalgebra);
    std::string hint;
    for (auto x : closure) hint += (hint.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorKind::kNotClosed, "subset is not closed under ⊕; its closure is {" + hint + "}");
  }
  if (std::find(subalgebra.begin(), subalgebra.end(), e) == subalgebra.end())
    throw Error(ErrorKind::kPrecondition, "unit " + std::to_string(e) + " is not in the subalgebra");
  if (m.op(e, e) != e)
    throw Error(ErrorKind::kNotIdempotent, std::to_string(e) + " is not idempotent");
}

std::vector<Element> compose(std::span<const Element> outer, std::span<const Element> inner) {
  std::vector<Element> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

BinaryRelation::BinaryRelation(FiniteMagma left, FiniteMagma right)
    : left_(std::move(left)),
      right_(std::move(right)),
      bits_(left_.order() * right_.order(), 0) {}

std::size_t BinaryRelation::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string format_relation(const BinaryRelation& r) {
  std::ostringstream out;
  out << r.rows() << ' ' << r.cols() << '\n';
  for (Element a = 0; a < r.rows(); ++a) {
    for (Element b = 0; b < r.cols(); ++b) out << (b ? " " : "") << (r.contains(a, b) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

BinaryRelation parse_relation(std::string_view text, const FiniteMagma& left,
                              const FiniteMagma& right) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "missing 'rows cols' line");
  const auto header = detail::parse_numbers(lines.front());
  if (header.size() != 2 || header[0] != left.order() || header[1] != right.order())
    throw Error(ErrorKind::kParse, "header must be '" + std::to_string(left.order()) + " " +
                                       std::to_string(right.order()) + "'");
  if (lines.size() != left.order() + 1)
    throw Error(ErrorKind::kParse, "expected " + std::to_string(left.order()) + " rows");
  BinaryRelation r(left, right);
  for (Element a = 0; a < left.order(); ++a) {
    const auto row = detail::parse_numbers(lines[a + 1]);
    if (row.size() != right.order())
      throw Error(ErrorKind::kParse, "line " + std::to_string(lines[a + 1].number) +
                                         ": wrong number of flags");
    for (Element b = 0; b < right.order(); ++b) {
      if (row[b] > 1)
        throw Error(ErrorKind::kParse, "line " + std::to_string(lines[a + 1].number) +
                                           ": flags must be 0 or 1");
      if (row[b]) r.insert(a, b);
    }
  }
  return r;
}

Verdict<4> is_internal(const BinaryRelation& r) {
  std::vector<std::pair<Element, Element>> members;
  for (Element a = 0; a < r.rows(); ++a)
    for (Element b = 0; b < r.cols(); ++b)
      if (r.contains(a, b)) members.emplace_back(a, b);
  for (const auto& [a, b] : members)
    for (const auto& [a2, b2] : members)
      if (!r.contains(r.left().op(a, a2), r.right().op(b, b2))) return {std::array{a, b, a2, b2}};
  return {};
}

Verdict<1> is_reflexive(const BinaryRelation& r) {
  require_square(r, "reflexivity");
  for (Element a = 0; a < r.rows(); ++a)
    if (!r.contains(a, a)) return {std::array{a}};
  return {};
}

Verdict<2> is_symmetric(const BinaryRelation& r) {
  require_square(r, "symmetry");
  for (Element a = 0; a < r.rows(); ++a)
    for (Element b = 0; b < r.cols(); ++b)
      if (r.contains(a, b) && !r.contains(b, a)) return {std::array{a, b}};
  return {};
}

Verdict<3> is_transitive(const BinaryRelation& r) {
  require_square(r, "transitivity");
  return {kernels::parallel::transitivity_violation(r.grid())};
}

Verdict<4> is_difunctional(const BinaryRelation& r) {
  return {kernels::parallel::difunctionality_violation(r.grid())};
}

CongruenceReport is_congruence(const BinaryRelation& r) {
  return {is_internal(r), is_reflexive(r), is_symmetric(r), is_transitive(r)};
}

std::vector<std::vector<Element>> equivalence_classes(const BinaryRelation& r) {
  require_square(r, "equivalence classes");
  std::vector<bool> seen(r.rows(), false);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < r.rows(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> cls;
    for (Element b = 0; b < r.cols(); ++b)
      if (r.contains(a, b)) {
        cls.push_back(b);
        seen[b] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

BinaryRelation equalizer_relation(const FiniteMagma& x, const FiniteMagma& y,
                                  const Homomorphism& f, const Homomorphism& g) {
  const auto product = product_magma(x, y);
  if (!(f.source == product) || !(g.source == product))
    throw Error(ErrorKind::kSignatureMismatch, "equalizer_relation: maps must start at X × Y");
  if (!(f.target == g.target))
    throw Error(ErrorKind::kSignatureMismatch, "equalizer_relation: maps must share a target");
  const PairCodec codec{y.order()};
  return BinaryRelation::from_predicate(x, y, [&](Element a, Element b) {
    const auto p = codec.encode(a, b);
    return f(p) == g(p);
  });
}

std::optional<Element> subalgebra_witness(const FiniteMagma& m,
                                          std::span<const Element> subalgebra, Element e,
                                          Element a, Element b) {
  std::vector<Element> sorted(subalgebra.begin(), subalgebra.end());
  std::sort(sorted.begin(), sorted.end());
  const auto target = m.op(a, e);
  for (auto x : sorted)
    if (m.op(x, b) == target) return x;
  return std::nullopt;
}

BinaryRelation subalgebra_relation(const FiniteMagma& m, std::span<const Element> subalgebra,
                                   Element e) {
  require_relation_inputs(m, subalgebra, e);
  return BinaryRelation::from_predicate(m, m, [&](Element a, Element b) {
    return subalgebra_witness(m, subalgebra, e, a, b).has_value();
  });
}

bool transitivity_criterion(const FiniteMagma& m, std::span<const Element> subalgebra,
                            Element e) {
  require_relation_inputs(m, subalgebra, e);
  const auto in = membership(m, subalgebra);
  const auto n = static_cast<Element>(m.order());

  bool criterion = true;
  for (auto x : subalgebra) {
    for (auto y : subalgebra) {
      bool z_exists = false;
      for (Element z = 0; z < n && !z_exists; ++z)
        z_exists = in[z] && m.op(z, e) == m.op(x, y);
      if (z_exists) continue;
      // No z: the criterion fails as soon as some c admits a and b.
      for (Element c = 0; c < n && criterion; ++c)
        for (Element b = 0; b < n && criterion; ++b) {
          if (m.op(b, e) != m.op(y, c)) continue;
          for (Element a = 0; a < n; ++a)
            if (m.op(a, e) == m.op(x, b)) {
              criterion = false;
              break;
            }
        }
    }
  }

  const bool direct = is_transitive(subalgebra_relation(m, subalgebra, e)).holds();
  if (criterion != direct)
    throw Error(ErrorKind::kTheoremViolation,
                "transitivity criterion disagrees with the direct transitivity check");
  return criterion;
}

KiteInput KiteInput::make(Homomorphism f, Homomorphism r, Homomorphism g, Homomorphism s,
                          Homomorphism u, Homomorphism v, Homomorphism w) {
  const auto signature = [](const Homomorphism& h, const FiniteMagma& from,
                            const FiniteMagma& to, std::string_view name) {
    if (!(h.source == from) || !(h.target == to))
      throw Error(ErrorKind::kSignatureMismatch,
                  "kite: " + std::string(name) + " has the wrong source or target");
    if (!is_homomorphism(h))
      throw Error(ErrorKind::kNotHomomorphism, "kite: " + std::string(name) + " is not a homomorphism");
  };
  const auto& A = f.source;
  const auto& B = f.target;
  const auto& C = g.source;
  const auto& D = v.target;
  signature(f, A, B, "f");
  signature(r, B, A, "r");
  signature(g, C, B, "g");
  signature(s, B, C, "s");
  signature(u, A, D, "u");
  signature(v, B, D, "v");
  signature(w, C, D, "w");

  std::vector<Element> id(B.order());
  std::iota(id.begin(), id.end(), Element{0});
  if (compose(f.map, r.map) != id)
    throw Error(ErrorKind::kPrecondition, "kite: f∘r is not the identity on B");
  if (compose(g.map, s.map) != id)
    throw Error(ErrorKind::kPrecondition, "kite: g∘s is not the identity on B");
  if (compose(u.map, r.map) != v.map || compose(w.map, s.map) != v.map)
    throw Error(ErrorKind::kPrecondition, "kite: u∘r = v = w∘s does not hold");

  return KiteInput{A, B, C, D, std::move(f), std::move(r), std::move(g), std::move(s),
                   std::move(u), std::move(v), std::move(w)};
}

std::optional<Element> PullbackCarrier::index_of(Element a, Element c) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{a, c});
  if (it == pairs.end() || *it != std::pair{a, c}) return std::nullopt;
  return static_cast<Element>(it - pairs.begin());
}

PullbackCarrier pullback_carrier(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.target == g.target))
    throw Error(ErrorKind::kSignatureMismatch, "pullback: f and g need a common target");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < f.source.order(); ++a)
    for (Element c = 0; c < g.source.order(); ++c)
      if (f(a) == g(c)) pairs.emplace_back(a, c);

  PullbackCarrier carrier{pairs, FiniteMagma(1, {0})};
  const auto n = pairs.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto idx = carrier.index_of(f.source.op(pairs[i].first, pairs[j].first),
                                        g.source.op(pairs[i].second, pairs[j].second));
      if (!idx)
        throw Error(ErrorKind::kTheoremViolation, "pullback carrier is not closed under ⊕");
      table[i * n + j] = *idx;
    }
  carrier.magma = FiniteMagma(n, std::move(table));
  return carrier;
}

PullbackSpan build_pullback(const KiteInput& k) {
  PullbackSpan span{pullback_carrier(k.f, k.g), {}, {}, {}, {}};
  for (const auto& [a, c] : span.carrier.pairs) {
    span.pi1.push_back(a);
    span.pi2.push_back(c);
  }
  for (Element a = 0; a < k.a.order(); ++a)
    span.e1.push_back(*span.carrier.index_of(a, k.s(k.f(a))));
  for (Element c = 0; c < k.c.order(); ++c)
    span.e2.push_back(*span.carrier.index_of(k.r(k.g(c)), c));

  for (Element a = 0; a < k.a.order(); ++a)
    if (span.pi1[span.e1[a]] != a)
      throw Error(ErrorKind::kTheoremViolation, "π1∘e1 is not the identity");
  for (Element c = 0; c < k.c.order(); ++c)
    if (span.pi2[span.e2[c]] != c)
      throw Error(ErrorKind::kTheoremViolation, "π2∘e2 is not the identity");
  return span;
}

std::optional<Homomorphism> kite_theta(const KiteInput& k) {
  const auto span = build_pullback(k);
  const auto& D = k.d;
  std::vector<Element> theta;
  theta.reserve(span.carrier.pairs.size());
  for (const auto& [a, c] : span.carrier.pairs) {
    const auto vb = k.v(k.f(a));
    const auto rhs = D.op(k.u(a), k.w(c));
    std::optional<Element> solution;
    for (Element x = 0; x < D.order(); ++x) {
      if (D.op(x, vb) != rhs) continue;
      if (solution)
        throw Error(ErrorKind::kTheoremViolation, "x ⊕ v(b) = u(a) ⊕ w(c) has two solutions");
      solution = x;
    }
    if (!solution) return std::nullopt;
    theta.push_back(*solution);
  }

  Homomorphism result(span.carrier.magma, D, std::move(theta));
  if (!is_homomorphism(result))
    throw Error(ErrorKind::kTheoremViolation, "θ is not a homomorphism");
  if (compose(result.map, span.e1) != k.u.map)
    throw Error(ErrorKind::kTheoremViolation, "θ∘e1 != u");
  if (compose(result.map, span.e2) != k.w.map)
    throw Error(ErrorKind::kTheoremViolation, "θ∘e2 != w");
  return result;
}

}  // namespace ccm
