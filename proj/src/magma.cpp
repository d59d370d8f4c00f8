#include "ccm/magma.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccm/error.hpp"
#include "ccm/kernels.hpp"
#include "text_format.hpp"

namespace ccm {

FiniteMagma::FiniteMagma(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) throw Error(ErrorKind::kPrecondition, "magma order must be at least 1");
  if (entries_.size() != order_ * order_)
    throw Error(ErrorKind::kPrecondition, "table has " + std::to_string(entries_.size()) +
                                              " entries, expected " +
                                              std::to_string(order_ * order_));
  for (auto e : entries_)
    if (e >= order_)
      throw Error(ErrorKind::kPrecondition, "entry " + std::to_string(e) + " >= order " +
                                                std::to_string(order_));
}

FiniteMagma FiniteMagma::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw Error(ErrorKind::kPrecondition, "table is not square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return FiniteMagma(rows.size(), std::move(entries));
}

Homomorphism::Homomorphism(FiniteMagma source_, FiniteMagma target_, std::vector<Element> map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_)) {
  if (map.size() != source.order())
    throw Error(ErrorKind::kPrecondition, "map length " + std::to_string(map.size()) +
                                              " differs from source order " +
                                              std::to_string(source.order()));
  for (auto x : map)
    if (!target.contains(x))
      throw Error(ErrorKind::kPrecondition, "map value " + std::to_string(x) +
                                                " outside the target carrier");
}

FiniteMagma parse_magma(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "missing order line");

  const auto header = detail::parse_numbers(lines.front());
  if (header.size() != 1 || header[0] == 0)
    throw Error(ErrorKind::kParse, "line " + std::to_string(lines.front().number) +
                                       ": header must be a single positive order");
  const auto n = static_cast<std::size_t>(header[0]);
  if (lines.size() != n + 1)
    throw Error(ErrorKind::kParse, "expected " + std::to_string(n) + " rows, found " +
                                       std::to_string(lines.size() - 1));

  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto row = detail::parse_numbers(lines[i]);
    if (row.size() != n)
      throw Error(ErrorKind::kParse, "line " + std::to_string(lines[i].number) + ": row has " +
                                         std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(n));
    for (auto v : row) {
      if (v >= n)
        throw Error(ErrorKind::kParse, "line " + std::to_string(lines[i].number) + ": entry " +
                                           std::to_string(v) + " >= order " + std::to_string(n));
      entries.push_back(static_cast<Element>(v));
    }
  }
  return FiniteMagma(n, std::move(entries));
}

std::string format_magma(const FiniteMagma& magma) {
  std::ostringstream out;
  out << magma.order() << '\n';
  for (Element a = 0; a < magma.order(); ++a) {
    const auto row = magma.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
  return out.str();
}

AxiomReport check_axioms(const FiniteMagma& magma) {
  AxiomReport report;
  report.commutative.counterexample = kernels::parallel::commutativity_violation(magma);
  report.cancellative.counterexample = kernels::parallel::cancellation_violation(magma);
  report.medial.counterexample = kernels::parallel::mediality_violation(magma);
  report.associative.counterexample = kernels::parallel::associativity_violation(magma);
  report.idempotents = idempotents(magma);
  return report;
}

std::vector<Element> idempotents(const FiniteMagma& magma) {
  std::vector<Element> out;
  for (Element a = 0; a < magma.order(); ++a)
    if (magma.op(a, a) == a) out.push_back(a);
  return out;
}

bool is_closed(const FiniteMagma& magma, std::span<const Element> subset) {
  std::vector<bool> in(magma.order(), false);
  for (auto x : subset) {
    if (!magma.contains(x))
      throw Error(ErrorKind::kPrecondition, "element " + std::to_string(x) + " not in carrier");
    in[x] = true;
  }
  for (auto x : subset)
    for (auto y : subset)
      if (!in[magma.op(x, y)]) return false;
  return true;
}

std::vector<Element> idempotent_subalgebra(const FiniteMagma& magma) {
  auto set = idempotents(magma);
  if (!is_closed(magma, set))
    throw Error(ErrorKind::kTheoremViolation,
                "idempotents are not closed under the operation; input is not a ccm-magma");
  return set;
}

std::vector<Element> subalgebra_closure(const FiniteMagma& magma, std::span<const Element> seed) {
  std::vector<bool> in(magma.order(), false);
  std::vector<Element> members;
  for (auto x : seed) {
    if (!magma.contains(x))
      throw Error(ErrorKind::kPrecondition, "element " + std::to_string(x) + " not in carrier");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  }
  // Each new member is combined with everything already present exactly once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto p : {magma.op(members[i], members[j]), magma.op(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Verdict<2> is_homomorphism(const Homomorphism& h) {
  const auto n = static_cast<Element>(h.source.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h(h.source.op(x, y)) != h.target.op(h(x), h(y))) return {std::array{x, y}};
  return {};
}

FiniteMagma product_magma(const FiniteMagma& left, const FiniteMagma& right) {
  const PairCodec codec{right.order()};
  return FiniteMagma::from_operation(left.order() * right.order(), [&](Element p, Element q) {
    const auto [a, b] = codec.decode(p);
    const auto [c, d] = codec.decode(q);
    return codec.encode(left.op(a, c), right.op(b, d));
  });
}

Homomorphism pair_hom(const Homomorphism& f1, const Homomorphism& f2) {
  if (!(f1.target == f2.target))
    throw Error(ErrorKind::kSignatureMismatch, "pair_hom: the two maps have different targets");
  const auto& target = f1.target;
  const PairCodec codec{f2.source.order()};
  auto source = product_magma(f1.source, f2.source);
  std::vector<Element> map(source.order());
  for (Element p = 0; p < source.order(); ++p) {
    const auto [x, y] = codec.decode(p);
    map[p] = target.op(f1(x), f2(y));
  }
  return Homomorphism(std::move(source), target, std::move(map));
}

FiniteMagma derived_magma(const FiniteMagma& magma, const Homomorphism& g, Element a) {
  if (!(g.source == magma) || !(g.target == magma))
    throw Error(ErrorKind::kSignatureMismatch, "derived_magma: g must be an endomorphism");
  if (!magma.contains(a))
    throw Error(ErrorKind::kPrecondition, "derived_magma: a outside the carrier");
  std::vector<bool> hit(magma.order(), false);
  for (auto v : g.map) {
    if (hit[v]) throw Error(ErrorKind::kNotInjective, "derived_magma: g is not injective");
    hit[v] = true;
  }
  if (const auto bad = is_homomorphism(g); !bad)
    throw Error(ErrorKind::kNotHomomorphism,
                "derived_magma: g is not a homomorphism at (" +
                    std::to_string((*bad.counterexample)[0]) + ", " +
                    std::to_string((*bad.counterexample)[1]) + ")");
  return FiniteMagma::from_operation(
      magma.order(), [&](Element x, Element y) { return magma.op(g(magma.op(x, y)), a); });
}

Element weak_maltsev_p(const FiniteMagma& magma, Element x, Element y, Element z) {
  return magma.op(magma.op(y, x), magma.op(z, y));
}

FiniteMagma affine_mod_magma(std::size_t n, std::int64_t alpha, std::int64_t beta) {
  const auto m = static_cast<std::int64_t>(n);
  const auto reduce = [m](std::int64_t v) { return ((v % m) + m) % m; };
  return FiniteMagma::from_operation(n, [&](Element x, Element y) {
    return static_cast<Element>(reduce(reduce(alpha) * reduce(x + y) + reduce(beta)));
  });
}

FiniteMagma cyclic_group(std::size_t n) { return affine_mod_magma(n, 1, 0); }

Homomorphism identity_hom(const FiniteMagma& magma) {
  std::vector<Element> map(magma.order());
  std::iota(map.begin(), map.end(), Element{0});
  return Homomorphism(magma, magma, std::move(map));
}

Homomorphism constant_hom(const FiniteMagma& source, const FiniteMagma& target, Element value) {
  return Homomorphism(source, target, std::vector<Element>(source.order(), value));
}

}  // namespace ccm
