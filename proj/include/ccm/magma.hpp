#pragma once

// Finite commutative cancellative medial magmas stored as dense Cayley
// tables over the carrier 0..n-1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

using Element = std::uint32_t;

/// Result of an exhaustive check: holds iff no counterexample was found.
/// Counterexamples are always the lexicographically smallest offending tuple.
template <std::size_t N>
struct Verdict {
  std::optional<std::array<Element, N>> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
  explicit operator bool() const noexcept { return holds(); }
};

class FiniteMagma {
 public:
  /// Row-major table of `order * order` entries; every entry must be < order.
  FiniteMagma(std::size_t order, std::vector<Element> entries);

  static FiniteMagma from_rows(const std::vector<std::vector<Element>>& rows);

  template <typename Op>
  static FiniteMagma from_operation(std::size_t order, Op&& op) {
    std::vector<Element> entries(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        entries[a * order + b] =
            static_cast<Element>(op(static_cast<Element>(a), static_cast<Element>(b)));
    return FiniteMagma(order, std::move(entries));
  }

  std::size_t order() const noexcept { return order_; }

  Element op(Element a, Element b) const noexcept { return entries_[a * order_ + b]; }

  std::span<const Element> row(Element a) const noexcept {
    return {entries_.data() + a * order_, order_};
  }

  std::span<const Element> entries() const noexcept { return entries_; }

  bool contains(Element a) const noexcept { return a < order_; }

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 private:
  std::size_t order_;
  std::vector<Element> entries_;
};

struct AxiomReport {
  Verdict<2> commutative;   // (a, b) with a⊕b ≠ b⊕a
  Verdict<3> cancellative;  // (a, b, c), a < b, with a⊕c = b⊕c or c⊕a = c⊕b
  Verdict<4> medial;        // (a, b, c, d) breaking (a⊕b)⊕(c⊕d) = (a⊕c)⊕(b⊕d)
  Verdict<3> associative;   // (a, b, c) with (a⊕b)⊕c ≠ a⊕(b⊕c)
  std::vector<Element> idempotents;

  bool is_ccm() const noexcept {
    return commutative.holds() && cancellative.holds() && medial.holds();
  }
};

struct Homomorphism {
  Homomorphism(FiniteMagma source, FiniteMagma target, std::vector<Element> map);

  Element operator()(Element x) const noexcept { return map[x]; }

  FiniteMagma source;
  FiniteMagma target;
  std::vector<Element> map;
};

/// Parses the Cayley-table text format. No axiom checking is performed.
FiniteMagma parse_magma(std::string_view text);
/// Canonical text form: order line, then one space-separated row per line.
std::string format_magma(const FiniteMagma& magma);

/// Runs every axiom scan to completion; nothing short-circuits.
AxiomReport check_axioms(const FiniteMagma& magma);

std::vector<Element> idempotents(const FiniteMagma& magma);
/// Idempotents of a ccm-magma; throws if they fail to form a subalgebra.
std::vector<Element> idempotent_subalgebra(const FiniteMagma& magma);
std::vector<Element> subalgebra_closure(const FiniteMagma& magma,
                                        std::span<const Element> seed);
bool is_closed(const FiniteMagma& magma, std::span<const Element> subset);

Verdict<2> is_homomorphism(const Homomorphism& h);

/// Componentwise product. Pair (i, j) is encoded as i * right.order() + j.
FiniteMagma product_magma(const FiniteMagma& left, const FiniteMagma& right);

struct PairCodec {
  std::size_t right_order;

  Element encode(Element i, Element j) const noexcept {
    return static_cast<Element>(i * right_order + j);
  }
  std::pair<Element, Element> decode(Element p) const noexcept {
    return {static_cast<Element>(p / right_order), static_cast<Element>(p % right_order)};
  }
};

/// (x, y) ↦ f1(x) ⊕ f2(y) as a homomorphism from source(f1) × source(f2).
Homomorphism pair_hom(const Homomorphism& f1, const Homomorphism& f2);

/// The magma (x, y) ↦ g(x⊕y) ⊕ a for an injective endomorphism g.
FiniteMagma derived_magma(const FiniteMagma& magma, const Homomorphism& g, Element a);

/// (y⊕x) ⊕ (z⊕y).
Element weak_maltsev_p(const FiniteMagma& magma, Element x, Element y, Element z);

/// x⊕y = alpha·(x+y) + beta over Z_n. A ccm-magma iff gcd(alpha, n) = 1.
FiniteMagma affine_mod_magma(std::size_t n, std::int64_t alpha, std::int64_t beta);

/// Additive group Z_n.
FiniteMagma cyclic_group(std::size_t n);

Homomorphism identity_hom(const FiniteMagma& magma);
Homomorphism constant_hom(const FiniteMagma& source, const FiniteMagma& target,
                          Element value);

}  // namespace ccm
