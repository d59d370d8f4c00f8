#pragma once

// Internal binary relations between finite ccm-magmas and the pullback
// ("kite") construction of the weakly Mal'tsev property.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccm/kernels.hpp"
#include "ccm/magma.hpp"

namespace ccm {

class BinaryRelation {
 public:
  /// Empty relation between the two carriers.
  BinaryRelation(FiniteMagma left, FiniteMagma right);

  template <typename Pred>
  static BinaryRelation from_predicate(FiniteMagma left, FiniteMagma right, Pred&& member) {
    BinaryRelation r(std::move(left), std::move(right));
    for (Element a = 0; a < r.rows(); ++a)
      for (Element b = 0; b < r.cols(); ++b)
        if (member(a, b)) r.insert(a, b);
    return r;
  }

  const FiniteMagma& left() const noexcept { return left_; }
  const FiniteMagma& right() const noexcept { return right_; }
  std::size_t rows() const noexcept { return left_.order(); }
  std::size_t cols() const noexcept { return right_.order(); }

  bool contains(Element a, Element b) const noexcept { return bits_[a * cols() + b] != 0; }
  void insert(Element a, Element b) noexcept { bits_[a * cols() + b] = 1; }
  std::size_t size() const noexcept;

  kernels::FlagGrid grid() const noexcept { return {rows(), cols(), bits_}; }

  friend bool operator==(const BinaryRelation& x, const BinaryRelation& y) {
    return x.left_ == y.left_ && x.right_ == y.right_ && x.bits_ == y.bits_;
  }

 private:
  FiniteMagma left_;
  FiniteMagma right_;
  std::vector<std::uint8_t> bits_;
};

/// 0/1 grid text: "rows cols" line, then one row of flags per line.
std::string format_relation(const BinaryRelation& r);
/// Reads a grid written by format_relation; carriers are supplied by the caller.
BinaryRelation parse_relation(std::string_view text, const FiniteMagma& left,
                              const FiniteMagma& right);

/// Closed under the componentwise operation. Counterexample (a, b, a', b').
Verdict<4> is_internal(const BinaryRelation& r);
Verdict<1> is_reflexive(const BinaryRelation& r);
Verdict<2> is_symmetric(const BinaryRelation& r);
Verdict<3> is_transitive(const BinaryRelation& r);
Verdict<4> is_difunctional(const BinaryRelation& r);

struct CongruenceReport {
  Verdict<4> internal;
  Verdict<1> reflexive;
  Verdict<2> symmetric;
  Verdict<3> transitive;

  bool holds() const noexcept {
    return internal.holds() && reflexive.holds() && symmetric.holds() && transitive.holds();
  }
};

CongruenceReport is_congruence(const BinaryRelation& r);

/// Equivalence classes of a relation that is an equivalence (sorted).
std::vector<std::vector<Element>> equivalence_classes(const BinaryRelation& r);

/// x R y ⟺ f(x, y) = g(x, y) for homomorphisms f, g : X × Y → B.
BinaryRelation equalizer_relation(const FiniteMagma& x, const FiniteMagma& y,
                                  const Homomorphism& f, const Homomorphism& g);

/// a R b ⟺ ∃ x ∈ X, a⊕e = x⊕b, for a subalgebra X containing the idempotent e.
BinaryRelation subalgebra_relation(const FiniteMagma& m, std::span<const Element> subalgebra,
                                   Element e);
/// Smallest x ∈ X with a⊕e = x⊕b.
std::optional<Element> subalgebra_witness(const FiniteMagma& m,
                                          std::span<const Element> subalgebra, Element e,
                                          Element a, Element b);

/// The exact iff-condition for transitivity of subalgebra_relation, checked
/// by search; throws if it disagrees with a direct transitivity check.
bool transitivity_criterion(const FiniteMagma& m, std::span<const Element> subalgebra,
                            Element e);

/// A ← B → C split epimorphisms f, g with sections r, s, and a cocone u, v, w
/// into D. Invariants are verified by `make`.
struct KiteInput {
  FiniteMagma a, b, c, d;
  Homomorphism f, r, g, s, u, v, w;

  static KiteInput make(Homomorphism f, Homomorphism r, Homomorphism g, Homomorphism s,
                        Homomorphism u, Homomorphism v, Homomorphism w);
};

/// {(a, c) : f(a) = g(c)} with the componentwise operation.
struct PullbackCarrier {
  std::vector<std::pair<Element, Element>> pairs;
  FiniteMagma magma;

  std::optional<Element> index_of(Element a, Element c) const;
};

/// Only needs f : A → B and g : C → B. Throws if the carrier is not closed.
PullbackCarrier pullback_carrier(const Homomorphism& f, const Homomorphism& g);

struct PullbackSpan {
  PullbackCarrier carrier;
  std::vector<Element> pi1;  // carrier → A
  std::vector<Element> pi2;  // carrier → C
  std::vector<Element> e1;   // A → carrier, a ↦ (a, s f(a))
  std::vector<Element> e2;   // C → carrier, c ↦ (r g(c), c)
};

PullbackSpan build_pullback(const KiteInput& k);

/// θ(a, c) = the x ∈ D with x ⊕ v(b) = u(a) ⊕ w(c), b = f(a) = g(c). Absent
/// when the equation is unsolvable for some carrier pair. The result is
/// verified to be a homomorphism with θ e1 = u and θ e2 = w.
std::optional<Homomorphism> kite_theta(const KiteInput& k);

}  // namespace ccm
