#pragma once

// Doubling/negation maps, internal monoids and groups over an idempotent
// unit, and the I–VI classification of the four unit-relative properties.

#include <optional>
#include <string>
#include <string_view>

#include "ccm/magma.hpp"

namespace ccm {

/// 2_e(a): the unique x with x⊕e = a, if it exists.
std::optional<Element> doubling(const FiniteMagma& m, Element e, Element a);
/// -_e(a): the unique x with x⊕a = e, if it exists.
std::optional<Element> negation(const FiniteMagma& m, Element e, Element a);

bool is_expansive(const FiniteMagma& m, Element e);
bool is_symmetric(const FiniteMagma& m, Element e);
bool is_homogeneous(const FiniteMagma& m);

/// The solution of x⊕u = v built only from 2_e and -_e:
/// x = 2_e(2_e(v ⊕ (e ⊕ -_e(u)))). Absent when one of the maps is undefined.
std::optional<Element> homogeneity_witness(const FiniteMagma& m, Element e, Element u,
                                           Element v);

struct MonoidStructure {
  FiniteMagma base;
  Element unit;
  FiniteMagma star;
};

struct GroupStructure {
  MonoidStructure monoid;
  std::vector<Element> inverse;
};

/// Name of the first violated MonoidStructure invariant, or nullopt.
std::optional<std::string> monoid_invariant_failure(const FiniteMagma& base, Element unit,
                                                    const FiniteMagma& star);

/// Throws Error(kNotIdempotent) when e⊕e ≠ e. Absent when θ⊕e = x⊕y is
/// unsolvable for some pair.
std::optional<MonoidStructure> internal_monoid(const FiniteMagma& m, Element e);
std::optional<GroupStructure> internal_group(const FiniteMagma& m, Element e);

/// a ↦ 2_u(a⊕v), verified to be an isomorphism (A, *_u, u) → (A, *_v, v)
/// with inverse a ↦ 2_v(a⊕u), together with a *_u b = (a *_v b) *_u v.
Homomorphism monoid_isomorphism(const FiniteMagma& m, Element u, Element v);

/// 2_u(a) ⊕ 2_v(b) = 2_{u⊕v}(a⊕b) for all a, b.
bool doubling_additivity_check(const FiniteMagma& m, Element u, Element v);

struct AssociativityEquivalences {
  bool associative;       // ⊕ is associative
  bool unit;              // e is a unit for ⊕
  bool doubling_identity; // 2_e is the identity map
  bool monoid;            // (A, ⊕, e) satisfies the monoid invariants itself

  bool agree() const noexcept {
    return associative == unit && unit == doubling_identity && doubling_identity == monoid;
  }
};

AssociativityEquivalences associativity_equivalences(const FiniteMagma& m, Element e);

struct MidpointDistributivity {
  bool all_idempotent;
  bool distributive;  // x *_e (y⊕z) = (x *_e y) ⊕ (x *_e z)
};

MidpointDistributivity midpoint_distributivity_check(const FiniteMagma& m,
                                                     const MonoidStructure& s);

enum class Label { kI, kII, kIII, kIV, kV, kVI };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

struct PropertyFlags {
  bool expansive;
  bool symmetric;
  bool monoid;
  bool group;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

struct ClassificationLabel {
  Label label;
  PropertyFlags flags;
};

/// Maps a flag quadruple onto its column of the six-column table; throws
/// Error(kInvalidCombination) for the ten impossible quadruples.
ClassificationLabel classify(PropertyFlags flags);

/// Flags of a finite magma at a chosen unit, computed from scratch.
PropertyFlags finite_flags(const FiniteMagma& m, Element e);

}  // namespace ccm
