#pragma once

// Random commutative medial quasigroups in Toyoda form x⊕y = φ(x+y) + c over
// a random finite abelian group, and the abelian groups recovered from them.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "json.hpp"

#include "ccm/magma.hpp"

namespace ccm {

/// ∏ Z_{d_i} with d_1 | d_2 | ...; elements are mixed-radix digits with the
/// first factor most significant.
struct AbelianGroupSpec {
  std::vector<std::uint32_t> factors;

  std::size_t order() const noexcept;
  std::vector<std::uint32_t> decode(Element x) const;
  Element encode(const std::vector<std::uint32_t>& digits) const;
  Element add(Element x, Element y) const;

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;
};

/// Combines cyclic factors of prime-power order into invariant-factor form.
std::vector<std::uint32_t> invariant_form(std::vector<std::uint32_t> prime_powers);

/// Addition table of the group.
FiniteMagma group_table(const AbelianGroupSpec& group);

struct ToyodaParams {
  AbelianGroupSpec group;
  std::vector<std::uint32_t> multipliers;  // one unit per invariant factor
  std::vector<Element> automorphism;       // action table of φ
  Element translation = 0;                 // c
  std::vector<Element> relabeling;         // group element ↦ magma element
};

void to_json(nlohmann::json& j, const ToyodaParams& p);
void from_json(const nlohmann::json& j, ToyodaParams& p);

/// Diagonal automorphism x ↦ (m_i x_i)_i; throws unless every m_i is a unit.
std::vector<Element> diagonal_automorphism(const AbelianGroupSpec& group,
                                           const std::vector<std::uint32_t>& multipliers);

/// T[π(x)][π(y)] = π(φ(x+y) + c). Validates φ and π before building.
FiniteMagma toyoda_magma(const ToyodaParams& params);

struct GeneratedMagma {
  FiniteMagma magma;
  ToyodaParams params;
};

AbelianGroupSpec random_abelian_group(std::size_t order, std::mt19937_64& rng);
ToyodaParams random_toyoda_params(std::size_t order, std::mt19937_64& rng);

/// Deterministic in (order, seed).
GeneratedMagma generate_quasigroup(std::size_t order, std::uint64_t seed);

/// star(i, j) = the unique k with k⊕e = i⊕j. Throws Error(kNotCancellative)
/// when k is not unique or missing; absent only if the verified group laws fail.
std::optional<FiniteMagma> extract_group(const FiniteMagma& m, Element e);

/// Identity element if the table is an abelian group.
std::optional<Element> abelian_group_identity(const FiniteMagma& table);

/// Invariant factors d_1 | ... | d_k from the element-order statistics.
/// The trivial group gives an empty list.
std::vector<std::uint32_t> invariant_factors(const FiniteMagma& group);

bool groups_isomorphic(const FiniteMagma& g1, const FiniteMagma& g2);

/// Idempotent count is 0 or odd.
bool idempotent_parity_audit(const FiniteMagma& m);

/// 2_{2_y(y)}(x) ⊕ 2_y(z): a Mal'tsev term for homogeneous ccm-magmas.
std::optional<Element> homogeneous_maltsev_term(const FiniteMagma& m, Element x, Element y,
                                                Element z);

}  // namespace ccm
