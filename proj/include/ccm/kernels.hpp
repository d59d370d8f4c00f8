#pragma once

// Exhaustive scan kernels. `serial` is the reference implementation kept for
// testing; `parallel` splits the outermost index across OpenMP threads and
// must return exactly the same (lexicographically smallest) counterexample.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccm/magma.hpp"

namespace ccm::kernels {

/// Dense 0/1 grid, row-major, rows × cols.
struct FlagGrid {
  std::size_t rows;
  std::size_t cols;
  std::span<const std::uint8_t> bits;

  bool at(std::size_t r, std::size_t c) const noexcept { return bits[r * cols + c] != 0; }
};

namespace serial {

std::optional<std::array<Element, 2>> commutativity_violation(const FiniteMagma& m);
std::optional<std::array<Element, 3>> cancellation_violation(const FiniteMagma& m);
std::optional<std::array<Element, 4>> mediality_violation(const FiniteMagma& m);
std::optional<std::array<Element, 3>> associativity_violation(const FiniteMagma& m);

/// (x, y, z, w) with xRy, zRy, zRw but not xRw.
std::optional<std::array<Element, 4>> difunctionality_violation(FlagGrid r);
/// (a, b, c) with aRb, bRc but not aRc.
std::optional<std::array<Element, 3>> transitivity_violation(FlagGrid r);

}  // namespace serial

namespace parallel {

std::optional<std::array<Element, 2>> commutativity_violation(const FiniteMagma& m);
std::optional<std::array<Element, 3>> cancellation_violation(const FiniteMagma& m);
std::optional<std::array<Element, 4>> mediality_violation(const FiniteMagma& m);
std::optional<std::array<Element, 3>> associativity_violation(const FiniteMagma& m);
std::optional<std::array<Element, 4>> difunctionality_violation(FlagGrid r);
std::optional<std::array<Element, 3>> transitivity_violation(FlagGrid r);

}  // namespace parallel

}  // namespace ccm::kernels
