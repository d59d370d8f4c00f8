#pragma once

#include "ccm/magma.hpp"

namespace ccm::fixtures {

// The two 3×3 tables below are the classic 1-based matrices shifted down by
// one so that the carrier is {0, 1, 2}.

/// Non-associative, every element idempotent.
inline FiniteMagma a2() { return FiniteMagma::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }

/// Non-associative, no idempotents.
inline FiniteMagma a3() { return FiniteMagma::from_rows({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}); }

/// Z_5 with x⊕y = 2(x+y).
inline FiniteMagma f5a() { return affine_mod_magma(5, 2, 0); }

/// Z_9 with x⊕y = 2(x+y).
inline FiniteMagma z9a() { return affine_mod_magma(9, 2, 0); }

inline FiniteMagma singleton() { return FiniteMagma(1, {0}); }

}  // namespace ccm::fixtures
