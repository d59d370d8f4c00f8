#pragma once

#include "doctest.h"

#include "ccm/error.hpp"

namespace support {

// Runs f and returns the kind of the ccm::Error it throws.
inline ccm::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const ccm::Error& e) {
    return e.kind();
  }
  FAIL("expected a ccm::Error");
  return ccm::ErrorKind::kPrecondition;
}

}  // namespace support
