#include "ccm/kernels.hpp"

namespace ccm::kernels::serial {

std::optional<std::array<Element, 2>> commutativity_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m.op(a, b) != m.op(b, a)) return std::array{a, b};
  return std::nullopt;
}

std::optional<std::array<Element, 3>> cancellation_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m.op(a, c) == m.op(b, c) || m.op(c, a) == m.op(c, b))
          return std::array{a, b, c};
  return std::nullopt;
}

std::optional<std::array<Element, 4>> mediality_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d)
          if (m.op(m.op(a, b), m.op(c, d)) != m.op(m.op(a, c), m.op(b, d)))
            return std::array{a, b, c, d};
  return std::nullopt;
}

std::optional<std::array<Element, 3>> associativity_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) return std::array{a, b, c};
  return std::nullopt;
}

std::optional<std::array<Element, 4>> difunctionality_violation(FlagGrid r) {
  for (std::size_t x = 0; x < r.rows; ++x)
    for (std::size_t y = 0; y < r.cols; ++y)
      for (std::size_t z = 0; z < r.rows; ++z)
        for (std::size_t w = 0; w < r.cols; ++w)
          if (r.at(x, y) && r.at(z, y) && r.at(z, w) && !r.at(x, w))
            return std::array{static_cast<Element>(x), static_cast<Element>(y),
                              static_cast<Element>(z), static_cast<Element>(w)};
  return std::nullopt;
}

std::optional<std::array<Element, 3>> transitivity_violation(FlagGrid r) {
  for (std::size_t a = 0; a < r.rows; ++a)
    for (std::size_t b = 0; b < r.cols; ++b)
      for (std::size_t c = 0; c < r.cols; ++c)
        if (r.at(a, b) && r.at(b, c) && !r.at(a, c))
          return std::array{static_cast<Element>(a), static_cast<Element>(b),
                            static_cast<Element>(c)};
  return std::nullopt;
}

}  // namespace ccm::kernels::serial
