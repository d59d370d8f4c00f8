#include <atomic>

#include "ccm/kernels.hpp"

namespace ccm::kernels::parallel {

namespace {

// Below this order a team of threads costs more than the scan itself.
constexpr std::int64_t kMinParallelOrder = 16;

// Runs `scan(a)` for every outer index a and returns the result of the
// smallest a that found something. Indices above the current best are
// skipped, which keeps the answer identical to the serial scan.
template <std::size_t N, typename Scan>
std::optional<std::array<Element, N>> first_by_outer_index(std::size_t n, Scan scan) {
  std::vector<std::optional<std::array<Element, N>>> found(n);
  std::atomic<std::int64_t> best{static_cast<std::int64_t>(n)};
  const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(dynamic, 1) if (count >= kMinParallelOrder)
  for (std::int64_t a = 0; a < count; ++a) {
    if (a > best.load(std::memory_order_relaxed)) continue;
    found[a] = scan(static_cast<Element>(a));
    if (found[a]) {
      auto current = best.load(std::memory_order_relaxed);
      while (a < current && !best.compare_exchange_weak(current, a)) {
      }
    }
  }

  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace

std::optional<std::array<Element, 2>> commutativity_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  return first_by_outer_index<2>(n, [&](Element a) -> std::optional<std::array<Element, 2>> {
    const auto row = m.row(a);
    for (Element b = a + 1; b < n; ++b)
      if (row[b] != m.op(b, a)) return std::array{a, b};
    return std::nullopt;
  });
}

std::optional<std::array<Element, 3>> cancellation_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  return first_by_outer_index<3>(n, [&](Element a) -> std::optional<std::array<Element, 3>> {
    for (Element b = a + 1; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m.op(a, c) == m.op(b, c) || m.op(c, a) == m.op(c, b))
          return std::array{a, b, c};
    return std::nullopt;
  });
}

std::optional<std::array<Element, 4>> mediality_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  return first_by_outer_index<4>(n, [&](Element a) -> std::optional<std::array<Element, 4>> {
    const auto row_a = m.row(a);
    for (Element b = 0; b < n; ++b) {
      const auto ab = row_a[b];
      const auto row_b = m.row(b);
      for (Element c = 0; c < n; ++c) {
        const auto ac = row_a[c];
        const auto row_ab = m.row(ab);
        const auto row_ac = m.row(ac);
        const auto row_c = m.row(c);
        for (Element d = 0; d < n; ++d)
          if (row_ab[row_c[d]] != row_ac[row_b[d]]) return std::array{a, b, c, d};
      }
    }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 3>> associativity_violation(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.order());
  return first_by_outer_index<3>(n, [&](Element a) -> std::optional<std::array<Element, 3>> {
    const auto row_a = m.row(a);
    for (Element b = 0; b < n; ++b) {
      const auto row_ab = m.row(row_a[b]);
      const auto row_b = m.row(b);
      for (Element c = 0; c < n; ++c)
        if (row_ab[c] != row_a[row_b[c]]) return std::array{a, b, c};
    }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 4>> difunctionality_violation(FlagGrid r) {
  return first_by_outer_index<4>(r.rows, [&](Element x) -> std::optional<std::array<Element, 4>> {
    for (std::size_t y = 0; y < r.cols; ++y) {
      if (!r.at(x, y)) continue;
      for (std::size_t z = 0; z < r.rows; ++z) {
        if (!r.at(z, y)) continue;
        for (std::size_t w = 0; w < r.cols; ++w)
          if (r.at(z, w) && !r.at(x, w))
            return std::array{x, static_cast<Element>(y), static_cast<Element>(z),
                              static_cast<Element>(w)};
      }
    }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 3>> transitivity_violation(FlagGrid r) {
  return first_by_outer_index<3>(r.rows, [&](Element a) -> std::optional<std::array<Element, 3>> {
    for (std::size_t b = 0; b < r.cols; ++b) {
      if (!r.at(a, b)) continue;
      for (std::size_t c = 0; c < r.cols; ++c)
        if (r.at(b, c) && !r.at(a, c))
          return std::array{a, static_cast<Element>(b), static_cast<Element>(c)};
    }
    return std::nullopt;
  });
}

}  // namespace ccm::kernels::parallel
