#include "ccm/generation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ccm/error.hpp"
#include "ccm/internal.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(static_cast<std::uint32_t>(n), 1);
  return out;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
  std::uint32_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool is_permutation_of_carrier(const std::vector<Element>& map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : map) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::size_t AbelianGroupSpec::order() const noexcept {
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  return n;
}

std::vector<std::uint32_t> AbelianGroupSpec::decode(Element x) const {
  std::vector<std::uint32_t> digits(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    digits[i] = x % factors[i];
    x /= factors[i];
  }
  return digits;
}

Element AbelianGroupSpec::encode(const std::vector<std::uint32_t>& digits) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i] + digits[i] % factors[i];
  return x;
}

Element AbelianGroupSpec::add(Element x, Element y) const {
  auto dx = decode(x);
  const auto dy = decode(y);
  for (std::size_t i = 0; i < factors.size(); ++i) dx[i] = (dx[i] + dy[i]) % factors[i];
  return encode(dx);
}

std::vector<std::uint32_t> invariant_form(std::vector<std::uint32_t> prime_powers) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_prime;
  for (auto q : prime_powers) {
    if (q < 2) continue;
    by_prime[factorize(q).front().first].push_back(q);
  }
  std::size_t count = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  // The i-th largest invariant factor takes the i-th largest power of each prime.
  std::vector<std::uint32_t> factors(count, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

FiniteMagma group_table(const AbelianGroupSpec& group) {
  return FiniteMagma::from_operation(group.order(),
                                     [&](Element x, Element y) { return group.add(x, y); });
}

void to_json(nlohmann::json& j, const ToyodaParams& p) {
  j = nlohmann::json{{"factors", p.group.factors},
                     {"multipliers", p.multipliers},
                     {"translation", p.translation},
                     {"permutation", p.relabeling}};
}

void from_json(const nlohmann::json& j, ToyodaParams& p) {
  p.group.factors = j.at("factors").get<std::vector<std::uint32_t>>();
  p.multipliers = j.at("multipliers").get<std::vector<std::uint32_t>>();
  p.translation = j.at("translation").get<Element>();
  p.relabeling = j.at("permutation").get<std::vector<Element>>();
  p.automorphism = diagonal_automorphism(p.group, p.multipliers);
}

std::vector<Element> diagonal_automorphism(const AbelianGroupSpec& group,
                                           const std::vector<std::uint32_t>& multipliers) {
  if (multipliers.size() != group.factors.size())
    throw Error(ErrorKind::kPrecondition, "one multiplier per cyclic factor is required");
  for (std::size_t i = 0; i < multipliers.size(); ++i)
    if (std::gcd(multipliers[i], group.factors[i]) != 1)
      throw Error(ErrorKind::kPrecondition,
                  "multiplier " + std::to_string(multipliers[i]) + " is not a unit mod " +
                      std::to_string(group.factors[i]));
  std::vector<Element> phi(group.order());
  for (Element x = 0; x < phi.size(); ++x) {
    auto digits = group.decode(x);
    for (std::size_t i = 0; i < digits.size(); ++i)
      digits[i] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(digits[i]) * multipliers[i]) % group.factors[i]);
    phi[x] = group.encode(digits);
  }
  return phi;
}

FiniteMagma toyoda_magma(const ToyodaParams& params) {
  const auto& group = params.group;
  const auto n = group.order();
  if (!is_permutation_of_carrier(params.automorphism, n))
    throw Error(ErrorKind::kPrecondition, "automorphism is not a bijection of the group");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (params.automorphism[group.add(x, y)] !=
          group.add(params.automorphism[x], params.automorphism[y]))
        throw Error(ErrorKind::kPrecondition, "automorphism is not additive");
  if (params.translation >= n)
    throw Error(ErrorKind::kPrecondition, "translation outside the group");
  if (!is_permutation_of_carrier(params.relabeling, n))
    throw Error(ErrorKind::kPrecondition, "relabeling is not a permutation");

  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto value = group.add(params.automorphism[group.add(x, y)], params.translation);
      table[params.relabeling[x] * n + params.relabeling[y]] = params.relabeling[value];
    }
  return FiniteMagma(n, std::move(table));
}

AbelianGroupSpec random_abelian_group(std::size_t order, std::mt19937_64& rng) {
  std::vector<std::uint32_t> prime_powers;
  for (const auto& [p, k] : factorize(order)) {
    // Random partition of the exponent k.
    auto remaining = k;
    while (remaining > 0) {
      const auto part = static_cast<std::uint32_t>(1 + draw_below(rng, remaining));
      prime_powers.push_back(ipow(p, part));
      remaining -= part;
    }
  }
  return AbelianGroupSpec{invariant_form(std::move(prime_powers))};
}

ToyodaParams random_toyoda_params(std::size_t order, std::mt19937_64& rng) {
  if (order == 0) throw Error(ErrorKind::kPrecondition, "order must be at least 1");
  ToyodaParams params;
  params.group = random_abelian_group(order, rng);

  for (auto d : params.group.factors) {
    // A unit mod each primary component p^k, glued together by CRT.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
    for (const auto& [p, k] : factorize(d)) {
      const auto q = ipow(p, k);
      std::uint32_t unit = 0;
      do unit = static_cast<std::uint32_t>(draw_below(rng, q));
      while (unit % p == 0);
      residues.emplace_back(q, unit);
    }
    std::uint32_t m = 0;
    while (!std::all_of(residues.begin(), residues.end(),
                        [m](const auto& r) { return m % r.first == r.second; }))
      ++m;
    params.multipliers.push_back(m);
  }
  params.automorphism = diagonal_automorphism(params.group, params.multipliers);
  params.translation = static_cast<Element>(draw_below(rng, order));
  params.relabeling.resize(order);
  std::iota(params.relabeling.begin(), params.relabeling.end(), Element{0});
  std::shuffle(params.relabeling.begin(), params.relabeling.end(), rng);
  return params;
}

GeneratedMagma generate_quasigroup(std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto params = random_toyoda_params(order, rng);
  auto magma = toyoda_magma(params);
  return {std::move(magma), std::move(params)};
}

std::optional<FiniteMagma> extract_group(const FiniteMagma& m, Element e) {
  if (!m.contains(e)) throw Error(ErrorKind::kPrecondition, "unit outside the carrier");
  const auto n = m.order();
  // The column M(:, e) must be a bijection for k to be unique.
  std::vector<std::optional<Element>> row_of(n);
  for (Element k = 0; k < n; ++k) {
    auto& slot = row_of[m.op(k, e)];
    if (slot)
      throw Error(ErrorKind::kNotCancellative,
                  "column " + std::to_string(e) + " repeats the value " + std::to_string(m.op(k, e)));
    slot = k;
  }
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) table[i * n + j] = *row_of[m.op(i, j)];
  FiniteMagma group(n, std::move(table));
  if (abelian_group_identity(group) != e) return std::nullopt;
  return group;
}

std::optional<Element> abelian_group_identity(const FiniteMagma& t) {
  const auto n = static_cast<Element>(t.order());
  std::optional<Element> identity;
  for (Element x = 0; x < n && !identity; ++x) {
    bool unit = true;
    for (Element a = 0; a < n && unit; ++a) unit = t.op(x, a) == a && t.op(a, x) == a;
    if (unit) identity = x;
  }
  if (!identity) return std::nullopt;
  if (kernels::parallel::commutativity_violation(t)) return std::nullopt;
  if (kernels::parallel::associativity_violation(t)) return std::nullopt;
  for (Element a = 0; a < n; ++a) {
    const auto row = t.row(a);
    if (std::find(row.begin(), row.end(), *identity) == row.end()) return std::nullopt;
  }
  return identity;
}

std::vector<std::uint32_t> invariant_factors(const FiniteMagma& group) {
  const auto identity = abelian_group_identity(group);
  if (!identity) throw Error(ErrorKind::kNotAbelianGroup, "table is not an abelian group");
  const auto n = group.order();

  std::vector<std::size_t> element_order(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (auto power = a; power != *identity; power = group.op(power, a)) ++k;
    element_order[a] = k;
  }

  std::vector<std::uint32_t> prime_powers;
  for (const auto& [p, k] : factorize(n)) {
    // |{a : ord(a) divides p^j}| = p^{s_j}; s_j - s_{j-1} factors have order >= p^j.
    std::vector<std::uint32_t> at_least(k + 2, 0);
    std::uint32_t previous = 0;
    for (std::uint32_t j = 1; j <= k; ++j) {
      const auto q = ipow(p, j);
      const auto count = static_cast<std::size_t>(
          std::count_if(element_order.begin(), element_order.end(),
                        [q](std::size_t o) { return q % o == 0; }));
      std::uint32_t s = 0;
      for (std::size_t c = count; c > 1; c /= p) ++s;
      at_least[j] = s - previous;
      previous = s;
    }
    for (std::uint32_t j = 1; j <= k; ++j)
      for (auto c = at_least[j] - at_least[j + 1]; c > 0; --c) prime_powers.push_back(ipow(p, j));
  }
  return invariant_form(std::move(prime_powers));
}

bool groups_isomorphic(const FiniteMagma& g1, const FiniteMagma& g2) {
  return invariant_factors(g1) == invariant_factors(g2);
}

bool idempotent_parity_audit(const FiniteMagma& m) {
  const auto count = idempotents(m).size();
  return count == 0 || count % 2 == 1;
}

std::optional<Element> homogeneous_maltsev_term(const FiniteMagma& m, Element x, Element y,
                                                Element z) {
  const auto d = doubling(m, y, y);
  if (!d) return std::nullopt;
  const auto left = doubling(m, *d, x);
  const auto right = doubling(m, y, z);
  if (!left || !right) return std::nullopt;
  return m.op(*left, *right);
}

}  // namespace ccm
