#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <stdexcept>
#include <vector>

namespace garside {

/// Requirements on a Garside structure: a finite lattice of simple elements
/// with Δ at the top, left/right complements, and the inner automorphism τ.
///
/// Partial operations (`product`, `left_quotient`) are only called with
/// arguments for which the result is again simple.
template <class G>
concept GarsideStructure = requires(const G& g, const typename G::Simple& a,
                                    const typename G::Simple& b, std::int64_t k) {
  typename G::Simple;
  { g.identity() } -> std::same_as<typename G::Simple>;
  { g.delta() } -> std::same_as<typename G::Simple>;
  { g.atoms() } -> std::same_as<std::vector<typename G::Simple>>;
  { g.tau_order() } -> std::convertible_to<int>;
  { g.delta_norm() } -> std::convertible_to<int>;
  { g.is_identity(a) } -> std::same_as<bool>;
  { g.is_delta(a) } -> std::same_as<bool>;
  { g.meet(a, b) } -> std::same_as<typename G::Simple>;
  { g.join(a, b) } -> std::same_as<typename G::Simple>;
  { g.product(a, b) } -> std::same_as<typename G::Simple>;
  { g.left_quotient(a, b) } -> std::same_as<typename G::Simple>;
  { g.right_complement(a) } -> std::same_as<typename G::Simple>;
  { g.left_complement(a) } -> std::same_as<typename G::Simple>;
  { g.tau(a, k) } -> std::same_as<typename G::Simple>;
  { g.left_divides(a, b) } -> std::same_as<bool>;
  { a.hash() } -> std::convertible_to<std::size_t>;
  { a <=> b };
};

/// Δ^p x_1 ⋯ x_l in left normal form. Factors are never 1 or Δ and each
/// adjacent pair is left-weighted; the arithmetic in core.hpp maintains this.
template <class Simple>
struct CanonicalElement {
  std::int64_t delta_power = 0;
  std::vector<Simple> factors;

  std::int64_t inf() const { return delta_power; }
  std::int64_t sup() const { return delta_power + static_cast<std::int64_t>(factors.size()); }
  std::int64_t len() const { return static_cast<std::int64_t>(factors.size()); }

  bool operator==(const CanonicalElement&) const = default;
  // Canonical total order: Δ-power first, then factor tables lexicographically.
  auto operator<=>(const CanonicalElement&) const = default;
};

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

struct ElementHash {
  template <class Simple>
  std::size_t operator()(const CanonicalElement<Simple>& x) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(x.delta_power);
    for (const auto& s : x.factors) h = hash_mix(h, s.hash());
    return h;
  }
};

/// Thrown when a cycling orbit or trajectory closure shows that an element
/// is not recurrent where recurrence is required.
class NotRecurrentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace garside
