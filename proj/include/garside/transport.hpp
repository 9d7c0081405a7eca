#pragma once

// Transport of conjugators along cycling steps, orbit compositions, minimal
// conjugators into recurrent sets, and the seed step of the C* closure.

#include <cstdint>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/core.hpp"
#include "garside/cycling.hpp"

namespace garside {

/// Conjugators handled here all have the shape Δ^m·s with s simple.
template <class Simple>
bool is_shaped(const CanonicalElement<Simple>& u) {
  return u.factors.size() <= 1;
}

template <GarsideStructure G>
Element<G> make_shaped(const G& g, std::int64_t m, const typename G::Simple& s) {
  if (g.is_delta(s)) return {checked_add(m, 1), {}};
  if (g.is_identity(s)) return {m, {}};
  return {m, {s}};
}

template <GarsideStructure G>
typename G::Simple simple_part(const G& g, const Element<G>& u) {
  return u.factors.empty() ? g.identity() : u.factors.front();
}

/// Δ^a·s ≺ Δ^b·t.
template <GarsideStructure G>
bool shaped_divides(const G& g, const Element<G>& u, const Element<G>& w) {
  Element<G> shifted{checked_add(w.delta_power, -u.delta_power), w.factors};
  return simple_left_divides(g, simple_part(g, u), shifted);
}

template <GarsideStructure G>
struct SimpleTransport {
  typename G::Simple phi;
  typename G::Simple pi;
};

/// φ and π of a simple u ≠ Δ at order inf(x) + k, by simple-element
/// recursions along the normal form of x.
template <GarsideStructure G>
SimpleTransport<G> simple_calculus(const G& g, const Element<G>& x, std::size_t k, const typename G::Simple& u) {
  using S = typename G::Simple;
  if (g.is_delta(u)) throw std::invalid_argument("simple_calculus: u must differ from the fundamental element");
  const auto& f = x.factors;
  const std::size_t l = f.size();
  if (k > l) throw std::invalid_argument("simple_calculus: k exceeds canonical length");
  const std::int64_t p = x.delta_power;

  S lo = g.tau(u, p);
  for (std::size_t i = 0; i < k; ++i) lo = g.product(g.right_complement(f[i]), g.tau(g.meet(f[i], lo), 1));
  S hi = u;
  for (std::size_t i = l; i > k; --i) hi = g.product(f[i - 1], g.meet(g.right_complement(f[i - 1]), hi));

  S down = u;
  for (std::size_t i = k; i > 0; --i) {
    S r = g.right_complement(f[i - 1]);
    down = g.tau(g.left_quotient(r, g.join(r, down)), -1);
  }
  S up = u;
  for (std::size_t i = k; i < l; ++i) up = g.left_quotient(f[i], g.join(f[i], up));

  return {g.meet(lo, hi), g.join(g.tau(down, -p), up)};
}

namespace detail {

/// tau_variants[t] = τ^t(x) for 0 ≤ t < tau order.
template <GarsideStructure G>
std::vector<Element<G>> tau_variants(const G& g, const Element<G>& x) {
  std::vector<Element<G>> out;
  for (int t = 0; t < g.tau_order(); ++t) out.push_back(tau_pow(g, x, t));
  return out;
}

template <GarsideStructure G>
Element<G> transport_at(const G& g, const std::vector<Element<G>>& variants, std::int64_t q, const Element<G>& u,
                        bool forward) {
  if (!is_shaped(u)) throw std::invalid_argument("transport: conjugator must be a power of Δ times a simple");
  const std::int64_t m = u.delta_power;
  const auto s = simple_part(g, u);
  const std::int64_t e = g.tau_order();
  const Element<G>& x = variants[static_cast<std::size_t>(((m % e) + e) % e)];
  typename G::Simple r;
  if (q < x.inf()) {
    r = g.tau(s, forward ? q : -q);
  } else if (q > x.sup()) {
    r = s;
  } else {
    auto t = simple_calculus(g, x, static_cast<std::size_t>(q - x.inf()), s);
    r = forward ? t.phi : t.pi;
  }
  return make_shaped(g, m, r);
}

}  // namespace detail

template <GarsideStructure G>
struct TransportContext {
  Element<G> x;
  std::int64_t q = 0;
  Element<G> x_prime;
  Element<G> x_dprime;
  std::optional<std::size_t> orbit_length;
  std::vector<Element<G>> variants;
};

/// Context for φ_{y,q}, π_{y,q}. For the double-order operation cyc_{p,q}
/// pass y = x^p.
template <GarsideStructure G>
TransportContext<G> make_transport_context(const G& g, const Element<G>& y, std::int64_t q) {
  TransportContext<G> ctx;
  ctx.x = y;
  ctx.q = q;
  ctx.x_prime = meet_delta_power(g, y, q);
  ctx.x_dprime = multiply(g, invert(g, ctx.x_prime), y);
  auto rec = recurrent_representative(g, y, q);
  if (rec.starts_on_cycle()) ctx.orbit_length = rec.period();
  ctx.variants = detail::tau_variants(g, y);
  return ctx;
}

template <GarsideStructure G>
Element<G> pushforward(const G& g, const TransportContext<G>& ctx, const Element<G>& u) {
  return detail::transport_at(g, ctx.variants, ctx.q, u, true);
}

template <GarsideStructure G>
Element<G> pullback(const G& g, const TransportContext<G>& ctx, const Element<G>& u) {
  return detail::transport_at(g, ctx.variants, ctx.q, u, false);
}

/// Closed cyc_q orbits of x for a list of orders, with τ-variants of every
/// orbit element precomputed.
template <GarsideStructure G>
struct OrbitTable {
  Element<G> x;
  std::vector<std::int64_t> orders;
  // orbits[i][j] = τ-variants of cyc_{orders[i]}^j(x)
  std::vector<std::vector<std::vector<Element<G>>>> orbits;
};

template <GarsideStructure G>
OrbitTable<G> make_orbit_table(const G& g, const Element<G>& x, std::vector<std::int64_t> orders) {
  OrbitTable<G> t;
  t.x = x;
  t.orders = std::move(orders);
  for (std::int64_t q : t.orders) {
    auto rec = recurrent_representative(g, x, q);
    if (!rec.starts_on_cycle()) throw NotRecurrentError("orbit table: element is not recurrent under cycling");
    std::vector<std::vector<Element<G>>> orbit;
    for (const auto& y : rec.elements) orbit.push_back(detail::tau_variants(g, y));
    t.orbits.push_back(std::move(orbit));
  }
  return t;
}

/// All orders inf x .. sup x, ascending.
template <class Simple>
std::vector<std::int64_t> all_orders(const CanonicalElement<Simple>& x) {
  std::vector<std::int64_t> qs;
  for (std::int64_t q = x.inf(); q <= x.sup(); ++q) qs.push_back(q);
  return qs;
}

/// φ̃ for the i-th order of the table.
template <GarsideStructure G>
Element<G> orbit_pushforward(const G& g, const OrbitTable<G>& t, std::size_t i, Element<G> u) {
  const std::int64_t q = t.orders[i];
  for (const auto& variants : t.orbits[i]) u = detail::transport_at(g, variants, q, u, true);
  return u;
}

/// π̃ for the i-th order of the table; the step at x itself is applied last.
template <GarsideStructure G>
Element<G> orbit_pullback(const G& g, const OrbitTable<G>& t, std::size_t i, Element<G> u) {
  const std::int64_t q = t.orders[i];
  const auto& orbit = t.orbits[i];
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) u = detail::transport_at(g, *it, q, u, false);
  return u;
}

template <GarsideStructure G>
Element<G> orbit_pushforward(const G& g, const Element<G>& x, std::int64_t q, const Element<G>& u) {
  return orbit_pushforward(g, make_orbit_table(g, x, {q}), 0, u);
}

template <GarsideStructure G>
Element<G> orbit_pullback(const G& g, const Element<G>& x, std::int64_t q, const Element<G>& u) {
  return orbit_pullback(g, make_orbit_table(g, x, {q}), 0, u);
}

/// The ≺-minimal v with u ≺ v and x^v recurrent under cyc_q for every order
/// q of the table. `observe` sees every intermediate iterate; returning false
/// abandons the computation and yields nullopt.
template <GarsideStructure G, class Observer>
std::optional<Element<G>> mu(const G& g, const OrbitTable<G>& t, const Element<G>& u, Observer&& observe) {
  const std::size_t count = t.orders.size();
  std::vector<Element<G>> lower(count + 1);
  lower[0] = u;
  for (std::size_t i = 0; i < count; ++i) {
    std::unordered_set<Element<G>, ElementHash> seen{lower[i]};
    Element<G> cur = lower[i];
    for (;;) {
      cur = orbit_pullback(g, t, i, std::move(cur));
      if (!observe(cur)) return std::nullopt;
      if (!seen.insert(cur).second) break;
    }
    lower[i + 1] = std::move(cur);
  }

  Element<G> v = lower[count];
  for (std::size_t i = count; i-- > 0;) {
    std::unordered_set<Element<G>, ElementHash> seen{v};
    Element<G> cur = v;
    bool repeated = false;
    std::size_t after = 0;
    for (;;) {
      cur = orbit_pushforward(g, t, i, std::move(cur));
      if (!observe(cur)) return std::nullopt;
      if (!repeated && !seen.insert(cur).second) repeated = true;
      if (repeated) {
        if (shaped_divides(g, lower[i], cur)) break;
        if (++after > seen.size()) throw std::logic_error("mu: pushforward cycle never dominates the lower bound");
      }
    }
    v = std::move(cur);
  }
  return v;
}

template <GarsideStructure G>
Element<G> mu(const G& g, const OrbitTable<G>& t, const Element<G>& u) {
  return *mu(g, t, u, [](const Element<G>&) { return true; });
}

/// μ_x(u) for x recurrent under every cyc_q.
template <GarsideStructure G>
Element<G> mu(const G& g, const Element<G>& x, const Element<G>& u) {
  return mu(g, make_orbit_table(g, x, all_orders(x)), u);
}

/// Conjugators μ(a) over the atoms a. With `exclude`, an atom is dropped as
/// soon as another live atom divides one of its intermediate iterates.
template <GarsideStructure G>
std::vector<Element<G>> seed_conjugators(const G& g, const OrbitTable<G>& t, bool exclude = true) {
  const auto atoms = g.atoms();
  std::vector<bool> live(atoms.size(), true);
  std::vector<Element<G>> out;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    auto observer = [&](const Element<G>& w) {
      if (!exclude) return true;
      for (std::size_t b = 0; b < atoms.size(); ++b)
        if (b != a && live[b] && simple_left_divides(g, atoms[b], w)) return false;
      return true;
    };
    auto v = mu(g, t, from_simple(g, atoms[a]), observer);
    if (!v) {
      live[a] = false;
      continue;
    }
    if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(std::move(*v));
  }
  return out;
}

/// Trajectories T(x^{μ(a)}), one per distinct key; witnesses are relative to
/// x composed with `base_witness`.
template <GarsideStructure G>
std::vector<Trajectory<G>> seed_trajectories(const G& g, const Element<G>& x, bool exclude = true,
                                             const Element<G>& base_witness = {}) {
  auto t = make_orbit_table(g, x, all_orders(x));
  std::vector<Trajectory<G>> out;
  std::unordered_set<Element<G>, ElementHash> keys;
  for (const auto& v : seed_conjugators(g, t, exclude)) {
    auto tr = trajectory(g, conjugate(g, x, v), multiply(g, base_witness, v));
    if (keys.insert(tr.key()).second) out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace garside
