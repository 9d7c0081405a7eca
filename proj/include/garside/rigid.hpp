#pragma once

// Rigidity, stable exponents and rigid powers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "garside/core.hpp"
#include "garside/cycling.hpp"
#include "garside/summit.hpp"

namespace garside {

/// len x > 0 and x² ∧ Δ^{inf x + sup x} = x·Δ^{inf x}.
template <GarsideStructure G>
bool is_rigid(const G& g, const Element<G>& x) {
  if (x.len() == 0) return false;
  Element<G> lhs = meet_delta_power(g, multiply(g, x, x), checked_add(x.inf(), x.sup()));
  return lhs == multiply(g, x, Element<G>{x.inf(), {}});
}

/// Reduced fraction num/den with den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (d < 0) n = -n, d = -d;
    std::int64_t k = std::gcd(n, d);
    num = n / k;
    den = d / k;
  }

  friend bool operator<(const Fraction& a, const Fraction& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  friend bool operator==(const Fraction& a, const Fraction& b) = default;
};

struct StableExponents {
  std::int64_t n1 = 1;
  std::int64_t n2 = 1;
  Fraction inf_rate;
  Fraction sup_rate;
};

/// n1, n2 are the denominators of max infs(x^k)/k and min sups(x^k)/k over
/// 1 ≤ k ≤ ‖Δ‖.
template <GarsideStructure G>
StableExponents stable_exponents(const G& g, const Element<G>& x) {
  StableExponents out;
  Element<G> xk;
  for (std::int64_t k = 1; k <= g.delta_norm(); ++k) {
    xk = multiply(g, xk, x);
    auto [infs, sups] = summit_bounds(g, xk);
    Fraction i(infs, k), s(sups, k);
    if (k == 1 || out.inf_rate < i) out.inf_rate = i;
    if (k == 1 || s < out.sup_rate) out.sup_rate = s;
  }
  out.n1 = out.inf_rate.den;
  out.n2 = out.sup_rate.den;
  return out;
}

template <GarsideStructure G>
bool is_double_recurrent(const G& g, const Element<G>& y, std::int64_t p, std::int64_t q) {
  return iterate_to_recurrence(g, y, [&](const Element<G>& z) { return cyc_pq(g, z, p, q); }).starts_on_cycle();
}

template <GarsideStructure G>
struct RigidReport {
  bool is_rigid = false;
  std::int64_t n1 = 1;
  std::int64_t n2 = 1;
  std::optional<std::int64_t> power;
  std::optional<Element<G>> rigid_conjugate;
  std::optional<Element<G>> witness;
  // The element of C^s(x^N) recurrent under cyc_{2, infs+sups} that was tested.
  Element<G> candidate;
  Element<G> candidate_witness;
};

/// Looks for a rigid conjugate of x^N with N = lcm(n1, n2).
template <GarsideStructure G>
RigidReport<G> rigid_power(const G& g, const Element<G>& x, int max_passes = 1000) {
  RigidReport<G> r;
  StableExponents se = stable_exponents(g, x);
  r.n1 = se.n1;
  r.n2 = se.n2;
  const std::int64_t n = std::lcm(se.n1, se.n2);
  Element<G> xn = power(g, x, n);

  WitnessedElement<G> cur{xn, {}};
  for (int pass = 0;; ++pass) {
    if (pass == max_passes) throw std::runtime_error("rigid_power: no stable candidate within pass limit");
    WitnessedElement<G> rep = cstar_representative(g, cur.element);
    cur = {rep.element, multiply(g, cur.witness, rep.witness)};
    const std::int64_t q = checked_add(cur.element.inf(), cur.element.sup());
    auto rec = iterate_to_recurrence(g, cur.element, [&](const Element<G>& z) { return cyc_pq(g, z, 2, q); });
    if (rec.starts_on_cycle()) break;
    cur = {rec.recurrent(), multiply(g, cur.witness, witness_to_cycle(g, rec))};
  }
  r.candidate = cur.element;
  r.candidate_witness = cur.witness;
  r.is_rigid = is_rigid(g, cur.element);
  if (r.is_rigid) {
    r.power = n;
    r.rigid_conjugate = cur.element;
    r.witness = cur.witness;
  }
  return r;
}

/// C^{*,*}(x) for rigid x: the members of C^s(x) recurrent under
/// cyc_{2, inf+sup}, which are exactly the rigid conjugates.
template <GarsideStructure G>
SummitSet<G> c_star_star_rigid(const G& g, const Element<G>& x, const Budget& budget = {}) {
  if (!is_rigid(g, x)) throw std::invalid_argument("c_star_star_rigid: input is not rigid");
  SummitSet<G> sup = super_summit_set(g, x, budget);
  SummitSet<G> out;
  out.kind = SummitKind::star_star;
  out.base = sup.base;
  out.infs = sup.infs;
  out.sups = sup.sups;
  const std::int64_t q = checked_add(sup.infs, sup.sups);
  for (std::size_t i = 0; i < sup.size(); ++i) {
    if (!is_double_recurrent(g, sup.members[i], 2, q)) continue;
    out.members.push_back(sup.members[i]);
    out.witnesses.push_back(sup.witnesses[i]);
  }
  return out;
}

}  // namespace garside
