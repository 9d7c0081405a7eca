#pragma once

// Cycling operations of arbitrary order, recurrence detection, trajectories,
// and representatives of the refined summit sets.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/core.hpp"

namespace garside {

template <GarsideStructure G>
struct CyclingStep {
  Element<G> result;
  Element<G> conjugator;
};

/// An element together with a conjugator u from some base element b:
/// conjugate(b, u) == element.
template <GarsideStructure G>
struct WitnessedElement {
  Element<G> element;
  Element<G> witness;
};

/// cyc_q(x) = x^{x ∧ Δ^q}.
template <GarsideStructure G>
CyclingStep<G> cyc_q(const G& g, const Element<G>& x, std::int64_t q) {
  Element<G> c = meet_delta_power(g, x, q);
  if (q <= x.inf()) return {tau_pow(g, x, q), std::move(c)};
  if (q >= x.sup()) return {x, std::move(c)};
  // x_{k+1}⋯x_l Δ^p x_1⋯x_k = Δ^p τ^p(x_{k+1}⋯x_l) x_1⋯x_k
  const auto k = static_cast<std::size_t>(q - x.inf());
  detail::NormalFormBuilder<G> b(g, x.delta_power);
  for (std::size_t i = k; i < x.factors.size(); ++i) b.append(g.tau(x.factors[i], x.delta_power));
  for (std::size_t i = 0; i < k; ++i) b.append(x.factors[i]);
  return {std::move(b).take(), std::move(c)};
}

/// Classical cycling τ^{-inf x} cyc_{inf x + 1}(x).
template <GarsideStructure G>
Element<G> cyc(const G& g, const Element<G>& x) {
  if (x.len() == 0) return x;
  return tau_pow(g, cyc_q(g, x, x.inf() + 1).result, -x.inf());
}

/// Classical decycling cyc_{sup x − 1}(x).
template <GarsideStructure G>
Element<G> dec(const G& g, const Element<G>& x) {
  if (x.len() == 0) return x;
  return cyc_q(g, x, x.sup() - 1).result;
}

/// cyc_{p,q}(x) = x^{x^p ∧ Δ^q}.
template <GarsideStructure G>
CyclingStep<G> cyc_pq(const G& g, const Element<G>& x, std::int64_t p, std::int64_t q) {
  Element<G> c = meet_delta_power(g, power(g, x, p), q);
  Element<G> y = conjugate(g, x, c);
  return {std::move(y), std::move(c)};
}

/// The sequence x, f(x), f²(x), … up to its first repetition. Elements are
/// distinct; conjugators[i] maps elements[i] to its successor, the last one
/// closing the loop onto elements[entry_index].
template <GarsideStructure G>
struct OrbitRecord {
  std::vector<Element<G>> elements;
  std::vector<Element<G>> conjugators;
  std::size_t entry_index = 0;

  const Element<G>& recurrent() const { return elements[entry_index]; }
  std::size_t period() const { return elements.size() - entry_index; }
  bool starts_on_cycle() const { return entry_index == 0; }
};

/// Iterates `step` (Element -> CyclingStep) until an element repeats.
template <GarsideStructure G, class Step>
OrbitRecord<G> iterate_to_recurrence(const G& g, const Element<G>& x, Step&& step) {
  (void)g;
  OrbitRecord<G> rec;
  std::unordered_map<Element<G>, std::size_t, ElementHash> seen;
  Element<G> cur = x;
  for (;;) {
    seen.emplace(cur, rec.elements.size());
    CyclingStep<G> s = step(cur);
    rec.elements.push_back(std::move(cur));
    rec.conjugators.push_back(std::move(s.conjugator));
    auto it = seen.find(s.result);
    if (it != seen.end()) {
      rec.entry_index = it->second;
      return rec;
    }
    cur = std::move(s.result);
  }
}

template <GarsideStructure G>
OrbitRecord<G> recurrent_representative(const G& g, const Element<G>& x, std::int64_t q) {
  return iterate_to_recurrence(g, x, [&](const Element<G>& y) { return cyc_q(g, y, q); });
}

/// Product of conjugators[0..entry_index): conjugates elements[0] onto the
/// first element of the closed orbit.
template <GarsideStructure G>
Element<G> witness_to_cycle(const G& g, const OrbitRecord<G>& rec) {
  Element<G> w;
  for (std::size_t i = 0; i < rec.entry_index; ++i) w = multiply(g, w, rec.conjugators[i]);
  return w;
}

template <GarsideStructure G>
bool in_G_q(const G& g, const Element<G>& x, std::int64_t q) {
  if (q <= x.inf() || q >= x.sup()) return true;
  return recurrent_representative(g, x, q).starts_on_cycle();
}

/// Recurrent under every cyc_q.
template <GarsideStructure G>
bool is_everywhere_recurrent(const G& g, const Element<G>& x) {
  for (std::int64_t q = x.inf() + 1; q < x.sup(); ++q)
    if (!in_G_q(g, x, q)) return false;
  return true;
}

/// An element of C*(x) with a conjugator from x. One ascending sweep over q;
/// the upper end is re-read after every orbit since sup may drop, and orders
/// at or below the current inf are skipped.
template <GarsideStructure G>
WitnessedElement<G> cstar_representative(const G& g, const Element<G>& x) {
  WitnessedElement<G> out{x, {}};
  std::int64_t q = x.inf() + 1;
  while (q < out.element.sup()) {
    if (q > out.element.inf()) {
      OrbitRecord<G> rec = recurrent_representative(g, out.element, q);
      if (rec.entry_index > 0) {
        out.witness = multiply(g, out.witness, witness_to_cycle(g, rec));
        out.element = rec.recurrent();
      }
    }
    ++q;
  }
  return out;
}

/// T(x): the closure of {τ^i(x)} under cyc_q for inf < q < sup. Members are
/// sorted by the canonical order; witnesses[i] conjugates the trajectory's
/// base onto members[i].
template <GarsideStructure G>
struct Trajectory {
  std::vector<Element<G>> members;
  std::vector<Element<G>> witnesses;

  const Element<G>& key() const { return members.front(); }
  const Element<G>& key_witness() const { return witnesses.front(); }
  std::size_t size() const { return members.size(); }
};

/// Computes T(x). `base_witness` conjugates some base element onto x and is
/// prepended to every member witness. Throws NotRecurrentError when the
/// closure shows that x is not recurrent under every cyc_q.
template <GarsideStructure G>
Trajectory<G> trajectory(const G& g, const Element<G>& x, const Element<G>& base_witness = {}) {
  std::unordered_map<Element<G>, std::size_t, ElementHash> index;
  std::vector<Element<G>> members;
  std::vector<Element<G>> witnesses;
  auto add = [&](Element<G> y, Element<G> w) {
    if (index.contains(y)) return;
    index.emplace(y, members.size());
    members.push_back(std::move(y));
    witnesses.push_back(std::move(w));
  };
  for (int i = 0; i < g.tau_order(); ++i) add(tau_pow(g, x, i), multiply(g, base_witness, Element<G>{i, {}}));

  const std::int64_t inf = x.inf(), sup = x.sup();
  // preimage[q - inf - 1][image]: cyc_q must be injective on a closed trajectory.
  std::vector<std::unordered_map<Element<G>, std::size_t, ElementHash>> preimage(
      static_cast<std::size_t>(std::max<std::int64_t>(0, sup - inf - 1)));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::int64_t q = inf + 1; q < sup; ++q) {
      CyclingStep<G> s = cyc_q(g, members[i], q);
      if (s.result.inf() != inf || s.result.sup() != sup)
        throw NotRecurrentError("trajectory: cycling changed inf/sup; input is not in C*");
      auto& pre = preimage[static_cast<std::size_t>(q - inf - 1)];
      auto [it, inserted] = pre.emplace(s.result, i);
      if (!inserted && it->second != i)
        throw NotRecurrentError("trajectory: cycling is not injective; input is not in C*");
      add(std::move(s.result), multiply(g, witnesses[i], s.conjugator));
    }
  }

  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
  Trajectory<G> t;
  t.members.reserve(members.size());
  t.witnesses.reserve(members.size());
  for (std::size_t i : order) {
    t.members.push_back(std::move(members[i]));
    t.witnesses.push_back(std::move(witnesses[i]));
  }
  return t;
}

/// An element recurrent under cyc_{p,q} for every m ≤ p ≤ n and every q.
/// Runs the ascending q-sweep for each p and repeats until a full pass over
/// all p leaves the element unchanged.
template <GarsideStructure G>
WitnessedElement<G> cmn_star_representative(const G& g, const Element<G>& x, std::int64_t m, std::int64_t n,
                                            int max_passes = 10000) {
  if (m > n) throw std::invalid_argument("cmn_star_representative: need m <= n");
  WitnessedElement<G> out{x, {}};
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (std::int64_t p = m; p <= n; ++p) {
      if (p == 0) continue;  // cyc_{0,q} is a power of τ
      Element<G> xp = power(g, out.element, p);
      std::int64_t q = xp.inf() + 1;
      while (q < xp.sup()) {
        OrbitRecord<G> rec =
            iterate_to_recurrence(g, out.element, [&](const Element<G>& y) { return cyc_pq(g, y, p, q); });
        if (rec.entry_index > 0) {
          out.witness = multiply(g, out.witness, witness_to_cycle(g, rec));
          out.element = rec.recurrent();
          xp = power(g, out.element, p);
          changed = true;
        }
        ++q;
      }
    }
    if (!changed) return out;
  }
  throw std::runtime_error("cmn_star_representative: no fixpoint within pass limit");
}

}  // namespace garside
