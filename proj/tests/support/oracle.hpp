#pragma once

// Test-only reference computations. Nothing here is used by the library; the
// point is to check the library against routes that do not share its code
// paths (brute-force enumeration, definitional formulas with full-group
// lattice operations).

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "garside/braid.hpp"
#include "garside/core.hpp"

namespace garside::oracle {

using G = BraidStructure;
using S = PermSimple;

/// a ≺ b for simples via crossing counts: b = a·c with ‖b‖ = ‖a‖ + ‖c‖.
inline bool brute_divides(const G& g, const S& a, const S& b) {
  S c = g.left_quotient(a, b);  // permutation b∘a^{-1}; always a permutation
  return g.norm(a) + g.norm(c) == g.norm(b);
}

inline S brute_meet(const G& g, const S& a, const S& b) {
  std::optional<S> best;
  for (const S& c : g.all_simples()) {
    if (!brute_divides(g, c, a) || !brute_divides(g, c, b)) continue;
    if (!best || g.norm(c) > g.norm(*best)) best = c;
  }
  return *best;
}

inline S brute_join(const G& g, const S& a, const S& b) {
  std::optional<S> best;
  for (const S& c : g.all_simples()) {
    if (!brute_divides(g, a, c) || !brute_divides(g, b, c)) continue;
    if (!best || g.norm(c) < g.norm(*best)) best = c;
  }
  return *best;
}

inline Braid simple_el(const G& g, const S& s) { return from_simple(g, s); }
inline Braid delta_el(std::int64_t k) { return Braid{k, {}}; }

inline Braid mul(const G& g, const Braid& a, const Braid& b) { return multiply(g, a, b); }
inline Braid inv(const G& g, const Braid& a) { return invert(g, a); }

/// Meet of two positive elements by peeling common simple prefixes.
inline Braid positive_meet(const G& g, Braid a, Braid b) {
  Braid acc;
  for (;;) {
    S ha = a.inf() >= 1 ? g.delta() : (a.factors.empty() ? g.identity() : a.factors.front());
    S hb = b.inf() >= 1 ? g.delta() : (b.factors.empty() ? g.identity() : b.factors.front());
    S s = g.meet(ha, hb);
    if (g.is_identity(s)) return acc;
    Braid se = simple_el(g, s);
    acc = mul(g, acc, se);
    a = mul(g, inv(g, se), a);
    b = mul(g, inv(g, se), b);
  }
}

/// Left gcd of arbitrary group elements.
inline Braid meet(const G& g, const Braid& x, const Braid& y) {
  std::int64_t m = std::min(x.inf(), y.inf());
  Braid a = mul(g, delta_el(-m), x);
  Braid b = mul(g, delta_el(-m), y);
  return mul(g, delta_el(m), positive_meet(g, a, b));
}

/// Word reversal on group elements.
inline Braid reverse(const G& g, const Braid& x) {
  Braid r;
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) r = mul(g, r, simple_el(g, g.reverse(*it)));
  return mul(g, r, delta_el(x.delta_power));
}

/// rev∘inv reverses ≺ and is an involution, so it exchanges meets and joins.
inline Braid flip(const G& g, const Braid& x) { return reverse(g, inv(g, x)); }

inline Braid join(const G& g, const Braid& x, const Braid& y) {
  return flip(g, meet(g, flip(g, x), flip(g, y)));
}

inline bool divides(const G& g, const Braid& x, const Braid& y) {
  return mul(g, inv(g, x), y).inf() >= 0;
}

/// Pushforward straight from its definition.
inline Braid phi_def(const G& g, const Braid& x, std::int64_t q, const Braid& u) {
  Braid xp = meet_delta_power(g, x, q);
  Braid xpp = mul(g, inv(g, xp), x);
  Braid lhs = mul(g, xpp, u);
  Braid rhs = mul(g, mul(g, inv(g, xp), delta_el(q)), tau_pow(g, u, q));
  return meet(g, lhs, rhs);
}

/// Pullback straight from its definition.
inline Braid pi_def(const G& g, const Braid& x, std::int64_t q, const Braid& u) {
  Braid xp = meet_delta_power(g, x, q);
  Braid xpp = mul(g, inv(g, xp), x);
  Braid a = delta_el(u.inf());
  Braid b = mul(g, inv(g, xpp), u);
  Braid c = mul(g, mul(g, xp, delta_el(-q)), tau_pow(g, u, -q));
  return join(g, join(g, a, b), c);
}

/// Random element from a word of `len` atoms/inverse atoms.
inline Braid random_word(const G& g, Rng& rng, int len, bool allow_inverse = true) {
  Braid x;
  for (int i = 0; i < len; ++i) {
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.strands() - 1)));
    Braid a = simple_el(g, g.atom(k));
    if (allow_inverse && rng.below(2) == 0) a = inv(g, a);
    x = mul(g, x, a);
  }
  return x;
}

/// Δ^m·s with m in [lo, hi] and s uniform over all simples (including 1, Δ).
inline Braid random_shaped(const G& g, Rng& rng, std::int64_t lo, std::int64_t hi) {
  std::int64_t m = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  S s = g.identity();
  if (rng.below(8) != 0) s = random_simple(rng, g);
  return mul(g, delta_el(m), simple_el(g, s));
}

/// Every conjugate z of x with lo ≤ inf z and sup z ≤ hi reachable from x by
/// conjugation with simples without leaving the window.
inline std::set<Braid> conjugates_in_window(const G& g, const Braid& x, std::int64_t lo, std::int64_t hi) {
  std::set<Braid> seen{x};
  std::queue<Braid> work;
  work.push(x);
  auto simples = g.all_simples();
  while (!work.empty()) {
    Braid y = work.front();
    work.pop();
    for (const S& s : simples) {
      Braid z = conjugate(g, y, simple_el(g, s));
      if (z.inf() < lo || z.sup() > hi) continue;
      if (seen.insert(z).second) work.push(z);
    }
  }
  return seen;
}

inline bool recurrent_at(const G& g, const Braid& x, std::int64_t q) {
  std::set<Braid> seen;
  Braid y = x;
  while (seen.insert(y).second) y = conjugate(g, y, meet_delta_power(g, y, q));
  return y == x;
}

/// C^s(x), C^u(x), C*(x) by brute force: simple-conjugation closure inside the
/// summit window, then recurrence filters.
struct BruteSummits {
  std::set<Braid> super, ultra, star;
};

inline BruteSummits brute_summits(const G& g, const Braid& x) {
  // Climb to the summit window by cycling/decycling, which never leaves it.
  Braid y = x;
  for (int guard = 0; guard < 10000; ++guard) {
    bool moved = false;
    for (std::int64_t q = y.inf() + 1; q < y.sup(); ++q) {
      std::set<Braid> seen;
      Braid z = y;
      while (seen.insert(z).second) z = conjugate(g, z, meet_delta_power(g, z, q));
      if (z.inf() != y.inf() || z.sup() != y.sup()) moved = true;
      y = z;
    }
    if (!moved) break;
  }
  // y now has maximal inf and minimal sup within its conjugacy class.
  BruteSummits out;
  for (const Braid& z : conjugates_in_window(g, y, y.inf(), y.sup())) {
    if (z.inf() != y.inf() || z.sup() != y.sup()) continue;
    out.super.insert(z);
    if (recurrent_at(g, z, z.inf() + 1)) out.ultra.insert(z);
    bool all = true;
    for (std::int64_t q = z.inf() + 1; q < z.sup() && all; ++q) all = recurrent_at(g, z, q);
    if (all) out.star.insert(z);
  }
  return out;
}

}  // namespace garside::oracle
