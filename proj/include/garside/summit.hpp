#pragma once

// Summit sets C^s, C^u and C* with witnesses, and the conjugacy test built on
// them.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/core.hpp"
#include "garside/cycling.hpp"
#include "garside/transport.hpp"

namespace garside {

class BudgetExceeded : public std::runtime_error {
 public:
  enum class Reason { time, size };
  BudgetExceeded(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Wall-clock and set-size limits. A default-constructed budget is unlimited.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  Budget(std::optional<std::chrono::milliseconds> time_limit, std::optional<std::size_t> size_limit)
      : size_limit_(size_limit) {
    if (time_limit) deadline_ = Clock::now() + *time_limit;
  }

  bool expired() const { return deadline_ && Clock::now() > *deadline_; }

  void check(std::size_t size) const {
    if (size_limit_ && size > *size_limit_)
      throw BudgetExceeded(BudgetExceeded::Reason::size, "set size limit of " + std::to_string(*size_limit_) + " exceeded");
    if (expired()) throw BudgetExceeded(BudgetExceeded::Reason::time, "time budget exceeded");
  }

 private:
  std::optional<Clock::time_point> deadline_;
  std::optional<std::size_t> size_limit_;
};

enum class SummitKind { super, ultra, star, star_star };

inline const char* to_string(SummitKind k) {
  switch (k) {
    case SummitKind::super: return "super";
    case SummitKind::ultra: return "ultra";
    case SummitKind::star: return "star";
    case SummitKind::star_star: return "star-star";
  }
  return "?";
}

/// Members are sorted by the canonical order; witnesses[i] conjugates base
/// onto members[i]. For kind star, trajectory_keys lists the least member of
/// each trajectory.
template <GarsideStructure G>
struct SummitSet {
  SummitKind kind = SummitKind::star;
  Element<G> base;
  std::int64_t infs = 0;
  std::int64_t sups = 0;
  std::vector<Element<G>> members;
  std::vector<Element<G>> witnesses;
  std::vector<Element<G>> trajectory_keys;

  std::size_t size() const { return members.size(); }

  std::optional<std::size_t> index_of(const Element<G>& y) const {
    auto it = std::lower_bound(members.begin(), members.end(), y);
    if (it == members.end() || *it != y) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  }

  bool contains(const Element<G>& y) const { return index_of(y).has_value(); }

  std::optional<Element<G>> witness_of(const Element<G>& y) const {
    auto i = index_of(y);
    if (!i) return std::nullopt;
    return witnesses[*i];
  }
};

namespace detail {

template <GarsideStructure G>
SummitSet<G> finish_summit(SummitKind kind, const Element<G>& base, std::vector<Element<G>> members,
                           std::vector<Element<G>> witnesses) {
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
  SummitSet<G> s;
  s.kind = kind;
  s.base = base;
  s.infs = members.front().inf();
  s.sups = members.front().sup();
  for (std::size_t i : order) {
    s.members.push_back(std::move(members[i]));
    s.witnesses.push_back(std::move(witnesses[i]));
  }
  return s;
}

/// Orders whose recurrence defines C^s (inf, sup) or C^u (additionally inf+1).
template <class Simple>
std::vector<std::int64_t> summit_orders(SummitKind kind, const CanonicalElement<Simple>& y) {
  std::vector<std::int64_t> qs{y.inf()};
  if (kind == SummitKind::ultra && y.inf() + 1 < y.sup()) qs.push_back(y.inf() + 1);
  if (y.sup() != y.inf()) qs.push_back(y.sup());
  if (kind == SummitKind::star) qs = all_orders(y);
  return qs;
}

}  // namespace detail

/// (infs x, sups x).
template <GarsideStructure G>
std::pair<std::int64_t, std::int64_t> summit_bounds(const G& g, const Element<G>& x) {
  Element<G> y = cstar_representative(g, x).element;
  return {y.inf(), y.sup()};
}

enum class ClosureMode { transport, exhaustive };

/// C^s(x) or C^u(x) by closure under minimal conjugators. In transport mode
/// the conjugators are the μ-images of the atoms for the orders defining the
/// set; exhaustive mode tries every simple and is meant for small n only.
template <GarsideStructure G>
SummitSet<G> recurrent_summit_set(const G& g, const Element<G>& x, SummitKind kind,
                                  ClosureMode mode = ClosureMode::transport, const Budget& budget = {}) {
  if (kind != SummitKind::super && kind != SummitKind::ultra)
    throw std::invalid_argument("recurrent_summit_set: kind must be super or ultra");
  WitnessedElement<G> rep = cstar_representative(g, x);
  std::unordered_map<Element<G>, std::size_t, ElementHash> index;
  std::vector<Element<G>> members;
  std::vector<Element<G>> witnesses;
  std::deque<std::size_t> work;
  auto add = [&](Element<G> y, Element<G> w) {
    if (index.contains(y)) return;
    index.emplace(y, members.size());
    work.push_back(members.size());
    members.push_back(std::move(y));
    witnesses.push_back(std::move(w));
    budget.check(members.size());
  };
  add(rep.element, rep.witness);

  const std::int64_t inf = rep.element.inf(), sup = rep.element.sup();
  std::vector<typename G::Simple> simples;
  if (mode == ClosureMode::exhaustive) {
    for (const auto& s : g.all_simples())
      if (!g.is_identity(s)) simples.push_back(s);
  }
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    const Element<G> y = members[i];
    const Element<G> wy = witnesses[i];
    budget.check(members.size());
    add(tau_pow(g, y, 1), multiply(g, wy, Element<G>{1, {}}));
    if (mode == ClosureMode::transport) {
      auto table = make_orbit_table(g, y, detail::summit_orders(kind, y));
      for (const auto& v : seed_conjugators(g, table, false)) add(conjugate(g, y, v), multiply(g, wy, v));
    } else {
      for (const auto& s : simples) {
        Element<G> v = from_simple(g, s);
        Element<G> z = conjugate(g, y, v);
        if (z.inf() != inf || z.sup() != sup) continue;
        if (kind == SummitKind::ultra && !in_G_q(g, z, inf + 1)) continue;
        add(std::move(z), multiply(g, wy, v));
      }
    }
  }
  return detail::finish_summit<G>(kind, x, std::move(members), std::move(witnesses));
}

template <GarsideStructure G>
SummitSet<G> super_summit_set(const G& g, const Element<G>& x, const Budget& budget = {},
                              ClosureMode mode = ClosureMode::transport) {
  return recurrent_summit_set(g, x, SummitKind::super, mode, budget);
}

template <GarsideStructure G>
SummitSet<G> ultra_summit_set(const G& g, const Element<G>& x, const Budget& budget = {},
                              ClosureMode mode = ClosureMode::transport) {
  return recurrent_summit_set(g, x, SummitKind::ultra, mode, budget);
}

/// C*(x) as a union of trajectories. Each trajectory is expanded from its
/// least member; conjugates already known are not re-expanded.
template <GarsideStructure G>
SummitSet<G> c_star(const G& g, const Element<G>& x, const Budget& budget = {}, bool exclude = true) {
  WitnessedElement<G> rep = cstar_representative(g, x);
  std::unordered_map<Element<G>, std::size_t, ElementHash> member_of;
  std::vector<Trajectory<G>> trajectories;
  std::size_t total = 0;
  auto add = [&](Trajectory<G> t) {
    for (const auto& y : t.members) member_of.emplace(y, trajectories.size());
    total += t.size();
    trajectories.push_back(std::move(t));
    budget.check(total);
  };
  add(trajectory(g, rep.element, rep.witness));

  for (std::size_t next = 0; next < trajectories.size(); ++next) {
    const Element<G> y = trajectories[next].key();
    const Element<G> wy = trajectories[next].key_witness();
    auto table = make_orbit_table(g, y, all_orders(y));
    for (const auto& v : seed_conjugators(g, table, exclude)) {
      Element<G> z = conjugate(g, y, v);
      if (member_of.contains(z)) continue;
      add(trajectory(g, z, multiply(g, wy, v)));
    }
    budget.check(total);
  }

  std::vector<Element<G>> members, witnesses, keys;
  for (auto& t : trajectories) {
    keys.push_back(t.key());
    for (std::size_t i = 0; i < t.size(); ++i) {
      members.push_back(std::move(t.members[i]));
      witnesses.push_back(std::move(t.witnesses[i]));
    }
  }
  auto s = detail::finish_summit<G>(SummitKind::star, x, std::move(members), std::move(witnesses));
  std::sort(keys.begin(), keys.end());
  s.trajectory_keys = std::move(keys);
  return s;
}

template <GarsideStructure G>
SummitSet<G> summit_set(const G& g, const Element<G>& x, SummitKind kind, const Budget& budget = {}) {
  if (kind == SummitKind::star) return c_star(g, x, budget);
  if (kind == SummitKind::star_star) throw std::invalid_argument("summit_set: use c_star_star_rigid");
  return recurrent_summit_set(g, x, kind, ClosureMode::transport, budget);
}

template <GarsideStructure G>
struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<Element<G>> witness;
};

/// Decides whether y is a conjugate of x; when it is, witness w satisfies
/// x^w = y.
template <GarsideStructure G>
ConjugacyAnswer<G> decide_conjugacy(const G& g, const Element<G>& x, const Element<G>& y, const Budget& budget = {}) {
  WitnessedElement<G> ry = cstar_representative(g, y);
  auto [infs, sups] = summit_bounds(g, x);
  if (infs != ry.element.inf() || sups != ry.element.sup()) return {};
  SummitSet<G> cx = c_star(g, x, budget);
  Trajectory<G> ty = trajectory(g, ry.element, ry.witness);
  if (!std::binary_search(cx.trajectory_keys.begin(), cx.trajectory_keys.end(), ty.key())) return {};
  Element<G> wx = *cx.witness_of(ty.key());
  return {true, multiply(g, wx, invert(g, ty.key_witness()))};
}

}  // namespace garside
