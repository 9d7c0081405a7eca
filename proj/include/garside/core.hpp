#pragma once

// Normal-form arithmetic over an arbitrary Garside structure.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "garside/element.hpp"

namespace garside {

template <GarsideStructure G>
using Element = CanonicalElement<typename G::Simple>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Δ-power overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Δ-power overflow");
  return r;
}

namespace detail {

/// Incrementally builds a left normal form by right multiplication.
template <GarsideStructure G>
class NormalFormBuilder {
 public:
  using Simple = typename G::Simple;

  explicit NormalFormBuilder(const G& g, std::int64_t p = 0) : g_(g), p_(p) {}

  // Starts from an existing normal form; the factors are taken as given.
  NormalFormBuilder(const G& g, Element<G> x)
      : g_(g), p_(x.delta_power), f_(std::move(x.factors)) {}

  void append_delta_power(std::int64_t k) {
    if (k == 0) return;
    // x_1⋯x_l Δ^k = Δ^k τ^k(x_1)⋯τ^k(x_l)
    for (auto& s : f_) s = g_.tau(s, k);
    p_ = checked_add(p_, k);
  }

  void append(const Simple& s) {
    if (g_.is_identity(s)) return;
    if (g_.is_delta(s)) {
      append_delta_power(1);
      return;
    }
    f_.push_back(s);
    // A single right-to-left pass restores left-weightedness.
    for (std::size_t i = f_.size() - 1; i-- > 0;) {
      Simple c = g_.meet(g_.right_complement(f_[i]), f_[i + 1]);
      if (g_.is_identity(c)) break;
      f_[i] = g_.product(f_[i], c);
      f_[i + 1] = g_.left_quotient(c, f_[i + 1]);
    }
    std::size_t lead = 0;
    while (lead < f_.size() && g_.is_delta(f_[lead])) ++lead;
    if (lead > 0) {
      f_.erase(f_.begin(), f_.begin() + static_cast<std::ptrdiff_t>(lead));
      p_ = checked_add(p_, static_cast<std::int64_t>(lead));
    }
    while (!f_.empty() && g_.is_identity(f_.back())) f_.pop_back();
  }

  Element<G> take() && { return Element<G>{p_, std::move(f_)}; }

 private:
  const G& g_;
  std::int64_t p_;
  std::vector<Simple> f_;
};

}  // namespace detail

template <GarsideStructure G>
Element<G> identity_element(const G&) {
  return {};
}

template <GarsideStructure G>
Element<G> delta_power(const G&, std::int64_t k) {
  return Element<G>{k, {}};
}

/// Normal form of Δ^p · word[0] ⋯ word[m-1].
template <GarsideStructure G>
Element<G> normalize(const G& g, std::int64_t p, std::span<const typename G::Simple> word) {
  detail::NormalFormBuilder<G> b(g, p);
  for (const auto& s : word) b.append(s);
  return std::move(b).take();
}

template <GarsideStructure G>
Element<G> normalize(const G& g, std::int64_t p, const std::vector<typename G::Simple>& word) {
  return normalize(g, p, std::span<const typename G::Simple>(word));
}

template <GarsideStructure G>
Element<G> from_simple(const G& g, const typename G::Simple& s) {
  detail::NormalFormBuilder<G> b(g);
  b.append(s);
  return std::move(b).take();
}

template <GarsideStructure G>
Element<G> tau_pow(const G& g, const Element<G>& x, std::int64_t k) {
  Element<G> y = x;
  if (k % g.tau_order() == 0) return y;
  for (auto& s : y.factors) s = g.tau(s, k);
  return y;
}

template <GarsideStructure G>
Element<G> multiply(const G& g, const Element<G>& x, const Element<G>& y) {
  // x y = Δ^{p+r} τ^r(x_1)⋯τ^r(x_l) y_1⋯y_m
  detail::NormalFormBuilder<G> b(g, x);
  b.append_delta_power(y.delta_power);
  for (const auto& s : y.factors) b.append(s);
  return std::move(b).take();
}

template <GarsideStructure G>
Element<G> invert(const G& g, const Element<G>& x) {
  // x^{-1} = Δ^{-p-l} ∏_{i=l..1} τ^{-(i-1)-p}(Δ x_i^{-1})
  const std::int64_t p = x.delta_power;
  const std::int64_t l = x.len();
  detail::NormalFormBuilder<G> b(g, checked_add(-p, -l));
  for (std::int64_t i = l; i >= 1; --i) {
    const auto& xi = x.factors[static_cast<std::size_t>(i - 1)];
    b.append(g.tau(g.left_complement(xi), -(i - 1) - p));
  }
  return std::move(b).take();
}

/// u^{-1} x u
template <GarsideStructure G>
Element<G> conjugate(const G& g, const Element<G>& x, const Element<G>& u) {
  return multiply(g, multiply(g, invert(g, u), x), u);
}

template <GarsideStructure G>
Element<G> power(const G& g, const Element<G>& x, std::int64_t k) {
  Element<G> base = k < 0 ? invert(g, x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element<G> result;
  while (e > 0) {
    if (e & 1U) result = multiply(g, result, base);
    e >>= 1U;
    if (e > 0) base = multiply(g, base, base);
  }
  return result;
}

/// x ∧ Δ^q, read off the normal form.
template <GarsideStructure G>
Element<G> meet_delta_power(const G&, const Element<G>& x, std::int64_t q) {
  if (q <= x.inf()) return Element<G>{q, {}};
  if (q >= x.sup()) return x;
  Element<G> r;
  r.delta_power = x.delta_power;
  r.factors.assign(x.factors.begin(), x.factors.begin() + (q - x.delta_power));
  return r;
}

template <GarsideStructure G>
bool is_positive(const G&, const Element<G>& x) {
  return x.inf() >= 0;
}

/// x ≺ y, i.e. x^{-1} y lies in the monoid.
template <GarsideStructure G>
bool left_divides(const G& g, const Element<G>& x, const Element<G>& y) {
  return multiply(g, invert(g, x), y).inf() >= 0;
}

/// Simple-level left divisibility of an element of the form Δ^m·s.
template <GarsideStructure G>
bool simple_left_divides(const G& g, const typename G::Simple& a, const Element<G>& w) {
  if (w.delta_power >= 1) return true;
  if (w.delta_power < 0) return false;  // w is not positive
  if (w.factors.empty()) return g.is_identity(a);
  if (w.factors.size() == 1) return g.left_divides(a, w.factors.front());
  return left_divides(g, from_simple(g, a), w);
}

}  // namespace garside
