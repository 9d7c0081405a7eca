#pragma once

// Classical Garside structure of the braid group B_n. Simple elements are
// positive permutation braids, stored as the table of final strand positions:
// img[i] is where the strand starting at position i ends. With this convention
// the braid product a·b corresponds to applying a first, then b.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/core.hpp"
#include "garside/element.hpp"
#include "garside/random.hpp"

namespace garside {

inline constexpr int kMaxStrands = 64;

struct PermSimple {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxStrands> img{};

  int operator[](int i) const { return img[static_cast<std::size_t>(i)]; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ n;
    for (int i = 0; i < n; ++i) {
      h ^= img[static_cast<std::size_t>(i)];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }

  auto operator<=>(const PermSimple&) const = default;
  bool operator==(const PermSimple&) const = default;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BraidStructure {
 public:
  using Simple = PermSimple;

  explicit BraidStructure(int n) : n_(n) {
    if (n < 2 || n > kMaxStrands) {
      throw InputError("strand count must lie in [2, " + std::to_string(kMaxStrands) + "], got " +
                       std::to_string(n));
    }
  }

  int strands() const { return n_; }
  int tau_order() const { return n_ == 2 ? 1 : 2; }
  int delta_norm() const { return n_ * (n_ - 1) / 2; }

  Simple identity() const {
    Simple s;
    s.n = static_cast<std::uint8_t>(n_);
    for (int i = 0; i < n_; ++i) s.img[i] = static_cast<std::uint8_t>(i);
    return s;
  }

  Simple delta() const {
    Simple s;
    s.n = static_cast<std::uint8_t>(n_);
    for (int i = 0; i < n_; ++i) s.img[i] = static_cast<std::uint8_t>(n_ - 1 - i);
    return s;
  }

  /// σ_k for 1 ≤ k < n.
  Simple atom(int k) const {
    if (k < 1 || k >= n_) throw InputError("generator index out of range: " + std::to_string(k));
    Simple s = identity();
    std::swap(s.img[k - 1], s.img[k]);
    return s;
  }

  std::vector<Simple> atoms() const {
    std::vector<Simple> out;
    for (int k = 1; k < n_; ++k) out.push_back(atom(k));
    return out;
  }

  /// One-indexed image list; throws unless it is a permutation of {1..n}.
  Simple from_permutation(const std::vector<int>& images) const {
    if (static_cast<int>(images.size()) != n_) throw InputError("permutation has wrong length");
    Simple s;
    s.n = static_cast<std::uint8_t>(n_);
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int i = 0; i < n_; ++i) {
      int v = images[static_cast<std::size_t>(i)] - 1;
      if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) throw InputError("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
      s.img[i] = static_cast<std::uint8_t>(v);
    }
    return s;
  }

  std::vector<int> to_permutation(const Simple& s) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) out.push_back(s[i] + 1);
    return out;
  }

  bool is_identity(const Simple& s) const {
    for (int i = 0; i < n_; ++i)
      if (s.img[i] != i) return false;
    return true;
  }

  bool is_delta(const Simple& s) const {
    for (int i = 0; i < n_; ++i)
      if (s.img[i] != n_ - 1 - i) return false;
    return true;
  }

  /// a·b, assuming the product is simple.
  Simple product(const Simple& a, const Simple& b) const {
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[i] = b.img[a.img[i]];
    return r;
  }

  /// a^{-1} b, assuming a ≺ b.
  Simple left_quotient(const Simple& a, const Simple& b) const {
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[a.img[i]] = b.img[i];
    return r;
  }

  /// a^{-1} Δ
  Simple right_complement(const Simple& a) const {
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[a.img[i]] = static_cast<std::uint8_t>(n_ - 1 - i);
    return r;
  }

  /// Δ a^{-1}
  Simple left_complement(const Simple& a) const {
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[n_ - 1 - a.img[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// τ^k(a) = Δ^{-k} a Δ^k; τ reverses both positions and values.
  Simple tau(const Simple& a, std::int64_t k) const {
    if (k % 2 == 0) return a;
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[i] = static_cast<std::uint8_t>(n_ - 1 - a.img[n_ - 1 - i]);
    return r;
  }

  /// Number of crossings, i.e. the number of atoms in any decomposition.
  int norm(const Simple& a) const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (a.img[i] > a.img[j]) ++c;
    return c;
  }

  // a ≺ b iff every crossing of a is a crossing of b.
  bool left_divides(const Simple& a, const Simple& b) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (a.img[i] > a.img[j] && b.img[i] < b.img[j]) return false;
    return true;
  }

  Simple meet(const Simple& a, const Simple& b) const {
    // Non-crossing pairs of a ∧ b: transitive closure of those of a and b.
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int j = i + 1; j < n_; ++j)
        if (a.img[i] < a.img[j] || b.img[i] < b.img[j]) r |= bit(j);
      rows[i] = r;
    }
    close_upward(rows);
    return from_pairs(rows, /*rows_are_crossings=*/false);
  }

  Simple join(const Simple& a, const Simple& b) const {
    // Crossing pairs of a ∨ b: transitive closure of those of a and b.
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int j = i + 1; j < n_; ++j)
        if (a.img[i] > a.img[j] || b.img[i] > b.img[j]) r |= bit(j);
      rows[i] = r;
    }
    close_upward(rows);
    return from_pairs(rows, /*rows_are_crossings=*/true);
  }

  /// Reduced word in the atoms (1-based generator indices).
  std::vector<int> word(const Simple& a) const {
    std::vector<int> out;
    Simple s = a;
    while (!is_identity(s)) {
      int k = 0;
      while (s.img[k] < s.img[k + 1]) ++k;
      out.push_back(k + 1);
      s = left_quotient(atom(k + 1), s);
    }
    return out;
  }

  /// Word reversal, which is an anti-automorphism of B_n; on simples it is
  /// inversion of the permutation.
  Simple reverse(const Simple& a) const {
    Simple r;
    r.n = a.n;
    for (int i = 0; i < n_; ++i) r.img[a.img[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// All n! simples; intended for exhaustive checks at small n.
  std::vector<Simple> all_simples() const {
    if (n_ > 8) throw std::invalid_argument("all_simples is limited to n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Simple> out;
    do {
      out.push_back(from_permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  bool operator==(const BraidStructure&) const = default;

 private:
  using Rows = std::array<std::uint64_t, kMaxStrands>;

  static std::uint64_t bit(int j) { return std::uint64_t{1} << j; }

  void close_upward(Rows& rows) const {
    for (int i = n_ - 2; i >= 0; --i) {
      std::uint64_t r = rows[i];
      std::uint64_t todo = r;
      while (todo) {
        int j = std::countr_zero(todo);
        todo &= todo - 1;
        r |= rows[j];
      }
      rows[i] = r;
    }
  }

  Simple from_pairs(const Rows& rows, bool rows_are_crossings) const {
    // Final position of strand i = strands that end up to its left.
    Simple s;
    s.n = static_cast<std::uint8_t>(n_);
    for (int i = 0; i < n_; ++i) {
      int pos = 0;
      for (int j = 0; j < i; ++j) {
        bool crosses = ((rows[j] >> i) & 1U) == (rows_are_crossings ? 1U : 0U);
        if (!crosses) ++pos;
      }
      std::uint64_t row = rows_are_crossings ? rows[i] : ~rows[i];
      std::uint64_t mask = (i + 1 >= 64 ? 0 : (~std::uint64_t{0} << (i + 1)));
      if (n_ < 64) mask &= (std::uint64_t{1} << n_) - 1;
      pos += std::popcount(row & mask);
      s.img[i] = static_cast<std::uint8_t>(pos);
    }
    return s;
  }

  int n_;
};

static_assert(GarsideStructure<BraidStructure>);

using Braid = Element<BraidStructure>;

/// Parses whitespace-separated tokens: nonzero k for σ_k^{±1}, and D, D^-1 or
/// D^k for powers of Δ. The word is read left to right.
inline Braid parse_word(const BraidStructure& g, std::string_view text) {
  detail::NormalFormBuilder<BraidStructure> b(g);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    if (tok == "D" || tok.starts_with("D^")) {
      std::int64_t k = 1;
      if (tok.size() > 1) {
        std::string_view num = tok.substr(2);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
          throw InputError("malformed token: '" + std::string(tok) + "'");
      }
      b.append_delta_power(k);
      continue;
    }
    long long k = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("malformed token: '" + std::string(tok) + "'");
    if (k == 0) throw InputError("generator index 0 is not allowed");
    if (k >= g.strands() || -k >= g.strands())
      throw InputError("generator index " + std::to_string(k) + " out of range for B_" +
                       std::to_string(g.strands()));
    if (k > 0) {
      b.append(g.atom(static_cast<int>(k)));
    } else {
      // a^{-1} = Δ^{-1} (Δ a^{-1})
      b.append_delta_power(-1);
      b.append(g.left_complement(g.atom(static_cast<int>(-k))));
    }
  }
  return std::move(b).take();
}

/// Word for a normal form: Δ-power token followed by reduced words of the
/// factors. Parses back to the same element.
inline std::string format_word(const BraidStructure& g, const Braid& x) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  if (x.delta_power == 1) {
    sep();
    out << "D";
  } else if (x.delta_power != 0) {
    sep();
    out << "D^" << x.delta_power;
  }
  for (const auto& f : x.factors) {
    for (int k : g.word(f)) {
      sep();
      out << k;
    }
  }
  return out.str();
}

/// Uniform random simple element other than the identity (Δ allowed).
inline PermSimple random_simple(Rng& rng, const BraidStructure& g) {
  const int n = g.strands();
  for (;;) {
    PermSimple s = g.identity();
    for (int i = n - 1; i > 0; --i) {
      auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(s.img[i], s.img[j]);
    }
    if (!g.is_identity(s)) return s;
  }
}

}  // namespace garside
