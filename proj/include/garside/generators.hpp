#pragma once

// Random braids for the three benchmark families: reducible braids with one
// trivial strand, 3-strand skeletons cabled by smaller braids, and generic
// braids of prescribed summit length.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/braid.hpp"
#include "garside/core.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace garside {

inline constexpr int kMaxGeneratorAttempts = 100000;

namespace detail {

/// Random simples appended until the product has sup l.
inline std::vector<PermSimple> simples_until_sup(const BraidStructure& g, std::int64_t l, Rng& rng) {
  std::vector<PermSimple> word;
  Braid acc;
  while (acc.sup() < l) {
    word.push_back(random_simple(rng, g));
    acc = multiply(g, acc, from_simple(g, word.back()));
  }
  return word;
}

/// Positive braid with sups = l, as a word of simples.
inline std::vector<PermSimple> positive_with_summit_sup(const BraidStructure& g, std::int64_t l, Rng& rng) {
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    auto word = simples_until_sup(g, l, rng);
    if (summit_bounds(g, normalize(g, 0, word)).second == l) return word;
  }
  throw std::runtime_error("generator: no sample accepted within attempt limit");
}

inline PermSimple embed(const BraidStructure& big, const PermSimple& s, int offset) {
  std::vector<int> perm(static_cast<std::size_t>(big.strands()));
  for (int i = 0; i < big.strands(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < s.n; ++i) perm[static_cast<std::size_t>(offset + i)] = offset + s[i] + 1;
  return big.from_permutation(perm);
}

inline void check_length(int l) {
  if (l < 1) throw InputError("generator: length must be at least 1");
}

}  // namespace detail

/// Test 1: a positive braid of B_{n-1} with sups = l, with a trivial strand n
/// appended.
inline Braid gen_test1(int n, int l, Rng& rng) {
  if (n < 3) throw InputError("test 1 needs at least 3 strands");
  detail::check_length(l);
  BraidStructure inner(n - 1), g(n);
  std::vector<PermSimple> word;
  for (const auto& s : detail::positive_with_summit_sup(inner, l, rng)) word.push_back(detail::embed(g, s, 0));
  return normalize(g, 0, word);
}

/// Test 2: a 3-strand skeleton with sups = l whose strands are cabled by
/// products of l random simples of B_{n/3}.
inline Braid gen_test2(int n, int l, Rng& rng) {
  if (n % 3 != 0 || n < 6) throw InputError("test 2 needs a multiple of 3 strands, at least 6");
  detail::check_length(l);
  const int m = n / 3;
  BraidStructure skel(3), block(m), g(n);
  auto skeleton = detail::positive_with_summit_sup(skel, l, rng);
  std::vector<PermSimple> word;
  // Cables first: the j-th factor juxtaposes the j-th simple of each strand's cable.
  std::vector<std::vector<PermSimple>> cables(3);
  for (auto& c : cables)
    for (int j = 0; j < l; ++j) c.push_back(random_simple(rng, block));
  for (int j = 0; j < l; ++j) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int b = 0; b < 3; ++b) {
      const PermSimple& s = cables[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(b * m + i)] = b * m + s[i] + 1;
    }
    word.push_back(g.from_permutation(perm));
  }
  // Each skeleton crossing becomes a crossing of bands.
  for (const auto& s : skeleton) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(b * m + i)] = s[b] * m + i + 1;
    word.push_back(g.from_permutation(perm));
  }
  return normalize(g, 0, word);
}

/// Test 3: Δ^p·x_1⋯x_k with p ∈ {0, 1}, len = l, resampled until lens = l.
/// The accepted p is stored in `drawn_delta` when given.
inline Braid gen_test3(int n, int l, Rng& rng, std::int64_t* drawn_delta = nullptr) {
  if (n < 3) throw InputError("test 3 needs at least 3 strands");
  detail::check_length(l);
  BraidStructure g(n);
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    const auto p = static_cast<std::int64_t>(rng.below(2));
    Braid acc;
    for (int steps = 0; acc.len() != l; ++steps) {
      if (steps > 1000 * l) break;
      acc = multiply(g, acc, from_simple(g, random_simple(rng, g)));
    }
    if (acc.len() != l) continue;
    Braid x = multiply(g, Braid{p, {}}, acc);
    auto [infs, sups] = summit_bounds(g, x);
    if (sups - infs != l) continue;
    if (drawn_delta) *drawn_delta = p;
    return x;
  }
  throw std::runtime_error("generator: no sample accepted within attempt limit");
}

inline Braid gen_test(int test, int n, int l, Rng& rng) {
  switch (test) {
    case 1: return gen_test1(n, l, rng);
    case 2: return gen_test2(n, l, rng);
    case 3: return gen_test3(n, l, rng);
  }
  throw InputError("unknown test family " + std::to_string(test));
}

inline Braid gen_test(int test, int n, int l, std::uint64_t seed) {
  Rng rng(seed);
  return gen_test(test, n, l, rng);
}

}  // namespace garside
