// Hide a braid by conjugation, then recover a conjugator from the two public words.

#include <cstdio>
#include <iostream>

#include "garside/garside.hpp"

int main() {
  using namespace garside;
  const int n = 6;
  BraidStructure g(n);
  Rng rng(2026);

  Braid x = gen_test3(n, 6, rng);
  Braid secret;
  for (int i = 0; i < 4; ++i) secret = multiply(g, secret, from_simple(g, random_simple(rng, g)));
  secret = multiply(g, secret, invert(g, from_simple(g, random_simple(rng, g))));
  Braid y = conjugate(g, x, secret);

  std::cout << "x = " << format_word(g, x) << "   (inf " << x.inf() << ", sup " << x.sup() << ")\n";
  std::cout << "y = " << format_word(g, y) << "   (inf " << y.inf() << ", sup " << y.sup() << ")\n";

  auto [infs, sups] = summit_bounds(g, x);
  auto star = c_star(g, x);
  auto ultra = ultra_summit_set(g, x);
  std::printf("summit window [%lld, %lld]: |C^u| = %zu, |C*| = %zu in %zu trajectories\n",
              static_cast<long long>(infs), static_cast<long long>(sups), ultra.size(), star.size(),
              star.trajectory_keys.size());

  auto answer = decide_conjugacy(g, x, y);
  if (!answer.conjugate) {
    std::cout << "not conjugate (unexpected)\n";
    return 1;
  }
  const bool ok = conjugate(g, x, *answer.witness) == y;
  std::cout << "recovered w = " << format_word(g, *answer.witness) << "\n"
            << "x^w == y: " << (ok ? "yes" : "no") << "\n";

  if (is_rigid(g, star.members.front())) {
    std::cout << "C* representative is rigid\n";
  } else {
    auto r = rigid_power(g, x);
    if (r.is_rigid) std::cout << "x^" << *r.power << " has a rigid conjugate\n";
    else std::cout << "no power of x up to the stable exponent is conjugate to a rigid braid\n";
  }
  return ok ? 0 : 1;
}
