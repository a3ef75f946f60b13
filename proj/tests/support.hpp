#pragma once

// Shared generators and brute-force oracles for the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lcmq/ring.hpp"

namespace lcmq::test {

inline QuadInt random_quad(std::mt19937_64& rng, long c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return QuadInt(Integer(d(rng)), Integer(d(rng)), Integer(c));
}

inline long isqrt_floor(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<long>(r);
}

/// hit[N + n_max] is true iff some x + y√-c satisfies (x + y√-c)(a + b√-c) = N,
/// for |N| ≤ n_max. Searches every (x, y) with norm(x + y√-c) ≤ n_max²/norm(z).
inline std::vector<bool> brute_force_multiples(long a, long b, long c, long n_max) {
  std::vector<bool> hit(static_cast<std::size_t>(2 * n_max + 1), false);
  const std::int64_t nz = std::int64_t{a} * a + std::int64_t{c} * b * b;
  const std::int64_t budget = std::int64_t{n_max} * n_max / nz;
  const long x_max = isqrt_floor(budget);
  const long y_max = isqrt_floor(budget / c);
  for (long x = -x_max; x <= x_max; ++x)
    for (long y = -y_max; y <= y_max; ++y) {
      if (std::int64_t{x} * b + std::int64_t{y} * a != 0) continue;
      const std::int64_t re = std::int64_t{x} * a - std::int64_t{c} * y * b;
      if (re >= -n_max && re <= n_max) hit[static_cast<std::size_t>(re + n_max)] = true;
    }
  return hit;
}

struct LemmaInstance {
  std::vector<QuadInt> u;
  QuadInt a;
  QuadInt b;
};

/// Distinct u_i with a a multiple of every u_i and b a multiple of every
/// ∏_{j≠i}(u_i - u_j). a and b are built from integer norms times random
/// cofactors, so ab ≡ 0 mod ∏u_i is not visible from the construction.
inline LemmaInstance random_lemma_instance(std::mt19937_64& rng) {
  const long c = 1 + static_cast<long>(rng() % 5);
  const std::size_t count = 1 + rng() % 4;
  LemmaInstance inst{{}, QuadInt::one(c), QuadInt::one(c)};
  while (inst.u.size() < count) {
    QuadInt x = random_quad(rng, c, 6);
    if (x.is_zero()) continue;
    bool fresh = true;
    for (const auto& y : inst.u) fresh = fresh && !(x == y);
    if (fresh) inst.u.push_back(x);
  }
  Integer a_mod = 1, b_mod = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const Integer nu = norm(inst.u[i]);
    mpz_lcm(a_mod.get_mpz_t(), a_mod.get_mpz_t(), nu.get_mpz_t());
    QuadInt diff = QuadInt::one(c);
    for (std::size_t j = 0; j < count; ++j)
      if (j != i) diff *= inst.u[i] - inst.u[j];
    const Integer nd = norm(diff);
    mpz_lcm(b_mod.get_mpz_t(), b_mod.get_mpz_t(), nd.get_mpz_t());
  }
  QuadInt ra = random_quad(rng, c, 9), rb = random_quad(rng, c, 9);
  if (ra.is_zero()) ra = QuadInt::one(c);
  if (rb.is_zero()) rb = QuadInt::one(c);
  inst.a = ra * a_mod;
  inst.b = rb * b_mod;
  return inst;
}

}  // namespace lcmq::test
