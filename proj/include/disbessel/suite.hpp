#pragma once

#include "disbessel/identities.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace disbessel {

/// One randomized parameter tuple for the exact identities.
struct IdentityTuple {
  std::int64_t m;
  std::int64_t m_prime;
  std::int64_t n_prime;
  int k;
};

/// Deterministic tuples drawn from mt19937_64(seed): m, m' in [-2N, 2N],
/// n' in [-2N, 2N], k in [-j, j]. The reduction is plain modulo so the sample
/// does not depend on the standard library's distribution implementation.
inline std::vector<IdentityTuple> sample_identity_tuples(int j, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::int64_t size = 2 * static_cast<std::int64_t>(j) + 1;
  auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng() % span);
  };
  std::vector<IdentityTuple> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    IdentityTuple t{};
    t.m = draw(-2 * size, 2 * size);
    t.m_prime = draw(-2 * size, 2 * size);
    t.n_prime = draw(-2 * size, 2 * size);
    t.k = static_cast<int>(draw(-j, j));
    out.push_back(t);
  }
  return out;
}

/// Every exact identity on `count` seeded tuples plus the symmetry checks.
template <BesselEvaluator E>
std::vector<CheckResult> run_identity_suite(const E& eval, std::uint64_t seed, int count = 100) {
  const int j = eval.grid().j();
  std::vector<CheckResult> results;
  const int range = 2 * j;
  results.push_back(check_order_symmetry(eval, range));
  results.push_back(check_argument_symmetry(eval, range));
  results.push_back(check_origin_delta(eval, range));
  for (const IdentityTuple& t : sample_identity_tuples(j, seed, count)) {
    results.push_back(check_even_order_sum(eval, t.m));
    results.push_back(check_linear_cos(eval, t.m, t.k));
    results.push_back(check_linear_sin(eval, t.m, t.k));
    results.push_back(check_quadratic_norm(eval, t.m));
    results.push_back(check_graf(eval, t.n_prime, t.m, t.m_prime));
    results.push_back(check_graf_swap(eval, t.n_prime, t.m, t.m_prime));
    results.push_back(check_graf_quadratic_agreement(eval, t.m));
  }
  return results;
}

}  // namespace disbessel
