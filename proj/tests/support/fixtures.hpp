#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dioph/dioph.hpp"

namespace fixtures {

using dioph::Coefficients;
using dioph::Int;
using dioph::IntMatrix;

inline std::vector<Int> ints(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

inline Coefficients coeffs(std::initializer_list<long long> xs) {
  return Coefficients::validate(ints(xs));
}

inline dioph::SolutionVector sol(std::initializer_list<long long> xs) {
  return dioph::SolutionVector{ints(xs)};
}

inline Coefficients random_unimodular(std::mt19937_64& rng, std::size_t n,
                                      std::int64_t max_abs) {
  std::uniform_int_distribution<std::int64_t> pick(-max_abs, max_abs);
  while (true) {
    std::vector<Int> a(n);
    Int g = 0;
    for (auto& x : a) {
      x = pick(rng);
      g = dioph::gcd_nonneg(g, x);
    }
    if (g == 1) return Coefficients::validate(std::move(a));
  }
}

inline std::vector<Coefficients> random_corpus(std::size_t count,
                                               std::size_t min_n,
                                               std::size_t max_n,
                                               std::int64_t max_abs,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(min_n, max_n);
  std::vector<Coefficients> out;
  out.reserve(count);
  while (out.size() < count)
    out.push_back(random_unimodular(rng, pick_n(rng), max_abs));
  return out;
}

// Random unimodular matrix as a product of elementary column operations.
inline IntMatrix random_unimodular_matrix(std::mt19937_64& rng, std::size_t n,
                                          int ops = 12) {
  IntMatrix w = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick_idx(0, n - 1);
  std::uniform_int_distribution<int> pick_scale(-3, 3);
  std::uniform_int_distribution<int> pick_kind(0, 3);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = pick_idx(rng), j = pick_idx(rng);
    switch (pick_kind(rng)) {
      case 0:
        if (i != j) dioph::detail::add_col_multiple(w, i, j, pick_scale(rng));
        break;
      case 1:
        w.swap_cols(i, j);
        break;
      case 2:
        w.negate_col(i);
        break;
      default:
        if (i != j) dioph::detail::add_col_multiple(w, j, i, pick_scale(rng));
        break;
    }
  }
  return w;
}

}  // namespace fixtures
