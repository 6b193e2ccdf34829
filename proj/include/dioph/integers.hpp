#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dioph/errors.hpp"

namespace dioph {

// Exact signed integer of arbitrary magnitude.
using Int = boost::multiprecision::cpp_int;

inline Int abs_val(const Int& x) { return x < 0 ? Int(-x) : x; }

// gcd normalized nonnegative; gcd(0, 0) == 0.
inline Int gcd_nonneg(const Int& a, const Int& b) {
  Int g = boost::multiprecision::gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

inline Int lcm_nonneg(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_val(a / gcd_nonneg(a, b) * b);
}

// d | x, with the convention that 0 divides only 0.
inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

// Remainder in [0, |m|).
inline Int mod_nonneg(const Int& a, const Int& m) {
  if (m == 0) throw std::invalid_argument("mod_nonneg: modulus is zero");
  Int mm = abs_val(m);
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient with remainder of magnitude at most |b|/2.
inline Int nearest_div(const Int& a, const Int& b) {
  Int q = floor_div(a, b);
  Int r = a - q * b;
  if (2 * r > abs_val(b)) q += b > 0 ? 1 : -1;
  return q;
}

// u*a + v*b == g == gcd(a, b) >= 0.
struct Bezout {
  Int g, u, v;
};

inline Bezout xgcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_u - q * u;
    old_u = std::move(u);
    u = std::move(t);
    t = old_v - q * v;
    old_v = std::move(v);
    v = std::move(t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

// Prefix gcds g_k = gcd(a_1, ..., a_k), each nonnegative, each dividing the
// one before it.
struct GcdChain {
  std::vector<Int> prefix_gcds;
};

inline GcdChain gcd_prefixes(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("gcd_prefixes: empty input");
  GcdChain chain;
  chain.prefix_gcds.reserve(a.size());
  Int g = 0;
  for (const Int& x : a) {
    g = gcd_nonneg(g, x);
    chain.prefix_gcds.push_back(g);
  }
  return chain;
}

// gcd of all entries together with a witness c such that sum c_i a_i == g.
// Entries of c over zero coefficients are zero.
inline std::pair<Int, std::vector<Int>> xgcd_multi(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("xgcd_multi: empty input");
  std::vector<Int> c(a.size(), 0);
  Int g = abs_val(a[0]);
  c[0] = a[0] < 0 ? -1 : 1;
  for (std::size_t i = 1; i < a.size() && g != 1; ++i) {
    Bezout b = xgcd(g, a[i]);
    for (std::size_t j = 0; j < i; ++j) c[j] *= b.u;
    c[i] = b.v;
    g = b.g;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0) c[i] = 0;
  return {std::move(g), std::move(c)};
}

// Solutions t of sum coeffs_i t_i ≡ target (mod modulus), entries reduced to
// [0, |modulus|); a single-unknown solve returns the smallest nonnegative
// solution. nullopt iff gcd(coeffs, modulus) does not divide target.
inline std::optional<std::vector<Int>> solve_linear_congruence(
    const std::vector<Int>& coeffs, const Int& target, const Int& modulus) {
  if (modulus == 0)
    throw std::invalid_argument("solve_linear_congruence: modulus is zero");
  Int L = abs_val(modulus);
  std::vector<Int> ext = coeffs;
  ext.push_back(L);
  auto [g, w] = xgcd_multi(ext);
  if (!divides(g, target)) return std::nullopt;
  Int scale = target / g;
  std::vector<Int> t(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    t[i] = mod_nonneg(w[i] * scale, L);
  if (coeffs.size() == 1) {
    Int step = L / gcd_nonneg(coeffs[0], L);
    t[0] = mod_nonneg(t[0], step);
  }
  return t;
}

// Largest power of the prime p dividing x; rejects x == 0.
inline Int p_part(const Int& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("p_part: undefined at zero");
  if (p < 2) throw std::invalid_argument("p_part: p must be at least 2");
  Int part = 1;
  Int y = abs_val(x);
  while (y % p == 0) {
    y /= p;
    part *= p;
  }
  return part;
}

namespace detail {

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes = [] {
    constexpr std::int64_t limit = 100000;
    std::vector<bool> composite(limit, false);
    std::vector<std::int64_t> ps;
    for (std::int64_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::int64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

// true when base witnesses the compositeness of odd n = d * 2^s + 1.
inline bool miller_rabin_witness(const Int& n, const Int& base, const Int& d,
                                 unsigned s) {
  Int x = boost::multiprecision::powm(base % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace detail

// Deterministic below the fixed threshold covered by the first witness set,
// probabilistic with a second fixed round of witnesses above it.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  const auto& primes = detail::small_primes();
  for (std::size_t i = 0; i < 200 && i < primes.size(); ++i) {
    Int p = primes[i];
    if (n == p) return true;
    if (n % p == 0) return false;
    if (p * p > n) return true;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  static const std::int64_t first_round[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  static const std::int64_t second_round[] = {41, 43, 47, 53, 59, 61, 67,
                                              71, 73, 79, 83, 89, 97};
  static const Int deterministic_limit("3317044064679887385961981");
  for (std::int64_t b : first_round)
    if (detail::miller_rabin_witness(n, b, d, s)) return false;
  if (n < deterministic_limit) return true;
  for (std::int64_t b : second_round)
    if (detail::miller_rabin_witness(n, b, d, s)) return false;
  return true;
}

namespace detail {

// Factor extraction for odd composites beyond the trial-division range.
inline Int pollard_rho(const Int& n) {
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd_nonneg(x - y, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of |n|, n != 0, as prime -> exponent.
inline std::map<Int, unsigned> factorize(Int n) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  n = abs_val(n);
  std::map<Int, unsigned> out;
  for (std::int64_t p : detail::small_primes()) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) detail::factor_into(n, out);
  return out;
}

}  // namespace dioph
