#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dioph/basis.hpp"
#include "dioph/errors.hpp"
#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/solution_space.hpp"

namespace dioph {

// Isomorphism type of a finitely generated module over Z: a free rank plus an
// invariant-factor chain f_1 | f_2 | ... with every factor > 1, refined into
// elementary divisors (prime powers) by factorization.
class QuotientStructure {
 public:
  QuotientStructure() = default;

  static QuotientStructure trivial() { return {}; }

  static QuotientStructure free_module(std::size_t rank) {
    QuotientStructure q;
    q.free_rank_ = rank;
    return q;
  }

  // Factors must already form a divisibility chain up to sign; unit factors
  // are dropped and signs normalized.
  static QuotientStructure from_invariant_factors(std::vector<Int> fs,
                                                  std::size_t free_rank = 0) {
    QuotientStructure q;
    q.free_rank_ = free_rank;
    for (Int& f : fs) {
      if (f == 0)
        throw std::invalid_argument("invariant factor must be nonzero");
      f = abs_val(f);
      if (f == 1) continue;
      if (!q.invariant_factors_.empty() && !divides(q.invariant_factors_.back(), f))
        throw std::invalid_argument("factors do not form a divisibility chain");
      q.invariant_factors_.push_back(f);
    }
    for (const Int& f : q.invariant_factors_)
      for (const auto& [p, e] : factorize(f)) {
        Int power = 1;
        for (unsigned t = 0; t < e; ++t) power *= p;
        q.elementary_divisors_[p].push_back(power);
      }
    return q;
  }

  // Arbitrary cyclic orders: zeros contribute free rank, the rest are
  // renormalized into a divisibility chain through the Smith form of the
  // diagonal matrix they define.
  static QuotientStructure from_cyclic_factors(std::vector<Int> fs,
                                               std::size_t free_rank = 0) {
    std::vector<Int> nonzero;
    for (Int& f : fs) {
      if (f == 0)
        ++free_rank;
      else
        nonzero.push_back(abs_val(f));
    }
    SnfResult s = snf(IntMatrix::diagonal(nonzero));
    return from_invariant_factors(s.invariant_factors, free_rank);
  }

  // Quotient of Z^rows by the column span of coords.
  static QuotientStructure from_coordinates(const IntMatrix& coords) {
    SnfResult s = snf(coords);
    return from_invariant_factors(s.invariant_factors,
                                  coords.rows() - s.rank);
  }

  // Inverse refinement: combine prime powers back into a chain. The k-th
  // largest powers across all primes multiply into the k-th largest factor.
  static QuotientStructure from_elementary_divisors(
      const std::map<Int, std::vector<Int>>& divisors,
      std::size_t free_rank = 0) {
    std::size_t depth = 0;
    std::map<Int, std::vector<Int>> sorted = divisors;
    for (auto& [p, powers] : sorted) {
      std::sort(powers.begin(), powers.end());
      depth = std::max(depth, powers.size());
    }
    std::vector<Int> fs(depth, 1);
    for (const auto& [p, powers] : sorted)
      for (std::size_t k = 0; k < powers.size(); ++k)
        fs[depth - powers.size() + k] *= powers[k];
    return from_invariant_factors(std::move(fs), free_rank);
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const {
    return invariant_factors_;
  }
  const std::map<Int, std::vector<Int>>& elementary_divisors() const {
    return elementary_divisors_;
  }
  bool is_trivial() const {
    return free_rank_ == 0 && invariant_factors_.empty();
  }
  Int torsion_order() const {
    Int p = 1;
    for (const Int& f : invariant_factors_) p *= f;
    return p;
  }

  bool operator==(const QuotientStructure& o) const {
    return free_rank_ == o.free_rank_ &&
           invariant_factors_ == o.invariant_factors_;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& f : invariant_factors_) {
      os << (first ? "" : " + ") << "Z/" << f.str();
      first = false;
    }
    if (free_rank_ > 0)
      os << (first ? "" : " + ") << "Z^" << free_rank_;
    return os.str();
  }

  // Same module written as a sum of prime-power cyclic pieces.
  std::string to_elementary_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, powers] : elementary_divisors_)
      for (const Int& q : powers) {
        os << (first ? "" : " + ") << "Z/" << q.str();
        first = false;
      }
    if (free_rank_ > 0)
      os << (first ? "" : " + ") << "Z^" << free_rank_;
    return os.str();
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> invariant_factors_;
  std::map<Int, std::vector<Int>> elementary_divisors_;
};

inline std::ostream& operator<<(std::ostream& os, const QuotientStructure& q) {
  return os << q.to_string();
}

// d_i = a_1 (a_1,...,a_{i+1}) / ((a_1, a_{i+1}) (a_1,...,a_i))
//     = a_1 / lcm[(a_1, a_{i+1}), (a_1,...,a_i)]      for i = 2, ..., n-1,
// normalized nonnegative. Every entry divides a_1. Order-dependent, but the
// p-parts of the entries are permutation invariants of the coefficient tail.
struct DivisorChain {
  std::vector<Int> values;  // length n - 2
};

inline DivisorChain divisor_chain(const Coefficients& c) {
  const std::size_t n = c.size();
  if (n <= 2)
    throw std::invalid_argument("divisor_chain: need at least three entries");
  if (c[0] == 0)
    throw std::invalid_argument("divisor_chain: leading coefficient is zero");
  const std::vector<Int>& G = gcd_prefixes(c.values()).prefix_gcds;
  Int a1 = abs_val(c[0]);
  DivisorChain out;
  out.values.reserve(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    Int l = lcm_nonneg(gcd_nonneg(c[0], c[i + 1]), G[i]);
    if (!divides(l, a1))
      throw internal_error("divisor chain entry is not integral");
    out.values.push_back(a1 / l);
  }
  return out;
}

namespace detail {

inline Coefficients rotate_to_front(const Coefficients& c, std::size_t i) {
  std::vector<Int> rotated;
  rotated.reserve(c.size());
  rotated.push_back(c[i]);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k != i) rotated.push_back(c[k]);
  return Coefficients::validate(std::move(rotated));
}

inline SolutionBasis certified_basis(const Coefficients& c) {
  return build_basis(c, choose_index_set(c, IndexSetStrategy::all));
}

}  // namespace detail

// Quotient of the solution module by the span of the elementary solutions
// anchored at index i: isomorphic to (Z/a_i)^{n-2}, free when a_i == 0.
// Computed both in closed form and through the Smith form of the generator
// coordinates in a certified basis; the two routes must agree.
inline QuotientStructure quotient_by_elementary_span(const Coefficients& c,
                                                     std::size_t i) {
  const std::size_t n = c.size();
  if (i >= n)
    throw std::invalid_argument("quotient_by_elementary_span: bad index");
  QuotientStructure closed =
      c[i] == 0 ? QuotientStructure::free_module(n - 2)
                : QuotientStructure::from_cyclic_factors(
                      std::vector<Int>(n - 2, abs_val(c[i])));
  SolutionBasis basis = detail::certified_basis(c);
  std::vector<SolutionVector> gens;
  gens.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) gens.push_back(elementary_solution(c, i, j));
  QuotientStructure via_snf = QuotientStructure::from_coordinates(
      coordinates_in_basis(c, basis, gens));
  if (!(closed == via_snf))
    throw internal_error(
        "elementary-span quotient: closed form and Smith form disagree");
  return closed;
}

// Quotient of the pivot lattice W (integer span of the rational basis
// attached to the pivot) by the solution module: cyclic of order |a_pivot|.
// Cross-checked against the Smith form of the pivot-coordinate matrix of a
// certified basis, which must be diag(1, ..., 1, |a_pivot|).
inline QuotientStructure pivot_lattice_quotient(const Coefficients& c,
                                                std::size_t pivot) {
  const std::size_t n = c.size();
  if (pivot >= n)
    throw std::invalid_argument("pivot_lattice_quotient: bad index");
  if (c[pivot] == 0)
    throw std::invalid_argument(
        "pivot_lattice_quotient: pivot coefficient is zero");
  QuotientStructure closed =
      QuotientStructure::from_cyclic_factors({abs_val(c[pivot])});
  SolutionBasis basis = detail::certified_basis(c);
  IntMatrix W(n - 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::vector<Int> col = pivot_coordinates(c, basis.vectors[j], pivot);
    for (std::size_t k = 0; k + 1 < n; ++k) W(k, j) = col[k];
  }
  QuotientStructure via_snf = QuotientStructure::from_coordinates(W);
  if (!(closed == via_snf))
    throw internal_error(
        "pivot-lattice quotient: closed form and Smith form disagree");
  return closed;
}

// Quotient of the solution module by the span of the reduced solutions
// anchored at index i. For a_i != 0 and n > 2 the structure is the direct sum
// of Z/d over the divisor chain of the coefficients rotated so that i leads;
// for a_i == 0 it is free of rank n-2; for n == 2 it is trivial. Always
// cross-checked against the Smith form of the generator coordinates.
inline QuotientStructure quotient_by_reduced_span(const Coefficients& c,
                                                  std::size_t i) {
  const std::size_t n = c.size();
  if (i >= n)
    throw std::invalid_argument("quotient_by_reduced_span: bad index");
  QuotientStructure closed;
  if (n == 2)
    closed = QuotientStructure::trivial();
  else if (c[i] == 0)
    closed = QuotientStructure::free_module(n - 2);
  else
    closed = QuotientStructure::from_cyclic_factors(
        divisor_chain(detail::rotate_to_front(c, i)).values);
  SolutionBasis basis = detail::certified_basis(c);
  std::vector<SolutionVector> gens;
  gens.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) gens.push_back(reduced_solution(c, i, j));
  QuotientStructure via_snf = QuotientStructure::from_coordinates(
      coordinates_in_basis(c, basis, gens));
  if (!(closed == via_snf))
    throw internal_error(
        "reduced-span quotient: closed form and Smith form disagree");
  return closed;
}

// C = A^{-1} D, where A is the canonical full-index basis matrix (leading
// coefficient as pivot) and D = diag(|a_1|/(a_1, a_j)) holds the pivot
// coordinates of the reduced solutions at the leading index, up to sign.
// Upper triangular and integral, with diagonal (1, d_2, ..., d_{n-1}) and
// |det C| = |a_1|^{n-2} / prod_j (a_1, a_j).
inline IntMatrix reduced_coordinate_matrix(const Coefficients& c) {
  const std::size_t n = c.size();
  if (n <= 2)
    throw std::invalid_argument(
        "reduced_coordinate_matrix: need at least three entries");
  if (c[0] == 0)
    throw std::invalid_argument(
        "reduced_coordinate_matrix: leading coefficient is zero");
  SolutionBasis basis = detail::certified_basis(c);
  Int a1 = abs_val(c[0]);
  std::vector<Int> diag(n - 1);
  for (std::size_t j = 1; j < n; ++j) diag[j - 1] = a1 / gcd_nonneg(c[0], c[j]);
  IntMatrix C = solve_upper_triangular(basis.coords, IntMatrix::diagonal(diag));
  DivisorChain d = divisor_chain(c);
  if (C(0, 0) != 1) throw internal_error("C(0,0) must be 1");
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (C(k, k) != d.values[k - 1])
      throw internal_error("C diagonal disagrees with the divisor chain");
  Int det = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) det *= C(k, k);
  Int denom = 1;
  for (std::size_t j = 1; j < n; ++j) denom *= gcd_nonneg(c[0], c[j]);
  Int expected = 1;
  for (std::size_t t = 0; t + 2 < n; ++t) expected *= a1;
  if (abs_val(det) * denom != expected)
    throw internal_error("determinant of C violates the product identity");
  return C;
}

// Each upper entry must lie in the ideal generated by its two diagonal
// entries, i.e. gcd(C_ii, C_jj) | C_ij.
inline bool divisibility_invariant_holds(const IntMatrix& C) {
  if (C.rows() != C.cols() || !is_upper_triangular(C))
    throw std::invalid_argument(
        "divisibility_invariant_holds: expected square upper-triangular input");
  for (std::size_t i = 0; i + 1 < C.rows(); ++i)
    for (std::size_t j = i + 1; j < C.cols(); ++j)
      if (!divides(gcd_nonneg(C(i, i), C(j, j)), C(i, j))) return false;
  return true;
}

namespace detail {

inline std::vector<Int> sorted_p_parts(const DivisorChain& d, const Int& p) {
  std::vector<Int> parts;
  parts.reserve(d.values.size());
  for (const Int& x : d.values) parts.push_back(p_part(x, p));
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace detail

// p-parts of the divisor chain taken with the tail indices sorted by p-adic
// valuation (ascending, zeros last): the p-elementary divisors of the
// reduced-span quotient at the leading index, unit entries included.
inline std::vector<Int> p_local_divisors(const Coefficients& c, const Int& p) {
  const std::size_t n = c.size();
  if (n <= 2 || c[0] == 0)
    throw std::invalid_argument(
        "p_local_divisors: need n > 2 and nonzero leading coefficient");
  if (!is_prime(p))
    throw std::invalid_argument("p_local_divisors: p is not prime");
  std::vector<std::size_t> tail(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) tail[k] = k + 1;
  auto valuation = [&](std::size_t idx) {
    if (c[idx] == 0) return std::size_t(-1);  // infinitely divisible: sort last
    std::size_t v = 0;
    Int y = abs_val(c[idx]);
    while (y % p == 0) {
      y /= p;
      ++v;
    }
    return v;
  };
  std::stable_sort(tail.begin(), tail.end(),
                   [&](std::size_t x, std::size_t y) {
                     return valuation(x) < valuation(y);
                   });
  std::vector<Int> reordered;
  reordered.reserve(n);
  reordered.push_back(c[0]);
  for (std::size_t idx : tail) reordered.push_back(c[idx]);
  return detail::sorted_p_parts(
      divisor_chain(Coefficients::validate(std::move(reordered))), p);
}

// The multisets of p-parts of the divisor chain before and after permuting
// the coefficient tail must coincide.
inline bool p_part_permutation_invariant(const Coefficients& c,
                                         const std::vector<std::size_t>& perm,
                                         const Int& p) {
  const std::size_t n = c.size();
  if (n <= 2 || c[0] == 0)
    throw std::invalid_argument(
        "p_part_permutation_invariant: need n > 2 and nonzero leading entry");
  if (!is_prime(p))
    throw std::invalid_argument("p_part_permutation_invariant: p not prime");
  if (perm.size() != n - 1)
    throw std::invalid_argument("p_part_permutation_invariant: bad permutation");
  std::vector<bool> seen(n, false);
  std::vector<Int> permuted;
  permuted.reserve(n);
  permuted.push_back(c[0]);
  for (std::size_t idx : perm) {
    if (idx == 0 || idx >= n || seen[idx])
      throw std::invalid_argument(
          "p_part_permutation_invariant: not a permutation of the tail");
    seen[idx] = true;
    permuted.push_back(c[idx]);
  }
  std::vector<Int> original = detail::sorted_p_parts(divisor_chain(c), p);
  std::vector<Int> shuffled = detail::sorted_p_parts(
      divisor_chain(Coefficients::validate(std::move(permuted))), p);
  return original == shuffled;
}

}  // namespace dioph
