#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dioph/basis.hpp"
#include "dioph/errors.hpp"
#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/quotients.hpp"
#include "dioph/solution_space.hpp"

namespace dioph {

// Integer span of a list of generators inside Z^ambient, compared through the
// canonical Hermite form of the generator matrix.
class ModuleSpan {
 public:
  ModuleSpan(std::size_t ambient_dim, std::vector<std::vector<Int>> generators)
      : ambient_(ambient_dim), gens_(std::move(generators)) {
    for (const auto& g : gens_)
      if (g.size() != ambient_)
        throw std::invalid_argument("ModuleSpan: generator length mismatch");
  }

  static ModuleSpan of_solutions(const std::vector<SolutionVector>& vs,
                                 std::size_t ambient_dim) {
    std::vector<std::vector<Int>> gens;
    gens.reserve(vs.size());
    for (const auto& v : vs) gens.push_back(v.entries);
    return ModuleSpan(ambient_dim, std::move(gens));
  }

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<std::vector<Int>>& generators() const { return gens_; }

  // Pivot columns of the column Hermite form; identical for two spans exactly
  // when the spans coincide.
  const IntMatrix& canonical_form() const {
    if (!canon_) {
      IntMatrix H = hnf(IntMatrix::from_columns(gens_)).H;
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < H.cols(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < H.rows(); ++i)
          if (H(i, j) != 0) any = true;
        if (any) ++nonzero;
      }
      IntMatrix trimmed(ambient_, nonzero);
      for (std::size_t j = 0; j < nonzero; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) trimmed(i, j) = H(i, j);
      canon_ = std::move(trimmed);
    }
    return *canon_;
  }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Int>> gens_;
  mutable std::optional<IntMatrix> canon_;
};

inline bool modules_equal(const ModuleSpan& x, const ModuleSpan& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw std::invalid_argument("modules_equal: ambient dimension mismatch");
  return x.canonical_form() == y.canonical_form();
}

// Exact coordinates Y with B * Y == G, solved over the rationals. nullopt
// when the system is inconsistent or any coordinate is fractional; rejects a
// B whose columns are linearly dependent.
inline std::optional<IntMatrix> integral_coordinates(const IntMatrix& B,
                                                     const IntMatrix& G) {
  using Rat = boost::multiprecision::cpp_rational;
  if (B.rows() != G.rows())
    throw std::invalid_argument("integral_coordinates: row count mismatch");
  const std::size_t R = B.rows(), bc = B.cols(), gc = G.cols();
  std::vector<std::vector<Rat>> M(R, std::vector<Rat>(bc + gc));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < bc; ++j) M[i][j] = Rat(B(i, j));
    for (std::size_t j = 0; j < gc; ++j) M[i][bc + j] = Rat(G(i, j));
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row(bc, none);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < bc && rank < R; ++col) {
    std::size_t pr = rank;
    while (pr < R && M[pr][col] == 0) ++pr;
    if (pr == R) continue;
    std::swap(M[rank], M[pr]);
    Rat piv = M[rank][col];
    for (std::size_t j = col; j < bc + gc; ++j) M[rank][j] /= piv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (std::size_t j = col; j < bc + gc; ++j) M[r][j] -= f * M[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (std::size_t col = 0; col < bc; ++col)
    if (pivot_row[col] == none)
      throw std::invalid_argument(
          "integral_coordinates: columns are linearly dependent");
  for (std::size_t r = rank; r < R; ++r)
    for (std::size_t j = bc; j < bc + gc; ++j)
      if (M[r][j] != 0) return std::nullopt;
  IntMatrix Y(bc, gc);
  for (std::size_t col = 0; col < bc; ++col)
    for (std::size_t j = 0; j < gc; ++j) {
      const Rat& val = M[pivot_row[col]][bc + j];
      if (boost::multiprecision::denominator(val) != 1) return std::nullopt;
      Y(col, j) = boost::multiprecision::numerator(val);
    }
  return Y;
}

// Structure of big/small for a free module with the given basis and a
// submodule given by generators, via the Smith form of the generator
// coordinates.
inline QuotientStructure quotient_from_generators(
    const std::vector<std::vector<Int>>& basis_of_big,
    const std::vector<std::vector<Int>>& gens_of_small) {
  if (basis_of_big.empty()) {
    for (const auto& g : gens_of_small)
      for (const Int& x : g)
        if (x != 0)
          throw containment_violation(
              "quotient_from_generators: nonzero generator under empty basis");
    return QuotientStructure::trivial();
  }
  IntMatrix B = IntMatrix::from_columns(basis_of_big);
  IntMatrix G = IntMatrix::from_columns(gens_of_small);
  if (gens_of_small.empty()) G = IntMatrix(B.rows(), 0);
  auto Y = integral_coordinates(B, G);
  if (!Y)
    throw containment_violation(
        "quotient_from_generators: generators leave the span of the basis");
  return QuotientStructure::from_coordinates(*Y);
}

// Basis of the solution module read off the accumulated row transform of an
// extended-gcd sweep down the coefficient column: with E * a = (1, 0, ..., 0)
// and E unimodular, rows 2..n of E solve the equation and span everything.
inline std::vector<SolutionVector> oracle_basis(const Coefficients& c) {
  const std::size_t n = c.size();
  IntMatrix E = IntMatrix::identity(n);
  std::vector<Int> r = c.values();
  for (std::size_t i = 1; i < n; ++i) {
    if (r[i] == 0) continue;
    Bezout b = xgcd(r[0], r[i]);
    Int p = r[0] / b.g, q = r[i] / b.g;
    detail::combine_rows(E, 0, i, b.u, b.v, p, q);
    r[0] = b.g;
    r[i] = 0;
  }
  if (r[0] < 0) {
    E.negate_row(0);
    r[0] = -r[0];
  }
  if (r[0] != 1)
    throw internal_error("gcd sweep did not reduce a unimodular vector to 1");
  std::vector<SolutionVector> basis(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    basis[k - 1].entries = E.row(k);
    if (!is_solution(c, basis[k - 1]))
      throw internal_error("sweep row is not a solution");
  }
  return basis;
}

// Every solution with all entries bounded by `bound` in absolute value,
// sorted lexicographically. Enumerates the n-1 free slots and solves for the
// largest-coefficient slot; refuses to scan more than `budget` points.
inline std::vector<SolutionVector> enumerate_box(const Coefficients& c,
                                                 const Int& bound,
                                                 const Int& budget = Int(
                                                     1000000)) {
  if (bound < 0) throw std::invalid_argument("enumerate_box: negative bound");
  const std::size_t n = c.size();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (abs_val(c[i]) > abs_val(c[pivot])) pivot = i;
  Int width = 2 * bound + 1;
  Int cost = Int(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cost *= width;
    if (cost > budget)
      throw budget_exceeded("enumerate_box: candidate count " + cost.str() +
                            "+ exceeds budget " + budget.str());
  }
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) free_slots.push_back(i);
  std::vector<Int> x(n, 0);
  for (std::size_t s : free_slots) x[s] = -bound;
  std::vector<SolutionVector> out;
  while (true) {
    Int s = 0;
    for (std::size_t k : free_slots) s += c[k] * x[k];
    if (divides(c[pivot], s)) {
      Int xp = -s / c[pivot];
      if (abs_val(xp) <= bound) {
        SolutionVector v;
        v.entries = x;
        v.entries[pivot] = xp;
        out.push_back(std::move(v));
      }
    }
    std::size_t k = 0;
    while (k < free_slots.size()) {
      Int& slot = x[free_slots[k]];
      ++slot;
      if (slot <= bound) break;
      slot = -bound;
      ++k;
    }
    if (k == free_slots.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dioph
