#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/errors.hpp"
#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/solution_space.hpp"

namespace dioph {

// Basis of the solution module with its certificate data. Column j of coords
// holds the pivot coordinates of vectors[j], taken in the permuted slot order
// (pivot slot first, remaining chosen indices, then the complement), so
// coords is upper triangular with |det| == |a_pivot|.
struct SolutionBasis {
  IntMatrix coords;
  std::vector<SolutionVector> vectors;  // ambient, original index order
  std::size_t pivot = 0;                // original index, a_pivot != 0
  std::vector<std::size_t> permutation;  // slot -> original index
  std::size_t m = 0;                     // size of the chosen index set
};

enum class BasisReject { wrong_count, not_a_solution, wrong_determinant };

struct BasisCheck {
  bool accepted = false;
  std::optional<BasisReject> reason;
  Int det = 0;  // determinant of the pivot-coordinate matrix, when reached
  std::string detail;
};

// A candidate of n-1 solution vectors is a basis of the solution module
// exactly when each lies in the module and the determinant of its
// pivot-coordinate matrix equals the pivot coefficient up to sign.
inline BasisCheck verify_basis(const Coefficients& c,
                               const std::vector<SolutionVector>& candidate,
                               std::size_t pivot) {
  if (pivot >= c.size())
    throw std::invalid_argument("verify_basis: pivot out of range");
  if (c[pivot] == 0)
    throw std::invalid_argument("verify_basis: pivot coefficient is zero");
  const std::size_t n = c.size();
  BasisCheck out;
  if (candidate.size() != n - 1) {
    out.reason = BasisReject::wrong_count;
    out.detail = "expected " + std::to_string(n - 1) + " vectors, got " +
                 std::to_string(candidate.size());
    return out;
  }
  for (std::size_t j = 0; j < candidate.size(); ++j) {
    if (candidate[j].entries.size() != n || !is_solution(c, candidate[j])) {
      out.reason = BasisReject::not_a_solution;
      out.detail = "vector " + std::to_string(j) + " is not a solution";
      return out;
    }
  }
  IntMatrix W(n - 1, n - 1);
  for (std::size_t j = 0; j < n - 1; ++j) {
    std::vector<Int> col = pivot_coordinates(c, candidate[j], pivot);
    for (std::size_t i = 0; i + 1 < n; ++i) W(i, j) = col[i];
  }
  out.det = det_exact(W);
  if (abs_val(out.det) != abs_val(c[pivot])) {
    out.reason = BasisReject::wrong_determinant;
    out.detail = "coordinate determinant is " + out.det.str() +
                 ", expected " + c[pivot].str() + " up to sign";
    return out;
  }
  out.accepted = true;
  return out;
}

namespace detail {

// Fill the free slots of column `col` of X so that
//   sum_t b_{t+1} X(t, col) + target_term ≡ 0 (mod b_0),
// concentrating the solution in the trailing slots: first try the last slot
// alone, then widen leftwards until the congruence becomes solvable.
inline void fill_column_congruence(const std::vector<Int>& b, IntMatrix& X,
                                   std::size_t col, std::size_t nslots,
                                   const Int& target) {
  if (nslots == 0) {
    if (mod_nonneg(target, b[0]) != 0)
      throw internal_error("basis column has no free slot for its congruence");
    return;
  }
  for (std::size_t start = nslots; start-- > 0;) {
    std::vector<Int> cs(b.begin() + static_cast<std::ptrdiff_t>(start + 1),
                        b.begin() + static_cast<std::ptrdiff_t>(nslots + 1));
    auto sol = solve_linear_congruence(cs, target, b[0]);
    if (!sol) continue;
    for (std::size_t t = 0; t < cs.size(); ++t) X(start + t, col) = (*sol)[t];
    return;
  }
  throw internal_error("basis column congruence unsolvable");
}

}  // namespace detail

// Direct construction of a basis from the coefficients. The pivot is the
// smallest index in M with nonzero coefficient unless forced_pivot names
// another member of M. The result is certified by verify_basis before it is
// returned.
inline SolutionBasis build_basis(
    const Coefficients& c, const IndexSet& M,
    std::optional<std::size_t> forced_pivot = std::nullopt) {
  const std::size_t n = c.size();
  std::size_t pivot = n;
  if (forced_pivot) {
    pivot = *forced_pivot;
    if (!M.contains(pivot))
      throw std::invalid_argument("build_basis: pivot not in the index set");
    if (pivot >= n || c[pivot] == 0)
      throw std::invalid_argument("build_basis: pivot coefficient is zero");
  } else {
    for (std::size_t i : M)
      if (c[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n)
      throw internal_error("index set has no nonzero coefficient");
  }

  std::vector<std::size_t> perm;
  perm.reserve(n);
  perm.push_back(pivot);
  for (std::size_t i : M)
    if (i != pivot) perm.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (!M.contains(i)) perm.push_back(i);

  std::vector<Int> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = c[perm[k]];
  const std::size_t m = M.size();

  IntMatrix A(n - 1, n - 1);
  if (m == 1) {
    // a_pivot is a unit, so the elementary solutions at the pivot are already
    // a basis: columns are b_0 times a unit vector.
    for (std::size_t k = 0; k + 1 < n; ++k) A(k, k) = b[0];
  } else {
    GcdChain chain =
        gcd_prefixes(std::vector<Int>(b.begin(), b.begin() + m));
    const std::vector<Int>& G = chain.prefix_gcds;
    if (G[m - 1] != 1)
      throw internal_error("chosen index set is not coprime");
    for (std::size_t col = 0; col + 1 < m; ++col) {
      A(col, col) = G[col] / G[col + 1];
      // The first column needs no adjustment: b_1 * (G_0 / G_1) is already a
      // multiple of b_0.
      if (col > 0)
        detail::fill_column_congruence(b, A, col, col,
                                       -b[col + 1] * A(col, col));
    }
    for (std::size_t col = m - 1; col + 1 < n; ++col) {
      A(col, col) = 1;
      detail::fill_column_congruence(b, A, col, m - 1, -b[col + 1]);
    }
  }

  Int diag_product = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) diag_product *= A(k, k);
  if (abs_val(diag_product) != abs_val(b[0]))
    throw internal_error("diagonal product does not telescope to the pivot");

  std::vector<SolutionVector> vectors(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Int acc = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) acc += b[k + 1] * A(k, j);
    if (!divides(b[0], acc))
      throw internal_error("basis column violates the pivot congruence");
    SolutionVector z;
    z.entries.assign(n, 0);
    z.entries[perm[0]] = -acc / b[0];
    for (std::size_t k = 0; k + 1 < n; ++k) z.entries[perm[k + 1]] = A(k, j);
    vectors[j] = std::move(z);
  }

  SolutionBasis out{std::move(A), std::move(vectors), pivot, std::move(perm),
                    m};
  BasisCheck check = verify_basis(c, out.vectors, out.pivot);
  if (!check.accepted)
    throw internal_error("constructed basis failed certification: " +
                         check.detail);
  return out;
}

// Coordinates of solution vectors relative to a constructed basis, one column
// per vector. Exact by the triangular solve; integral because the basis spans
// the whole solution module.
inline IntMatrix coordinates_in_basis(const Coefficients& c,
                                      const SolutionBasis& basis,
                                      const std::vector<SolutionVector>& gens) {
  const std::size_t n = c.size();
  IntMatrix G(n - 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].entries.size() != n || !is_solution(c, gens[j]))
      throw containment_violation(
          "coordinates_in_basis: generator is not a solution");
    for (std::size_t k = 1; k < n; ++k)
      G(k - 1, j) = gens[j].entries[basis.permutation[k]];
  }
  return solve_upper_triangular(basis.coords, G);
}

}  // namespace dioph
