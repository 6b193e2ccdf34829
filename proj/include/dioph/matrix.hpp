#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dioph/errors.hpp"
#include "dioph/integers.hpp"

namespace dioph {

// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return from_rows(conv);
  }

  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_)
        throw std::invalid_argument("from_columns: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

  std::vector<Int> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << m(i, j) << (j + 1 < m.cols() ? ", " : "");
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os << "]";
}

inline bool is_upper_triangular(const IntMatrix& m) {
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i && j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

namespace detail {

// [row a; row b] <- [[u, v], [-q, p]] * [row a; row b]; the block has
// determinant u*p + v*q == 1 whenever it comes from xgcd.
inline void combine_rows(IntMatrix& m, std::size_t a, std::size_t b,
                         const Int& u, const Int& v, const Int& p,
                         const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int x = m(a, j), y = m(b, j);
    m(a, j) = u * x + v * y;
    m(b, j) = p * y - q * x;
  }
}

inline void combine_cols(IntMatrix& m, std::size_t a, std::size_t b,
                         const Int& u, const Int& v, const Int& p,
                         const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int x = m(i, a), y = m(i, b);
    m(i, a) = u * x + v * y;
    m(i, b) = p * y - q * x;
  }
}

inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                             const Int& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                             const Int& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace detail

// Exact determinant by fraction-free elimination.
inline Int det_exact(IntMatrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("det_exact: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Column-style Hermite form: A * U == H with U unimodular, H in column
// echelon with positive pivots and entries left of each pivot reduced to
// [0, pivot). Matrices with equal column spans share the same nonzero part
// of H, so it serves as a canonical form for integer spans.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

inline HnfResult hnf(const IntMatrix& a) {
  HnfResult res{a, IntMatrix::identity(a.cols())};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t k = 0;
  for (std::size_t r = 0; r < R && k < C; ++r) {
    std::size_t piv = k;
    while (piv < C && H(r, piv) == 0) ++piv;
    if (piv == C) continue;
    H.swap_cols(k, piv);
    U.swap_cols(k, piv);
    for (std::size_t j = k + 1; j < C; ++j) {
      if (H(r, j) == 0) continue;
      Bezout b = xgcd(H(r, k), H(r, j));
      Int p = H(r, k) / b.g, q = H(r, j) / b.g;
      detail::combine_cols(H, k, j, b.u, b.v, p, q);
      detail::combine_cols(U, k, j, b.u, b.v, p, q);
    }
    if (H(r, k) < 0) {
      H.negate_col(k);
      U.negate_col(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Int q = floor_div(H(r, j), H(r, k));
      if (q != 0) {
        detail::add_col_multiple(H, j, k, -q);
        detail::add_col_multiple(U, j, k, -q);
      }
    }
    ++k;
  }
  return res;
}

// Smith form: U * A * V == D diagonal with b_1 | b_2 | ... | b_r on the
// diagonal, U and V unimodular. Pivots are chosen by minimum absolute value.
struct SnfResult {
  IntMatrix U, D, V;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;
};

inline SnfResult snf(const IntMatrix& a) {
  SnfResult res;
  res.D = a;
  res.U = IntMatrix::identity(a.rows());
  res.V = IntMatrix::identity(a.cols());
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  const std::size_t R = a.rows(), C = a.cols();
  const std::size_t steps = R < C ? R : C;

  // smallest nonzero entry of the trailing block, or (R, C) when it is zero
  auto find_pivot = [&](std::size_t t) {
    std::size_t pr = R, pc = C;
    Int best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (D(i, j) == 0) continue;
        Int mag = abs_val(D(i, j));
        if (best == 0 || mag < best) {
          best = std::move(mag);
          pr = i;
          pc = j;
        }
      }
    return std::pair{pr, pc};
  };

  for (std::size_t t = 0; t < steps;) {
    auto [pr, pc] = find_pivot(t);
    if (pr == R) break;

    // Reduce with nearest quotients against the current minimum; every
    // leftover remainder is at most half the pivot, so re-selecting the
    // minimum converges like the Euclidean algorithm.
    bool clean = false;
    while (!clean) {
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Int q = nearest_div(D(i, t), D(t, t));
        if (q != 0) {
          detail::add_row_multiple(D, i, t, -q);
          detail::add_row_multiple(U, i, t, -q);
        }
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Int q = nearest_div(D(t, j), D(t, t));
        if (q != 0) {
          detail::add_col_multiple(D, j, t, -q);
          detail::add_col_multiple(V, j, t, -q);
        }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) std::tie(pr, pc) = find_pivot(t);
    }

    bool restart = false;
    for (std::size_t i = t + 1; i < R && !restart; ++i)
      for (std::size_t j = t + 1; j < C && !restart; ++j)
        if (!divides(D(t, t), D(i, j))) {
          detail::add_row_multiple(D, t, i, 1);
          detail::add_row_multiple(U, t, i, 1);
          restart = true;
        }
    if (restart) continue;

    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }
  for (std::size_t k = 0; k < steps; ++k)
    if (D(k, k) != 0) res.invariant_factors.push_back(D(k, k));
  res.rank = res.invariant_factors.size();
  return res;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// gcd of the determinants of all order x order submatrices (0 when they all
// vanish). Enumerates minors outright, so only suitable as a small-scale
// cross-check.
inline Int gcd_minors(const IntMatrix& a, std::size_t order) {
  const std::size_t R = a.rows(), C = a.cols();
  if (order == 0 || order > R || order > C)
    throw std::invalid_argument("gcd_minors: order out of range");
  std::vector<std::size_t> ri(order);
  for (std::size_t i = 0; i < order; ++i) ri[i] = i;
  Int g = 0;
  do {
    std::vector<std::size_t> ci(order);
    for (std::size_t i = 0; i < order; ++i) ci[i] = i;
    do {
      IntMatrix sub(order, order);
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) sub(i, j) = a(ri[i], ci[j]);
      g = gcd_nonneg(g, det_exact(sub));
      if (g == 1) return g;
    } while (detail::next_combination(ci, C));
  } while (detail::next_combination(ri, R));
  return g;
}

// Unique X with A * X == B for upper-triangular A with nonzero diagonal;
// rejects fractional solutions.
inline IntMatrix solve_upper_triangular(const IntMatrix& a,
                                        const IntMatrix& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_upper_triangular: matrix not square");
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_upper_triangular: shape mismatch");
  if (!is_upper_triangular(a))
    throw std::invalid_argument("solve_upper_triangular: not upper triangular");
  const std::size_t n = a.rows(), k = b.cols();
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i) == 0)
      throw std::invalid_argument("solve_upper_triangular: zero diagonal entry");
  IntMatrix x(n, k);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < k; ++c) {
      Int acc = b(i, c);
      for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x(j, c);
      if (!divides(a(i, i), acc))
        throw non_integral_solution(
            "solve_upper_triangular: solution is not integral");
      x(i, c) = acc / a(i, i);
    }
  }
  return x;
}

inline std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace dioph
