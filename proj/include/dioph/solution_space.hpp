#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dioph/errors.hpp"
#include "dioph/integers.hpp"

namespace dioph {

// Validated coefficient vector (a_1, ..., a_n): length at least two and
// gcd of all entries equal to 1.
class Coefficients {
 public:
  static Coefficients validate(std::vector<Int> a) {
    if (a.size() < 2)
      throw too_short("coefficient vector needs at least two entries");
    Int g = 0;
    for (const Int& x : a) g = gcd_nonneg(g, x);
    if (g != 1)
      throw not_unimodular("coefficient gcd is " + g.str() + ", expected 1");
    return Coefficients(std::move(a));
  }

  std::size_t size() const { return a_.size(); }
  const Int& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Int>& values() const { return a_; }
  bool operator==(const Coefficients&) const = default;

 private:
  explicit Coefficients(std::vector<Int> a) : a_(std::move(a)) {}
  std::vector<Int> a_;
};

// Integer vector x with sum a_i x_i == 0 for its owning coefficients.
struct SolutionVector {
  std::vector<Int> entries;
  bool operator==(const SolutionVector&) const = default;
  bool operator<(const SolutionVector& o) const {
    return std::lexicographical_compare(entries.begin(), entries.end(),
                                        o.entries.begin(), o.entries.end());
  }
};

inline std::ostream& operator<<(std::ostream& os, const SolutionVector& s) {
  os << "(";
  for (std::size_t i = 0; i < s.entries.size(); ++i)
    os << s.entries[i] << (i + 1 < s.entries.size() ? ", " : "");
  return os << ")";
}

inline Int eval(const Coefficients& c, const SolutionVector& s) {
  if (s.entries.size() != c.size())
    throw std::invalid_argument("eval: length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * s.entries[i];
  return acc;
}

inline bool is_solution(const Coefficients& c, const SolutionVector& s) {
  return eval(c, s) == 0;
}

// Sorted set of coefficient indices whose entries are jointly coprime.
class IndexSet {
 public:
  static IndexSet of(const Coefficients& c, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw std::invalid_argument("IndexSet: empty");
    Int g = 0;
    for (std::size_t i : indices) {
      if (i >= c.size())
        throw std::invalid_argument("IndexSet: index out of range");
      g = gcd_nonneg(g, c[i]);
    }
    if (g != 1)
      throw not_unimodular("selected coefficients have gcd " + g.str());
    return IndexSet(std::move(indices));
  }

  std::size_t size() const { return idx_.size(); }
  bool contains(std::size_t i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }
  const std::vector<std::size_t>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

 private:
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {}
  std::vector<std::size_t> idx_;
};

enum class IndexSetStrategy { all, greedy_minimal };

// "all" returns every index. "greedy_minimal" accumulates a prefix until the
// running gcd reaches 1 and then drops every index whose removal keeps the
// remaining coefficients coprime.
inline IndexSet choose_index_set(const Coefficients& c,
                                 IndexSetStrategy strategy) {
  const std::size_t n = c.size();
  std::vector<std::size_t> chosen;
  if (strategy == IndexSetStrategy::all) {
    chosen.resize(n);
    for (std::size_t i = 0; i < n; ++i) chosen[i] = i;
    return IndexSet::of(c, std::move(chosen));
  }
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    chosen.push_back(i);
    g = gcd_nonneg(g, c[i]);
    if (g == 1) break;
  }
  for (std::size_t k = 0; k < chosen.size();) {
    Int rest = 0;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != k) rest = gcd_nonneg(rest, c[chosen[j]]);
    if (rest == 1)
      chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return IndexSet::of(c, std::move(chosen));
}

// The elementary solution with -a_j in slot i and a_i in slot j; swapping the
// indices negates it.
inline SolutionVector elementary_solution(const Coefficients& c, std::size_t i,
                                          std::size_t j) {
  if (i >= c.size() || j >= c.size())
    throw std::invalid_argument("elementary_solution: index out of range");
  if (i == j)
    throw std::invalid_argument("elementary_solution: indices must differ");
  SolutionVector s;
  s.entries.assign(c.size(), 0);
  s.entries[i] = -c[j];
  s.entries[j] = c[i];
  return s;
}

// The elementary solution divided by gcd(a_i, a_j); unchanged when both
// coefficients vanish.
inline SolutionVector reduced_solution(const Coefficients& c, std::size_t i,
                                       std::size_t j) {
  SolutionVector s = elementary_solution(c, i, j);
  Int g = gcd_nonneg(c[i], c[j]);
  if (g > 1) {
    s.entries[i] /= g;
    s.entries[j] /= g;
  }
  return s;
}

// Coordinates of s in the rational solution basis attached to the pivot slot:
// simply the entries of s with the pivot entry dropped. The dropped entry is
// recoverable because a_pivot != 0.
inline std::vector<Int> pivot_coordinates(const Coefficients& c,
                                          const SolutionVector& s,
                                          std::size_t pivot) {
  if (pivot >= c.size())
    throw std::invalid_argument("pivot_coordinates: pivot out of range");
  if (c[pivot] == 0)
    throw std::invalid_argument("pivot_coordinates: pivot coefficient is zero");
  if (s.entries.size() != c.size())
    throw std::invalid_argument("pivot_coordinates: length mismatch");
  std::vector<Int> out;
  out.reserve(c.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k != pivot) out.push_back(s.entries[k]);
  return out;
}

// Inverse of pivot_coordinates: the pivot entry is
// -(sum_{k != pivot} a_k coord_k) / a_pivot and must come out integral.
inline SolutionVector from_pivot_coordinates(const Coefficients& c,
                                             const std::vector<Int>& coords,
                                             std::size_t pivot) {
  if (pivot >= c.size())
    throw std::invalid_argument("from_pivot_coordinates: pivot out of range");
  if (c[pivot] == 0)
    throw std::invalid_argument(
        "from_pivot_coordinates: pivot coefficient is zero");
  if (coords.size() + 1 != c.size())
    throw std::invalid_argument("from_pivot_coordinates: length mismatch");
  SolutionVector s;
  s.entries.assign(c.size(), 0);
  Int acc = 0;
  std::size_t t = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == pivot) continue;
    s.entries[k] = coords[t];
    acc += c[k] * coords[t];
    ++t;
  }
  if (!divides(c[pivot], acc))
    throw std::invalid_argument(
        "from_pivot_coordinates: coordinates violate the pivot congruence");
  s.entries[pivot] = -acc / c[pivot];
  return s;
}

// All elementary solutions v(i, j) with i < j and {i, j} meeting M, in
// lexicographic pair order. Spans the full solution module because the
// coefficients indexed by M are jointly coprime.
inline std::vector<SolutionVector> spanning_set(const Coefficients& c,
                                                const IndexSet& M) {
  std::vector<SolutionVector> out;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (M.contains(i) || M.contains(j))
        out.push_back(elementary_solution(c, i, j));
  return out;
}

inline std::string to_string(const SolutionVector& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace dioph
