#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/solution_space.hpp"

namespace dioph {

// Presentation of the solution module by the generators x(i, j), (i, j) in D,
// subject to the relations a_k x(i,j) - a_j x(i,k) + a_i x(j,k) for
// (i, j, k) in E. Column (i, j, k) of `relations` carries a_k, -a_j, a_i in
// the rows labelled (i, j), (i, k), (j, k); rows and columns are ordered
// lexicographically.
struct Presentation {
  std::vector<std::pair<std::size_t, std::size_t>> generator_pairs;  // D
  std::vector<std::array<std::size_t, 3>> relation_triples;          // E
  IntMatrix relations;                                               // d x e
};

// D = pairs meeting M; E = triples meeting M in at least two indices. With
// fewer than two chosen indices (or n == 2) the generators are free and the
// relation set is empty.
inline Presentation build_presentation(const Coefficients& c,
                                       const IndexSet& M) {
  const std::size_t n = c.size();
  Presentation p;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (M.contains(i) || M.contains(j)) {
        row_of[{i, j}] = p.generator_pairs.size();
        p.generator_pairs.emplace_back(i, j);
      }
  if (M.size() >= 2 && n >= 3)
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          int hits = (M.contains(i) ? 1 : 0) + (M.contains(j) ? 1 : 0) +
                     (M.contains(k) ? 1 : 0);
          if (hits >= 2) p.relation_triples.push_back({i, j, k});
        }
  p.relations =
      IntMatrix(p.generator_pairs.size(), p.relation_triples.size());
  for (std::size_t col = 0; col < p.relation_triples.size(); ++col) {
    const auto& [i, j, k] = p.relation_triples[col];
    p.relations(row_of.at({i, j}), col) = c[k];
    p.relations(row_of.at({i, k}), col) = -c[j];
    p.relations(row_of.at({j, k}), col) = c[i];
  }
  return p;
}

struct PresentationReport {
  bool relations_annihilate = false;  // every column kills the generators
  bool snf_unit_diagonal = false;     // all invariant factors equal 1
  bool rank_matches = false;          // rank == d - (n - 1)
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  std::vector<Int> invariant_factors;

  // The relations are defining exactly when the quotient of the free module
  // on the generators by the relation span is free of rank n - 1, which the
  // Smith form of the relation matrix decides.
  bool defining() const {
    return relations_annihilate && snf_unit_diagonal && rank_matches;
  }
};

inline PresentationReport verify_presentation(const Coefficients& c,
                                              const Presentation& p) {
  const std::size_t n = c.size();
  PresentationReport rep;
  rep.relations_annihilate = true;
  for (std::size_t col = 0; col < p.relation_triples.size(); ++col) {
    std::vector<Int> acc(n, 0);
    for (std::size_t r = 0; r < p.generator_pairs.size(); ++r) {
      const Int& w = p.relations(r, col);
      if (w == 0) continue;
      SolutionVector v = elementary_solution(c, p.generator_pairs[r].first,
                                             p.generator_pairs[r].second);
      for (std::size_t t = 0; t < n; ++t) acc[t] += w * v.entries[t];
    }
    for (const Int& x : acc)
      if (x != 0) {
        rep.relations_annihilate = false;
        break;
      }
    if (!rep.relations_annihilate) break;
  }
  SnfResult s = snf(p.relations);
  rep.invariant_factors = s.invariant_factors;
  rep.rank = s.rank;
  rep.expected_rank = p.generator_pairs.size() - (n - 1);
  rep.snf_unit_diagonal = true;
  for (const Int& f : rep.invariant_factors)
    if (f != 1) rep.snf_unit_diagonal = false;
  rep.rank_matches = rep.rank == rep.expected_rank;
  return rep;
}

}  // namespace dioph
