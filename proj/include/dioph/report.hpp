#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dioph/basis.hpp"
#include "dioph/errors.hpp"
#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/oracle.hpp"
#include "dioph/presentation.hpp"
#include "dioph/quotients.hpp"
#include "dioph/solution_space.hpp"

namespace dioph {

using json = nlohmann::json;

// One verified invariant: a stable name, a self-contained statement of what
// was checked, and the outcome. Integers are serialized as decimal strings so
// arbitrary magnitudes survive the round trip.
struct CheckResult {
  std::string name;
  std::string invariant;
  bool pass = false;
  std::string note;
};

inline json to_json(const Int& x) { return x.str(); }

inline json to_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const SolutionVector& s) { return to_json(s.entries); }

inline json to_json(const QuotientStructure& q) {
  json ed = json::object();
  for (const auto& [p, powers] : q.elementary_divisors())
    ed[p.str()] = to_json(powers);
  return json{{"free_rank", q.free_rank()},
              {"invariant_factors", to_json(q.invariant_factors())},
              {"elementary_divisors", std::move(ed)},
              {"display", q.to_string()},
              {"display_elementary", q.to_elementary_string()}};
}

inline json to_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const CheckResult& c : checks) {
    json entry{{"name", c.name}, {"invariant", c.invariant}, {"pass", c.pass}};
    if (!c.note.empty()) entry["note"] = c.note;
    arr.push_back(std::move(entry));
  }
  return arr;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

inline Int int_from_json(const json& j) { return Int(j.get<std::string>()); }

inline Coefficients coefficients_from_json(const json& doc) {
  std::vector<Int> a;
  for (const auto& item : doc.at("coefficients"))
    a.push_back(int_from_json(item));
  return Coefficients::validate(std::move(a));
}

namespace reportdetail {

inline json one_based(const std::vector<std::size_t>& idx) {
  json arr = json::array();
  for (std::size_t i : idx) arr.push_back(i + 1);
  return arr;
}

// Run `body` as a named check; an exception fails the check and records the
// message.
template <typename F>
void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::string& invariant, F&& body) {
  CheckResult r{name, invariant, false, ""};
  try {
    r.pass = body();
  } catch (const std::exception& e) {
    r.pass = false;
    r.note = e.what();
  }
  out.push_back(std::move(r));
}

}  // namespace reportdetail

// --------------------------------------------------------------------------
// solve
// --------------------------------------------------------------------------

inline json solve_report(const Coefficients& c, IndexSetStrategy strategy,
                         std::optional<std::size_t> forced_pivot = std::nullopt) {
  IndexSet M = choose_index_set(c, strategy);
  SolutionBasis basis = build_basis(c, M, forced_pivot);
  BasisCheck check = verify_basis(c, basis.vectors, basis.pivot);

  std::vector<CheckResult> checks;
  checks.push_back(
      {"basis_certificate",
       "each basis vector solves the equation and the pivot-coordinate "
       "determinant equals the pivot coefficient up to sign",
       check.accepted, check.detail});
  reportdetail::run_check(
      checks, "basis_matches_oracle",
      "the constructed basis spans the same module as the basis obtained "
      "from the unimodular gcd-sweep transform",
      [&] {
        return modules_equal(ModuleSpan::of_solutions(basis.vectors, c.size()),
                             ModuleSpan::of_solutions(oracle_basis(c), c.size()));
      });

  json basis_json = json::array();
  for (const auto& v : basis.vectors) basis_json.push_back(to_json(v));
  return json{{"command", "solve"},
              {"coefficients", to_json(c.values())},
              {"strategy", strategy == IndexSetStrategy::all ? "all"
                                                             : "greedy-minimal"},
              {"index_set", reportdetail::one_based(M.indices())},
              {"pivot", basis.pivot + 1},
              {"m", basis.m},
              {"basis", std::move(basis_json)},
              {"coordinate_matrix", to_json(basis.coords)},
              {"permutation", reportdetail::one_based(basis.permutation)},
              {"det", check.det.str()},
              {"checks", to_json(checks)},
              {"pass", all_pass(checks)}};
}

// --------------------------------------------------------------------------
// present
// --------------------------------------------------------------------------

inline json present_report(const Coefficients& c, IndexSetStrategy strategy) {
  IndexSet M = choose_index_set(c, strategy);
  Presentation p = build_presentation(c, M);
  PresentationReport rep = verify_presentation(c, p);

  std::vector<CheckResult> checks;
  checks.push_back({"relations_annihilate",
                    "substituting the elementary solutions into every "
                    "relation column yields the zero vector",
                    rep.relations_annihilate, ""});
  checks.push_back({"relation_snf_unit_diagonal",
                    "all invariant factors of the relation matrix equal 1",
                    rep.snf_unit_diagonal, ""});
  checks.push_back({"relation_rank",
                    "the relation matrix has rank d - (n - 1), so the "
                    "presented module is free of rank n - 1",
                    rep.rank_matches, ""});

  json pairs = json::array();
  for (const auto& [i, j] : p.generator_pairs)
    pairs.push_back(json::array({i + 1, j + 1}));
  json triples = json::array();
  for (const auto& t : p.relation_triples)
    triples.push_back(json::array({t[0] + 1, t[1] + 1, t[2] + 1}));
  return json{{"command", "present"},
              {"coefficients", to_json(c.values())},
              {"index_set", reportdetail::one_based(M.indices())},
              {"d", p.generator_pairs.size()},
              {"e", p.relation_triples.size()},
              {"generators", std::move(pairs)},
              {"relation_triples", std::move(triples)},
              {"relation_matrix", to_json(p.relations)},
              {"snf_diagonal", to_json(rep.invariant_factors)},
              {"rank", rep.rank},
              {"expected_rank", rep.expected_rank},
              {"checks", to_json(checks)},
              {"pass", all_pass(checks)}};
}

// --------------------------------------------------------------------------
// structure
// --------------------------------------------------------------------------

inline json structure_report(const Coefficients& c, std::size_t i) {
  const std::size_t n = c.size();
  if (i >= n) throw std::invalid_argument("structure_report: index out of range");
  std::vector<CheckResult> checks;

  SolutionBasis basis = detail::certified_basis(c);
  BasisCheck basis_check = verify_basis(c, basis.vectors, basis.pivot);
  checks.push_back(
      {"basis_certificate",
       "the working basis is certified: solutions whose pivot-coordinate "
       "determinant equals the pivot coefficient up to sign",
       basis_check.accepted, basis_check.detail});
  json basis_json = json::array();
  for (const auto& v : basis.vectors) basis_json.push_back(to_json(v));

  IndexSet Mg = choose_index_set(c, IndexSetStrategy::greedy_minimal);
  Presentation pres = build_presentation(c, Mg);
  PresentationReport pres_rep = verify_presentation(c, pres);
  checks.push_back(
      {"presentation_defining",
       "over the greedy-minimal index set, the relation matrix has unit "
       "invariant factors, rank d - (n - 1), and annihilating columns",
       pres_rep.defining(), ""});

  json quotients = json::object();
  reportdetail::run_check(
      checks, "elementary_span_quotient",
      "the quotient by the elementary solutions anchored at i is "
      "(Z/a_i)^{n-2}, confirmed by the Smith form of their coordinates",
      [&] {
        quotients["S_mod_Si"] = to_json(quotient_by_elementary_span(c, i));
        return true;
      });
  reportdetail::run_check(
      checks, "reduced_span_quotient",
      "the quotient by the reduced solutions anchored at i matches the "
      "divisor chain of the rotated coefficients, confirmed by the Smith "
      "form of their coordinates",
      [&] {
        quotients["S_mod_Ui"] = to_json(quotient_by_reduced_span(c, i));
        return true;
      });
  if (c[i] != 0) {
    reportdetail::run_check(
        checks, "pivot_lattice_quotient",
        "the pivot lattice modulo the solution module is cyclic of order "
        "|a_i|, confirmed by the Smith form of the basis coordinates",
        [&] {
          quotients["W_mod_S"] = to_json(pivot_lattice_quotient(c, i));
          return true;
        });
  } else {
    quotients["W_mod_S"] = nullptr;
  }

  json d_chain_json = nullptr;
  json c_matrix_json = nullptr;
  if (n > 2 && c[0] != 0) {
    reportdetail::run_check(
        checks, "coordinate_matrix_invariants",
        "C = A^{-1} D is integral upper triangular with diagonal "
        "(1, d_2, ..., d_{n-1}), |det C| = |a_1|^{n-2} / prod gcd(a_1, a_j), "
        "and gcd(C_ii, C_jj) divides C_ij for i < j",
        [&] {
          DivisorChain d = divisor_chain(c);
          d_chain_json = to_json(d.values);
          IntMatrix C = reduced_coordinate_matrix(c);
          c_matrix_json = to_json(C);
          return divisibility_invariant_holds(C);
        });
  }
  if (c[i] != 0 && n > 2) {
    reportdetail::run_check(
        checks, "torsion_product_identity",
        "the product of the invariant factors of the reduced-span quotient "
        "equals |a_i|^{n-2} divided by the product of gcd(a_i, a_j), j != i",
        [&] {
          QuotientStructure q = quotient_by_reduced_span(c, i);
          Int denom = 1;
          for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= gcd_nonneg(c[i], c[j]);
          Int expected = 1;
          for (std::size_t t = 0; t + 2 < n; ++t) expected *= abs_val(c[i]);
          return q.torsion_order() * denom == expected;
        });
  }

  return json{{"command", "structure"},
              {"coefficients", to_json(c.values())},
              {"i", i + 1},
              {"pivot", basis.pivot + 1},
              {"basis", std::move(basis_json)},
              {"det", basis_check.det.str()},
              {"quotients", std::move(quotients)},
              {"presentation",
               json{{"index_set", reportdetail::one_based(Mg.indices())},
                    {"d", pres.generator_pairs.size()},
                    {"e", pres.relation_triples.size()},
                    {"relation_matrix", to_json(pres.relations)},
                    {"snf_diagonal", to_json(pres_rep.invariant_factors)}}},
              {"d_chain", std::move(d_chain_json)},
              {"C", std::move(c_matrix_json)},
              {"checks", to_json(checks)},
              {"pass", all_pass(checks)}};
}

// --------------------------------------------------------------------------
// verify battery
// --------------------------------------------------------------------------

struct BatteryOptions {
  Int box_bound = 3;
  Int box_budget = 1000000;
  std::uint64_t seed = 0;  // drives the permutation sample
};

// The full cross-oracle battery for one coefficient vector. Every check is
// independent of the construction it validates: determinants against the
// pivot coefficient, Hermite forms against the sweep basis, Smith forms
// against closed-form quotient structures, and an exhaustive box scan at
// small sizes.
inline std::vector<CheckResult> run_battery(const Coefficients& c,
                                            const BatteryOptions& opts = {}) {
  using reportdetail::run_check;
  const std::size_t n = c.size();
  std::mt19937_64 rng(opts.seed);
  std::vector<CheckResult> checks;

  for (IndexSetStrategy strategy :
       {IndexSetStrategy::all, IndexSetStrategy::greedy_minimal}) {
    const bool greedy = strategy == IndexSetStrategy::greedy_minimal;
    const std::string tag = greedy ? "greedy-minimal" : "all";
    run_check(checks, "basis_certificate[" + tag + "]",
              "the constructed basis is certified: solutions with "
              "pivot-coordinate determinant equal to the pivot coefficient "
              "up to sign",
              [&] {
                IndexSet M = choose_index_set(c, strategy);
                SolutionBasis b = build_basis(c, M);
                return verify_basis(c, b.vectors, b.pivot).accepted;
              });
    run_check(checks, "basis_matches_oracle[" + tag + "]",
              "the constructed basis spans the same module as the "
              "gcd-sweep basis",
              [&] {
                IndexSet M = choose_index_set(c, strategy);
                SolutionBasis b = build_basis(c, M);
                return modules_equal(
                    ModuleSpan::of_solutions(b.vectors, n),
                    ModuleSpan::of_solutions(oracle_basis(c), n));
              });
    run_check(checks, "spanning_set_spans[" + tag + "]",
              "the elementary solutions meeting the chosen index set span "
              "the whole solution module",
              [&] {
                IndexSet M = choose_index_set(c, strategy);
                return modules_equal(
                    ModuleSpan::of_solutions(spanning_set(c, M), n),
                    ModuleSpan::of_solutions(oracle_basis(c), n));
              });
    if (n >= 3) {
      run_check(checks, "presentation_defining[" + tag + "]",
                "the relation matrix has unit invariant factors and rank "
                "d - (n - 1), and every relation annihilates the generators",
                [&] {
                  IndexSet M = choose_index_set(c, strategy);
                  if (M.size() < 2) return true;  // generators already free
                  return verify_presentation(c, build_presentation(c, M))
                      .defining();
                });
    }
  }

  run_check(checks, "elementary_span_quotients",
            "for every anchor index, the closed-form structure (Z/a_i)^{n-2} "
            "matches the Smith form of the generator coordinates",
            [&] {
              for (std::size_t i = 0; i < n; ++i)
                quotient_by_elementary_span(c, i);
              return true;
            });
  run_check(checks, "reduced_span_quotients",
            "for every anchor index, the divisor-chain structure matches the "
            "Smith form of the reduced-generator coordinates",
            [&] {
              for (std::size_t i = 0; i < n; ++i)
                quotient_by_reduced_span(c, i);
              return true;
            });
  run_check(checks, "pivot_lattice_quotients",
            "for every index with nonzero coefficient, the pivot lattice "
            "modulo the solution module is cyclic of order |a_i|",
            [&] {
              for (std::size_t i = 0; i < n; ++i)
                if (c[i] != 0) pivot_lattice_quotient(c, i);
              return true;
            });
  run_check(checks, "oracle_quotient_agreement",
            "expressing the elementary generators over the sweep basis "
            "through an exact rational solve reproduces the same quotient",
            [&] {
              std::size_t i = 0;
              while (c[i] == 0) ++i;
              std::vector<std::vector<Int>> big;
              for (const auto& v : oracle_basis(c)) big.push_back(v.entries);
              std::vector<std::vector<Int>> small;
              for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                  small.push_back(elementary_solution(c, i, j).entries);
              return quotient_from_generators(big, small) ==
                     quotient_by_elementary_span(c, i);
            });

  if (n > 2 && c[0] != 0) {
    run_check(checks, "coordinate_matrix_invariants",
              "C = A^{-1} D is integral upper triangular with the divisor "
              "chain on the diagonal and gcd(C_ii, C_jj) | C_ij",
              [&] {
                return divisibility_invariant_holds(
                    reduced_coordinate_matrix(c));
              });
    if (abs_val(c[0]) > 1) {
      run_check(checks, "p_part_permutation",
                "for every prime dividing the leading coefficient, the "
                "multiset of p-parts of the divisor chain is invariant under "
                "permuting the coefficient tail, and agrees with the "
                "valuation-sorted chain",
                [&] {
                  std::vector<std::size_t> perm(n - 1);
                  for (std::size_t k = 0; k + 1 < n; ++k) perm[k] = k + 1;
                  std::shuffle(perm.begin(), perm.end(), rng);
                  for (const auto& [p, e] : factorize(c[0])) {
                    if (!p_part_permutation_invariant(c, perm, p)) return false;
                    std::vector<Int> plain =
                        detail::sorted_p_parts(divisor_chain(c), p);
                    if (plain != p_local_divisors(c, p)) return false;
                  }
                  return true;
                });
    }
  }
  if (c[0] != 0) {
    run_check(checks, "reduced_quotient_triviality",
              "the reduced span at the leading index equals the whole module "
              "exactly when |a_1|^{n-2} equals the product of gcd(a_1, a_j)",
              [&] {
                QuotientStructure q = quotient_by_reduced_span(c, 0);
                Int denom = 1;
                for (std::size_t j = 1; j < n; ++j)
                  denom *= gcd_nonneg(c[0], c[j]);
                Int expected = 1;
                for (std::size_t t = 0; t + 2 < n; ++t)
                  expected *= abs_val(c[0]);
                bool criterion = denom == expected;
                bool product_identity =
                    q.free_rank() == 0 &&
                    q.torsion_order() * denom == expected;
                return q.is_trivial() == criterion && product_identity;
              });
  }

  if (n <= 3) {
    run_check(checks, "box_enumeration",
              "every solution inside the coordinate box appears in the "
              "enumeration, and the enumeration equals the box restriction "
              "of the certified basis span",
              [&] {
                const Int& bound = opts.box_bound;
                std::vector<SolutionVector> listed =
                    enumerate_box(c, bound, opts.box_budget);
                SolutionBasis b = detail::certified_basis(c);
                std::vector<std::vector<Int>> cols;
                for (const auto& v : b.vectors) cols.push_back(v.entries);
                IntMatrix B = IntMatrix::from_columns(cols);
                std::vector<SolutionVector> expected;
                std::vector<Int> x(n, -bound);
                while (true) {
                  IntMatrix target(n, 1);
                  for (std::size_t k = 0; k < n; ++k) target(k, 0) = x[k];
                  if (integral_coordinates(B, target)) {
                    SolutionVector v;
                    v.entries = x;
                    expected.push_back(std::move(v));
                  }
                  std::size_t k = 0;
                  while (k < n) {
                    ++x[k];
                    if (x[k] <= bound) break;
                    x[k] = -bound;
                    ++k;
                  }
                  if (k == n) break;
                }
                std::sort(expected.begin(), expected.end());
                return listed == expected;
              });
  }

  return checks;
}

inline json verify_report(const std::vector<Coefficients>& instances,
                          std::uint64_t seed, const BatteryOptions& base) {
  json inst = json::array();
  bool ok = true;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    BatteryOptions opts = base;
    opts.seed = seed + k;
    std::vector<CheckResult> checks = run_battery(instances[k], opts);
    bool pass = all_pass(checks);
    ok = ok && pass;
    inst.push_back(json{{"coefficients", to_json(instances[k].values())},
                        {"checks", to_json(checks)},
                        {"pass", pass}});
  }
  return json{{"command", "verify"},
              {"seed", seed},
              {"count", instances.size()},
              {"instances", std::move(inst)},
              {"pass", ok}};
}

// --------------------------------------------------------------------------
// worked reference example (12, 4, 2, 3)
// --------------------------------------------------------------------------

namespace golden {

inline Coefficients coefficients() {
  return Coefficients::validate({12, 4, 2, 3});
}

// z_2, z_3, z_4 with pivot coordinates [[3,-1,1],[0,2,1],[0,0,2]].
inline std::vector<SolutionVector> basis_vectors() {
  return {{{-1, 3, 0, 0}}, {{0, -1, 2, 0}}, {{-1, 1, 1, 2}}};
}

inline SolutionBasis basis() {
  SolutionBasis b;
  b.coords = IntMatrix::from_rows({{3, -1, 1}, {0, 2, 1}, {0, 0, 2}});
  b.vectors = basis_vectors();
  b.pivot = 0;
  b.permutation = {0, 1, 2, 3};
  b.m = 4;
  return b;
}

inline IntMatrix elementary_coordinate_matrix() {
  return IntMatrix::from_rows({{4, 2, -3}, {0, 6, -3}, {0, 0, 6}});
}

inline IntMatrix reduced_coordinate_matrix() {
  return IntMatrix::from_rows({{1, 1, -1}, {0, 3, -1}, {0, 0, 2}});
}

inline std::vector<SolutionVector> spanning_vectors() {
  return {{{-2, 0, 12, 0}},
          {{-3, 0, 0, 12}},
          {{0, -2, 4, 0}},
          {{0, -3, 0, 4}},
          {{0, 0, -3, 2}}};
}

inline IntMatrix relation_matrix() {
  return IntMatrix::from_rows({{3, 0}, {-2, 0}, {0, 3}, {0, -2}, {12, 4}});
}

}  // namespace golden

// Recomputes every stored value of the reference instance (12, 4, 2, 3) and
// diffs against the frozen expectations.
inline json example_report() {
  using reportdetail::run_check;
  Coefficients c = golden::coefficients();
  std::vector<CheckResult> checks;

  run_check(checks, "prefix_gcds",
            "the prefix gcds of (12, 4, 2, 3) are (12, 4, 2, 1)", [&] {
              return gcd_prefixes(c.values()).prefix_gcds ==
                     std::vector<Int>{12, 4, 2, 1};
            });
  run_check(checks, "greedy_index_set",
            "the greedy-minimal coprime index set is {3, 4}", [&] {
              return choose_index_set(c, IndexSetStrategy::greedy_minimal)
                         .indices() == std::vector<std::size_t>{2, 3};
            });
  run_check(checks, "stored_basis_certified",
            "the stored basis is certified with determinant 12", [&] {
              BasisCheck chk = verify_basis(c, golden::basis_vectors(), 0);
              return chk.accepted && chk.det == 12;
            });
  run_check(checks, "constructed_basis_spans_stored_module",
            "the constructed basis spans the same module as the stored one",
            [&] {
              SolutionBasis b =
                  build_basis(c, choose_index_set(c, IndexSetStrategy::all));
              return modules_equal(
                  ModuleSpan::of_solutions(b.vectors, 4),
                  ModuleSpan::of_solutions(golden::basis_vectors(), 4));
            });
  run_check(checks, "pivot_lattice_quotient",
            "the pivot lattice modulo the solution module is Z/12", [&] {
              return pivot_lattice_quotient(c, 0) ==
                     QuotientStructure::from_invariant_factors({12});
            });
  run_check(checks, "elementary_solutions_scale_the_pivot_basis",
            "each elementary solution at the leading index has pivot "
            "coordinates 12 times a unit vector",
            [&] {
              for (std::size_t j = 1; j < 4; ++j) {
                std::vector<Int> w =
                    pivot_coordinates(c, elementary_solution(c, 0, j), 0);
                for (std::size_t k = 0; k < 3; ++k)
                  if (w[k] != (k + 1 == j ? Int(12) : Int(0))) return false;
              }
              return true;
            });
  run_check(checks, "elementary_coordinates",
            "the elementary solutions at the leading index have coordinate "
            "matrix [[4,2,-3],[0,6,-3],[0,0,6]] over the stored basis",
            [&] {
              SolutionBasis b = golden::basis();
              std::vector<SolutionVector> gens = {
                  elementary_solution(c, 0, 1), elementary_solution(c, 0, 2),
                  elementary_solution(c, 0, 3)};
              return coordinates_in_basis(c, b, gens) ==
                     golden::elementary_coordinate_matrix();
            });
  run_check(checks, "elementary_coordinate_snf",
            "that coordinate matrix has Smith diagonal (1, 12, 12), so the "
            "quotient is Z/12 + Z/12",
            [&] {
              SnfResult s = snf(golden::elementary_coordinate_matrix());
              return s.invariant_factors == std::vector<Int>{1, 12, 12} &&
                     quotient_by_elementary_span(c, 0) ==
                         QuotientStructure::from_invariant_factors({12, 12});
            });
  run_check(checks, "reduced_coordinates",
            "the reduced solutions at the leading index have coordinate "
            "matrix [[1,1,-1],[0,3,-1],[0,0,2]] over the stored basis",
            [&] {
              SolutionBasis b = golden::basis();
              std::vector<SolutionVector> gens = {reduced_solution(c, 0, 1),
                                                  reduced_solution(c, 0, 2),
                                                  reduced_solution(c, 0, 3)};
              return coordinates_in_basis(c, b, gens) ==
                     golden::reduced_coordinate_matrix();
            });
  run_check(checks, "reduced_quotient",
            "the reduced-span quotient is Z/3 + Z/2 (divisor chain (3, 2))",
            [&] {
              return divisor_chain(c).values == std::vector<Int>{3, 2} &&
                     quotient_by_reduced_span(c, 0) ==
                         QuotientStructure::from_invariant_factors({6});
            });
  run_check(checks, "reduced_coordinate_matrix_via_solve",
            "solving A X = diag(3, 6, 4) over the stored basis matrix "
            "reproduces [[1,1,-1],[0,3,-1],[0,0,2]]",
            [&] {
              return solve_upper_triangular(
                         golden::basis().coords,
                         IntMatrix::diagonal({3, 6, 4})) ==
                     golden::reduced_coordinate_matrix();
            });
  run_check(checks, "spanning_set",
            "the elementary solutions meeting {3, 4} are the five stored "
            "vectors",
            [&] {
              IndexSet M = IndexSet::of(c, {2, 3});
              return spanning_set(c, M) == golden::spanning_vectors();
            });
  run_check(checks, "relation_matrix",
            "the presentation over {3, 4} has (d, e) = (5, 2) and the stored "
            "5 x 2 relation matrix",
            [&] {
              Presentation p = build_presentation(c, IndexSet::of(c, {2, 3}));
              return p.generator_pairs.size() == 5 &&
                     p.relation_triples.size() == 2 &&
                     p.relations == golden::relation_matrix();
            });
  run_check(checks, "relation_snf",
            "the relation matrix has Smith diagonal (1, 1) and rank 2 = "
            "d - (n - 1)",
            [&] {
              Presentation p = build_presentation(c, IndexSet::of(c, {2, 3}));
              PresentationReport rep = verify_presentation(c, p);
              return rep.defining() && rep.rank == 2 &&
                     rep.invariant_factors == std::vector<Int>{1, 1};
            });
  run_check(checks, "coordinate_matrix_invariants",
            "the canonical C matrix has diagonal (1, 3, 2), determinant of "
            "magnitude 6, and every C_ij divisible by gcd(C_ii, C_jj)",
            [&] {
              IntMatrix C = reduced_coordinate_matrix(c);
              return C(0, 0) == 1 && C(1, 1) == 3 && C(2, 2) == 2 &&
                     abs_val(det_exact(C)) == 6 &&
                     divisibility_invariant_holds(C) &&
                     divisibility_invariant_holds(
                         golden::reduced_coordinate_matrix());
            });

  return json{{"command", "example"},
              {"coefficients", to_json(c.values())},
              {"checks", to_json(checks)},
              {"pass", all_pass(checks)}};
}

// Re-runs the battery on the coefficients recorded in a verify report and
// compares the per-check outcomes; the machine-readable output must
// round-trip to identical results.
inline bool reverify_report(const json& report) {
  std::uint64_t seed = report.at("seed").get<std::uint64_t>();
  const json& instances = report.at("instances");
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const json& inst = instances[k];
    Coefficients c = coefficients_from_json(inst);
    BatteryOptions opts;
    opts.seed = seed + k;
    std::vector<CheckResult> rerun = run_battery(c, opts);
    const json& recorded = inst.at("checks");
    if (recorded.size() != rerun.size()) return false;
    for (std::size_t t = 0; t < rerun.size(); ++t) {
      if (recorded[t].at("name").get<std::string>() != rerun[t].name)
        return false;
      if (recorded[t].at("pass").get<bool>() != rerun[t].pass) return false;
    }
  }
  return true;
}

}  // namespace dioph
