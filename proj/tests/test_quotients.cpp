#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dioph/quotients.hpp"
#include "support/fixtures.hpp"

using namespace dioph;
using fixtures::coeffs;
using fixtures::ints;

TEST_CASE("quotient structure normal forms") {
  QuotientStructure q = QuotientStructure::from_cyclic_factors(ints({3, 2}));
  CHECK(q.invariant_factors() == ints({6}));
  CHECK(q.free_rank() == 0);
  CHECK(q.elementary_divisors().at(Int(2)) == ints({2}));
  CHECK(q.elementary_divisors().at(Int(3)) == ints({3}));
  CHECK(q.to_string() == "Z/6");

  QuotientStructure r =
      QuotientStructure::from_cyclic_factors(ints({4, 6, 0}), 1);
  CHECK(r.invariant_factors() == ints({2, 12}));
  CHECK(r.free_rank() == 2);

  CHECK(QuotientStructure::from_cyclic_factors(ints({1, 1})).is_trivial());
  CHECK(QuotientStructure::from_invariant_factors(ints({12, 12})) ==
        QuotientStructure::from_cyclic_factors(ints({12, 12})));
  CHECK_THROWS_AS(QuotientStructure::from_invariant_factors(ints({4, 6})),
                  std::invalid_argument);

  // refinement and recombination are mutually inverse
  QuotientStructure back = QuotientStructure::from_elementary_divisors(
      q.elementary_divisors(), q.free_rank());
  CHECK(back == q);
}

TEST_CASE("elementary divisors round trip on random chains") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long long> pick(1, 60);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> fs(1 + rng() % 4);
    for (auto& f : fs) f = pick(rng);
    QuotientStructure q =
        QuotientStructure::from_cyclic_factors(fs, rng() % 3);
    QuotientStructure back = QuotientStructure::from_elementary_divisors(
        q.elementary_divisors(), q.free_rank());
    CHECK(back == q);
    Int prod_f = q.torsion_order();
    Int prod_e = 1;
    for (const auto& [p, powers] : q.elementary_divisors())
      for (const Int& pw : powers) prod_e *= pw;
    CHECK(prod_f == prod_e);
  }
}

TEST_CASE("elementary-span quotients") {
  CHECK(quotient_by_elementary_span(coeffs({12, 4, 2, 3}), 0) ==
        QuotientStructure::from_invariant_factors(ints({12, 12})));
  CHECK(quotient_by_elementary_span(coeffs({1, 5, 7}), 0).is_trivial());
  CHECK(quotient_by_elementary_span(coeffs({0, 1, 1}), 0) ==
        QuotientStructure::free_module(1));
  // n == 2: the anchored span is everything
  CHECK(quotient_by_elementary_span(coeffs({2, 3}), 0).is_trivial());
}

TEST_CASE("pivot lattice quotients") {
  CHECK(pivot_lattice_quotient(coeffs({12, 4, 2, 3}), 0) ==
        QuotientStructure::from_invariant_factors(ints({12})));
  CHECK(pivot_lattice_quotient(coeffs({1, 2, 3}), 0).is_trivial());
  CHECK(pivot_lattice_quotient(coeffs({4, 7, 6}), 0) ==
        QuotientStructure::from_invariant_factors(ints({4})));
  CHECK(pivot_lattice_quotient(coeffs({12, 4, 2, 3}), 3) ==
        QuotientStructure::from_invariant_factors(ints({3})));
  CHECK_THROWS_AS(pivot_lattice_quotient(coeffs({0, 1, 1}), 0),
                  std::invalid_argument);
}

TEST_CASE("divisor chains") {
  CHECK(divisor_chain(coeffs({12, 4, 2, 3})).values == ints({3, 2}));
  CHECK(divisor_chain(coeffs({12, 15, 10, 20})).values == ints({2, 3}));
  // the two tail orderings below realize the chains (3, 2) and (1, 6); their
  // 2-parts and 3-parts agree as multisets
  CHECK(divisor_chain(coeffs({12, 20, 10, 15})).values == ints({3, 2}));
  CHECK(divisor_chain(coeffs({12, 20, 15, 10})).values == ints({1, 6}));
  CHECK(divisor_chain(coeffs({-12, 4, 2, 3})).values == ints({3, 2}));
  for (const Int& d : divisor_chain(coeffs({12, 15, 10, 20})).values)
    CHECK(divides(d, 12));
  CHECK_THROWS_AS(divisor_chain(coeffs({0, 3, 2})), std::invalid_argument);
  CHECK_THROWS_AS(divisor_chain(coeffs({2, 3})), std::invalid_argument);
}

TEST_CASE("reduced-span quotients") {
  CHECK(quotient_by_reduced_span(coeffs({12, 4, 2, 3}), 0) ==
        QuotientStructure::from_invariant_factors(ints({6})));
  auto ed =
      quotient_by_reduced_span(coeffs({12, 4, 2, 3}), 0).elementary_divisors();
  CHECK(ed.at(Int(2)) == ints({2}));
  CHECK(ed.at(Int(3)) == ints({3}));

  // coefficients of the shape prod p_j^{e_ij} with the leading exponents
  // minimal: the reduced solutions at the lead are already a basis
  CHECK(quotient_by_reduced_span(coeffs({15, 10, 6}), 0).is_trivial());

  CHECK(quotient_by_reduced_span(coeffs({0, 3, 2}), 0) ==
        QuotientStructure::free_module(1));
  CHECK(quotient_by_reduced_span(coeffs({2, 3}), 0).is_trivial());
  CHECK(quotient_by_reduced_span(coeffs({12, 4, 2, 3}), 2) ==
        QuotientStructure::from_cyclic_factors(
            divisor_chain(coeffs({2, 12, 4, 3})).values));
}

TEST_CASE("reduced coordinate matrix") {
  Coefficients c = coeffs({12, 4, 2, 3});
  IntMatrix C = reduced_coordinate_matrix(c);
  CHECK(is_upper_triangular(C));
  CHECK(C(0, 0) == 1);
  CHECK(C(1, 1) == 3);
  CHECK(C(2, 2) == 2);
  CHECK(abs_val(det_exact(C)) == 6);  // 12^2 / (4 * 2 * 3)
  CHECK(divisibility_invariant_holds(C));

  // unit leading coefficient: everything collapses
  IntMatrix C1 = reduced_coordinate_matrix(coeffs({1, 8, 9}));
  CHECK(C1 == IntMatrix::identity(2));

  CHECK_THROWS_AS(reduced_coordinate_matrix(coeffs({0, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(reduced_coordinate_matrix(coeffs({2, 3})),
                  std::invalid_argument);
}

TEST_CASE("divisibility invariant") {
  CHECK(divisibility_invariant_holds(
      IntMatrix::from_rows({{1, 1, -1}, {0, 3, -1}, {0, 0, 2}})));
  CHECK_FALSE(
      divisibility_invariant_holds(IntMatrix::from_rows({{2, 1}, {0, 4}})));
  CHECK(divisibility_invariant_holds(IntMatrix::diagonal(ints({5, 7, 9}))));
  CHECK_THROWS_AS(
      divisibility_invariant_holds(IntMatrix::from_rows({{1, 0}, {1, 1}})),
      std::invalid_argument);
}

TEST_CASE("p-part permutation invariance on the reference pair") {
  Coefficients a = coeffs({12, 15, 10, 20});
  // send the tail (15, 10, 20) to (20, 10, 15)
  std::vector<std::size_t> swap_ends = {3, 2, 1};
  CHECK(p_part_permutation_invariant(a, swap_ends, 2));
  CHECK(p_part_permutation_invariant(a, swap_ends, 3));
  std::vector<std::size_t> identity = {1, 2, 3};
  CHECK(p_part_permutation_invariant(a, identity, 2));
  CHECK_THROWS_AS(p_part_permutation_invariant(a, identity, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_part_permutation_invariant(a, {1, 1, 2}, 2),
                  std::invalid_argument);
}

TEST_CASE("valuation-sorted chain gives the local divisors") {
  Coefficients c = coeffs({12, 4, 2, 3});
  CHECK(p_local_divisors(c, 2) == ints({1, 2}));
  CHECK(p_local_divisors(c, 3) == ints({1, 3}));
  // agrees with the p-parts of the plain chain as a multiset
  for (long long p : {2, 3}) {
    std::vector<Int> plain;
    for (const Int& d : divisor_chain(c).values) plain.push_back(p_part(d, p));
    std::sort(plain.begin(), plain.end());
    CHECK(plain == p_local_divisors(c, p));
  }
}

TEST_CASE("random quotient battery") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    Coefficients c = fixtures::random_unimodular(rng, 2 + rng() % 5, 5000);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      QuotientStructure se = quotient_by_elementary_span(c, i);
      if (c[i] == 0)
        CHECK(se == QuotientStructure::free_module(n - 2));
      else if (abs_val(c[i]) == 1)
        CHECK(se.is_trivial());
      else
        CHECK(se == QuotientStructure::from_invariant_factors(
                        std::vector<Int>(n - 2, abs_val(c[i]))));
      quotient_by_reduced_span(c, i);  // self-checking
      if (c[i] != 0)
        CHECK(pivot_lattice_quotient(c, i) ==
              QuotientStructure::from_cyclic_factors({abs_val(c[i])}));
    }
    if (n > 2 && c[0] != 0) {
      IntMatrix C = reduced_coordinate_matrix(c);
      CHECK(divisibility_invariant_holds(C));
      DivisorChain d = divisor_chain(c);
      for (std::size_t k = 1; k + 1 < n; ++k)
        CHECK(C(k, k) == d.values[k - 1]);

      // torsion product identity and the triviality criterion
      QuotientStructure q = quotient_by_reduced_span(c, 0);
      Int denom = 1;
      for (std::size_t j = 1; j < n; ++j) denom *= gcd_nonneg(c[0], c[j]);
      Int power = 1;
      for (std::size_t t = 0; t + 2 < n; ++t) power *= abs_val(c[0]);
      CHECK(q.torsion_order() * denom == power);
      CHECK(q.is_trivial() == (denom == power));

      if (abs_val(c[0]) > 1) {
        std::vector<std::size_t> perm(n - 1);
        for (std::size_t k = 0; k + 1 < n; ++k) perm[k] = k + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (const auto& [p, e] : factorize(c[0])) {
          CHECK(p_part_permutation_invariant(c, perm, p));
          std::vector<Int> plain;
          for (const Int& dk : d.values) plain.push_back(p_part(dk, p));
          std::sort(plain.begin(), plain.end());
          CHECK(plain == p_local_divisors(c, p));
        }
        // the whole quotient structure is invariant under tail permutation
        std::vector<Int> shuffled;
        shuffled.push_back(c[0]);
        for (std::size_t idx : perm) shuffled.push_back(c[idx]);
        CHECK(quotient_by_reduced_span(
                  Coefficients::validate(std::move(shuffled)), 0) == q);
      }
    }
  }
}
