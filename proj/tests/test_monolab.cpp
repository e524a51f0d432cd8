#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/cyclotomic.hpp"
#include "mfb/int_matrix.hpp"
#include "mfb/int_polynomial.hpp"
#include "mfb/monolab.hpp"

using mfb::DegreeTrace;
using mfb::Int;
using mfb::IntMatrix;
using mfb::IntPolynomial;

namespace {

IntMatrix companion(const IntPolynomial& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(static_cast<int>(i));
  return c;
}

IntMatrix random_matrix(std::uint64_t& state, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      state = mfb::splitmix64(state);
      m.at(i, j) = Int(static_cast<long>(state % 19) - 9);
    }
  return m;
}

IntMatrix random_unimodular(std::uint64_t& state, std::size_t n) {
  IntMatrix lower = IntMatrix::identity(n);
  IntMatrix upper = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    state = mfb::splitmix64(state);
    if (state % 2 == 0) lower.at(i, i) = -1;
    for (std::size_t j = 0; j < i; ++j) {
      state = mfb::splitmix64(state);
      lower.at(i, j) = Int(static_cast<long>(state % 7) - 3);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      state = mfb::splitmix64(state);
      upper.at(i, j) = Int(static_cast<long>(state % 7) - 3);
    }
  }
  return lower * upper;
}

}  // namespace

TEST_CASE("characteristic polynomial congruence under p-power iteration") {
  CHECK(mfb::charpoly_mod_p_power_identity(IntMatrix::identity(3), 3, 1));
  CHECK(mfb::charpoly_mod_p_power_identity(
      companion(IntPolynomial({Int(1), Int(1), Int(1)})), 5, 2));

  std::uint64_t state = 0x51;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>((state = mfb::splitmix64(state)) % 5);
    IntMatrix a = random_matrix(state, n);
    for (long p : {2L, 3L, 5L, 7L}) {
      for (int m = 1; m <= 3; ++m) {
        INFO("n=" << n << " p=" << p << " m=" << m << " trial=" << trial);
        REQUIRE(mfb::charpoly_mod_p_power_identity(a, p, m));
      }
    }
  }

  CHECK_THROWS_AS(mfb::charpoly_mod_p_power_identity(IntMatrix::identity(2), 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(mfb::charpoly_mod_p_power_identity(IntMatrix::identity(2), 3, 0),
                  std::invalid_argument);
}

TEST_CASE("internal operator from an invertible monodromy") {
  // Quarter-turn rotation: order 4.
  IntMatrix rot = IntMatrix::from_rows({{Int(0), Int(-1)}, {Int(1), Int(0)}});
  CHECK(mfb::internal_from_milnor(rot, 4) == IntMatrix::identity(2));
  IntMatrix half = mfb::internal_from_milnor(rot, 2);
  CHECK(half == IntMatrix::from_rows({{Int(-1), Int(0)}, {Int(0), Int(-1)}}));
  CHECK(mfb::internal_from_milnor(rot, 1) ==
        IntMatrix::from_rows({{Int(0), Int(1)}, {Int(-1), Int(0)}}));

  // Order-3 rotation from the third cyclotomic polynomial.
  IntMatrix third = companion(mfb::cyclotomic_polynomial(3));
  CHECK(mfb::internal_from_milnor(third, 3) == IntMatrix::identity(2));

  // Defining identity: Q * T^d == I for any unimodular T.
  std::uint64_t state = 0x99;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>((state = mfb::splitmix64(state)) % 4);
    IntMatrix t = random_unimodular(state, n);
    for (int d = 1; d <= 5; ++d) {
      IntMatrix q = mfb::internal_from_milnor(t, d);
      REQUIRE(q * mfb::matrix_power(t, d) == IntMatrix::identity(n));
    }
  }

  IntMatrix twice = IntMatrix::identity(2);
  twice.at(0, 0) = 2;
  CHECK_THROWS_AS(mfb::internal_from_milnor(twice, 2), mfb::DegeneracyError);
  CHECK_THROWS_AS(mfb::internal_from_milnor(rot, 0), std::invalid_argument);
}

TEST_CASE("internal operator inherits the congruence at prime-power degree") {
  std::uint64_t state = 0xfeed;
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>((state = mfb::splitmix64(state)) % 3);
    IntMatrix t = random_unimodular(state, n);
    for (long p : {2L, 3L, 5L}) {
      for (int m = 1; m <= 2; ++m) {
        Int pm = 1;
        for (int i = 0; i < m; ++i) pm *= p;
        IntMatrix q = mfb::internal_from_milnor(t, static_cast<int>(pm.get_si()));
        IntMatrix tinv = mfb::inverse_unimodular(t);
        // char_Q mod p equals char of the base operator T^{-1} mod p.
        IntPolynomial lhs = mfb::charpoly_exact(q).reduced_mod(p);
        IntPolynomial rhs = mfb::charpoly_exact(tinv).reduced_mod(p);
        INFO("n=" << n << " p=" << p << " m=" << m);
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("cyclotomic factor detection") {
  using mfb::cyclotomic_polynomial;
  using mfb::is_quasiunipotent;

  IntPolynomial prod = cyclotomic_polynomial(1) * cyclotomic_polynomial(2) *
                       cyclotomic_polynomial(3);
  mfb::CyclotomicFactorization f = is_quasiunipotent(prod);
  REQUIRE(f.quasiunipotent);
  CHECK(f.factors == std::map<unsigned, int>{{1u, 1}, {2u, 1}, {3u, 1}});

  mfb::CyclotomicFactorization cube =
      is_quasiunipotent(IntPolynomial({Int(-1), Int(3), Int(-3), Int(1)}));
  REQUIRE(cube.quasiunipotent);
  CHECK(cube.factors == std::map<unsigned, int>{{1u, 3}});

  mfb::CyclotomicFactorization twelfth = is_quasiunipotent(cyclotomic_polynomial(12));
  REQUIRE(twelfth.quasiunipotent);
  CHECK(twelfth.factors == std::map<unsigned, int>{{12u, 1}});

  // Unit input: the empty product is quasi-unipotent.
  CHECK(is_quasiunipotent(IntPolynomial::constant(1)).quasiunipotent);

  mfb::CyclotomicFactorization shifted = is_quasiunipotent(IntPolynomial({Int(-2), Int(1)}));
  CHECK_FALSE(shifted.quasiunipotent);
  CHECK(shifted.factors.empty());
  // x^2 - 3x + 1 has real eigenvalues off the unit circle.
  CHECK_FALSE(is_quasiunipotent(IntPolynomial({Int(1), Int(-3), Int(1)})).quasiunipotent);

  CHECK_THROWS_AS(is_quasiunipotent(IntPolynomial({Int(0), Int(1)})),
                  std::invalid_argument);  // zero constant term
  CHECK_THROWS_AS(is_quasiunipotent(IntPolynomial({Int(1), Int(2)})),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(is_quasiunipotent(IntPolynomial()), std::invalid_argument);
}

TEST_CASE("palindromic coefficient test for invertible quasi-unipotent operators") {
  using mfb::charpoly_inverse_invariance;
  using mfb::cyclotomic_polynomial;

  CHECK(charpoly_inverse_invariance(IntPolynomial({Int(-1), Int(3), Int(-3), Int(1)})));
  CHECK(charpoly_inverse_invariance(cyclotomic_polynomial(3)));
  CHECK(charpoly_inverse_invariance(cyclotomic_polynomial(1) * cyclotomic_polynomial(4)));
  CHECK(charpoly_inverse_invariance(cyclotomic_polynomial(2)));

  CHECK_THROWS_AS(charpoly_inverse_invariance(IntPolynomial({Int(-2), Int(1)})),
                  std::invalid_argument);  // constant term not a unit
  CHECK_THROWS_AS(charpoly_inverse_invariance(IntPolynomial({Int(2), Int(1)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(charpoly_inverse_invariance(IntPolynomial({Int(1), Int(3), Int(1)})),
                  std::invalid_argument);  // unit ends, but not quasi-unipotent
  CHECK_THROWS_AS(charpoly_inverse_invariance(IntPolynomial({Int(1), Int(2)})),
                  std::invalid_argument);  // not monic
}

TEST_CASE("alternating trace sum") {
  using mfb::lefschetz_number;
  CHECK(lefschetz_number({{0, Int(1)}}) == 1);
  CHECK(lefschetz_number({{0, Int(1)}, {1, Int(1)}}) == 0);
  CHECK(lefschetz_number({{0, Int(1)}, {2, Int(-1)}}) == 0);
  CHECK(lefschetz_number({{0, Int(1)}, {1, Int(4)}, {2, Int(2)}}) == -1);

  CHECK_THROWS_AS(lefschetz_number({{1, Int(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(lefschetz_number({{0, Int(1)}, {0, Int(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(lefschetz_number({{-1, Int(1)}, {0, Int(0)}}), std::invalid_argument);
}

TEST_CASE("divisibility of the alternating sum at critical points") {
  using mfb::lefschetz_divisibility_check;
  CHECK(lefschetz_divisibility_check({{0, Int(1)}, {1, Int(1)}}, 2));
  CHECK_FALSE(lefschetz_divisibility_check({{0, Int(1)}, {1, Int(-1)}}, 3));

  // Degree-5 iteration of an operator built from the sixth cyclotomic
  // polynomial: traces of Q in degrees 0 and 1 are 1 and 1, so the
  // alternating sum vanishes and 5 divides it.
  IntMatrix t1 = companion(mfb::cyclotomic_polynomial(6));
  IntMatrix q1 = mfb::internal_from_milnor(t1, 5);
  CHECK(lefschetz_divisibility_check(
      {{0, Int(1)}, {1, mfb::matrix_trace(q1)}}, 5));

  // Degree-2 iteration of the order-3 rotation: trace of Q is -1, so the
  // alternating sum against a fixed degree-0 line is 1 - (-1) = 2.
  IntMatrix t2 = companion(mfb::cyclotomic_polynomial(3));
  IntMatrix q2 = mfb::internal_from_milnor(t2, 2);
  CHECK(mfb::matrix_trace(q2) == -1);
  CHECK(lefschetz_divisibility_check({{0, Int(1)}, {1, mfb::matrix_trace(q2)}}, 2));

  CHECK_THROWS_AS(lefschetz_divisibility_check({{0, Int(1)}}, 6), std::invalid_argument);
}

TEST_CASE("fixed-subspace dimension bound from the trace") {
  using mfb::eigenvalue_one_bound;
  CHECK(eigenvalue_one_bound(3, 1) == 2);
  CHECK(eigenvalue_one_bound(2, -1) == 0);
  CHECK(eigenvalue_one_bound(4, 4) == 4);
  CHECK(eigenvalue_one_bound(0, 0) == 0);
  CHECK(eigenvalue_one_bound(5, 0) == 2);
  CHECK_THROWS_AS(eigenvalue_one_bound(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalue_one_bound(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalue_one_bound(3, -4), std::invalid_argument);
}
