#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mfb/dimension.hpp"
#include "mfb/groebner.hpp"
#include "mfb/milnor_oracle.hpp"
#include "mfb/parse.hpp"
#include "mfb/standard_basis.hpp"

using mfb::Budget;
using mfb::IdealBasis;
using mfb::MonomialOrder;
using mfb::Polynomial;
using mfb::parse_polynomial;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial p(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

}  // namespace

TEST_CASE("normal form divides out leading terms") {
  Polynomial h = p("x^2*y + x", kXY);
  Polynomial g = p("x^2 - y", kXY);
  Polynomial r = mfb::normal_form(h, {g});
  CHECK(r == p("y^2 + x", kXY));
  // Every term of the remainder is irreducible, so reducing again is a no-op.
  CHECK(mfb::normal_form(r, {g}) == r);
  CHECK(mfb::normal_form(Polynomial::zero(kXY), {g}).is_zero());
}

TEST_CASE("s-polynomial cancels leading terms") {
  Polynomial f = p("x^2 + y", kXY);
  Polynomial g = p("x*y + 1", kXY);
  CHECK(mfb::spoly(f, g) == p("y^2 - x", kXY));
  CHECK(mfb::spoly(f, f).is_zero());
}

TEST_CASE("basis of a linear ideal is itself") {
  Budget budget;
  IdealBasis b = mfb::groebner_basis({p("x", kXY), p("y", kXY)},
                                     MonomialOrder::kDegrevlex, budget);
  REQUIRE(b.generators.size() == 2);
  CHECK(b.generators[0] == p("y", kXY));
  CHECK(b.generators[1] == p("x", kXY));
  CHECK(b.reduced);
  CHECK(b.variables == kXY);
  CHECK(mfb::ideal_dimension(b) == 0);
}

TEST_CASE("already-interreduced pair with coprime leads") {
  Budget budget;
  IdealBasis b = mfb::groebner_basis({p("x^2 - y", kXY), p("y^2", kXY)},
                                     MonomialOrder::kDegrevlex, budget);
  REQUIRE(b.generators.size() == 2);
  CHECK(b.generators[0] == p("y^2", kXY));
  CHECK(b.generators[1] == p("x^2 - y", kXY));
  CHECK(mfb::ideal_dimension(b) == 0);
  // Quotient dimension agrees with the truncated linear-algebra count.
  mfb::Staircase st = mfb::staircase_from_leading(
      {b.generators[0].leading_monomial(), b.generators[1].leading_monomial()}, 2);
  REQUIRE(st.finite);
  CHECK(st.count == 4);
  CHECK(mfb::detail::truncated_quotient_dimension(
            {p("x^2 - y", kXY), p("y^2", kXY)}, 6) == 4);
}

TEST_CASE("twisted cubic under both global orders") {
  std::vector<Polynomial> gens{p("x^2 - y", kXYZ), p("x^3 - z", kXYZ)};

  Budget b1;
  IdealBasis grevlex = mfb::groebner_basis(gens, MonomialOrder::kDegrevlex, b1);
  Budget b2;
  IdealBasis lex = mfb::groebner_basis(gens, MonomialOrder::kLex, b2);

  CHECK(mfb::ideal_dimension(grevlex) == 1);
  CHECK(mfb::ideal_dimension(lex) == 1);

  // Ideal membership is order-independent.
  Polynomial member =
      p("x^2 - y", kXYZ) * p("x*y + 3", kXYZ) + p("x^3 - z", kXYZ) * p("z - 2", kXYZ);
  CHECK(mfb::normal_form(member, grevlex.generators).is_zero());
  CHECK(mfb::normal_form(member.with_order(MonomialOrder::kLex), lex.generators)
            .is_zero());
  Polynomial outsider = p("x + 1", kXYZ);
  CHECK_FALSE(mfb::normal_form(outsider, grevlex.generators).is_zero());
  CHECK_FALSE(
      mfb::normal_form(outsider.with_order(MonomialOrder::kLex), lex.generators)
          .is_zero());
}

TEST_CASE("computing a basis twice is idempotent") {
  std::vector<Polynomial> gens{p("x^2 - y", kXYZ), p("x^3 - z", kXYZ)};
  Budget b1, b2;
  IdealBasis once = mfb::groebner_basis(gens, MonomialOrder::kDegrevlex, b1);
  IdealBasis twice =
      mfb::groebner_basis(once.generators, MonomialOrder::kDegrevlex, b2);
  CHECK(once.generators == twice.generators);
}

TEST_CASE("minimal monomial generators pass through unchanged") {
  const std::vector<std::string> vars{"t", "x", "r", "y"};
  std::vector<Polynomial> gens{p("t*x^3", vars), p("r^2*y", vars), p("r*y^2", vars),
                               p("x^4", vars)};
  Budget budget;
  IdealBasis b = mfb::groebner_basis(gens, MonomialOrder::kDegrevlex, budget);
  REQUIRE(b.generators.size() == 4);
  for (const Polynomial& g : gens)
    CHECK(std::count(b.generators.begin(), b.generators.end(), g) == 1);
}

TEST_CASE("unit ideal collapses to one") {
  Budget budget;
  IdealBasis b = mfb::groebner_basis({p("x", kXY), p("x - 1", kXY)},
                                     MonomialOrder::kDegrevlex, budget);
  REQUIRE(b.generators.size() == 1);
  CHECK(b.generators[0] == p("1", kXY));
  CHECK(mfb::ideal_dimension(b) == -1);
}

TEST_CASE("dimension of hand-built bases") {
  IdealBasis zero_ideal;
  zero_ideal.variables = kXYZ;
  zero_ideal.reduced = true;
  CHECK(mfb::ideal_dimension(zero_ideal) == 3);

  IdealBasis not_reduced;
  not_reduced.variables = kXY;
  not_reduced.reduced = false;
  CHECK_THROWS_AS(mfb::ideal_dimension(not_reduced), std::invalid_argument);

  IdealBasis local;
  local.variables = kXY;
  local.reduced = true;
  local.order = MonomialOrder::kNegDegrevlex;
  CHECK_THROWS_AS(mfb::ideal_dimension(local), std::invalid_argument);
}

TEST_CASE("basis computation rejects bad input") {
  Budget budget;
  CHECK_THROWS_AS(mfb::groebner_basis({}, MonomialOrder::kDegrevlex, budget),
                  std::invalid_argument);
  CHECK_THROWS_AS(mfb::groebner_basis({Polynomial::zero(kXY)},
                                      MonomialOrder::kDegrevlex, budget),
                  std::invalid_argument);
  CHECK_THROWS_AS(mfb::groebner_basis({p("x", kXY)},
                                      MonomialOrder::kNegDegrevlex, budget),
                  std::invalid_argument);
}

TEST_CASE("an exhausted budget aborts the pair loop") {
  Budget budget(0);
  CHECK_THROWS_AS(mfb::groebner_basis({p("x^2 - y", kXY), p("y^2", kXY)},
                                      MonomialOrder::kDegrevlex, budget),
                  mfb::ResourceLimitError);
}
