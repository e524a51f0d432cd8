#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfb/monomial.hpp"
#include "mfb/parse.hpp"
#include "mfb/polynomial.hpp"

using mfb::Int;
using mfb::Monomial;
using mfb::MonomialOrder;
using mfb::ParseError;
using mfb::parse_polynomial;
using mfb::Polynomial;
using mfb::Rat;

namespace {

std::size_t parse_failure_offset(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for: " + text);
  return 0;
}

Polynomial random_poly(std::uint64_t& state, const std::vector<std::string>& vars) {
  std::vector<Polynomial::Term> terms;
  int nterms = 1 + static_cast<int>((state = mfb::splitmix64(state)) % 5);
  for (int t = 0; t < nterms; ++t) {
    Polynomial::Term term;
    term.mono = Monomial::one(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v)
      term.mono.e[v] = static_cast<int>((state = mfb::splitmix64(state)) % 4);
    long num = static_cast<long>((state = mfb::splitmix64(state)) % 19) - 9;
    long den = 1 + static_cast<long>((state = mfb::splitmix64(state)) % 7);
    term.coeff = Rat(num, den);
    term.coeff.canonicalize();
    terms.push_back(term);
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

}  // namespace

TEST_CASE("monomial order comparisons") {
  // degrevlex in 3 variables: degree first, then reversed last-variable test.
  Monomial x{{1, 0, 0}}, y{{0, 1, 0}}, z{{0, 0, 1}};
  Monomial x2{{2, 0, 0}}, yz{{0, 1, 1}}, xy{{1, 1, 0}};
  CHECK(mfb::mono_greater(x2, x, MonomialOrder::kDegrevlex));
  CHECK(mfb::mono_greater(x, y, MonomialOrder::kDegrevlex));
  CHECK(mfb::mono_greater(y, z, MonomialOrder::kDegrevlex));
  CHECK(mfb::mono_greater(xy, yz, MonomialOrder::kDegrevlex));
  // x*y > z^2 in degrevlex (same degree, z^2 uses the last variable more).
  CHECK(mfb::mono_greater(xy, Monomial{{0, 0, 2}}, MonomialOrder::kDegrevlex));
  // lex ignores degree.
  CHECK(mfb::mono_greater(x, Monomial{{0, 5, 5}}, MonomialOrder::kLex));
  // local order: lower degree is more leading, 1 beats everything.
  CHECK(mfb::mono_greater(Monomial::one(3), x, MonomialOrder::kNegDegrevlex));
  CHECK(mfb::mono_greater(z, x2, MonomialOrder::kNegDegrevlex));
  CHECK(mfb::is_global(MonomialOrder::kDegrevlex));
  CHECK(mfb::is_global(MonomialOrder::kLex));
  CHECK_FALSE(mfb::is_global(MonomialOrder::kNegDegrevlex));
}

TEST_CASE("monomial divisibility and lcm") {
  Monomial a{{2, 1, 0}}, b{{1, 1, 1}};
  CHECK(Monomial{{1, 0, 0}}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(lcm(a, b).e == std::vector<int>{2, 1, 1});
  CHECK(mfb::coprime(Monomial{{2, 0, 0}}, Monomial{{0, 3, 1}}));
  CHECK_FALSE(mfb::coprime(a, b));
  CHECK((a / Monomial{{1, 1, 0}}).e == std::vector<int>{1, 0, 0});
}

TEST_CASE("parser accepts the worked examples") {
  Polynomial f = parse_polynomial("z^2*y - x*y^2");
  CHECK(f.variables() == std::vector<std::string>{"z", "y", "x"});
  CHECK(f.terms().size() == 2);
  CHECK(f.total_degree() == 3);
  CHECK(*mfb::homogeneous_degree(f) == 3);

  Polynomial g = parse_polynomial("u^25 + w^24*z - x^22*y*z^2");
  CHECK(g.var_count() == 5);
  CHECK(*mfb::homogeneous_degree(g) == 25);

  Polynomial h = parse_polynomial("3/4*x*y - 2*x^2 + 1");
  CHECK(h.terms().size() == 3);
  CHECK(h.has_constant_term());

  // Signs and redundant whitespace.
  Polynomial k = parse_polynomial("  - x ^ 2 + 5 * x - 4/2 ");
  CHECK(k == parse_polynomial("-x^2 + 5*x - 2"));
}

TEST_CASE("parser merges repeated monomials and drops zeros") {
  CHECK(parse_polynomial("x + x") == parse_polynomial("2*x"));
  CHECK(parse_polynomial("x - x").is_zero());
  CHECK(parse_polynomial("1/2*x + 1/2*x") == parse_polynomial("x"));
}

TEST_CASE("parser respects an explicit variable order") {
  Polynomial f = parse_polynomial("y + x", std::vector<std::string>{"x", "y", "z"});
  CHECK(f.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(parse_polynomial("w + x", std::vector<std::string>{"x", "y"}),
                  ParseError);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(parse_failure_offset("") == 0);
  CHECK(parse_failure_offset("x^2 +") == 5);
  CHECK(parse_failure_offset("x^0") == 2);      // exponents must be positive
  CHECK(parse_failure_offset("x^") == 2);
  CHECK(parse_failure_offset("3/0*x") == 2);    // zero denominator
  CHECK(parse_failure_offset("x + $") == 4);
  CHECK(parse_failure_offset("x x") == 2);      // missing operator
  CHECK(parse_failure_offset("(x)") == 0);      // no parenthesis support
  std::size_t off = 0;
  try {
    parse_polynomial("y + q", std::vector<std::string>{"x", "y"});
  } catch (const ParseError& e) {
    off = e.offset();
  }
  CHECK(off == 4);
}

TEST_CASE("rendering round-trips through the parser") {
  std::vector<std::string> vars{"x", "y", "z"};
  std::uint64_t state = 0x5eed;
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_poly(state, vars);
    Polynomial back = parse_polynomial(p.str(), vars);
    INFO("rendered: " << p.str());
    REQUIRE(back == p);
  }
  CHECK(Polynomial::zero({"x"}).str() == "0");
  CHECK(parse_polynomial("-x").str() == "-x");
  CHECK(parse_polynomial("x - y").str() == "x - y");
  CHECK(parse_polynomial("1/3*x^2*y").str() == "1/3*x^2*y");
  CHECK(parse_polynomial("7").str() == "7");
  CHECK(parse_polynomial("-1").str() == "-1");
}

TEST_CASE("ring axioms hold on random inputs") {
  std::vector<std::string> vars{"x", "y"};
  std::uint64_t state = 99;
  for (int i = 0; i < 60; ++i) {
    Polynomial a = random_poly(state, vars);
    Polynomial b = random_poly(state, vars);
    Polynomial c = random_poly(state, vars);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("differentiation satisfies the product rule") {
  std::vector<std::string> vars{"x", "y"};
  std::uint64_t state = 1234;
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_poly(state, vars);
    Polynomial g = random_poly(state, vars);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      Polynomial lhs = (f * g).partial_derivative(v);
      Polynomial rhs = f.partial_derivative(v) * g + f * g.partial_derivative(v);
      REQUIRE(lhs == rhs);
    }
  }
  CHECK(parse_polynomial("x^3").partial_derivative(0) == parse_polynomial("3*x^2"));
  CHECK(parse_polynomial("y^2", std::vector<std::string>{"x", "y"})
            .partial_derivative(0)
            .is_zero());
}

TEST_CASE("homogeneity detection") {
  CHECK(*mfb::homogeneous_degree(parse_polynomial("x^2 + x*y")) == 2);
  CHECK_FALSE(mfb::homogeneous_degree(parse_polynomial("x^2 + y")));
  CHECK(*mfb::homogeneous_degree(parse_polynomial("5*x")) == 1);
  CHECK(*mfb::homogeneous_degree(parse_polynomial("5")) == 0);
  CHECK_THROWS_AS(mfb::homogeneous_degree(Polynomial::zero({"x"})),
                  mfb::DegeneracyError);
}

TEST_CASE("substitution with constants and renames") {
  Polynomial f = parse_polynomial("x^2*y + z^3");
  std::map<std::string, mfb::SubstValue> sub;
  sub["x"] = Rat(2);
  Polynomial g = mfb::substitute(f, sub);
  CHECK(g.variables() == std::vector<std::string>{"y", "z"});
  CHECK(g == parse_polynomial("4*y + z^3", std::vector<std::string>{"y", "z"}));

  std::map<std::string, mfb::SubstValue> rename;
  rename["z"] = std::string("y");
  Polynomial h = mfb::substitute(f, rename);
  CHECK(h.variables() == std::vector<std::string>{"x", "y"});
  CHECK(h == parse_polynomial("x^2*y + y^3", std::vector<std::string>{"x", "y"}));

  std::map<std::string, mfb::SubstValue> all;
  all["x"] = Rat(1);
  all["y"] = Rat(2);
  all["z"] = Rat(-1);
  Polynomial c = mfb::substitute(f, all);
  CHECK(c.var_count() == 0);
  CHECK(c == Polynomial::constant({}, Rat(1)));

  std::map<std::string, mfb::SubstValue> bad;
  bad["q"] = Rat(1);
  CHECK_THROWS_AS(mfb::substitute(f, bad), std::invalid_argument);
}

TEST_CASE("primitive representative clears denominators and content") {
  Polynomial f = parse_polynomial("2/3*x^2 - 4/9*y^2");
  Polynomial p = f.primitive();
  CHECK(p == parse_polynomial("3*x^2 - 2*y^2", std::vector<std::string>{"x", "y"}));
  CHECK(p.leading_coefficient() > 0);
  CHECK(parse_polynomial("-2*x - 4*y").primitive() ==
        parse_polynomial("x + 2*y", std::vector<std::string>{"x", "y"}));
  CHECK(f.monic().leading_coefficient() == 1);
}

TEST_CASE("degree accessors") {
  Polynomial f = parse_polynomial("x^3*y + x");
  CHECK(f.total_degree() == 4);
  CHECK(f.min_degree() == 1);
  CHECK(Polynomial::zero({"x"}).total_degree() == -1);
  CHECK(f.leading_monomial().degree() == 4);
}

TEST_CASE("terms are strictly sorted under the active order") {
  std::vector<std::string> vars{"x", "y", "z"};
  std::uint64_t state = 777;
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(state, vars);
    const auto& ts = p.terms();
    for (std::size_t k = 1; k < ts.size(); ++k)
      REQUIRE(mfb::mono_greater(ts[k - 1].mono, ts[k].mono, p.order()));
    Polynomial local = p.with_order(MonomialOrder::kNegDegrevlex);
    const auto& ls = local.terms();
    for (std::size_t k = 1; k < ls.size(); ++k)
      REQUIRE(mfb::mono_greater(ls[k - 1].mono, ls[k].mono, MonomialOrder::kNegDegrevlex));
    REQUIRE(local.with_order(p.order()) == p);
  }
}
