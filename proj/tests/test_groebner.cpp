#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "tjurina/groebner.hpp"
#include "tjurina/parse.hpp"

using namespace tjurina;

namespace {

std::vector<Polynomial> parse_all(const VarSet::Ptr& vars,
                                  const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, vars));
  return out;
}

}  // namespace

TEST_CASE("normal form against a known basis") {
  auto vars = VarSet::make({"x", "y"});
  IdealBasis gb = groebner_basis(vars, parse_all(vars, {"x^2 - y", "y^2 - 1"}),
                                 MonomialOrder::grevlex());
  // x^4 = (x^2)^2 == y^2 == 1 modulo the ideal.
  CHECK(normal_form(parse_poly("x^4", vars), gb) ==
        Polynomial::constant(vars, 1));
  // x^2*y - y^2 = y*(x^2 - y) lies in the ideal.
  CHECK(normal_form(parse_poly("x^2*y - y^2", vars), gb).is_zero());
  // Ideal membership: (x^2 - y)*q1 + (y^2 - 1)*q2 reduces to zero.
  CHECK(normal_form(parse_poly("(x^2 - y)*(x + y^3) + (y^2 - 1)*x*y", vars), gb)
            .is_zero());
}

TEST_CASE("membership oracle property: random combinations reduce to zero") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x*y - z^2", "x^2 - y*z", "y^3 - x*z^2"});
  IdealBasis gb = groebner_basis(vars, gens, MonomialOrder::grevlex());
  std::mt19937_64 rng(31337);
  auto random_small = [&]() {
    Polynomial p = Polynomial::zero(vars);
    for (int v = 0; v < 3; ++v)
      p = p + Polynomial::variable(vars, v) *
                  Rational(static_cast<int>(rng() % 7) - 3);
    return p + Polynomial::constant(vars, Rational(static_cast<int>(rng() % 5) - 2));
  };
  for (int i = 0; i < 30; ++i) {
    Polynomial combo = Polynomial::zero(vars);
    for (const auto& g : gens) combo = combo + random_small() * g;
    CHECK(normal_form(combo, gb).is_zero());
  }
  // ...and something clearly outside stays nonzero.
  CHECK_FALSE(normal_form(parse_poly("x + 1", vars), gb).is_zero());
}

TEST_CASE("reduced basis is unique under generator shuffles and scaling") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x^2 + y^2 + z^2 - 1", "x - y", "y - z^2"});
  IdealBasis reference = groebner_basis(vars, gens, MonomialOrder::grevlex());
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled)
      g = g * Rational(1 + static_cast<int>(rng() % 5));
    // Adding a redundant element must not change the reduced basis either.
    shuffled.push_back(gens[0] * gens[1]);
    IdealBasis other = groebner_basis(vars, shuffled, MonomialOrder::grevlex());
    CHECK(reference.gens == other.gens);
  }
}

TEST_CASE("buchberger certificate: all S-polynomials reduce to zero") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x*y - z", "y*z - x", "x*z - y"});
  IdealBasis gb = groebner_basis(vars, gens, MonomialOrder::grevlex());
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      detail::OPoly f = detail::make_opoly(gb.gens[i], gb.order);
      detail::OPoly g = detail::make_opoly(gb.gens[j], gb.order);
      Monomial l = Monomial::lcm(f.lm(), g.lm());
      Polynomial s =
          Polynomial::term(vars, f.lm().divide_into(l), Rational(1) / f.lc()) *
              gb.gens[i] -
          Polynomial::term(vars, g.lm().divide_into(l), Rational(1) / g.lc()) *
              gb.gens[j];
      CHECK(normal_form(s, gb).is_zero());
    }
}

TEST_CASE("trivial ideal detection") {
  auto vars = VarSet::make({"x", "y"});
  CHECK(is_trivial(groebner_basis(vars, parse_all(vars, {"x", "x - 1"}),
                                  MonomialOrder::grevlex())));
  CHECK_FALSE(is_trivial(groebner_basis(vars, parse_all(vars, {"x", "y"}),
                                        MonomialOrder::grevlex())));
}

TEST_CASE("elimination computes the projection") {
  auto vars = VarSet::make({"t", "x", "y"});
  // x = t^2, y = t^3  =>  eliminating t leaves the cuspidal relation.
  auto gens = parse_all(vars, {"x - t^2", "y - t^3"});
  std::vector<Polynomial> elim = eliminate(vars, gens, {0});
  REQUIRE(elim.size() == 1);
  Polynomial cusp = parse_poly("y^2 - x^3", vars);
  CHECK((elim[0] == cusp || elim[0] == -cusp));
}

TEST_CASE("saturation removes a component") {
  auto vars = VarSet::make({"x", "y"});
  // (x^2, x*y) = (x) ∩ (x^2, y): saturating by y leaves (x).
  auto gens = parse_all(vars, {"x^2", "x*y"});
  std::vector<Polynomial> sat = saturate(vars, gens, parse_poly("y", vars));
  IdealBasis gb = groebner_basis(vars, sat, MonomialOrder::grevlex());
  IdealBasis just_x =
      groebner_basis(vars, parse_all(vars, {"x"}), MonomialOrder::grevlex());
  CHECK(ideal_equal(gb, just_x));
  // saturate_list with several multipliers in sequence.
  auto sat2 = saturate_list(vars, parse_all(vars, {"x^2*y", "x*y^2"}),
                            parse_all(vars, {"x", "y"}));
  IdealBasis gb2 = groebner_basis(vars, sat2, MonomialOrder::grevlex());
  CHECK(is_trivial(gb2));
}

TEST_CASE("ideal dimension staircase") {
  auto v3 = VarSet::make({"x", "y", "z"});
  CHECK(vanishing_dimension(v3, {}) == 3);
  CHECK(vanishing_dimension(v3, parse_all(v3, {"x"})) == 2);
  CHECK(vanishing_dimension(v3, parse_all(v3, {"x", "y"})) == 1);
  CHECK(vanishing_dimension(v3, parse_all(v3, {"x", "y", "z"})) == 0);
  CHECK(vanishing_dimension(v3, parse_all(v3, {"x", "x - 1"})) == -1);
  // A hypersurface is a surface; cutting the cone with z = 0 leaves the two
  // lines x*y = 0.
  CHECK(vanishing_dimension(v3, parse_all(v3, {"x^2 + y^2 - z^2"})) == 2);
  CHECK(vanishing_dimension(v3, parse_all(v3, {"z^2 - x*y", "z"})) == 1);
  // Twisted-cubic style curve in 3-space.
  CHECK(vanishing_dimension(v3, parse_all(v3, {"y - x^2", "z - x^3"})) == 1);
}

TEST_CASE("ideal_equal distinguishes bases") {
  auto vars = VarSet::make({"x", "y"});
  IdealBasis a = groebner_basis(vars, parse_all(vars, {"x + y"}),
                                MonomialOrder::grevlex());
  IdealBasis b = groebner_basis(vars, parse_all(vars, {"2*x + 2*y", "(x + y)*y"}),
                                MonomialOrder::grevlex());
  IdealBasis c = groebner_basis(vars, parse_all(vars, {"x - y"}),
                                MonomialOrder::grevlex());
  CHECK(ideal_equal(a, b));
  CHECK_FALSE(ideal_equal(a, c));
}

TEST_CASE("radical membership") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x^2", "y^3"});
  CHECK(radical_membership(vars, gens, parse_poly("x", vars)));
  CHECK(radical_membership(vars, gens, parse_poly("y", vars)));
  CHECK(radical_membership(vars, gens, parse_poly("x + y", vars)));
  CHECK(radical_membership(vars, gens, parse_poly("x*y + y^2", vars)));
  CHECK_FALSE(radical_membership(vars, gens, parse_poly("z", vars)));
  CHECK_FALSE(radical_membership(vars, gens, parse_poly("x + z", vars)));
  // f = 0 asks whether the ideal is the whole ring.
  CHECK_FALSE(radical_membership(vars, gens, Polynomial::zero(vars)));
  CHECK(radical_membership(vars, parse_all(vars, {"x", "x - 1"}),
                           Polynomial::zero(vars)));
}

TEST_CASE("resource caps raise ResourceLimitError") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x*y - z^2", "x^2 - y*z", "y^3 - x*z^2"});
  GroebnerOptions tight;
  tight.max_degree = 1;
  CHECK_THROWS_AS(groebner_basis(vars, gens, MonomialOrder::grevlex(), tight),
                  ResourceLimitError);
  GroebnerOptions few_pairs;
  few_pairs.max_pairs = 0;
  CHECK_THROWS_AS(
      groebner_basis(vars,
                     parse_all(vars, {"x^2*y - 1", "x*y^2 - x", "y^4 - z"}),
                     MonomialOrder::grevlex(), few_pairs),
      ResourceLimitError);
}

TEST_CASE("block order respects the front block") {
  auto vars = VarSet::make({"t", "x", "y"});
  MonomialOrder block = MonomialOrder::block({0});
  IdealBasis gb = groebner_basis(vars, parse_all(vars, {"x - t^2", "y - t^3"}), block);
  // Any element free of t must already be in the projection.
  bool found_projection = false;
  for (const auto& g : gb.gens)
    if (!g.contains_var(0)) {
      found_projection = true;
      Polynomial cusp = parse_poly("y^2 - x^3", vars);
      CHECK((g == cusp || g == -cusp));
    }
  CHECK(found_projection);
}
