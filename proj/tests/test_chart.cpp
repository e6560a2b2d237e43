#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "tjurina/chart.hpp"
#include "tjurina/detvar.hpp"
#include "tjurina/groebner.hpp"
#include "tjurina/parse.hpp"
#include "tjurina/presentation_io.hpp"

using namespace tjurina;

#ifndef TJURINA_DATA_DIR
#error "TJURINA_DATA_DIR must point at the shipped .dsp files"
#endif

namespace {

DetPresentation load(const std::string& name) {
  return parse_presentation_file(std::string(TJURINA_DATA_DIR) + "/" + name);
}

std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

bool ideals_coincide(const VarSet::Ptr& vars, const std::vector<Polynomial>& a,
                     const std::vector<Polynomial>& b) {
  IdealBasis ga = groebner_basis(vars, a);
  IdealBasis gb = groebner_basis(vars, b);
  return ideal_equal(ga, gb);
}

}  // namespace

TEST_CASE("chart variable names and chart matrix shapes") {
  // One chart row: the j subscript is dropped.
  ChartIndex two;
  two.t = 2;
  two.n = 3;
  two.cols = {2};
  CHECK(chart_var_names(two) == std::vector<std::string>{"a1", "a3"});

  // Two chart rows: block per free column, rows inner.
  ChartIndex three;
  three.t = 3;
  three.n = 4;
  three.cols = {1, 2};
  CHECK(chart_var_names(three) ==
        std::vector<std::string>{"a1_3", "a2_3", "a1_4", "a2_4"});

  // t = 1: the Grassmannian is a point, no chart variables at all.
  ChartIndex one;
  one.t = 1;
  one.n = 5;
  CHECK(chart_var_names(one).empty());
  CHECK(chart_matrix(one).rows() == 0);

  PolyMatrix A = chart_matrix(three);
  REQUIRE(A.rows() == 2);
  REQUIRE(A.cols() == 4);
  CHECK(A.at(0, 0).str() == "1");
  CHECK(A.at(1, 0).str() == "0");
  CHECK(A.at(0, 1).str() == "0");
  CHECK(A.at(1, 1).str() == "1");
  CHECK(A.at(0, 2).str() == "a1_3");
  CHECK(A.at(1, 2).str() == "a2_3");
  CHECK(A.at(0, 3).str() == "a1_4");
  CHECK(A.at(1, 3).str() == "a2_4");
}

TEST_CASE("chart index validation") {
  ChartIndex I;
  I.t = 2;
  I.n = 3;
  I.cols = {};
  CHECK_THROWS_AS(I.validate(), DomainError);  // needs t-1 = 1 column
  I.cols = {1, 2};
  CHECK_THROWS_AS(I.validate(), DomainError);  // too many
  I.cols = {4};
  CHECK_THROWS_AS(I.validate(), DomainError);  // out of range
  I.cols = {0};
  CHECK_THROWS_AS(I.validate(), DomainError);  // 1-based
  I.t = 3;
  I.cols = {2, 2};
  CHECK_THROWS_AS(I.validate(), DomainError);  // strictly ascending
  I.cols = {3, 1};
  CHECK_THROWS_AS(I.validate(), DomainError);

  DetPresentation p = load("ex41.dsp");
  CHECK_THROWS_AS(chart_presentation(p, ChartIndex{3, 3, {1, 2}, ChartSide::row}),
                  DomainError);  // t mismatch with the presentation
}

TEST_CASE("raw chart generators of the 2x3 example in chart {2}") {
  DetPresentation p = load("ex41.dsp");
  ChartPresentation cp = chart_presentation(p, make_chart(p, {2}));

  REQUIRE(cp.ambient_size == 4);
  REQUIRE(cp.vars->size() == 6);
  CHECK(cp.vars->name(4) == "a1");
  CHECK(cp.vars->name(5) == "a3");
  CHECK(cp.chart_var_indices() == std::vector<int>{4, 5});

  // g_{k,i} = f_{k,i} - a_i f_{k,2}, row-major over (k, i).
  std::vector<Polynomial> expected = {
      parse_poly("w^3 - a1*y", cp.vars),
      parse_poly("x - a3*y", cp.vars),
      parse_poly("z - a1*w", cp.vars),
      parse_poly("y^3 - a3*w", cp.vars),
  };
  CHECK(strs(cp.generators) == strs(expected));
}

TEST_CASE("chart generators of the 3x2 transpose example, both charts") {
  DetPresentation q = load("ex42.dsp");

  ChartPresentation c1 = chart_presentation(q, make_chart(q, {1}));
  std::vector<Polynomial> exp1 = {
      parse_poly("z - a2*w^3", c1.vars),
      parse_poly("w - a2*y", c1.vars),
      parse_poly("y^3 - a2*x", c1.vars),
  };
  CHECK(strs(c1.generators) == strs(exp1));

  ChartPresentation c2 = chart_presentation(q, make_chart(q, {2}));
  std::vector<Polynomial> exp2 = {
      parse_poly("w^3 - a1*z", c2.vars),
      parse_poly("y - a1*w", c2.vars),
      parse_poly("x - a1*y^3", c2.vars),
  };
  CHECK(strs(c2.generators) == strs(exp2));
}

TEST_CASE("column-side charts are row charts of the transpose") {
  for (const char* name : {"ex41.dsp", "ex42.dsp", "e7.dsp", "a4.dsp"}) {
    CAPTURE(name);
    DetPresentation p = load(name);
    DetPresentation pt = transpose_presentation(p);
    ChartIndex col = make_chart(p, {1}, ChartSide::column);
    ChartIndex row = make_chart(pt, {1}, ChartSide::row);
    CHECK(col.n == p.m());
    ChartPresentation a = chart_presentation(p, col);
    ChartPresentation b = chart_presentation(pt, row);
    CHECK(strs(a.generators) == strs(b.generators));
  }
}

TEST_CASE("unit-coefficient linear elimination: result and ledger") {
  DetPresentation p = load("e7.dsp");
  ChartPresentation cp = chart_presentation(p, make_chart(p, {1}));
  // Raw chart: {x^2 + z^3 - a2*y, y + a2*x}.
  REQUIRE(cp.generators.size() == 2);

  ChartPresentation red = eliminate_linear(cp);
  REQUIRE(red.generators.size() == 1);
  CHECK(red.generators[0].str() == parse_poly("x^2 + a2^2*x + z^3", red.vars).str());
  REQUIRE(red.ledger.size() == 1);
  CHECK(red.ledger[0].first == red.vars->index_of("y").value());
  CHECK(red.ledger[0].second.str() == parse_poly("y + a2*x", red.vars).str());

  // Eliminated variables must be gone from the surviving generators.
  for (const auto& [v, rel] : red.ledger) {
    (void)rel;
    for (const auto& g : red.generators) CHECK_FALSE(g.contains_var(v));
  }

  // The elimination only rewrites generators: ideal(before) = ideal(after +
  // recorded relations) in the full chart ring.
  std::vector<Polynomial> reassembled = red.generators;
  for (const auto& [v, rel] : red.ledger) {
    (void)v;
    reassembled.push_back(rel);
  }
  CHECK(ideals_coincide(cp.vars, cp.generators, reassembled));
}

TEST_CASE("elimination is sound on the 2x3 example") {
  DetPresentation p = load("ex41.dsp");
  ChartPresentation cp = chart_presentation(p, make_chart(p, {2}));
  ChartPresentation red = eliminate_linear(cp);

  // Ring-order scan removes x (via x - a3*y) and z (via z - a1*w).
  REQUIRE(red.generators.size() == 2);
  CHECK(strs(red.generators) ==
        strs({parse_poly("w^3 - a1*y", red.vars), parse_poly("y^3 - a3*w", red.vars)}));
  REQUIRE(red.ledger.size() == 2);
  CHECK(red.ledger[0].first == red.vars->index_of("x").value());
  CHECK(red.ledger[1].first == red.vars->index_of("z").value());

  std::vector<Polynomial> reassembled = red.generators;
  for (const auto& [v, rel] : red.ledger) {
    (void)v;
    reassembled.push_back(rel);
  }
  CHECK(ideals_coincide(cp.vars, cp.generators, reassembled));
}

TEST_CASE("saturating the eliminated chart recovers the 2x3 minor normal form") {
  DetPresentation p = load("ex41.dsp");
  ChartPresentation cp = chart_presentation(p, make_chart(p, {2}));
  ChartPresentation red = eliminate_linear(cp);

  Polynomial yw = parse_poly("y*w", red.vars);
  std::vector<Polynomial> sat = saturate(red.vars, red.generators, yw);

  // The saturation is the 2-minor ideal of ((w^2, y, a3), (a1, w, y^2)).
  std::vector<Polynomial> expected = {
      parse_poly("w^3 - a1*y", red.vars),
      parse_poly("w^2*y^2 - a1*a3", red.vars),
      parse_poly("y^3 - a3*w", red.vars),
  };
  CHECK(ideals_coincide(red.vars, sat, expected));

  // The extra minor is genuinely new: it is not in the unsaturated ideal.
  IdealBasis before = groebner_basis(red.vars, red.generators);
  CHECK_FALSE(normal_form(parse_poly("w^2*y^2 - a1*a3", red.vars), before).is_zero());
}

TEST_CASE("chart ideal equals the ideal of stacked t-minors") {
  for (const char* name : {"ex41.dsp", "e7.dsp", "a4.dsp"}) {
    CAPTURE(name);
    DetPresentation p = load(name);
    ChartIndex I = make_chart(p, {1});
    ChartPresentation cp = chart_presentation(p, I);
    PolyMatrix S = stacked_matrix(p, I);
    REQUIRE(S.rows() == p.m() + p.t - 1);
    REQUIRE(S.cols() == p.n());
    std::vector<Polynomial> stack_minors = S.minors(p.t);
    CHECK(ideals_coincide(cp.vars, cp.generators, stack_minors));
  }

  // And the wrapper presentation carries the same data.
  DetPresentation p = load("ex41.dsp");
  ChartIndex I = make_chart(p, {2});
  DetPresentation sp = stacked_presentation(p, I);
  CHECK(sp.t == p.t);
  CHECK(sp.m() == p.m() + p.t - 1);
  CHECK(strs(minors_ideal(sp)) == strs(stacked_matrix(p, I).minors(p.t)));
}

TEST_CASE("chart transitions move plane coordinates between charts") {
  ChartIndex I{2, 3, {1}, ChartSide::row};
  ChartIndex J{2, 3, {2}, ChartSide::row};

  // Identity transition.
  std::vector<Rational> a = {Rational(2), Rational(3)};
  CHECK(chart_transition(I, I, a) == a);

  // The plane (1, 2, 3) reads (1/2, 3/2) in chart {2}.
  std::vector<Rational> b = chart_transition(I, J, a);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Rational(1, 2));
  CHECK(b[1] == Rational(3, 2));

  // Round trip returns the original coordinates.
  CHECK(chart_transition(J, I, b) == a);

  // Leaving the overlap: the {2}-block is singular when a2 = 0.
  CHECK_THROWS_AS(chart_transition(I, J, {Rational(0), Rational(5)}), DomainError);

  // Shape errors.
  CHECK_THROWS_AS(chart_transition(I, J, {Rational(1)}), DomainError);
  ChartIndex K{2, 4, {1}, ChartSide::row};
  CHECK_THROWS_AS(chart_transition(I, K, a), DomainError);
  ChartIndex C{2, 3, {1}, ChartSide::column};
  CHECK_THROWS_AS(chart_transition(I, C, a), DomainError);
}

TEST_CASE("chart transition for a 2-plane chart pair") {
  ChartIndex I{3, 4, {1, 2}, ChartSide::row};
  ChartIndex J{3, 4, {3, 4}, ChartSide::row};
  // Row space of ((1,0,1,0),(0,1,0,1)): in chart {3,4} the free-column block
  // is the identity again.
  std::vector<Rational> a = {Rational(1), Rational(0), Rational(0), Rational(1)};
  std::vector<Rational> b = chart_transition(I, J, a);
  CHECK(b == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(1)});
  CHECK(chart_transition(J, I, b) == a);
}

TEST_CASE("published complete-intersection criteria on the 2x3 pair") {
  // (m, n, t, N) = (2, 3, 2, 4) with dim X^1 = 0: the transform of the 2x3
  // presentation is not certified, its transpose is.
  CriterionReport r = lci_criteria(2, 3, 2, 4, 0);
  CHECK(r.dim_x == 2);
  CHECK(r.bound_tjur_N == 0);
  CHECK(r.bound_tjur_t_N == 1);
  CHECK_FALSE(r.tjur_lci_from_N);
  CHECK(r.tjur_t_lci_from_N);
  CHECK_FALSE(r.thm_t3_applicable);
  CHECK(r.prop_t2_applicable);
  CHECK(r.t2_hypothesis);        // min(m,n) = 2 <= dim X - dim X^1 = 2
  CHECK_FALSE(r.tjur_lci_t2);    // n-1 = 2 < 2 fails
  CHECK(r.tjur_t_lci_t2);        // m-1 = 1 < 2 holds
  CHECK_FALSE(r.tjur_certified);
  CHECK(r.tjur_t_certified);

  // Transposing the shape swaps the verdicts.
  CriterionReport s = lci_criteria(3, 2, 2, 4, 0);
  CHECK(s.tjur_certified);
  CHECK_FALSE(s.tjur_t_certified);
}

TEST_CASE("complete-intersection criteria in the square and t=1 cases") {
  // t = 1 certifies both transforms trivially.
  CriterionReport one = lci_criteria(2, 2, 1, 3, -1);
  CHECK(one.tjur_certified);
  CHECK(one.tjur_t_certified);

  // Square t = 3 case: the t >= 3 theorem applies on both sides even when
  // the N-bound does not.
  CriterionReport cube = lci_criteria(3, 3, 3, 9, 6);
  CHECK(cube.thm_t3_applicable);
  CHECK(cube.tjur_lci_t3);    // n-1 = 2 < m(t-2) = 3
  CHECK(cube.tjur_t_lci_t3);  // m-1 = 2 < n(t-2) = 3
  CHECK_FALSE(cube.tjur_lci_from_N);  // bound 9 - 3 = 6 is not > 6
  CHECK(cube.tjur_certified);
  CHECK(cube.tjur_t_certified);

  // The hypersurface shape (2,2,2) in N=3 with an isolated singular point:
  // dim X - dim X^1 = 2, so both t=2 side conditions hold.
  CriterionReport hyp = lci_criteria(2, 2, 2, 3, 0);
  CHECK(hyp.dim_x == 2);
  CHECK(hyp.t2_hypothesis);
  CHECK(hyp.tjur_certified);
  CHECK(hyp.tjur_t_certified);
}

TEST_CASE("t = 1 transform is the variety itself") {
  VarSet::Ptr ring = VarSet::make({"x", "y", "z"});
  PolyMatrix F(ring, 2, 2);
  F.at(0, 0) = parse_poly("x", ring);
  F.at(0, 1) = parse_poly("y", ring);
  F.at(1, 0) = parse_poly("z", ring);
  F.at(1, 1) = parse_poly("x", ring);
  DetPresentation p{ring, F, 1, "t=1 sample"};
  CHECK(tjur_identity_t1(p));

  DetPresentation e7 = load("e7.dsp");
  CHECK_THROWS_AS(tjur_identity_t1(e7), DomainError);
}

TEST_CASE("chart generators vanish exactly where the stack drops rank") {
  // Pointwise cross-check on a grid of rational points: substituting any
  // (ambient, chart) point into the generators gives zero iff every stacked
  // t-minor is zero there.
  DetPresentation p = load("a4.dsp");
  ChartIndex I = make_chart(p, {1});
  ChartPresentation cp = chart_presentation(p, I);
  std::vector<Polynomial> stack_minors = stacked_matrix(p, I).minors(p.t);

  std::vector<Rational> vals = {Rational(-1), Rational(0), Rational(1), Rational(2)};
  int agree = 0;
  for (const Rational& x : vals)
    for (const Rational& y : vals)
      for (const Rational& z : vals)
        for (const Rational& a : vals) {
          std::vector<Rational> pt = {x, y, z, a};
          bool gens_zero = true;
          for (const auto& g : cp.generators)
            if (g.evaluate(pt) != 0) gens_zero = false;
          bool minors_zero = true;
          for (const auto& m : stack_minors)
            if (m.evaluate(pt) != 0) minors_zero = false;
          if (gens_zero == minors_zero) ++agree;
        }
  CHECK(agree == 4 * 4 * 4 * 4);
}
