#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "tjurina/chart.hpp"
#include "tjurina/parse.hpp"
#include "tjurina/presentation_io.hpp"
#include "tjurina/smooth.hpp"

using namespace tjurina;

#ifndef TJURINA_DATA_DIR
#error "TJURINA_DATA_DIR must point at the shipped .dsp files"
#endif

namespace {

SmoothnessReport report_of(const std::vector<std::string>& names,
                           const std::vector<std::string>& gens) {
  VarSet::Ptr ring = VarSet::make(names);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, ring));
  return smoothness_report(ring, ps);
}

}  // namespace

TEST_CASE("jacobian matrix entries are the partial derivatives") {
  VarSet::Ptr ring = VarSet::make({"x", "y"});
  std::vector<Polynomial> gens = {parse_poly("x^2*y + y^3", ring),
                                  parse_poly("x - 2*y", ring)};
  PolyMatrix j = jacobian_matrix(ring, gens);
  REQUIRE(j.rows() == 2);
  REQUIRE(j.cols() == 2);
  CHECK(j.at(0, 0).str() == parse_poly("2*x*y", ring).str());
  CHECK(j.at(0, 1).str() == parse_poly("x^2 + 3*y^2", ring).str());
  CHECK(j.at(1, 0).str() == "1");
  CHECK(j.at(1, 1).str() == "-2");
}

TEST_CASE("hypersurfaces with known smooth/singular structure") {
  // A hyperplane is smooth of codimension 1.
  SmoothnessReport plane = report_of({"x", "y", "z"}, {"x"});
  CHECK(plane.verdict == SmoothnessReport::Verdict::smooth);
  CHECK(plane.is_smooth());
  CHECK(plane.variety_dim == 2);
  CHECK(plane.codim == 1);

  // The resolved chart surface x + y + v^2*x*y is smooth everywhere.
  SmoothnessReport resolved = report_of({"y", "x", "v"}, {"x + y + v^2*x*y"});
  CHECK(resolved.verdict == SmoothnessReport::Verdict::smooth);

  // x^2 + z^3 + w^2*x is singular exactly at the origin.
  SmoothnessReport cone = report_of({"x", "z", "w"}, {"x^2 + z^3 + w^2*x"});
  CHECK(cone.verdict == SmoothnessReport::Verdict::singular_points);
  CHECK_FALSE(cone.is_smooth());
  CHECK(cone.variety_dim == 2);
  CHECK(cone.singular_locus_dim == 0);
  CHECK(singular_locus_contains(cone, {Rational(0), Rational(0), Rational(0)}));
  // (-1, -1, 0) satisfies x^2 + z^3 = 1 - 1 = 0 and is a smooth point.
  CHECK(on_variety(cone, {Rational(1), Rational(1), Rational(1)}) == false);
  CHECK(smooth_at(cone, {Rational(-1), Rational(-1), Rational(0)}));
  CHECK_FALSE(smooth_at(cone, {Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("empty and full schemes") {
  SmoothnessReport empty = report_of({"x", "y"}, {"x", "x - 1"});
  CHECK(empty.verdict == SmoothnessReport::Verdict::empty);
  CHECK(empty.is_smooth());
  CHECK(empty.variety_dim == -1);
  CHECK_FALSE(singular_locus_contains(empty, {Rational(0), Rational(0)}));

  // No generators: affine space, smooth of full dimension.
  SmoothnessReport space = report_of({"x", "y", "z"}, {});
  CHECK(space.verdict == SmoothnessReport::Verdict::smooth);
  CHECK(space.variety_dim == 3);
  CHECK(space.codim == 0);
}

TEST_CASE("positive-dimensional singular locus of the nonnormal chart") {
  DetPresentation p =
      parse_presentation_file(std::string(TJURINA_DATA_DIR) + "/nonnormal.dsp");
  ChartPresentation red = eliminate_linear(chart_presentation(p, make_chart(p, {1})));
  REQUIRE(red.generators.size() == 1);

  SmoothnessReport r = smoothness_report(red.vars, red.generators);
  CHECK(r.verdict == SmoothnessReport::Verdict::singular_positive_dim);
  CHECK(r.singular_locus_dim >= 1);
  // The whole a2-axis (x = y = 0) is singular.
  for (int a = -2; a <= 2; ++a) {
    CAPTURE(a);
    CHECK(singular_locus_contains(
        r, {Rational(0), Rational(0), Rational(0), Rational(a)}));
  }
}

TEST_CASE("a curve singularity and its smooth points") {
  // Cusp y^2 = x^3 in the plane.
  SmoothnessReport cusp = report_of({"x", "y"}, {"y^2 - x^3"});
  CHECK(cusp.verdict == SmoothnessReport::Verdict::singular_points);
  CHECK(cusp.variety_dim == 1);
  CHECK(on_variety(cusp, {Rational(1), Rational(1)}));
  CHECK(smooth_at(cusp, {Rational(1), Rational(1)}));
  CHECK(smooth_at(cusp, {Rational(4), Rational(8)}));
  CHECK_FALSE(smooth_at(cusp, {Rational(0), Rational(0)}));

  // Asking about an off-variety point is an error, not a verdict.
  CHECK_THROWS_AS(smooth_at(cusp, {Rational(1), Rational(2)}), DomainError);
}

TEST_CASE("codimension-2 smooth complete intersection") {
  // The twisted-cubic style intersection x = y^2, z = y^3 is a smooth curve.
  SmoothnessReport curve = report_of({"x", "y", "z"}, {"x - y^2", "z - y^3"});
  CHECK(curve.verdict == SmoothnessReport::Verdict::smooth);
  CHECK(curve.variety_dim == 1);
  CHECK(curve.codim == 2);

  // Two crossing lines in the plane: singular exactly at the crossing.
  SmoothnessReport cross = report_of({"x", "y"}, {"x*y"});
  CHECK(cross.verdict == SmoothnessReport::Verdict::singular_points);
  CHECK(smooth_at(cross, {Rational(0), Rational(5)}));
  CHECK_FALSE(smooth_at(cross, {Rational(0), Rational(0)}));
}

TEST_CASE("non-reduced input is handled through the reduced basis") {
  // The doubled line x^2 = 0: the reduced Groebner basis is {x^2}; the
  // Jacobian criterion sees the scheme, whose singular locus is the line.
  SmoothnessReport dbl = report_of({"x", "y"}, {"x^2"});
  CHECK_FALSE(dbl.is_smooth());
  CHECK(dbl.verdict == SmoothnessReport::Verdict::singular_positive_dim);
  CHECK(dbl.variety_dim == 1);
}
