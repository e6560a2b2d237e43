#pragma once

#include <string>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/groebner.hpp"
#include "tjurina/poly_matrix.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

// Jacobian-criterion verdict for the scheme cut out by the given generators.
// The certificate is the Groebner basis of J = gens + (codim x codim) minors
// of the Jacobian: a constant basis certifies smoothness; otherwise points of
// V(J) certify singularities and can be checked against it exactly.
struct SmoothnessReport {
  enum class Verdict { empty, smooth, singular_points, singular_positive_dim };

  Verdict verdict = Verdict::empty;
  int ambient_dim = 0;
  int variety_dim = -1;        // -1 when the variety is empty
  int codim = 0;
  int singular_locus_dim = -1; // -1 when the singular locus is empty
  IdealBasis variety_gb;
  IdealBasis jacobian_gb;

  bool is_smooth() const {
    return verdict == Verdict::smooth || verdict == Verdict::empty;
  }
};

inline const char* to_string(SmoothnessReport::Verdict v) {
  switch (v) {
    case SmoothnessReport::Verdict::empty: return "empty";
    case SmoothnessReport::Verdict::smooth: return "smooth";
    case SmoothnessReport::Verdict::singular_points: return "singular-at-points";
    case SmoothnessReport::Verdict::singular_positive_dim:
      return "singular-locus-positive-dim";
  }
  return "?";
}

inline PolyMatrix jacobian_matrix(const VarSet::Ptr& vars,
                                  const std::vector<Polynomial>& gens) {
  PolyMatrix jac(vars, static_cast<int>(gens.size()), vars->size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < vars->size(); ++j)
      jac.at(static_cast<int>(i), j) = gens[i].derivative(j);
  return jac;
}

inline SmoothnessReport smoothness_report(const VarSet::Ptr& vars,
                                          const std::vector<Polynomial>& gens,
                                          const GroebnerOptions& opts = {}) {
  SmoothnessReport r;
  r.ambient_dim = vars->size();
  r.variety_gb = groebner_basis(vars, gens, MonomialOrder::grevlex(), opts);
  if (is_trivial(r.variety_gb)) {
    r.verdict = SmoothnessReport::Verdict::empty;
    r.variety_dim = -1;
    r.codim = r.ambient_dim + 1;  // nominal
    return r;
  }
  r.variety_dim = ideal_dimension(r.variety_gb, vars);
  r.codim = r.ambient_dim - r.variety_dim;

  // Height <= number of generators, so the codim x codim minors of the
  // Jacobian of the reduced basis always exist (codim 0 gives the empty
  // minor, i.e. the constant 1: affine space is smooth).
  std::vector<Polynomial> j_gens = r.variety_gb.gens;
  PolyMatrix jac = jacobian_matrix(vars, r.variety_gb.gens);
  for (auto& mnr : jac.minors(r.codim)) j_gens.push_back(std::move(mnr));
  r.jacobian_gb = groebner_basis(vars, j_gens, MonomialOrder::grevlex(), opts);
  if (is_trivial(r.jacobian_gb)) {
    r.verdict = SmoothnessReport::Verdict::smooth;
    return r;
  }
  r.singular_locus_dim = ideal_dimension(r.jacobian_gb, vars);
  r.verdict = r.singular_locus_dim == 0
                  ? SmoothnessReport::Verdict::singular_points
                  : SmoothnessReport::Verdict::singular_positive_dim;
  return r;
}

// The point satisfies every generator of the variety's reduced basis.
inline bool on_variety(const SmoothnessReport& r, const std::vector<Rational>& point) {
  for (const auto& g : r.variety_gb.gens)
    if (g.evaluate(point) != 0) return false;
  return true;
}

// The point satisfies every generator of the Jacobian-criterion ideal, i.e.
// it is a verified singular point of the scheme.
inline bool singular_locus_contains(const SmoothnessReport& r,
                                    const std::vector<Rational>& point) {
  if (r.verdict == SmoothnessReport::Verdict::empty ||
      r.verdict == SmoothnessReport::Verdict::smooth)
    return false;
  for (const auto& g : r.jacobian_gb.gens)
    if (g.evaluate(point) != 0) return false;
  return true;
}

// Pointwise verdict used by incidence checks: the point must lie on the
// variety; smooth means it avoids the certified singular locus.
inline bool smooth_at(const SmoothnessReport& r, const std::vector<Rational>& point) {
  if (!on_variety(r, point))
    throw DomainError("smooth_at: point is not on the variety");
  return !singular_locus_contains(r, point);
}

}  // namespace tjurina
