#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/groebner.hpp"
#include "tjurina/poly_matrix.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

// A determinantal presentation (F, t): the variety X = F^{-1}(M_t) cut out by
// the t x t minors of the m x n polynomial matrix F.
struct DetPresentation {
  VarSet::Ptr vars;
  PolyMatrix F;
  int t = 1;
  std::string label;

  int m() const { return F.rows(); }
  int n() const { return F.cols(); }
};

inline std::vector<Polynomial> minors_ideal(const DetPresentation& p) {
  if (p.t < 1 || p.t > p.m() + 1 || p.t > p.n() + 1)
    throw DomainError("minors_ideal: minor size out of range");
  return p.F.minors(p.t);
}

// Expected codimension of the generic rank < t locus in type (m, n, t).
inline int expected_codim(int m, int n, int t) {
  return (m - t + 1) * (n - t + 1);
}

struct DetCheck {
  int ambient_dim = 0;
  int variety_dim = 0;
  int codim = 0;
  int expected = 0;
  bool is_determinantal = false;
};

// X is determinantal of its declared type iff the minors cut a variety of
// exactly the generic codimension.
inline DetCheck check_determinantal(const DetPresentation& p,
                                    const GroebnerOptions& opts = {}) {
  DetCheck c;
  c.ambient_dim = p.vars->size();
  c.variety_dim = vanishing_dimension(p.vars, minors_ideal(p), opts);
  c.codim = c.ambient_dim - c.variety_dim;
  c.expected = expected_codim(p.m(), p.n(), p.t);
  c.is_determinantal = c.variety_dim >= 0 && c.codim == c.expected;
  return c;
}

// Stratum index s with point ∈ X^s, i.e. rank F(point) = s - 1.  The point
// must lie on X (rank below t).
inline int stratum_at(const DetPresentation& p, const std::vector<Rational>& point) {
  int rank = p.F.rank_at(point);
  if (rank > p.t - 1)
    throw DomainError("stratum_at: rank " + std::to_string(rank) +
                      " at the point, so it is not on the variety");
  return rank + 1;
}

// Same variety, transposed matrix: the t-minors of F^T equal those of F.
inline DetPresentation transpose_presentation(const DetPresentation& p) {
  return {p.vars, p.F.transposed(), p.t,
          p.label.empty() ? std::string() : p.label + "^T"};
}

// Dimensions of the rank strata closures and the transform comparisons they
// decide.  V(s-minors) is the closure of the rank < s locus; the bounds are
// monotone in s, so testing closures against them is equivalent to testing
// the locally closed strata themselves.
struct StrataReport {
  int m = 0, n = 0, t = 0;
  int ambient_dim = 0;
  std::vector<int> closure_dims;     // dim V(s-minors), s = 1..t
  std::vector<int> tjur_bounds;      // N - (m-s+1)(n-t+1), s = 1..t
  std::vector<int> tjur_t_bounds;    // N - (m-t+1)(n-s+1), s = 1..t
  bool tilde_is_determinantal = false;
  bool tilde_equals_tjur = false;
  bool tilde_equals_tjur_transpose = false;
};

inline StrataReport strata_report(const DetPresentation& p,
                                  const GroebnerOptions& opts = {}) {
  StrataReport r;
  r.m = p.m();
  r.n = p.n();
  r.t = p.t;
  r.ambient_dim = p.vars->size();
  const int N = r.ambient_dim;
  for (int s = 1; s <= p.t; ++s) {
    r.closure_dims.push_back(vanishing_dimension(p.vars, p.F.minors(s), opts));
    r.tjur_bounds.push_back(N - (r.m - s + 1) * (r.n - r.t + 1));
    r.tjur_t_bounds.push_back(N - (r.m - r.t + 1) * (r.n - s + 1));
  }
  r.tilde_is_determinantal = true;
  r.tilde_equals_tjur = true;
  r.tilde_equals_tjur_transpose = true;
  for (int s = 1; s <= p.t; ++s) {
    std::size_t k = static_cast<std::size_t>(s - 1);
    if (r.closure_dims[k] > r.tjur_bounds[k]) r.tilde_is_determinantal = false;
    if (s < p.t) {
      if (!(r.closure_dims[k] < r.tjur_bounds[k])) r.tilde_equals_tjur = false;
      if (!(r.closure_dims[k] < r.tjur_t_bounds[k]))
        r.tilde_equals_tjur_transpose = false;
    }
  }
  return r;
}

// One splitting step of the reduction at the origin: a pivot entry invertible
// at 0 clears its row and column, which are then deleted and t drops by one.
// Pivots must divide exactly so the arithmetic stays polynomial; otherwise we
// refuse with the offending entry named.
struct ReduceResult {
  DetPresentation pres;
  int steps = 0;
};

inline ReduceResult reduce_presentation_steps(const DetPresentation& p) {
  PolyMatrix F = p.F;
  int t = p.t;
  int steps = 0;
  while (true) {
    int pi = -1, pj = -1;
    // Preferred pivot: a nonzero constant entry, row-major first hit.
    for (int i = 0; i < F.rows() && pi < 0; ++i)
      for (int j = 0; j < F.cols(); ++j) {
        const Polynomial& e = F.at(i, j);
        if (e.is_constant() && !e.is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    bool pure_constant = pi >= 0;
    if (pi < 0) {
      // Fallback: any entry invertible at the origin.
      for (int i = 0; i < F.rows() && pi < 0; ++i)
        for (int j = 0; j < F.cols(); ++j)
          if (F.at(i, j).constant_term() != 0) {
            pi = i;
            pj = j;
            break;
          }
    }
    if (pi < 0) break;  // nothing invertible at 0 remains

    const Polynomial pivot = F.at(pi, pj);
    auto quotient = [&](const Polynomial& e, int i, int j) {
      if (pure_constant) return e * (Rational(1) / pivot.constant_term());
      Polynomial q = Polynomial::zero(p.vars);
      if (!try_exact_divide(e, pivot, q))
        throw DomainError("reduce_presentation: entry (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") = " + e.str() +
                          " is not divisible by the pivot " + pivot.str() +
                          "; the reduction is not polynomial");
      return q;
    };

    // Row operations clear column pj (row pi is untouched).
    for (int i = 0; i < F.rows(); ++i) {
      if (i == pi || F.at(i, pj).is_zero()) continue;
      Polynomial q = quotient(F.at(i, pj), i, pj);
      for (int j = 0; j < F.cols(); ++j)
        F.at(i, j) = F.at(i, j) - q * F.at(pi, j);
    }
    // Column operations would now clear row pi without touching other rows,
    // so deleting row pi and column pj finishes the step.
    PolyMatrix next(p.vars, F.rows() - 1, F.cols() - 1);
    for (int i = 0, ii = 0; i < F.rows(); ++i) {
      if (i == pi) continue;
      for (int j = 0, jj = 0; j < F.cols(); ++j) {
        if (j == pj) continue;
        next.at(ii, jj) = F.at(i, j);
        ++jj;
      }
      ++ii;
    }
    F = next;
    --t;
    ++steps;
    if (t < 1) break;
  }
  return {{p.vars, F, t, p.label}, steps};
}

inline DetPresentation reduce_presentation(const DetPresentation& p) {
  std::vector<Rational> origin(static_cast<std::size_t>(p.vars->size()), Rational(0));
  if (p.F.rank_at(origin) == 0)
    throw DomainError("reduce_presentation: rank at the origin is 0, nothing to reduce");
  return reduce_presentation_steps(p).pres;
}

// Dimension of the generic determinantal variety M_t inside m x n matrix
// space, computed from scratch with Groebner bases.
inline int generic_determinantal_dimension(int m, int n, int t,
                                           const GroebnerOptions& opts = {}) {
  PolyMatrix g = PolyMatrix::generic(m, n);
  return vanishing_dimension(g.vars(), g.minors(t), opts);
}

}  // namespace tjurina
