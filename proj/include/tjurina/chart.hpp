#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/detvar.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/poly_matrix.hpp"
#include "tjurina/polynomial.hpp"
#include "tjurina/qlinalg.hpp"

namespace tjurina {

// Which Grassmannian the chart lives on: row-space charts compute the Tjurina
// transform, column-space charts the transpose transform (the same machinery
// applied to F^T).
enum class ChartSide { row, column };

// An affine chart of Gr(t-1, n): a sorted subset I of {1..n} with |I| = t-1
// marking the unit columns of the chart matrix A_I.  For column-side charts n
// is the row count m of the presentation.
struct ChartIndex {
  int t = 1;
  int n = 1;
  std::vector<int> cols;  // 1-based, strictly ascending
  ChartSide side = ChartSide::row;

  void validate() const {
    if (t < 1 || n < 1) throw DomainError("ChartIndex: t and n must be positive");
    if (static_cast<int>(cols.size()) != t - 1)
      throw DomainError("ChartIndex: need exactly t-1 column indices");
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] < 1 || cols[k] > n)
        throw DomainError("ChartIndex: column index out of range");
      if (k > 0 && cols[k] <= cols[k - 1])
        throw DomainError("ChartIndex: columns must be strictly ascending");
    }
  }

  bool contains(int col) const {
    return std::binary_search(cols.begin(), cols.end(), col);
  }

  // The columns i not in I, ascending: one block of chart variables each.
  std::vector<int> free_cols() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }
};

inline ChartIndex make_chart(const DetPresentation& p, std::vector<int> cols,
                             ChartSide side = ChartSide::row) {
  ChartIndex ci;
  ci.t = p.t;
  ci.n = side == ChartSide::row ? p.n() : p.m();
  ci.cols = std::move(cols);
  ci.side = side;
  ci.validate();
  return ci;
}

// Chart variable names a_{j,i} (row j of A_I, column i not in I), flattened
// column-major over i.  With a single chart row the j subscript is dropped,
// matching displays like (a1, 1, a3).
inline std::vector<std::string> chart_var_names(const ChartIndex& I) {
  I.validate();
  std::vector<std::string> names;
  for (int i : I.free_cols())
    for (int j = 1; j <= I.t - 1; ++j)
      names.push_back(I.t == 2 ? "a" + std::to_string(i)
                               : "a" + std::to_string(j) + "_" + std::to_string(i));
  return names;
}

namespace detail {

// A_I over `ring`, where the flattened chart variables start at var index
// `offset` and follow the chart_var_names order.
inline PolyMatrix chart_matrix_in(const VarSet::Ptr& ring, const ChartIndex& I,
                                  int offset) {
  PolyMatrix A(ring, I.t - 1, I.n);
  std::vector<int> free = I.free_cols();
  for (int j = 1; j <= I.t - 1; ++j) {
    for (std::size_t l = 0; l < I.cols.size(); ++l)
      A.at(j - 1, I.cols[l] - 1) = Polynomial::constant(
          ring, static_cast<int>(l) + 1 == j ? Rational(1) : Rational(0));
    for (std::size_t b = 0; b < free.size(); ++b)
      A.at(j - 1, free[b] - 1) = Polynomial::variable(
          ring, offset + static_cast<int>(b) * (I.t - 1) + (j - 1));
  }
  return A;
}

// The presentation the chart actually acts on: F itself for row-space charts,
// F^T for column-space charts.
inline DetPresentation effective_presentation(const DetPresentation& p,
                                              const ChartIndex& I) {
  DetPresentation eff = I.side == ChartSide::row ? p : transpose_presentation(p);
  if (I.t != p.t || I.n != eff.n())
    throw DomainError("ChartIndex does not match the presentation");
  return eff;
}

}  // namespace detail

// The chart matrix in its own ring of chart variables (empty ring for t = 1).
inline PolyMatrix chart_matrix(const ChartIndex& I) {
  I.validate();
  return detail::chart_matrix_in(VarSet::make(chart_var_names(I)), I, 0);
}

// The (m + t - 1) x n stack with A_I on top of F, over ambient + chart
// variables.  The chart locus of the transform is where its t-minors vanish.
inline PolyMatrix stacked_matrix(const DetPresentation& p, const ChartIndex& I) {
  DetPresentation eff = detail::effective_presentation(p, I);
  VarSet::Ptr ring = p.vars->extended(chart_var_names(I));
  int offset = p.vars->size();
  PolyMatrix A = detail::chart_matrix_in(ring, I, offset);
  PolyMatrix S(ring, I.t - 1 + eff.m(), I.n);
  for (int i = 0; i < I.t - 1; ++i)
    for (int j = 0; j < I.n; ++j) S.at(i, j) = A.at(i, j);
  for (int i = 0; i < eff.m(); ++i)
    for (int j = 0; j < I.n; ++j)
      S.at(I.t - 1 + i, j) = eff.F.at(i, j).lifted(ring);
  return S;
}

// Stacked matrix as a presentation with the same t, for the reduction
// cross-check path.
inline DetPresentation stacked_presentation(const DetPresentation& p,
                                            const ChartIndex& I) {
  PolyMatrix S = stacked_matrix(p, I);
  return {S.vars(), S, p.t, p.label.empty() ? std::string() : p.label + " stacked"};
}

// The chart of the transform, generated by the closed formula
//   g_{k,i} = f_{k,i} - sum_j a_{j,i} f_{k,i_j},   i not in I,
// listed row-major (k outer, i inner ascending).
struct ChartPresentation {
  DetPresentation source;
  ChartIndex chart;
  VarSet::Ptr vars;                 // ambient followed by chart variables
  int ambient_size = 0;             // chart variables start at this index
  std::vector<Polynomial> generators;
  std::vector<std::pair<int, Polynomial>> ledger;  // (var, v - h) eliminations

  std::vector<int> chart_var_indices() const {
    std::vector<int> out;
    for (int v = ambient_size; v < vars->size(); ++v) out.push_back(v);
    return out;
  }
};

inline ChartPresentation chart_presentation(const DetPresentation& p,
                                            const ChartIndex& I) {
  DetPresentation eff = detail::effective_presentation(p, I);
  ChartPresentation cp;
  cp.source = p;
  cp.chart = I;
  cp.vars = p.vars->extended(chart_var_names(I));
  cp.ambient_size = p.vars->size();
  std::vector<int> free = I.free_cols();
  for (int k = 0; k < eff.m(); ++k)
    for (std::size_t b = 0; b < free.size(); ++b) {
      Polynomial g = eff.F.at(k, free[b] - 1).lifted(cp.vars);
      for (int j = 1; j <= I.t - 1; ++j) {
        Polynomial a = Polynomial::variable(
            cp.vars, cp.ambient_size + static_cast<int>(b) * (I.t - 1) + (j - 1));
        g = g - a * eff.F.at(k, I.cols[static_cast<std::size_t>(j - 1)] - 1)
                        .lifted(cp.vars);
      }
      cp.generators.push_back(g);
    }
  return cp;
}

// Coordinates of the same (t-1)-plane in chart J, given its chart-I
// coordinates: invert the J-column block of A_I(a) and normalize.  Fails when
// the block is singular, i.e. the point is outside the overlap.
inline std::vector<Rational> chart_transition(const ChartIndex& I, const ChartIndex& J,
                                              const std::vector<Rational>& a_point) {
  I.validate();
  J.validate();
  if (I.t != J.t || I.n != J.n || I.side != J.side)
    throw DomainError("chart_transition: charts live on different Grassmannians");
  std::vector<int> free = I.free_cols();
  if (a_point.size() != free.size() * static_cast<std::size_t>(I.t - 1))
    throw DomainError("chart_transition: wrong number of chart coordinates");

  QMatrix A(I.t - 1, I.n);
  for (std::size_t l = 0; l < I.cols.size(); ++l)
    A.at(static_cast<int>(l), I.cols[l] - 1) = 1;
  for (std::size_t b = 0; b < free.size(); ++b)
    for (int j = 0; j < I.t - 1; ++j)
      A.at(j, free[b] - 1) = a_point[b * static_cast<std::size_t>(I.t - 1) +
                                     static_cast<std::size_t>(j)];

  QMatrix S(I.t - 1, I.t - 1);
  for (std::size_t c = 0; c < J.cols.size(); ++c)
    for (int j = 0; j < I.t - 1; ++j) S.at(j, static_cast<int>(c)) = A.at(j, J.cols[c] - 1);
  QMatrix B = [&]() {
    try {
      return S.inverse() * A;
    } catch (const DomainError&) {
      throw DomainError("chart_transition: point is not in the chart overlap "
                        "(singular J-block)");
    }
  }();

  std::vector<Rational> out;
  for (int i : J.free_cols())
    for (int j = 0; j < J.t - 1; ++j) out.push_back(B.at(j, i - 1));
  return out;
}

// Repeatedly removes generators of the form c·v + (terms without v) with c a
// nonzero rational constant, substituting v = h into the remaining generators
// and appending (v, v - h) to the ledger.  Scan order is variable index
// (ambient variables first, then chart variables), then generator position;
// each substitution restarts the scan, so the result is deterministic.
inline ChartPresentation eliminate_linear(const ChartPresentation& cp) {
  ChartPresentation out = cp;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < out.vars->size() && !changed; ++v) {
      for (std::size_t g = 0; g < out.generators.size(); ++g) {
        const Polynomial& gen = out.generators[g];
        Rational coeff(0);
        int v_terms = 0;
        bool linear = false;
        for (const auto& [mon, c] : gen.terms()) {
          if (!mon.contains_var(v)) continue;
          ++v_terms;
          if (mon == Monomial::var(v)) {
            linear = true;
            coeff = c;
          }
        }
        if (v_terms != 1 || !linear || coeff == 0) continue;
        // gen/coeff = v - h with v absent from h.
        Polynomial relation = gen * (Rational(1) / coeff);
        Polynomial h = Polynomial::variable(out.vars, v) - relation;
        out.generators.erase(out.generators.begin() +
                             static_cast<std::ptrdiff_t>(g));
        for (auto& other : out.generators) other = other.substitute(v, h);
        out.ledger.emplace_back(v, relation);
        changed = true;
        break;
      }
    }
  }
  return out;
}

// Prop. 4.4 criterion: the chart transform equals the honest Tjurina
// transform iff dim closure(X^s) < N - (m-s+1)(n-t+1) for every s < t.
inline bool tjur_equals_tilde(const DetPresentation& p, const StrataReport& strata) {
  if (strata.m != p.m() || strata.n != p.n() || strata.t != p.t)
    throw DomainError("tjur_equals_tilde: strata report is for another presentation");
  return strata.tilde_equals_tjur;
}

// The published complete-intersection criteria, evaluated verbatim from
// (m, n, t, N) and dim X^1.  dim X is the expected N - (m-t+1)(n-t+1); the
// EIDS hypotheses (and X^2 nonempty for t >= 3) are asserted by the caller.
struct CriterionReport {
  int m = 0, n = 0, t = 0, N = 0;
  int dim_x1 = 0;
  int dim_x = 0;
  // Prop. "depending on N": bounds N - m(n-t+1) and N - n(m-t+1).
  int bound_tjur_N = 0;
  int bound_tjur_t_N = 0;
  bool tjur_lci_from_N = false;
  bool tjur_t_lci_from_N = false;
  // Theorem for t >= 3: n-1 < m(t-2) resp. m-1 < n(t-2).
  bool thm_t3_applicable = false;
  bool tjur_lci_t3 = false;
  bool tjur_t_lci_t3 = false;
  // Proposition for t = 2: side inequalities against dim X - dim X^1.
  bool prop_t2_applicable = false;
  bool t2_hypothesis = false;  // min(m,n) <= dim X - dim X^1
  bool tjur_lci_t2 = false;
  bool tjur_t_lci_t2 = false;
  // Conjunction per transform (t = 1 certifies both trivially).
  bool tjur_certified = false;
  bool tjur_t_certified = false;
};

inline CriterionReport lci_criteria(int m, int n, int t, int N, int dim_x1) {
  CriterionReport r;
  r.m = m;
  r.n = n;
  r.t = t;
  r.N = N;
  r.dim_x1 = dim_x1;
  r.dim_x = N - expected_codim(m, n, t);
  r.bound_tjur_N = N - m * (n - t + 1);
  r.bound_tjur_t_N = N - n * (m - t + 1);
  r.tjur_lci_from_N = r.bound_tjur_N > dim_x1;
  r.tjur_t_lci_from_N = r.bound_tjur_t_N > dim_x1;
  r.thm_t3_applicable = t >= 3;
  if (r.thm_t3_applicable) {
    r.tjur_lci_t3 = n - 1 < m * (t - 2);
    r.tjur_t_lci_t3 = m - 1 < n * (t - 2);
  }
  r.prop_t2_applicable = t == 2;
  if (r.prop_t2_applicable) {
    r.t2_hypothesis = std::min(m, n) <= r.dim_x - dim_x1;
    r.tjur_lci_t2 = n - 1 < r.dim_x - dim_x1;
    r.tjur_t_lci_t2 = m - 1 < r.dim_x - dim_x1;
  }
  r.tjur_certified = t == 1 || r.tjur_lci_from_N ||
                     (r.thm_t3_applicable && r.tjur_lci_t3) ||
                     (r.prop_t2_applicable && r.tjur_lci_t2);
  r.tjur_t_certified = t == 1 || r.tjur_t_lci_from_N ||
                       (r.thm_t3_applicable && r.tjur_t_lci_t3) ||
                       (r.prop_t2_applicable && r.tjur_t_lci_t2);
  return r;
}

// For t = 1 the Grassmannian is a point and the transform is X itself: the
// chart generators must be exactly the entries of F, row-major.
inline bool tjur_identity_t1(const DetPresentation& p) {
  if (p.t != 1) throw DomainError("tjur_identity_t1: presentation has t != 1");
  ChartPresentation cp = chart_presentation(p, make_chart(p, {}));
  std::size_t g = 0;
  for (int i = 0; i < p.m(); ++i)
    for (int j = 0; j < p.n(); ++j) {
      if (g >= cp.generators.size()) return false;
      if (!(cp.generators[g] == p.F.at(i, j).lifted(cp.vars))) return false;
      ++g;
    }
  return g == cp.generators.size();
}

}  // namespace tjurina
