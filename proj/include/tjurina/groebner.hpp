#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/monomial.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

// Resource budget for Buchberger's algorithm.  The engine never returns a
// truncated basis: when a budget is exhausted it throws ResourceLimitError,
// so a wrong answer can never be produced silently.
struct GroebnerOptions {
  std::size_t max_pairs = 50000;  // S-pairs popped from the queue
  int max_degree = 40;            // total degree of any intermediate lead term
};

// A generating set of an ideal together with the term order it refers to.
// `is_groebner` is set by groebner_basis(); the reduced basis it returns is
// the unique reduced Groebner basis of the ideal for that order, sorted by
// increasing leading monomial, every element monic.
struct IdealBasis {
  VarSet::Ptr vars;
  std::vector<Polynomial> gens;
  MonomialOrder order = MonomialOrder::grevlex();
  bool is_groebner = false;
};

namespace detail {

// Term list sorted in *descending* active order.  Multiplication by a single
// term preserves the sort (term orders are multiplicative), which keeps every
// reduction step a linear merge.
struct OPoly {
  std::vector<Polynomial::Term> t;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Rational& lc() const { return t.front().second; }
};

inline OPoly make_opoly(const Polynomial& p, const MonomialOrder& ord) {
  OPoly o;
  o.t = p.terms();
  std::stable_sort(o.t.begin(), o.t.end(),
                   [&](const Polynomial::Term& a, const Polynomial::Term& b) {
                     return ord.compare(a.first, b.first) > 0;
                   });
  return o;
}

inline Polynomial to_polynomial(const OPoly& o, const VarSet::Ptr& vars) {
  return Polynomial::from_terms(vars, o.t);
}

inline OPoly mul_term(const OPoly& p, const Monomial& m, const Rational& c) {
  OPoly r;
  r.t.reserve(p.t.size());
  for (const auto& [mm, cc] : p.t) r.t.push_back({mm * m, cc * c});
  return r;
}

inline OPoly sub(const OPoly& a, const OPoly& b, const MonomialOrder& ord) {
  OPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = ord.compare(a.t[i].first, b.t[j].first);
    if (c == 0) {
      Rational s = a.t[i].second - b.t[j].second;
      if (s != 0) r.t.push_back({a.t[i].first, std::move(s)});
      ++i, ++j;
    } else if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else {
      r.t.push_back({b.t[j].first, -b.t[j].second});
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back({b.t[j].first, -b.t[j].second});
  return r;
}

// Full normal form: every term of the result is reducible by no basis lead.
// Divisor choice is by basis index, so the computation is deterministic.
inline OPoly normal_form_opoly(OPoly work, const std::vector<OPoly>& basis,
                               const MonomialOrder& ord) {
  OPoly rem;
  while (!work.zero()) {
    const Monomial& lm = work.lm();
    const OPoly* red = nullptr;
    for (const auto& g : basis) {
      if (!g.zero() && g.lm().divides(lm)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Monomial q = red->lm().divide_into(lm);
      work = sub(work, mul_term(*red, q, work.lc() / red->lc()), ord);
    } else {
      rem.t.push_back(work.t.front());
      work.t.erase(work.t.begin());
    }
  }
  return rem;
}

inline OPoly make_monic(OPoly p) {
  if (p.zero()) return p;
  Rational c = p.lc();
  if (c != 1)
    for (auto& [m, cc] : p.t) cc /= c;
  return p;
}

}  // namespace detail

// Remainder of p on full division by basis.gens in basis.order.  When the
// basis is a Groebner basis this is the unique normal form, so p belongs to
// the ideal iff the result is zero.
inline Polynomial normal_form(const Polynomial& p, const IdealBasis& basis) {
  if (!same_vars(p.vars(), basis.vars))
    throw DomainError("normal_form: polynomial is not in the basis ring");
  std::vector<detail::OPoly> b;
  b.reserve(basis.gens.size());
  for (const auto& g : basis.gens)
    if (!g.is_zero()) b.push_back(detail::make_opoly(g, basis.order));
  return detail::to_polynomial(
      detail::normal_form_opoly(detail::make_opoly(p, basis.order), b, basis.order),
      p.vars());
}

// Buchberger's algorithm with the product criterion and the chain criterion,
// normal selection (smallest pair lcm first), full inter-reduction at the
// end.  Output: the reduced Groebner basis, unique for (ideal, order).
inline IdealBasis groebner_basis(const VarSet::Ptr& vars,
                                 const std::vector<Polynomial>& gens,
                                 MonomialOrder order = MonomialOrder::grevlex(),
                                 const GroebnerOptions& opts = {}) {
  using detail::OPoly;
  for (const auto& g : gens)
    if (!same_vars(g.vars(), vars))
      throw DomainError("groebner_basis: generator is not in the given ring");

  std::vector<OPoly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(detail::make_monic(detail::make_opoly(g, order)));

  struct PairKey {
    Monomial lcm;
    int i, j;
  };
  auto key_less = [&order](const PairKey& a, const PairKey& b) {
    if (int c = order.compare(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<int, int>> treated;

  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i)
      queue.insert({Monomial::lcm(G[static_cast<std::size_t>(i)].lm(),
                                  G[static_cast<std::size_t>(t)].lm()),
                    i, t});
  };
  for (int t = 1; t < static_cast<int>(G.size()); ++t) push_pairs_for(t);

  std::size_t popped = 0;
  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    if (++popped > opts.max_pairs)
      throw ResourceLimitError(
          "Groebner S-pair budget exceeded (" + std::to_string(opts.max_pairs) +
          " pairs); raise the pair limit to continue");
    treated.insert({pk.i, pk.j});
    const OPoly& f = G[static_cast<std::size_t>(pk.i)];
    const OPoly& g = G[static_cast<std::size_t>(pk.j)];

    // Product criterion: coprime lead monomials always reduce to zero.
    if (f.lm().coprime_with(g.lm())) continue;
    // Chain criterion: some third lead divides the lcm and both side pairs
    // were already handled.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!G[static_cast<std::size_t>(k)].lm().divides(pk.lcm)) continue;
      auto a = std::minmax(pk.i, k);
      auto b = std::minmax(pk.j, k);
      if (treated.count({a.first, a.second}) && treated.count({b.first, b.second}))
        chained = true;
    }
    if (chained) continue;

    if (pk.lcm.degree() > opts.max_degree)
      throw ResourceLimitError(
          "Groebner degree budget exceeded (pair lcm degree " +
          std::to_string(pk.lcm.degree()) + " > " + std::to_string(opts.max_degree) +
          "); raise the degree limit to continue");

    OPoly s = detail::sub(detail::mul_term(f, f.lm().divide_into(pk.lcm), Rational(1)),
                          detail::mul_term(g, g.lm().divide_into(pk.lcm), Rational(1)),
                          order);
    OPoly r = detail::normal_form_opoly(std::move(s), G, order);
    if (r.zero()) continue;
    if (r.lm().degree() > opts.max_degree)
      throw ResourceLimitError(
          "Groebner degree budget exceeded (new lead degree " +
          std::to_string(r.lm().degree()) + " > " + std::to_string(opts.max_degree) +
          "); raise the degree limit to continue");
    G.push_back(detail::make_monic(std::move(r)));
    push_pairs_for(static_cast<int>(G.size()) - 1);
  }

  // Minimalise: drop every element whose lead is divisible by another lead.
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm())) {
        // On equal leads keep the earlier element.
        if (G[i].lm() == G[j].lm())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Tail-reduce each survivor against the others.
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(detail::make_monic(
        detail::normal_form_opoly(minimal[i], others, order)));
  }
  std::sort(reduced.begin(), reduced.end(), [&order](const OPoly& a, const OPoly& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });

  IdealBasis out;
  out.vars = vars;
  out.order = order;
  out.is_groebner = true;
  for (const auto& o : reduced) out.gens.push_back(detail::to_polynomial(o, vars));
  return out;
}

// True iff the ideal is the whole ring, i.e. the reduced basis is {1}.
inline bool is_trivial(const IdealBasis& basis) {
  if (!basis.is_groebner)
    throw DomainError("is_trivial needs a Groebner basis");
  for (const auto& g : basis.gens)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

// Generators of the elimination ideal I ∩ Q[vars \ drop], computed with a
// block order that puts the dropped variables in front.  The returned
// polynomials still live in the full ring of `vars`.
inline std::vector<Polynomial> eliminate(const VarSet::Ptr& vars,
                                         const std::vector<Polynomial>& gens,
                                         const std::vector<int>& drop,
                                         const GroebnerOptions& opts = {}) {
  IdealBasis gb = groebner_basis(vars, gens, MonomialOrder::block(drop), opts);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.gens) {
    bool uses_dropped = false;
    for (int v : drop)
      if (g.contains_var(v)) {
        uses_dropped = true;
        break;
      }
    if (!uses_dropped) kept.push_back(g);
  }
  return kept;
}

// Saturation I : f^inf via the Rabinowitsch trick: adjoin a fresh variable t,
// add t*f - 1, and eliminate t.  Result is expressed back in the original
// ring.  f == 0 is rejected; a constant f leaves the ideal unchanged.
inline std::vector<Polynomial> saturate(const VarSet::Ptr& vars,
                                        const std::vector<Polynomial>& gens,
                                        const Polynomial& f,
                                        const GroebnerOptions& opts = {}) {
  if (f.is_zero()) throw DomainError("saturate: the saturating polynomial is zero");
  if (f.is_constant()) {
    IdealBasis gb = groebner_basis(vars, gens, MonomialOrder::grevlex(), opts);
    return gb.gens;
  }
  std::string t_name = vars->fresh_name("t");
  VarSet::Ptr ext = vars->extended({t_name});
  int t_idx = vars->size();
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) lifted.push_back(g.lifted(ext));
  lifted.push_back(f.lifted(ext) * Polynomial::variable(ext, t_idx) -
                   Polynomial::constant(ext, 1));
  std::vector<Polynomial> elim = eliminate(ext, lifted, {t_idx}, opts);
  std::vector<Polynomial> out;
  for (const auto& g : elim) out.push_back(g.renamed_into(vars));
  return out;
}

// Saturation by a list, applied iteratively factor by factor.
inline std::vector<Polynomial> saturate_list(const VarSet::Ptr& vars,
                                             std::vector<Polynomial> gens,
                                             const std::vector<Polynomial>& fs,
                                             const GroebnerOptions& opts = {}) {
  for (const auto& f : fs) gens = saturate(vars, gens, f, opts);
  return gens;
}

// Krull dimension of the vanishing set of the ideal, read off the staircase:
// the largest number of variables S such that no leading monomial of the
// reduced basis is supported entirely inside S.  Conventions: -1 for the
// trivial ideal (empty variety), ambient dimension for the zero ideal.
inline int ideal_dimension(const IdealBasis& basis, const VarSet::Ptr& ambient) {
  if (!basis.is_groebner)
    throw DomainError("ideal_dimension needs a Groebner basis");
  if (!same_vars(basis.vars, ambient))
    throw DomainError("ideal_dimension: ambient ring does not match the basis");
  const int n = ambient->size();
  if (n > 24) throw DomainError("ideal_dimension: too many variables for subset search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis.gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return -1;
    // Leading monomial w.r.t. the basis order (storage order is grevlex).
    const Monomial& lead = [&]() -> const Monomial& {
      const Monomial* best = &g.terms().front().first;
      for (const auto& [m, c] : g.terms())
        if (basis.order.compare(m, *best) > 0) best = &m;
      return *best;
    }();
    std::uint32_t mask = 0;
    for (const auto& [v, e] : lead.entries()) mask |= (1u << v);
    supports.push_back(mask);
  }
  if (supports.empty()) return n;
  int best = -1;
  const std::uint32_t limit = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  for (std::uint32_t s = 0; s <= limit; ++s) {
    bool independent = true;
    for (std::uint32_t lm : supports)
      if ((lm & ~s) == 0) {  // lead supported entirely inside S
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(s)));
    if (s == limit) break;
  }
  return best;
}

// Convenience: grevlex basis + dimension in one call.
inline int vanishing_dimension(const VarSet::Ptr& vars,
                               const std::vector<Polynomial>& gens,
                               const GroebnerOptions& opts = {}) {
  IdealBasis gb = groebner_basis(vars, gens, MonomialOrder::grevlex(), opts);
  return ideal_dimension(gb, vars);
}

// Mutual inclusion of two ideals presented by Groebner bases.
inline bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
  for (const auto& g : a.gens)
    if (!normal_form(g, b).is_zero()) return false;
  for (const auto& g : b.gens)
    if (!normal_form(g, a).is_zero()) return false;
  return true;
}

// Radical membership (f vanishes on all of V(gens)) via the Rabinowitsch
// trick: f ∈ rad I iff 1 ∈ I + (t·f - 1) in the extended ring.
inline bool radical_membership(const VarSet::Ptr& vars,
                               const std::vector<Polynomial>& gens,
                               const Polynomial& f,
                               const GroebnerOptions& opts = {}) {
  if (f.is_zero())  // 0 is in the radical iff the variety is empty
    return is_trivial(groebner_basis(vars, gens, MonomialOrder::grevlex(), opts));
  std::string t_name = vars->fresh_name("t");
  VarSet::Ptr ext = vars->extended({t_name});
  int t_idx = vars->size();
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) lifted.push_back(g.lifted(ext));
  lifted.push_back(f.lifted(ext) * Polynomial::variable(ext, t_idx) -
                   Polynomial::constant(ext, 1));
  return is_trivial(groebner_basis(ext, lifted, MonomialOrder::grevlex(), opts));
}

}  // namespace tjurina
