#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/monomial.hpp"
#include "tjurina/rational.hpp"
#include "tjurina/varset.hpp"

namespace tjurina {

// Multivariate polynomial with exact rational coefficients.
//
// Terms are kept sorted in descending graded-reverse-lexicographic order with
// respect to the VarSet order and never contain a zero coefficient, so the
// representation is canonical: two polynomials are equal iff their term lists
// are equal.  Printing walks the same order, which makes every report
// deterministic.  Polynomials are immutable values; all operations return new
// objects.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(VarSet::Ptr vars) : vars_(std::move(vars)) {
    if (!vars_) throw DomainError("polynomial needs a variable set");
  }

  static Polynomial zero(VarSet::Ptr vars) { return Polynomial(std::move(vars)); }

  static Polynomial constant(VarSet::Ptr vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial::one(), c});
    return p;
  }

  static Polynomial variable(VarSet::Ptr vars, int index) {
    if (index < 0 || index >= vars->size()) throw DomainError("variable index out of range");
    Polynomial p(std::move(vars));
    p.terms_.push_back({Monomial::var(index), Rational(1)});
    return p;
  }

  static Polynomial variable(const VarSet::Ptr& vars, const std::string& name) {
    auto idx = vars->index_of(name);
    if (!idx) throw DomainError("unknown variable: '" + name + "'");
    return variable(vars, *idx);
  }

  static Polynomial term(VarSet::Ptr vars, Monomial m, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  // Builds from an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(VarSet::Ptr vars, const std::vector<Term>& terms) {
    Accumulator acc;
    for (const auto& [m, c] : terms) acc.add(m, c);
    return acc.finish(std::move(vars));
  }

  const VarSet::Ptr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }

  Rational constant_term() const {
    // The constant term, if present, is the last one in descending grevlex.
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Rational(0);
  }

  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
  }

  bool contains_var(int var) const {
    for (const auto& [m, c] : terms_)
      if (m.contains_var(var)) return true;
    return false;
  }

  Rational coefficient_of(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return Rational(0);
  }

  // --- ring operations -----------------------------------------------------

  Polynomial operator-() const {
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.push_back({m, -c});
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = detail::grevlex_cmp(terms_[i].first, o.terms_[j].first);
      if (c == 0) {
        Rational s = terms_[i].second + o.terms_[j].second;
        if (s != 0) r.terms_.push_back({terms_[i].first, std::move(s)});
        ++i, ++j;
      } else if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else {
        r.terms_.push_back(o.terms_[j++]);
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Accumulator acc;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) acc.add(ma * mb, ca * cb);
    return acc.finish(vars_);
  }

  Polynomial operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) r.terms_.push_back({m, k * c});
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  Polynomial pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Polynomial r = constant(vars_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // --- calculus / evaluation ------------------------------------------------

  Polynomial derivative(int var) const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(var);
      if (e == 0) continue;
      std::vector<Monomial::Entry> es;
      for (const auto& en : m.entries())
        if (en.first != var)
          es.push_back(en);
        else if (en.second > 1)
          es.push_back({var, en.second - 1});
      r.terms_.push_back({Monomial::from_entries(es), c * e});
    }
    // Dropping one exponent of a fixed variable preserves relative grevlex
    // order only degree-wise, so re-normalise.
    return from_terms(vars_, r.terms_);
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_->size())
      throw DomainError("point dimension does not match variable set");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [var, e] : m.entries())
        for (int k = 0; k < e; ++k) v *= point[static_cast<std::size_t>(var)];
      sum += v;
    }
    return sum;
  }

  // Ring homomorphism determined by images[i] = image of variable i.  All
  // images must live in `target`.
  Polynomial map_vars(const VarSet::Ptr& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != vars_->size())
      throw DomainError("map_vars needs one image per variable");
    Polynomial sum = zero(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (const auto& [var, e] : m.entries())
        t = t * images[static_cast<std::size_t>(var)].pow(e);
      sum = sum + t;
    }
    return sum;
  }

  // Substitution var := h within the same ring; h must not be cyclic in var
  // for the intended uses (the caller checks when it matters).
  Polynomial substitute(int var, const Polynomial& h) const {
    check_ring(h);
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(vars_->size()));
    for (int i = 0; i < vars_->size(); ++i)
      images.push_back(i == var ? h : variable(vars_, i));
    return map_vars(vars_, images);
  }

  // Same polynomial viewed in an extension of its VarSet (new names appended
  // at the end): exponent vectors stay valid verbatim.
  Polynomial lifted(const VarSet::Ptr& bigger) const {
    if (bigger->size() < vars_->size())
      throw DomainError("lifted target is smaller than the source ring");
    for (int i = 0; i < vars_->size(); ++i)
      if (bigger->name(i) != vars_->name(i))
        throw DomainError("lifted target does not extend the source ring");
    Polynomial r(bigger);
    r.terms_ = terms_;
    return r;
  }

  // Re-expresses the polynomial over `target` by matching variable names;
  // every variable that actually occurs must exist in `target`.
  Polynomial renamed_into(const VarSet::Ptr& target) const {
    Polynomial r(target);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      std::vector<Monomial::Entry> es;
      for (const auto& [v, e] : m.entries()) {
        auto idx = target->index_of(vars_->name(v));
        if (!idx)
          throw DomainError("variable '" + vars_->name(v) +
                            "' does not exist in the target ring");
        es.push_back({*idx, e});
      }
      ts.push_back({Monomial::from_entries(es), c});
    }
    return from_terms(target, ts);
  }

  // --- printing --------------------------------------------------------------

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += (c < 0) ? " - " : " + ";
      }
      if (m.is_one()) {
        s += to_string(mag);
      } else {
        if (mag != 1) s += to_string(mag) + "*";
        s += m.str(*vars_);
      }
    }
    return s;
  }

 private:
  struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return detail::grevlex_cmp(a, b) < 0;
    }
  };

  // Collects terms in an ordered map and emits the canonical descending list.
  struct Accumulator {
    std::map<Monomial, Rational, GrevlexLess> acc;
    void add(const Monomial& m, const Rational& c) {
      if (c == 0) return;
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
    }
    Polynomial finish(VarSet::Ptr vars) {
      Polynomial p(std::move(vars));
      p.terms_.reserve(acc.size());
      for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        p.terms_.push_back({it->first, it->second});
      return p;
    }
  };

  void check_ring(const Polynomial& o) const {
    if (!same_vars(vars_, o.vars_))
      throw DomainError("polynomials live in different rings");
  }

  VarSet::Ptr vars_;
  std::vector<Term> terms_;
};

// Exact polynomial division: returns true and sets `quotient` when
// num == den * quotient; otherwise returns false.  Uses long division against
// the grevlex leading term; for a true multiple the remainder is forced to
// zero, for anything else a nonzero remainder appears and we bail out.
inline bool try_exact_divide(const Polynomial& num, const Polynomial& den,
                             Polynomial& quotient) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial q = Polynomial::zero(num.vars());
  Polynomial r = num;
  const Monomial& dm = den.terms().front().first;
  const Rational& dc = den.terms().front().second;
  while (!r.is_zero()) {
    const Monomial& rm = r.terms().front().first;
    if (!dm.divides(rm)) return false;
    Polynomial t = Polynomial::term(num.vars(), dm.divide_into(rm),
                                    r.terms().front().second / dc);
    q = q + t;
    r = r - t * den;
  }
  quotient = q;
  return true;
}

}  // namespace tjurina
