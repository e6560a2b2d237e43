#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/varset.hpp"

namespace tjurina {

// Power product x_{i1}^{e1} * ... * x_{ik}^{ek}, stored as a sparse exponent
// vector sorted by variable index.  Zero exponents are never stored, so the
// representation is canonical and structural equality is monomial equality.
class Monomial {
 public:
  using Entry = std::pair<int, int>;  // (variable index, exponent > 0)

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial var(int index, int exp = 1) {
    Monomial m;
    if (exp < 0) throw DomainError("negative exponent");
    if (exp > 0) m.exps_.push_back({index, exp});
    return m;
  }

  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [v, e] : entries) {
      if (e < 0) throw DomainError("negative exponent");
      if (e == 0) continue;
      if (!m.exps_.empty() && m.exps_.back().first == v)
        m.exps_.back().second += e;
      else
        m.exps_.push_back({v, e});
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return exps_; }

  bool is_one() const { return exps_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  int exponent(int var) const {
    for (const auto& [v, e] : exps_)
      if (v == var) return e;
    return 0;
  }

  bool contains_var(int var) const { return exponent(var) > 0; }

  // True when some variable of `vars` (given as indices) occurs.
  template <typename Pred>
  bool any_var(Pred pred) const {
    for (const auto& [v, e] : exps_)
      if (pred(v)) return true;
    return false;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
      if (exps_[i].first == o.exps_[j].first) {
        r.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
        ++i, ++j;
      } else if (exps_[i].first < o.exps_[j].first) {
        r.exps_.push_back(exps_[i++]);
      } else {
        r.exps_.push_back(o.exps_[j++]);
      }
    }
    for (; i < exps_.size(); ++i) r.exps_.push_back(exps_[i]);
    for (; j < o.exps_.size(); ++j) r.exps_.push_back(o.exps_[j]);
    return r;
  }

  bool divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const auto& [v, e] : exps_) {
      while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
      if (j == o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e)
        return false;
    }
    return true;
  }

  // Quotient o / *this; requires divides(o).
  Monomial divide_into(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0;
    for (const auto& [v, e] : o.exps_) {
      int sub = 0;
      while (i < exps_.size() && exps_[i].first < v) ++i;
      if (i < exps_.size() && exps_[i].first == v) sub = exps_[i].second;
      if (sub > e) throw DomainError("monomial division is not exact");
      if (e - sub > 0) r.exps_.push_back({v, e - sub});
    }
    if (degree() + r.degree() != o.degree())
      throw DomainError("monomial division is not exact");
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
      if (a.exps_[i].first == b.exps_[j].first) {
        r.exps_.push_back({a.exps_[i].first,
                           std::max(a.exps_[i].second, b.exps_[j].second)});
        ++i, ++j;
      } else if (a.exps_[i].first < b.exps_[j].first) {
        r.exps_.push_back(a.exps_[i++]);
      } else {
        r.exps_.push_back(b.exps_[j++]);
      }
    }
    for (; i < a.exps_.size(); ++i) r.exps_.push_back(a.exps_[i]);
    for (; j < b.exps_.size(); ++j) r.exps_.push_back(b.exps_[j]);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
      if (exps_[i].first == o.exps_[j].first) return false;
      if (exps_[i].first < o.exps_[j].first) ++i; else ++j;
    }
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  // Structural order, used only as a map key (not a term order).
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str(const VarSet& vars) const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exps_) {
      if (!s.empty()) s += "*";
      s += vars.name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Entry> exps_;
};

// ---------------------------------------------------------------------------
// Term orders.
//
// grevlex: higher total degree wins; on equal degree the monomial whose
//   exponent is smaller at the last variable where they differ is larger.
// lex: larger exponent at the first variable where they differ wins.
// block elimination order for a front set S: grevlex restricted to S decides
//   first, grevlex on the remaining variables breaks ties.  Any monomial
//   containing a variable of S beats every monomial with none, which is what
//   makes it an elimination order for S.
// ---------------------------------------------------------------------------

namespace detail {

// grevlex comparison of sparse exponent vectors; returns <0, 0, >0.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto i = ea.rbegin();
  auto j = eb.rbegin();
  while (i != ea.rend() || j != eb.rend()) {
    // Walk from the highest variable index down; missing entries count as 0.
    int va = (i != ea.rend()) ? i->first : -1;
    int vb = (j != eb.rend()) ? j->first : -1;
    if (va == vb) {
      if (i->second != j->second)
        return i->second > j->second ? -1 : 1;  // bigger trailing exp => smaller
      ++i, ++j;
    } else if (va > vb) {
      return -1;  // a has a positive exponent at a later variable
    } else {
      return 1;
    }
  }
  return 0;
}

inline int lex_cmp(const Monomial& a, const Monomial& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    int va = (i < ea.size()) ? ea[i].first : std::numeric_limits<int>::max();
    int vb = (j < eb.size()) ? eb[j].first : std::numeric_limits<int>::max();
    if (va == vb) {
      if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second ? -1 : 1;
      ++i, ++j;
    } else if (va < vb) {
      return 1;  // a has positive exponent at an earlier variable
    } else {
      return -1;
    }
  }
  return 0;
}

}  // namespace detail

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }

  // Elimination order whose front block is `front` (variable indices).
  static MonomialOrder block(std::vector<int> front) {
    std::sort(front.begin(), front.end());
    return MonomialOrder(Kind::Block, std::move(front));
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& front() const { return front_; }

  bool in_front(int var) const {
    return std::binary_search(front_.begin(), front_.end(), var);
  }

  // Three-way comparison; >0 means a comes later (is larger) in the order.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return detail::grevlex_cmp(a, b);
      case Kind::Lex:
        return detail::lex_cmp(a, b);
      case Kind::Block: {
        auto split = [&](const Monomial& m) {
          std::vector<Monomial::Entry> in, out;
          for (const auto& e : m.entries())
            (in_front(e.first) ? in : out).push_back(e);
          return std::pair{Monomial::from_entries(in), Monomial::from_entries(out)};
        };
        auto [a_in, a_out] = split(a);
        auto [b_in, b_out] = split(b);
        if (int c = detail::grevlex_cmp(a_in, b_in)) return c;
        return detail::grevlex_cmp(a_out, b_out);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  MonomialOrder(Kind kind, std::vector<int> front)
      : kind_(kind), front_(std::move(front)) {}

  Kind kind_;
  std::vector<int> front_;
};

}  // namespace tjurina
