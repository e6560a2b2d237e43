#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/polynomial.hpp"
#include "tjurina/qlinalg.hpp"

namespace tjurina {

// Matrix with polynomial entries over a fixed ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarSet::Ptr vars, int rows, int cols)
      : vars_(std::move(vars)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("PolyMatrix: negative shape");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                    Polynomial::zero(vars_));
  }

  static PolyMatrix from_rows(const VarSet::Ptr& vars,
                              const std::vector<std::vector<Polynomial>>& rows) {
    PolyMatrix m(vars, static_cast<int>(rows.size()),
                 rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(r.size()) != m.cols_)
        throw DomainError("PolyMatrix: ragged rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = r[static_cast<std::size_t>(j)];
    }
    return m;
  }

  // The generic matrix of indeterminates x<i>_<j> (1-based), its own ring.
  static PolyMatrix generic(int m, int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        names.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
    VarSet::Ptr vars = VarSet::make(names);
    PolyMatrix g(vars, m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Polynomial::variable(vars, i * n + j);
    return g;
  }

  const VarSet::Ptr& vars() const { return vars_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& at(int i, int j) { return entries_[idx(i, j)]; }
  const Polynomial& at(int i, int j) const { return entries_[idx(i, j)]; }

  PolyMatrix transposed() const {
    PolyMatrix t(vars_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (!same_vars(a.vars_, b.vars_))
      throw DomainError("PolyMatrix: product over different rings");
    if (a.cols_ != b.rows_) throw DomainError("PolyMatrix: shape mismatch in product");
    PolyMatrix c(a.vars_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_vars(a.vars_, b.vars_) &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  QMatrix evaluate(const std::vector<Rational>& point) const {
    QMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
  }

  int rank_at(const std::vector<Rational>& point) const {
    return evaluate(point).rank();
  }

  PolyMatrix map_vars(const VarSet::Ptr& target,
                      const std::vector<Polynomial>& images) const {
    PolyMatrix m(target, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).map_vars(target, images);
    return m;
  }

  // All t x t minors, enumerated with the row subset as the outer key and the
  // column subset inner, both in lexicographic subset order.  Sub-determinants
  // are shared across minors through a memo keyed on (row mask, column mask).
  std::vector<Polynomial> minors(int t) const {
    if (t < 0) throw DomainError("PolyMatrix: negative minor size");
    if (t == 0) return {Polynomial::constant(vars_, 1)};  // empty determinant
    if (t > rows_ || t > cols_) return {};
    if (rows_ > 31 || cols_ > 31)
      throw DomainError("PolyMatrix: matrix too large for minor enumeration");
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo;
    std::vector<Polynomial> out;
    auto row_sets = subsets(rows_, t);
    auto col_sets = subsets(cols_, t);
    for (std::uint32_t rs : row_sets)
      for (std::uint32_t cs : col_sets) out.push_back(det_masked(rs, cs, memo));
    return out;
  }

  Polynomial determinant() const {
    if (rows_ != cols_)
      throw DomainError("PolyMatrix: determinant of a non-square matrix");
    if (rows_ == 0) return Polynomial::constant(vars_, 1);
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo;
    std::uint32_t all = (rows_ == 31) ? 0x7fffffffu : ((1u << rows_) - 1u);
    return det_masked(all, all, memo);
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DomainError("PolyMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  // All size-k subsets of {0..n-1} as bit masks, lexicographic in the index
  // lists (smallest indices first).
  static std::vector<std::uint32_t> subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= (1u << v);
      out.push_back(mask);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
  }

  // Cofactor expansion along the lowest selected row, memoized on the masks.
  Polynomial det_masked(
      std::uint32_t row_mask, std::uint32_t col_mask,
      std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial>& memo) const {
    if (row_mask == 0) return Polynomial::constant(vars_, 1);
    auto it = memo.find({row_mask, col_mask});
    if (it != memo.end()) return it->second;
    int r = __builtin_ctz(row_mask);
    std::uint32_t rest_rows = row_mask & ~(1u << r);
    Polynomial result = Polynomial::zero(vars_);
    int sign = 1;
    for (int c = 0; c < cols_; ++c) {
      if (!(col_mask & (1u << c))) continue;
      const Polynomial& e = at(r, c);
      if (!e.is_zero()) {
        Polynomial sub = det_masked(rest_rows, col_mask & ~(1u << c), memo);
        result = sign > 0 ? result + e * sub : result - e * sub;
      }
      sign = -sign;
    }
    memo.insert({{row_mask, col_mask}, result});
    return result;
  }

  VarSet::Ptr vars_;
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace tjurina
