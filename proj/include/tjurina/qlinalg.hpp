#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/rational.hpp"

namespace tjurina {

using QVector = std::vector<Rational>;

// Dense matrix over Q with exact Gaussian elimination.  Pivot choice is the
// first nonzero entry in the column, so every routine is deterministic.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("QMatrix: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                 Rational(0));
  }
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw DomainError("QMatrix: ragged initializer");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static QMatrix from_rows(const std::vector<QVector>& rows) {
    QMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
        throw DomainError("QMatrix: ragged rows");
      for (int j = 0; j < m.cols_; ++j)
        m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }
  static QMatrix column(const QVector& v) {
    QMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = v[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[idx(i, j)]; }
  const Rational& at(int i, int j) const { return data_[idx(i, j)]; }

  QVector row(int i) const {
    QVector r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
    return r;
  }
  QVector col(int j) const {
    QVector c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
    return c;
  }

  QMatrix transposed() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("QMatrix: shape mismatch in product");
    QMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DomainError("QMatrix: shape mismatch in sum");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  friend QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& v : c.data_) v *= s;
    return c;
  }
  friend QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols_ != static_cast<int>(v.size()))
      throw DomainError("QMatrix: shape mismatch in matrix-vector product");
    QVector r(static_cast<std::size_t>(a.rows_), Rational(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (a.at(i, j) != 0)
          r[static_cast<std::size_t>(i)] += a.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  // Reduced row echelon form; returns the pivot column indices.
  std::vector<int> rref_in_place() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (at(i, c) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Rational inv = at(r, c);
      for (int j = 0; j < cols_; ++j) at(r, j) /= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c) == 0) continue;
        Rational f = at(i, c);
        for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    QMatrix m = *this;
    return static_cast<int>(m.rref_in_place().size());
  }

  QMatrix inverse() const {
    if (rows_ != cols_) throw DomainError("QMatrix: inverse of a non-square matrix");
    QMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref_in_place();
    if (static_cast<int>(pivots.size()) != rows_ ||
        (rows_ > 0 && pivots.back() >= cols_))
      throw DomainError("QMatrix: matrix is singular");
    QMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  Rational determinant() const {
    if (rows_ != cols_) throw DomainError("QMatrix: determinant of a non-square matrix");
    QMatrix m = *this;
    Rational det(1);
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i)
        if (m.at(i, c) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Rational(0);
      if (p != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
        det = -det;
      }
      det *= m.at(c, c);
      for (int i = c + 1; i < rows_; ++i) {
        if (m.at(i, c) == 0) continue;
        Rational f = m.at(i, c) / m.at(c, c);
        for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return det;
  }

  // Canonical basis of the null space { x : Ax = 0 }, one vector per free
  // column, with a 1 in the free coordinate.
  std::vector<QVector> kernel_basis() const {
    QMatrix m = *this;
    std::vector<int> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVector> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      QVector v(static_cast<std::size_t>(cols_), Rational(0));
      v[static_cast<std::size_t>(free)] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DomainError("QMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Particular solution of Ax = b, if any.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw DomainError("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x(static_cast<std::size_t>(a.cols()), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

// Linear subspace of Q^n held as the RREF of a spanning set, so equal
// subspaces compare equal member-wise.
class QSubspace {
 public:
  static QSubspace span(const std::vector<QVector>& vectors, int ambient_dim) {
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != ambient_dim)
        throw DomainError("QSubspace: vector length does not match ambient dimension");
    QMatrix m = QMatrix::from_rows(vectors);
    if (m.rows() == 0) m = QMatrix(0, ambient_dim);
    std::vector<int> pivots = m.rref_in_place();
    QSubspace s;
    s.n_ = ambient_dim;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      s.basis_.push_back(m.row(static_cast<int>(r)));
    return s;
  }
  static QSubspace zero_space(int ambient_dim) { return span({}, ambient_dim); }
  static QSubspace full_space(int ambient_dim) {
    std::vector<QVector> rows;
    for (int i = 0; i < ambient_dim; ++i) {
      QVector e(static_cast<std::size_t>(ambient_dim), Rational(0));
      e[static_cast<std::size_t>(i)] = 1;
      rows.push_back(std::move(e));
    }
    return span(rows, ambient_dim);
  }
  static QSubspace column_space(const QMatrix& a) {
    std::vector<QVector> cols;
    for (int j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
    return span(cols, a.rows());
  }
  static QSubspace kernel(const QMatrix& a) { return span(a.kernel_basis(), a.cols()); }

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QVector>& basis() const { return basis_; }

  bool contains(const QVector& v) const {
    if (static_cast<int>(v.size()) != n_) throw DomainError("QSubspace: length mismatch");
    std::vector<QVector> rows = basis_;
    rows.push_back(v);
    return span(rows, n_).dim() == dim();
  }
  bool contains(const QSubspace& other) const {
    if (other.n_ != n_) throw DomainError("QSubspace: ambient mismatch");
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }
  friend bool operator==(const QSubspace& a, const QSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const QSubspace& a, const QSubspace& b) { return !(a == b); }

  friend QSubspace sum(const QSubspace& a, const QSubspace& b) {
    if (a.n_ != b.n_) throw DomainError("QSubspace: ambient mismatch");
    std::vector<QVector> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return span(rows, a.n_);
  }

  friend QSubspace intersect(const QSubspace& a, const QSubspace& b) {
    if (a.n_ != b.n_) throw DomainError("QSubspace: ambient mismatch");
    // x in both spans: x = Ba^T u = Bb^T v; solve [Ba^T | -Bb^T] null space.
    int da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return zero_space(a.n_);
    QMatrix m(a.n_, da + db);
    for (int i = 0; i < a.n_; ++i) {
      for (int j = 0; j < da; ++j)
        m.at(i, j) = a.basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      for (int j = 0; j < db; ++j)
        m.at(i, da + j) =
            -b.basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    std::vector<QVector> vectors;
    for (const auto& k : m.kernel_basis()) {
      QVector x(static_cast<std::size_t>(a.n_), Rational(0));
      for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < da; ++j)
          x[static_cast<std::size_t>(i)] +=
              k[static_cast<std::size_t>(j)] *
              a.basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      vectors.push_back(std::move(x));
    }
    return span(vectors, a.n_);
  }

  // Vectors of `sup`'s basis extending this subspace to all of `sup`; their
  // span is a complement of this subspace inside sup.  Requires sup ⊇ this.
  QSubspace complement_in(const QSubspace& sup) const {
    if (!sup.contains(*this))
      throw DomainError("QSubspace: complement_in needs a containing space");
    std::vector<QVector> current = basis_;
    std::vector<QVector> added;
    int r = dim();
    for (const auto& v : sup.basis_) {
      std::vector<QVector> trial = current;
      trial.push_back(v);
      if (span(trial, n_).dim() > r) {
        current.push_back(v);
        added.push_back(v);
        ++r;
      }
    }
    return span(added, n_);
  }

 private:
  int n_ = 0;
  std::vector<QVector> basis_;
};

}  // namespace tjurina
