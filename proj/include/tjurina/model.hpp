#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/qlinalg.hpp"

namespace tjurina {

// Size data of the model singularity M_t inside m x n matrix space.
struct ModelSpec {
  int m = 1, n = 1, t = 1;

  void validate() const {
    if (t < 1 || t > std::min(m, n))
      throw DomainError("ModelSpec: need 1 <= t <= min(m, n)");
  }
  // dim M_t = mn - (m-t+1)(n-t+1).
  int d() const { return m * n - (m - t + 1) * (n - t + 1); }
};

inline QSubspace kernel(const QMatrix& a) { return QSubspace::kernel(a); }
inline QSubspace image(const QMatrix& a) { return QSubspace::column_space(a); }

namespace detail {
// Integer entries in [-9, 9]; modulo arithmetic instead of a distribution so
// sequences are identical across standard libraries.
inline Rational small_entry(std::mt19937_64& rng) {
  return Rational(static_cast<int>(rng() % 19) - 9);
}
}  // namespace detail

// A deterministic sample of rank exactly r, built as a product of random
// m x r and r x n integer matrices.
inline QMatrix random_rank_matrix(const ModelSpec& spec, int r, std::uint64_t seed) {
  spec.validate();
  if (r < 0 || r > std::min(spec.m, spec.n))
    throw DomainError("random_rank_matrix: rank out of range");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    QMatrix left(spec.m, r), right(r, spec.n);
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < r; ++j) left.at(i, j) = detail::small_entry(rng);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < spec.n; ++j) right.at(i, j) = detail::small_entry(rng);
    QMatrix a = left * right;
    if (a.rank() == r) return a;
  }
  throw DomainError("random_rank_matrix: no rank-" + std::to_string(r) +
                    " sample after 100 attempts");
}

// Fiber of the Tjurina transform of M_t over A: planes W in Gr(n-t+1, n)
// with A(W) = 0.
inline bool in_tjur_fiber(const ModelSpec& spec, const QMatrix& a,
                          const QSubspace& w) {
  spec.validate();
  if (a.rows() != spec.m || a.cols() != spec.n)
    throw DomainError("in_tjur_fiber: matrix shape does not match the spec");
  if (w.ambient_dim() != spec.n || w.dim() != spec.n - spec.t + 1)
    throw DomainError("in_tjur_fiber: W must be an (n-t+1)-plane in Q^n");
  for (const auto& v : w.basis()) {
    QVector av = a * v;
    for (const auto& c : av)
      if (c != 0) return false;
  }
  return true;
}

// Fiber of the transpose transform: planes W in Gr(t-1, m) with Im(A) ⊆ W.
inline bool in_tjur_t_fiber(const ModelSpec& spec, const QMatrix& a,
                            const QSubspace& w) {
  spec.validate();
  if (a.rows() != spec.m || a.cols() != spec.n)
    throw DomainError("in_tjur_t_fiber: matrix shape does not match the spec");
  if (w.ambient_dim() != spec.m || w.dim() != spec.t - 1)
    throw DomainError("in_tjur_t_fiber: W must be a (t-1)-plane in Q^m");
  return w.contains(image(a));
}

// Fiber of the Nash transform in its pair description: V in the Tjurina
// fiber and W containing the image.
inline bool in_nash_fiber(const ModelSpec& spec, const QMatrix& a,
                          const QSubspace& v, const QSubspace& w) {
  return in_tjur_fiber(spec, a, v) && in_tjur_t_fiber(spec, a, w);
}

// The limiting sequence A_i = A + (1/i)A' of the Nash-fiber argument: A' is
// zero on V and on a complement of ker A, and maps a complement of V inside
// ker A isomorphically onto a complement of Im A inside W.  Every member has
// rank exactly t-1, kernel exactly V, and image inside W.
inline std::vector<QMatrix> nash_limit_sequence(const ModelSpec& spec,
                                                const QMatrix& a, const QSubspace& v,
                                                const QSubspace& w, int steps) {
  spec.validate();
  if (steps < 1) throw DomainError("nash_limit_sequence: need at least one step");
  if (!in_nash_fiber(spec, a, v, w))
    throw DomainError("nash_limit_sequence: (A, V, W) is not in the Nash fiber");

  QSubspace ker_a = kernel(a);
  QSubspace im_a = image(a);
  QSubspace v_prime = v.complement_in(ker_a);          // dim t-1-r
  QSubspace w_prime = im_a.complement_in(w);           // dim t-1-r
  QSubspace u = ker_a.complement_in(QSubspace::full_space(spec.n));
  if (v_prime.dim() != w_prime.dim())
    throw DomainError("nash_limit_sequence: splitting construction failed");

  // Columns of C: basis of V' | basis of V | basis of U  (a basis of Q^n);
  // A' sends the V' block to the W' basis and the rest to zero.
  QMatrix c(spec.n, spec.n);
  QMatrix target(spec.m, spec.n);
  int col = 0;
  for (const auto& bv : v_prime.basis()) {
    for (int i = 0; i < spec.n; ++i) c.at(i, col) = bv[static_cast<std::size_t>(i)];
    const auto& wv = w_prime.basis()[static_cast<std::size_t>(col)];
    for (int i = 0; i < spec.m; ++i) target.at(i, col) = wv[static_cast<std::size_t>(i)];
    ++col;
  }
  for (const auto& bv : v.basis()) {
    for (int i = 0; i < spec.n; ++i) c.at(i, col) = bv[static_cast<std::size_t>(i)];
    ++col;
  }
  for (const auto& bv : u.basis()) {
    for (int i = 0; i < spec.n; ++i) c.at(i, col) = bv[static_cast<std::size_t>(i)];
    ++col;
  }
  if (col != spec.n)
    throw DomainError("nash_limit_sequence: splitting construction failed");
  QMatrix a_prime = target * c.inverse();

  std::vector<QMatrix> seq;
  for (int i = 1; i <= steps; ++i) {
    QMatrix ai = a + (Rational(1) / Rational(i)) * a_prime;
    if (ai.rank() != spec.t - 1 || kernel(ai) != v ||
        !w.contains(image(ai)))
      throw DomainError("nash_limit_sequence: member failed verification");
    seq.push_back(std::move(ai));
  }
  return seq;
}

// Tangent-space membership at a regular point of M_t: B is tangent iff it
// maps ker A into Im A.
inline bool tangent_membership(const ModelSpec& spec, const QMatrix& a,
                               const QMatrix& b) {
  spec.validate();
  if (a.rows() != spec.m || a.cols() != spec.n || b.rows() != spec.m ||
      b.cols() != spec.n)
    throw DomainError("tangent_membership: matrix shape does not match the spec");
  if (a.rank() != spec.t - 1)
    throw DomainError("tangent_membership: A is not in the open stratum");
  QSubspace im = image(a);
  QSubspace ker = kernel(a);  // named: binding basis() of a temporary would dangle
  for (const auto& v : ker.basis())
    if (!im.contains(b * v)) return false;
  return true;
}

// The two explicit sequences showing the Tjurina fiber map cannot be
// continuously sectioned: both converge to the same rank t-2 matrix A with
// the same kernels, yet their image limits W1 and W2 differ.
struct DiscontinuityWitness {
  ModelSpec spec;
  QMatrix a;                     // rank t-2 limit point
  QSubspace v;                   // common kernel of every sequence member
  QSubspace w1, w2;              // distinct limiting image planes
  std::vector<Rational> sampled_s;
  std::vector<QMatrix> seq1, seq2;
  bool distinct_limits = false;
  bool checks_passed = false;
};

inline DiscontinuityWitness discontinuity_witness(const ModelSpec& spec) {
  spec.validate();
  if (spec.t < 2 || spec.m < spec.t || spec.n < spec.t - 1)
    throw DomainError("discontinuity_witness: need t >= 2, m >= t, n >= t-1");
  DiscontinuityWitness wit;
  wit.spec = spec;
  wit.a = QMatrix(spec.m, spec.n);
  for (int i = 0; i < spec.t - 2; ++i) wit.a.at(i, i) = 1;

  auto coordinate_plane = [&](const std::vector<int>& rows1b) {
    std::vector<QVector> basis;
    for (int r : rows1b) {
      QVector e(static_cast<std::size_t>(spec.m), Rational(0));
      e[static_cast<std::size_t>(r - 1)] = 1;
      basis.push_back(std::move(e));
    }
    return QSubspace::span(basis, spec.m);
  };
  std::vector<int> w1_rows, w2_rows;
  for (int i = 1; i <= spec.t - 1; ++i) w1_rows.push_back(i);
  for (int i = 1; i <= spec.t - 2; ++i) w2_rows.push_back(i);
  w2_rows.push_back(spec.t);
  wit.w1 = coordinate_plane(w1_rows);
  wit.w2 = coordinate_plane(w2_rows);

  std::vector<QVector> v_basis;
  for (int i = spec.t; i <= spec.n; ++i) {
    QVector e(static_cast<std::size_t>(spec.n), Rational(0));
    e[static_cast<std::size_t>(i - 1)] = 1;
    v_basis.push_back(std::move(e));
  }
  wit.v = QSubspace::span(v_basis, spec.n);

  wit.sampled_s = {Rational(1), Rational(2), Rational(10)};
  wit.distinct_limits = wit.w1 != wit.w2;
  wit.checks_passed = wit.distinct_limits;
  for (const auto& s : wit.sampled_s) {
    QMatrix a1 = wit.a, a2 = wit.a;
    a1.at(spec.t - 2, spec.t - 2) = Rational(1) / s;  // entry (t-1, t-1)
    a2.at(spec.t - 1, spec.t - 2) = Rational(1) / s;  // entry (t, t-1)
    for (const QMatrix* ai : {&a1, &a2}) {
      if (ai->rank() != spec.t - 1 || kernel(*ai) != wit.v)
        wit.checks_passed = false;
    }
    if (image(a1) != wit.w1 || image(a2) != wit.w2) wit.checks_passed = false;
    wit.seq1.push_back(std::move(a1));
    wit.seq2.push_back(std::move(a2));
  }
  return wit;
}

// The literal algebraic content of the deformation retraction f_s(A, V, W) =
// (sA, V, W): scaling keeps the pair conditions, with image {0} at s = 0.
inline bool retraction_check(const ModelSpec& spec, const QMatrix& a,
                             const QSubspace& v, const QSubspace& w,
                             const Rational& s) {
  if (!in_nash_fiber(spec, a, v, w))
    throw DomainError("retraction_check: (A, V, W) is not in the Nash fiber");
  QMatrix sa = s * a;
  for (const auto& bv : v.basis()) {
    QVector av = sa * bv;
    for (const auto& c : av)
      if (c != 0) return false;
  }
  if (s != 0) {
    if (!w.contains(image(sa))) return false;
  } else {
    if (image(sa).dim() != 0) return false;
  }
  return true;
}

}  // namespace tjurina
