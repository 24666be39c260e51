#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "tropcone/scalar.hpp"

namespace Eigen {

template <class T>
struct NumTraits<tropcone::Trop<T>> {
  typedef tropcone::Trop<T> Real;
  typedef tropcone::Trop<T> NonInteger;
  typedef tropcone::Trop<T> Nested;
  typedef tropcone::Trop<T> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline Real epsilon() { return tropcone::Trop<T>::bottom(); }
  static inline Real dummy_precision() { return tropcone::Trop<T>::bottom(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tropcone {

// Eigen supplies the dense containers; the semiring arithmetic below is ours.
// Eigen's own matrix product is never used (it assumes Scalar(0) is the
// additive identity, which for max-plus would be the unity).
template <class T>
using TropMatrix = Eigen::Matrix<Trop<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using TropVector = Eigen::Matrix<Trop<T>, Eigen::Dynamic, 1>;

/// Max-plus unity matrix: unity on the diagonal, bottom elsewhere.
template <class T>
TropMatrix<T> identity(Eigen::Index n) {
  TropMatrix<T> m(n, n);  // entries default-construct to bottom
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Trop<T>::unity();
  return m;
}

template <class T>
TropVector<T> unit_vector(Eigen::Index n, Eigen::Index i) {
  TropVector<T> v(n);
  v(i) = Trop<T>::unity();
  return v;
}

template <class T>
bool equal(const TropMatrix<T>& a, const TropMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Entrywise tropical sum A "+" B (componentwise max).
template <class T>
TropMatrix<T> sum(const TropMatrix<T>& a, const TropMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("sum: shapes differ");
  TropMatrix<T> c(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

/// Tropical matrix product: c(i,j) = max_k a(i,k) plus b(k,j).
/// Works for matrix-vector products too (a vector is an n-by-1 matrix).
template <class T>
TropMatrix<T> multiply(const TropMatrix<T>& a, const TropMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("multiply: inner dimensions disagree");
  TropMatrix<T> c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Trop<T>& aik = a(i, k);
      if (aik.is_bottom()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
TropVector<T> multiply(const TropMatrix<T>& a, const TropVector<T>& x) {
  if (a.cols() != x.rows())
    throw DimensionMismatch("multiply: inner dimensions disagree");
  TropVector<T> y(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) y(i) += a(i, k) * x(k);
  return y;
}

template <class T>
TropVector<T> scaled(const Trop<T>& lambda, const TropVector<T>& x) {
  TropVector<T> y(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) y(i) = lambda * x(i);
  return y;
}

/// Indices with finite entries. Recomputed on demand, never cached.
template <class T>
std::vector<int> support(const TropVector<T>& x) {
  std::vector<int> s;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    if (x(i).is_finite()) s.push_back(static_cast<int>(i));
  return s;
}

template <class T>
bool componentwise_leq(const TropVector<T>& x, const TropVector<T>& y) {
  if (x.rows() != y.rows()) throw DimensionMismatch("componentwise_leq: lengths differ");
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    if (!(x(i) <= y(i))) return false;
  return true;
}

/// Kleene star A* = I + A + A^2 + ... via Floyd-Warshall closure, O(n^3).
/// Returns nullopt (divergent) exactly when the weighted digraph of A has a
/// cycle of weight above unity; otherwise every diagonal entry of the
/// returned star equals unity.
template <class T>
std::optional<TropMatrix<T>> kleene_star(const TropMatrix<T>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("kleene_star: matrix not square");
  const Eigen::Index n = a.rows();
  const Trop<T> one = Trop<T>::unity();
  TropMatrix<T> c = a;
  for (Eigen::Index m = 0; m < n; ++m) {
    // A positive closed walk through <= m intermediates already proves
    // divergence; bailing here also keeps entries from compounding.
    if (c(m, m) > one) return std::nullopt;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Trop<T> cim = c(i, m);
      if (cim.is_bottom()) continue;
      for (Eigen::Index j = 0; j < n; ++j) c(i, j) += cim * c(m, j);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (c(i, i) > one) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i) c(i, i) += one;  // I + transitive closure
  return c;
}

/// True iff A x <= x componentwise (x is a subeigenvector of A).
template <class T>
bool is_subeigen(const TropMatrix<T>& a, const TropVector<T>& x) {
  if (a.rows() != a.cols() || a.cols() != x.rows())
    throw DimensionMismatch("is_subeigen: shapes disagree");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Trop<T> row;
    for (Eigen::Index k = 0; k < a.cols(); ++k) row += a(i, k) * x(k);
    if (!(row <= x(i))) return false;
  }
  return true;
}

}  // namespace tropcone
