#pragma once

#include <array>
#include <vector>

#include "tropcone/dense.hpp"

namespace tropcone {

/// The pair of 2-by-n matrices defining the system  A x <= B x
/// (two max-plus linear inequalities, one per row).
template <class T>
struct TwoRowSystem {
  TropMatrix<T> A;
  TropMatrix<T> B;

  TwoRowSystem(TropMatrix<T> a, TropMatrix<T> b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != 2 || B.rows() != 2 || A.cols() != B.cols() || A.cols() < 1)
      throw DimensionMismatch("TwoRowSystem: A and B must both be 2 x n, n >= 1");
  }

  int n() const { return static_cast<int>(A.cols()); }

  friend bool operator==(const TwoRowSystem& x, const TwoRowSystem& y) {
    return equal(x.A, y.A) && equal(x.B, y.B);
  }
};

enum class SetTag : unsigned char { I, J, K };

/// Per-row partition of {0..n-1} into
///   J_r = { i : a_ri <= b_ri, b_ri finite }
///   I_r = { i : a_ri >  b_ri }            (bottom below every finite value)
///   K_r = { i : a_ri = b_ri = bottom }
/// Ibar_r is the complement of I_r, i.e. J_r united with K_r.
struct IndexClassification {
  int n = 0;
  std::array<std::vector<SetTag>, 2> tags;
  std::array<std::vector<int>, 2> I, J, K, Ibar;

  SetTag tag(int row, int i) const { return tags[row][static_cast<size_t>(i)]; }
  bool in_I(int row, int i) const { return tag(row, i) == SetTag::I; }
  bool in_J(int row, int i) const { return tag(row, i) == SetTag::J; }
  bool in_K(int row, int i) const { return tag(row, i) == SetTag::K; }
  bool in_Ibar(int row, int i) const { return tag(row, i) != SetTag::I; }
};

template <class T>
IndexClassification classify(const TwoRowSystem<T>& sys) {
  IndexClassification cls;
  cls.n = sys.n();
  for (int r = 0; r < 2; ++r) {
    cls.tags[r].resize(static_cast<size_t>(cls.n));
    for (int i = 0; i < cls.n; ++i) {
      const Trop<T>& a = sys.A(r, i);
      const Trop<T>& b = sys.B(r, i);
      SetTag t;
      if (b.is_finite() && a <= b)
        t = SetTag::J;
      else if (a > b)
        t = SetTag::I;
      else
        t = SetTag::K;  // a = b = bottom
      cls.tags[r][static_cast<size_t>(i)] = t;
      switch (t) {
        case SetTag::I: cls.I[r].push_back(i); break;
        case SetTag::J: cls.J[r].push_back(i); break;
        case SetTag::K: cls.K[r].push_back(i); break;
      }
      if (t != SetTag::I) cls.Ibar[r].push_back(i);
    }
  }
  return cls;
}

/// gamma^row_{k i} = a_{row,i} - b_{row,k}, the relative weight entering
/// row k of A^{kl}. Rows are 0-based here; defined whenever b_{row,k} is
/// finite (guaranteed for k in J_row).
template <class T>
Trop<T> gamma(const TwoRowSystem<T>& sys, int row, int k, int i) {
  const Trop<T>& b = sys.B(row, k);
  if (b.is_bottom()) throw InversionOfBottom();
  return sys.A(row, i) * inv(b);
}

template <class T>
bool is_solution(const TwoRowSystem<T>& sys, const TropVector<T>& x) {
  if (x.rows() != sys.A.cols()) throw DimensionMismatch("is_solution: length mismatch");
  for (int r = 0; r < 2; ++r) {
    Trop<T> lhs, rhs;
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      lhs += sys.A(r, j) * x(j);
      rhs += sys.B(r, j) * x(j);
    }
    if (!(lhs <= rhs)) return false;
  }
  return true;
}

/// Restriction of a degenerate system to coordinates that are not forced to
/// bottom, with vacuous rows replaced by a free row so that both J-sets of
/// the reduced system are nonempty (unless nothing is left at all).
///
/// A row with an empty J-set and a nonempty I-set forces x_i = bottom for
/// every i in its I-set; removing those coordinates can empty the other
/// row's J-set, so the forcing runs to a fixpoint. A row that is vacuous on
/// the remaining coordinates (all-K) is rewritten as (a = all bottom,
/// b = all 0), which has the same solutions and a full J-set.
template <class T>
struct ReducedSystem {
  TwoRowSystem<T> sys;       // reduced (and possibly augmented) system
  std::vector<int> coords;   // reduced index -> original index, increasing
  std::vector<int> forced;   // original indices forced to bottom
  std::array<bool, 2> augmented{false, false};
  bool identity = false;     // true when reduction changed nothing
};

template <class T>
ReducedSystem<T> reduce_degenerate(const TwoRowSystem<T>& sys) {
  const int n = sys.n();
  const IndexClassification cls = classify(sys);
  std::vector<char> gone(static_cast<size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < 2; ++r) {
      bool has_j = false;
      for (int i = 0; i < n && !has_j; ++i)
        if (!gone[static_cast<size_t>(i)] && cls.in_J(r, i)) has_j = true;
      if (has_j) continue;
      for (int i = 0; i < n; ++i)
        if (!gone[static_cast<size_t>(i)] && cls.in_I(r, i)) {
          gone[static_cast<size_t>(i)] = 1;
          changed = true;
        }
    }
  }

  std::vector<int> coords, forced;
  for (int i = 0; i < n; ++i)
    (gone[static_cast<size_t>(i)] ? forced : coords).push_back(i);

  const int m = static_cast<int>(coords.size());
  TropMatrix<T> a(2, std::max(m, 1)), b(2, std::max(m, 1));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < m; ++c) {
      a(r, c) = sys.A(r, coords[static_cast<size_t>(c)]);
      b(r, c) = sys.B(r, coords[static_cast<size_t>(c)]);
    }

  ReducedSystem<T> red{TwoRowSystem<T>(a, b), std::move(coords), std::move(forced)};
  if (m == 0) return red;  // every coordinate forced; callers emit the empty basis

  for (int r = 0; r < 2; ++r) {
    bool has_j = false;
    for (int c = 0; c < m && !has_j; ++c)
      if (cls.in_J(r, red.coords[static_cast<size_t>(c)])) has_j = true;
    if (!has_j) {
      // all-K row on the surviving coordinates: vacuous, replace by free row
      for (int c = 0; c < m; ++c) {
        red.sys.A(r, c) = Trop<T>::bottom();
        red.sys.B(r, c) = Trop<T>::unity();
      }
      red.augmented[static_cast<size_t>(r)] = true;
    }
  }
  red.identity = red.forced.empty() && !red.augmented[0] && !red.augmented[1];
  return red;
}

}  // namespace tropcone
