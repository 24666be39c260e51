#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcone/system.hpp"

namespace tropcone {

/// Families of candidate generators. S1 are unit vectors, S2* combinations of
/// two units, S3* combinations of three. Gathered marks a brute-force star
/// column that was collected without family attribution.
enum class GenClass : unsigned char {
  S1, S2A1, S2A2, S2B, S2C, S3A, S3B1, S3B2, S3C1, S3C2, S3D1, S3D2, S3E, Gathered
};

inline const char* to_string(GenClass c) {
  switch (c) {
    case GenClass::S1: return "S1";
    case GenClass::S2A1: return "S2A1";
    case GenClass::S2A2: return "S2A2";
    case GenClass::S2B: return "S2B";
    case GenClass::S2C: return "S2C";
    case GenClass::S3A: return "S3A";
    case GenClass::S3B1: return "S3B1";
    case GenClass::S3B2: return "S3B2";
    case GenClass::S3C1: return "S3C1";
    case GenClass::S3C2: return "S3C2";
    case GenClass::S3D1: return "S3D1";
    case GenClass::S3D2: return "S3D2";
    case GenClass::S3E: return "S3E";
    case GenClass::Gathered: return "gathered";
  }
  return "?";
}

/// A candidate basis vector, stored sparsely (every family has support at
/// most 3, while n can be large). `i` is the family's free index; for S2C it
/// records which of the pair's two indices carries the unity coefficient.
/// Unused index slots are -1. Indices are 0-based internally.
template <class T>
struct Generator {
  GenClass klass = GenClass::Gathered;
  int i = -1, k = -1, l = -1;
  std::vector<std::pair<int, Trop<T>>> entries;  // sorted by index, finite coeffs

  int support_size() const { return static_cast<int>(entries.size()); }

  Trop<T> coeff(int idx) const {
    for (const auto& [p, c] : entries)
      if (p == idx) return c;
    return Trop<T>::bottom();
  }

  TropVector<T> dense(int n) const {
    TropVector<T> v(n);
    for (const auto& [p, c] : entries) v(p) = c;
    return v;
  }

  /// Shift so the maximum coefficient becomes unity (0).
  void canonicalize() {
    Trop<T> top;
    for (const auto& [p, c] : entries) top += c;
    if (top.is_bottom() || top == Trop<T>::unity()) return;
    const Trop<T> shift = inv(top);
    for (auto& [p, c] : entries) c = c * shift;
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.entries == b.entries;
  }
};

/// Strict total order on the underlying vectors: support size first, then
/// lexicographic by position with bottom below every finite entry. Ties
/// (equal vectors) fall back to provenance so that sorting is deterministic.
template <class T>
bool generator_less(const Generator<T>& a, const Generator<T>& b) {
  if (a.support_size() != b.support_size()) return a.support_size() < b.support_size();
  size_t ia = 0, ib = 0;
  while (ia < a.entries.size() && ib < b.entries.size()) {
    const auto& [pa, ca] = a.entries[ia];
    const auto& [pb, cb] = b.entries[ib];
    if (pa == pb) {
      if (ca != cb) return ca < cb;
      ++ia, ++ib;
    } else if (pa < pb) {
      return false;  // a finite where b bottom: a is lexicographically greater
    } else {
      return true;
    }
  }
  if (ia < a.entries.size()) return false;
  if (ib < b.entries.size()) return true;
  return std::make_tuple(a.klass, a.i, a.k, a.l) < std::make_tuple(b.klass, b.i, b.k, b.l);
}

template <class T>
Generator<T> generator_from_dense(const TropVector<T>& v, GenClass klass = GenClass::Gathered,
                                  int i = -1, int k = -1, int l = -1) {
  Generator<T> g;
  g.klass = klass;
  g.i = i;
  g.k = k;
  g.l = l;
  for (Eigen::Index p = 0; p < v.rows(); ++p)
    if (v(p).is_finite()) g.entries.emplace_back(static_cast<int>(p), v(p));
  return g;
}

/// The n-by-n matrix A^{kl} with S^{kl} = { x : A^{kl} x <= x }: row k (and
/// row l when k != l) carry the gamma weights of the pair's dominating
/// constraints, all other rows are row unit vectors.
template <class T>
TropMatrix<T> build_Akl(const TwoRowSystem<T>& sys, const IndexClassification& cls,
                        int k, int l) {
  if (k < 0 || k >= cls.n || !cls.in_J(0, k))
    throw IndexNotInJ("build_Akl: k not in J1");
  if (l < 0 || l >= cls.n || !cls.in_J(1, l))
    throw IndexNotInJ("build_Akl: l not in J2");
  TropMatrix<T> m = identity<T>(cls.n);
  if (k == l) {
    for (int i : cls.I[0]) m(k, i) = gamma(sys, 0, k, i);
    for (int i : cls.I[1]) m(k, i) += gamma(sys, 1, k, i);
  } else {
    for (int i : cls.I[0]) m(k, i) = gamma(sys, 0, k, i);
    for (int i : cls.I[1]) m(l, i) = gamma(sys, 1, l, i);
  }
  return m;
}

/// Closed-form Kleene star of A^{kl}. The off-unit rows only interact when
/// the k-th row sees l (l in I1) or the l-th row sees k (k in I2), and then a
/// single propagation step closes the matrix:
///   star row l = row l + gamma2(l,k) * row k    (k in I2)
///   star row k = row k + gamma1(k,l) * row l    (l in I1)
/// When both couplings are present (Case 5) the star is finite iff the cycle
/// weight gamma1(k,l) * gamma2(l,k) is at most unity; otherwise nullopt.
template <class T>
std::optional<TropMatrix<T>> star_Akl(const TwoRowSystem<T>& sys,
                                      const IndexClassification& cls, int k, int l) {
  TropMatrix<T> m = build_Akl(sys, cls, k, l);
  if (k == l) return m;  // Case 1: single non-unit row, star equals the matrix
  const bool k_in_I2 = cls.in_I(1, k);
  const bool l_in_I1 = cls.in_I(0, l);
  if (!k_in_I2 && !l_in_I1) return m;  // Case 2: rows decoupled
  if (k_in_I2 && l_in_I1) {            // Case 5
    const Trop<T> cycle = gamma(sys, 0, k, l) * gamma(sys, 1, l, k);
    if (cycle > Trop<T>::unity()) return std::nullopt;
    TropMatrix<T> s = m;
    const Trop<T> g2lk = gamma(sys, 1, l, k);
    const Trop<T> g1kl = gamma(sys, 0, k, l);
    for (int j = 0; j < cls.n; ++j) {
      s(l, j) = m(l, j) + g2lk * m(k, j);
      s(k, j) = m(k, j) + g1kl * m(l, j);
    }
    return s;
  }
  if (k_in_I2) {  // Case 3
    const Trop<T> g2lk = gamma(sys, 1, l, k);
    for (int j = 0; j < cls.n; ++j) m(l, j) += g2lk * m(k, j);
  } else {        // Case 4
    const Trop<T> g1kl = gamma(sys, 0, k, l);
    for (int j = 0; j < cls.n; ++j) m(k, j) += g1kl * m(l, j);
  }
  return m;
}

namespace detail {

template <class T>
void push(std::vector<Generator<T>>& out, GenClass klass, int i, int k, int l,
          std::initializer_list<std::pair<int, Trop<T>>> entries) {
  Generator<T> g;
  g.klass = klass;
  g.i = i;
  g.k = k;
  g.l = l;
  g.entries.assign(entries);
  std::sort(g.entries.begin(), g.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [p, c] : g.entries) {
    assert(c.is_finite() && "family preconditions force finite coefficients");
    (void)p, (void)c;
  }
  out.push_back(std::move(g));
}

}  // namespace detail

/// Every candidate generator, tagged with its family and defining indices:
///   S1    e_i                                     i in Ibar1 & Ibar2
///   S2A1  g1(k,i) e_k + e_i                       k in J1 & Ibar2, i in I1 & Ibar2
///   S2A2  g2(l,i) e_l + e_i                       l in J2 & Ibar1, i in I2 & Ibar1
///   S2B   (g1(k,i)+g2(k,i)) e_k + e_i             k in J1 & J2,    i in I1 & I2
///   S2C   g1(k,l) e_k + e_l  and  g2(l,k) e_l + e_k,   (k,l) in W
///   S3A   g1(k,i) e_k + g2(l,i) e_l + e_i         k != l (k = l collapses to S2B)
///   S3B1  g1(k,l)g2(l,i) e_k + g2(l,i) e_l + e_i
///   S3B2  g2(l,k)g1(k,i) e_l + g1(k,i) e_k + e_i
///   S3C1  (g1(k,i)+g1(k,l)g2(l,i)) e_k + g2(l,i) e_l + e_i
///   S3C2  (g2(l,i)+g2(l,k)g1(k,i)) e_l + g1(k,i) e_k + e_i
///   S3D1/S3D2/S3E   only for (k,l) in W; i = k resp. i = l excluded (those
///                   degenerate to the S2C columns)
/// where W = { (k,l) in (J1 & I2) x (J2 & I1) : g1(k,l) * g2(l,k) <= unity }.
template <class T>
std::vector<Generator<T>> enumerate_candidates(const TwoRowSystem<T>& sys,
                                               const IndexClassification& cls) {
  assert(!cls.J[0].empty() && !cls.J[1].empty() &&
         "degenerate systems are reduced upstream");
  const Trop<T> one = Trop<T>::unity();
  auto g1 = [&](int k, int i) { return gamma(sys, 0, k, i); };
  auto g2 = [&](int l, int i) { return gamma(sys, 1, l, i); };
  auto filter = [](const std::vector<int>& from, auto pred) {
    std::vector<int> r;
    for (int i : from)
      if (pred(i)) r.push_back(i);
    return r;
  };

  const std::vector<int> J1Ibar2 = filter(cls.J[0], [&](int i) { return cls.in_Ibar(1, i); });
  const std::vector<int> J2Ibar1 = filter(cls.J[1], [&](int i) { return cls.in_Ibar(0, i); });
  const std::vector<int> J1I2 = filter(cls.J[0], [&](int i) { return cls.in_I(1, i); });
  const std::vector<int> J2I1 = filter(cls.J[1], [&](int i) { return cls.in_I(0, i); });
  const std::vector<int> J1J2 = filter(cls.J[0], [&](int i) { return cls.in_J(1, i); });
  const std::vector<int> I1Ibar2 = filter(cls.I[0], [&](int i) { return cls.in_Ibar(1, i); });
  const std::vector<int> I2Ibar1 = filter(cls.I[1], [&](int i) { return cls.in_Ibar(0, i); });
  const std::vector<int> I1I2 = filter(cls.I[0], [&](int i) { return cls.in_I(1, i); });
  const std::vector<int> Ibar1Ibar2 =
      filter(cls.Ibar[0], [&](int i) { return cls.in_Ibar(1, i); });

  std::vector<Generator<T>> out;

  for (int i : Ibar1Ibar2) detail::push<T>(out, GenClass::S1, i, -1, -1, {{i, one}});

  for (int k : J1Ibar2)
    for (int i : I1Ibar2)
      detail::push<T>(out, GenClass::S2A1, i, k, -1, {{k, g1(k, i)}, {i, one}});

  for (int l : J2Ibar1)
    for (int i : I2Ibar1)
      detail::push<T>(out, GenClass::S2A2, i, -1, l, {{l, g2(l, i)}, {i, one}});

  for (int k : J1J2)
    for (int i : I1I2)
      detail::push<T>(out, GenClass::S2B, i, k, -1, {{k, g1(k, i) + g2(k, i)}, {i, one}});

  auto in_W = [&](int k, int l) { return g1(k, l) * g2(l, k) <= one; };

  for (int k : J1I2)
    for (int l : J2I1)
      if (in_W(k, l)) {
        detail::push<T>(out, GenClass::S2C, l, k, l, {{k, g1(k, l)}, {l, one}});
        detail::push<T>(out, GenClass::S2C, k, k, l, {{l, g2(l, k)}, {k, one}});
      }

  for (int k : J1Ibar2)
    for (int l : J2Ibar1) {
      if (k == l) continue;
      for (int i : I1I2)
        detail::push<T>(out, GenClass::S3A, i, k, l,
                        {{k, g1(k, i)}, {l, g2(l, i)}, {i, one}});
    }

  for (int k : J1Ibar2)
    for (int l : J2I1)
      for (int i : I2Ibar1)
        detail::push<T>(out, GenClass::S3B1, i, k, l,
                        {{k, g1(k, l) * g2(l, i)}, {l, g2(l, i)}, {i, one}});

  for (int k : J1I2)
    for (int l : J2Ibar1)
      for (int i : I1Ibar2)
        detail::push<T>(out, GenClass::S3B2, i, k, l,
                        {{l, g2(l, k) * g1(k, i)}, {k, g1(k, i)}, {i, one}});

  for (int k : J1Ibar2)
    for (int l : J2I1)
      for (int i : I1I2)
        detail::push<T>(out, GenClass::S3C1, i, k, l,
                        {{k, g1(k, i) + g1(k, l) * g2(l, i)}, {l, g2(l, i)}, {i, one}});

  for (int k : J1I2)
    for (int l : J2Ibar1)
      for (int i : I1I2)
        detail::push<T>(out, GenClass::S3C2, i, k, l,
                        {{l, g2(l, i) + g2(l, k) * g1(k, i)}, {k, g1(k, i)}, {i, one}});

  for (int k : J1I2)
    for (int l : J2I1) {
      if (!in_W(k, l)) continue;
      for (int i : I2Ibar1) {
        if (i == k) continue;
        detail::push<T>(out, GenClass::S3D1, i, k, l,
                        {{k, g1(k, l) * g2(l, i)}, {l, g2(l, i)}, {i, one}});
      }
      for (int i : I1Ibar2) {
        if (i == l) continue;
        detail::push<T>(out, GenClass::S3D2, i, k, l,
                        {{l, g2(l, k) * g1(k, i)}, {k, g1(k, i)}, {i, one}});
      }
      for (int i : I1I2)
        detail::push<T>(out, GenClass::S3E, i, k, l,
                        {{l, g2(l, i) + g2(l, k) * g1(k, i)},
                         {k, g1(k, i) + g1(k, l) * g2(l, i)},
                         {i, one}});
    }

  return out;
}

}  // namespace tropcone
