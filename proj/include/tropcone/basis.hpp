#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "tropcone/generators.hpp"

namespace tropcone {

/// Auxiliary sets driving the per-family extremality conditions.
///   W    = { (k,l) in (J1&I2)x(J2&I1) : g1(k,l) g2(l,k) <= unity },  Wbar its complement
///   L1(i) = { t in J1&J2 : g1(t,i) < g2(t,i) },   L2(i) symmetric
///   M1(i,l) = { t in J1&J2 : g1(t,l) g2(l,i) < g2(t,i) },   M2(i,k) symmetric
///   N1(i,l) = L1(i) & M1(i,l),                    N2(i,k) = L2(i) & M2(i,k)
/// The tables are stored over full index ranges; entries outside the defining
/// domains are false.
class AuxSets {
 public:
  int n = 0;

  bool in_W(int k, int l) const { return w_[pos2(k, l)] != 0; }
  bool in_Wbar(int k, int l) const { return wbar_[pos2(k, l)] != 0; }
  bool in_L1(int i, int t) const { return l1_[pos2(i, t)] != 0; }
  bool in_L2(int i, int t) const { return l2_[pos2(i, t)] != 0; }
  bool in_M1(int i, int l, int t) const { return m1_[pos3(i, l, t)] != 0; }
  bool in_M2(int i, int k, int t) const { return m2_[pos3(i, k, t)] != 0; }
  bool in_N1(int i, int l, int t) const { return in_L1(i, t) && in_M1(i, l, t); }
  bool in_N2(int i, int k, int t) const { return in_L2(i, t) && in_M2(i, k, t); }

  std::vector<std::pair<int, int>> W_pairs;  // sorted (k,l) with membership in W

  template <class T>
  friend AuxSets compute_aux(const TwoRowSystem<T>& sys, const IndexClassification& cls);

 private:
  size_t pos2(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b);
  }
  size_t pos3(int a, int b, int c) const {
    return (static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)) *
               static_cast<size_t>(n) +
           static_cast<size_t>(c);
  }
  std::vector<unsigned char> w_, wbar_, l1_, l2_, m1_, m2_;
};

template <class T>
AuxSets compute_aux(const TwoRowSystem<T>& sys, const IndexClassification& cls) {
  AuxSets aux;
  const int n = cls.n;
  aux.n = n;
  const size_t n2 = static_cast<size_t>(n) * static_cast<size_t>(n);
  aux.w_.assign(n2, 0);
  aux.wbar_.assign(n2, 0);
  aux.l1_.assign(n2, 0);
  aux.l2_.assign(n2, 0);
  aux.m1_.assign(n2 * static_cast<size_t>(n), 0);
  aux.m2_.assign(n2 * static_cast<size_t>(n), 0);

  auto g1 = [&](int k, int i) { return gamma(sys, 0, k, i); };
  auto g2 = [&](int l, int i) { return gamma(sys, 1, l, i); };
  const Trop<T> one = Trop<T>::unity();

  for (int k : cls.J[0]) {
    if (!cls.in_I(1, k)) continue;
    for (int l : cls.J[1]) {
      if (!cls.in_I(0, l)) continue;
      if (g1(k, l) * g2(l, k) <= one) {
        aux.w_[aux.pos2(k, l)] = 1;
        aux.W_pairs.emplace_back(k, l);
      } else {
        aux.wbar_[aux.pos2(k, l)] = 1;
      }
    }
  }

  for (int t : cls.J[0]) {
    if (!cls.in_J(1, t)) continue;  // t in J1 & J2
    for (int i = 0; i < n; ++i) {
      const Trop<T> a = g1(t, i), b = g2(t, i);
      if (a < b) aux.l1_[aux.pos2(i, t)] = 1;
      if (b < a) aux.l2_[aux.pos2(i, t)] = 1;
    }
  }

  for (int l : cls.J[1])
    for (int i = 0; i < n; ++i) {
      const Trop<T> g2li = g2(l, i);
      for (int t : cls.J[0]) {
        if (!cls.in_J(1, t)) continue;
        if (g1(t, l) * g2li < g2(t, i)) aux.m1_[aux.pos3(i, l, t)] = 1;
      }
    }

  for (int k : cls.J[0])
    for (int i = 0; i < n; ++i) {
      const Trop<T> g1ki = g1(k, i);
      for (int t : cls.J[0]) {
        if (!cls.in_J(1, t)) continue;
        if (g2(t, k) * g1ki < g1(t, i)) aux.m2_[aux.pos3(i, k, t)] = 1;
      }
    }

  return aux;
}

/// x <=_i y : both have finite i-th coordinate, and after normalizing that
/// coordinate to unity, x is componentwise below y.
template <class T>
bool leq_i(const TropVector<T>& x, const TropVector<T>& y, int i) {
  if (x(i).is_bottom() || y(i).is_bottom()) return false;
  const Trop<T> xi = inv(x(i)), yi = inv(y(i));
  for (Eigen::Index j = 0; j < x.rows(); ++j)
    if (!(x(j) * xi <= y(j) * yi)) return false;
  return true;
}

template <class T>
TropVector<T> canonical(const TropVector<T>& v) {
  Trop<T> top;
  for (Eigen::Index j = 0; j < v.rows(); ++j) top += v(j);
  if (top.is_bottom() || top == Trop<T>::unity()) return v;
  return scaled(inv(top), v);
}

/// Multiorder principle: y (a member of the generating set S) is extremal in
/// cone(S) iff it is i-minimal for some i in its support, i.e. no member of S
/// other than a multiple of y precedes it under <=_i.
template <class T>
bool is_extremal_multiorder(const TropVector<T>& y, const std::vector<TropVector<T>>& S) {
  const TropVector<T> cy = canonical(y);
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    if (y(i).is_bottom()) continue;
    bool minimal = true;
    for (const TropVector<T>& z : S) {
      if (equal<T>(canonical(z), cy)) continue;
      if (leq_i(z, y, static_cast<int>(i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) return true;
  }
  return false;
}

/// Extremal members of S, canonical and deduplicated, via the multiorder
/// principle only. Quadratic in |S|; this is the verification path.
template <class T>
std::vector<TropVector<T>> filter_extremals(const std::vector<TropVector<T>>& S) {
  std::vector<TropVector<T>> canon;
  canon.reserve(S.size());
  for (const TropVector<T>& v : S) canon.push_back(canonical(v));
  std::vector<TropVector<T>> out;
  for (size_t a = 0; a < canon.size(); ++a) {
    bool dup = false;
    for (size_t b = 0; b < a && !dup; ++b) dup = equal<T>(canon[a], canon[b]);
    if (dup) continue;
    if (is_extremal_multiorder(canon[a], canon)) out.push_back(canon[a]);
  }
  return out;
}

/// Residuation-based cone membership: the largest scalars lambda_z with
/// lambda_z z <= y are lambda_z = min_{j in supp(z)} (y_j - z_j); y lies in
/// cone(S) iff the max-combination with those scalars reproduces y.
/// Returns the scalars on success, nullopt otherwise.
template <class T>
std::optional<std::vector<Trop<T>>> decompose(const TropVector<T>& y,
                                              const std::vector<TropVector<T>>& S) {
  const Eigen::Index n = y.rows();
  std::vector<Trop<T>> lambda(S.size());
  TropVector<T> rebuilt(n);
  for (size_t s = 0; s < S.size(); ++s) {
    const TropVector<T>& z = S[s];
    bool has_support = false;
    Trop<T> lam;
    bool first = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (z(j).is_bottom()) continue;
      has_support = true;
      if (y(j).is_bottom()) {
        lam = Trop<T>::bottom();
        first = false;
        break;
      }
      const Trop<T> q = y(j) * inv(z(j));
      if (first || q < lam) lam = q;
      first = false;
    }
    if (!has_support) lam = Trop<T>::bottom();  // the zero vector contributes nothing
    lambda[s] = lam;
    for (Eigen::Index j = 0; j < n; ++j) rebuilt(j) += lam * z(j);
  }
  for (Eigen::Index j = 0; j < n; ++j)
    if (rebuilt(j) != y(j)) return std::nullopt;
  return lambda;
}

/// The basis: an independent generating set in canonical scaling, sorted by
/// (support size, lexicographic coordinates), provenance retained.
template <class T>
struct Basis {
  int n = 0;
  std::vector<Generator<T>> gens;

  std::vector<TropVector<T>> dense_all() const {
    std::vector<TropVector<T>> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(g.dense(n));
    return v;
  }

  friend bool operator==(const Basis& a, const Basis& b) {
    if (a.n != b.n || a.gens.size() != b.gens.size()) return false;
    for (size_t i = 0; i < a.gens.size(); ++i)
      if (!(a.gens[i].entries == b.gens[i].entries)) return false;
    return true;
  }
};

namespace detail {

/// Closed-form extremality test for one candidate, paper conditions per family.
template <class T>
bool candidate_in_basis(const Generator<T>& g, const TwoRowSystem<T>& sys,
                        const IndexClassification& cls, const AuxSets& aux) {
  auto K1 = [&](int i) { return cls.in_K(0, i); };
  auto K2 = [&](int i) { return cls.in_K(1, i); };
  switch (g.klass) {
    case GenClass::S1:
    case GenClass::S2A1:
    case GenClass::S2A2:
    case GenClass::S2B:
      return true;
    case GenClass::S2C: {
      // proportional pair (cycle weight exactly unity): keep the member whose
      // unity coefficient sits at l, drop the one at k
      if (g.i != g.k) return true;
      return gamma(sys, 0, g.k, g.l) * gamma(sys, 1, g.l, g.k) != Trop<T>::unity();
    }
    case GenClass::S3A:
      return (K2(g.k) || aux.in_L1(g.i, g.k)) && (K1(g.l) || aux.in_L2(g.i, g.l));
    case GenClass::S3B1:
      return (K1(g.i) || aux.in_Wbar(g.i, g.l)) && (K2(g.k) || aux.in_M1(g.i, g.l, g.k));
    case GenClass::S3B2:
      return (K2(g.i) || aux.in_Wbar(g.k, g.i)) && (K1(g.l) || aux.in_M2(g.i, g.k, g.l));
    case GenClass::S3C1:
      return K2(g.k) || aux.in_N1(g.i, g.l, g.k);
    case GenClass::S3C2:
      return K1(g.l) || aux.in_N2(g.i, g.k, g.l);
    case GenClass::S3D1:
      return K1(g.i) || aux.in_Wbar(g.i, g.l);
    case GenClass::S3D2:
      return K2(g.i) || aux.in_Wbar(g.k, g.i);
    case GenClass::S3E:
      return true;
    case GenClass::Gathered:
      break;
  }
  assert(false && "gathered candidates have no closed-form condition");
  return false;
}

}  // namespace detail

/// Applies the per-family conditions, canonicalizes, deduplicates and sorts.
template <class T>
Basis<T> select_basis(const TwoRowSystem<T>& sys, const IndexClassification& cls,
                      const AuxSets& aux, const std::vector<Generator<T>>& candidates) {
  Basis<T> basis;
  basis.n = cls.n;
  basis.gens.reserve(candidates.size());
  for (const Generator<T>& g : candidates)
    if (detail::candidate_in_basis(g, sys, cls, aux)) basis.gens.push_back(g);
  for (Generator<T>& g : basis.gens) g.canonicalize();
  std::sort(basis.gens.begin(), basis.gens.end(), generator_less<T>);
  basis.gens.erase(std::unique(basis.gens.begin(), basis.gens.end()), basis.gens.end());
  return basis;
}

/// Full pipeline: classify -> reduce degenerate coordinates/rows ->
/// enumerate candidate families -> closed-form selection -> re-embed.
template <class T>
Basis<T> compute_basis(const TwoRowSystem<T>& sys) {
  const ReducedSystem<T> red = reduce_degenerate(sys);
  Basis<T> basis;
  basis.n = sys.n();
  if (red.coords.empty()) return basis;  // only the zero vector solves

  const IndexClassification cls = classify(red.sys);
  const AuxSets aux = compute_aux(red.sys, cls);
  const std::vector<Generator<T>> cands = enumerate_candidates(red.sys, cls);
  Basis<T> reduced = select_basis(red.sys, cls, aux, cands);

  if (red.identity) {
    reduced.n = basis.n;
    return reduced;
  }
  auto remap = [&](int idx) { return idx < 0 ? -1 : red.coords[static_cast<size_t>(idx)]; };
  for (Generator<T>& g : reduced.gens) {
    g.i = remap(g.i);
    g.k = remap(g.k);
    g.l = remap(g.l);
    for (auto& [p, c] : g.entries) p = remap(p);
  }
  basis.gens = std::move(reduced.gens);
  return basis;
}

}  // namespace tropcone
