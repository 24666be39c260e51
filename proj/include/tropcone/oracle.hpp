#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tropcone/basis.hpp"

namespace tropcone {

/// Brute-force generating set for the solution cone of a (non-degenerate)
/// system: every column of the generic Kleene star of every A^{kl}, with the
/// unit vectors at Ibar1 & Ibar2 substituted for pairs whose star diverges.
/// No closed-form stars, no family conditions. Canonical, deduplicated.
template <class T>
std::vector<Generator<T>> oracle_gather(const TwoRowSystem<T>& sys,
                                        const IndexClassification& cls) {
  std::vector<Generator<T>> cols;
  for (int k : cls.J[0])
    for (int l : cls.J[1]) {
      const TropMatrix<T> akl = build_Akl(sys, cls, k, l);
      const std::optional<TropMatrix<T>> star = kleene_star(akl);
      if (star) {
        for (int j = 0; j < cls.n; ++j) {
          TropVector<T> col = star->col(j);
          cols.push_back(generator_from_dense<T>(col, GenClass::Gathered, j, k, l));
        }
      } else {
        for (int j : cls.Ibar[0]) {
          if (!cls.in_Ibar(1, j)) continue;
          cols.push_back(
              generator_from_dense<T>(unit_vector<T>(cls.n, j), GenClass::Gathered, j, k, l));
        }
      }
    }
  for (Generator<T>& g : cols) g.canonicalize();
  std::sort(cols.begin(), cols.end(), generator_less<T>);
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

/// Independent basis computation: gather star columns the brute-force way,
/// then keep exactly the multiorder-extremal ones. Shares only the upstream
/// degenerate-system reduction with the fast path. Intended for small n.
template <class T>
Basis<T> oracle_basis(const TwoRowSystem<T>& sys) {
  const ReducedSystem<T> red = reduce_degenerate(sys);
  Basis<T> basis;
  basis.n = sys.n();
  if (red.coords.empty()) return basis;

  const IndexClassification cls = classify(red.sys);
  std::vector<Generator<T>> gathered = oracle_gather(red.sys, cls);

  std::vector<TropVector<T>> dense;
  dense.reserve(gathered.size());
  for (const auto& g : gathered) dense.push_back(g.dense(cls.n));
  for (size_t a = 0; a < gathered.size(); ++a)
    if (is_extremal_multiorder(dense[a], dense)) basis.gens.push_back(gathered[a]);

  if (!red.identity) {
    auto remap = [&](int idx) { return idx < 0 ? -1 : red.coords[static_cast<size_t>(idx)]; };
    for (Generator<T>& g : basis.gens) {
      g.i = remap(g.i);
      g.k = remap(g.k);
      g.l = remap(g.l);
      for (auto& [p, c] : g.entries) p = remap(p);
    }
  }
  return basis;
}

template <class T>
struct OracleReport {
  bool basis_match = false;
  std::vector<TropVector<T>> missing;               // in oracle basis, not fast path
  std::vector<TropVector<T>> extra;                 // in fast path, not oracle basis
  std::vector<TropVector<T>> solution_violations;   // fast-path elements failing Ax <= Bx
  std::vector<TropVector<T>> membership_failures;   // gathered columns outside cone(fast basis)
};

/// Checks a proposed basis against the brute-force path: set equality with
/// oracle_basis, solution property of each element, and regenerability of
/// every gathered star column.
template <class T>
OracleReport<T> verify_against(const TwoRowSystem<T>& sys, const Basis<T>& fast) {
  OracleReport<T> report;
  const Basis<T> slow = oracle_basis(sys);

  auto contains = [](const std::vector<TropVector<T>>& set, const TropVector<T>& v) {
    for (const auto& w : set)
      if (equal<T>(w, v)) return true;
    return false;
  };
  const std::vector<TropVector<T>> fast_dense = fast.dense_all();
  const std::vector<TropVector<T>> slow_dense = slow.dense_all();
  for (const auto& v : slow_dense)
    if (!contains(fast_dense, v)) report.missing.push_back(v);
  for (const auto& v : fast_dense)
    if (!contains(slow_dense, v)) report.extra.push_back(v);
  report.basis_match = report.missing.empty() && report.extra.empty();

  for (const auto& v : fast_dense)
    if (!is_solution(sys, v)) report.solution_violations.push_back(v);

  const ReducedSystem<T> red = reduce_degenerate(sys);
  if (!red.coords.empty()) {
    const IndexClassification cls = classify(red.sys);
    for (const Generator<T>& g : oracle_gather(red.sys, cls)) {
      TropVector<T> v(sys.n());
      for (const auto& [p, c] : g.entries)
        v(red.identity ? p : red.coords[static_cast<size_t>(p)]) = c;
      if (!decompose(v, fast_dense)) report.membership_failures.push_back(v);
    }
  }
  return report;
}

template <class T>
OracleReport<T> cross_check(const TwoRowSystem<T>& sys) {
  return verify_against(sys, compute_basis(sys));
}

}  // namespace tropcone
