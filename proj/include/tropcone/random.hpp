#pragma once

#include <cstdint>
#include <random>

#include "tropcone/system.hpp"

namespace tropcone {

/// Deterministic bounded draw (rejection sampling on top of mt19937_64, so
/// results do not depend on the standard library's distribution internals).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long long uniform(long long lo, long long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    return uniform(0, static_cast<long long>(den) - 1) < static_cast<long long>(num);
  }

 private:
  std::mt19937_64 eng_;
};

/// Random system: each entry is bottom with probability bottom_pct/100, else
/// uniform in [lo, hi].
template <class T = Int>
TwoRowSystem<T> random_system(int n, Rng& rng, int bottom_pct, long long lo, long long hi) {
  TropMatrix<T> a(2, n), b(2, n);
  auto draw = [&]() -> Trop<T> {
    if (bottom_pct > 0 && rng.chance(static_cast<std::uint64_t>(bottom_pct), 100))
      return Trop<T>::bottom();
    return Trop<T>(T(rng.uniform(lo, hi)));
  };
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < n; ++i) {
      a(r, i) = draw();
      b(r, i) = draw();
    }
  return TwoRowSystem<T>(std::move(a), std::move(b));
}

template <class T = Int>
TropMatrix<T> random_matrix(int rows, int cols, Rng& rng, int bottom_pct, long long lo,
                            long long hi) {
  TropMatrix<T> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (bottom_pct > 0 && rng.chance(static_cast<std::uint64_t>(bottom_pct), 100))
        m(r, c) = Trop<T>::bottom();
      else
        m(r, c) = Trop<T>(T(rng.uniform(lo, hi)));
    }
  return m;
}

template <class T = Int>
TropVector<T> random_vector(int n, Rng& rng, int bottom_pct, long long lo, long long hi) {
  TropVector<T> v(n);
  for (int i = 0; i < n; ++i) {
    if (bottom_pct > 0 && rng.chance(static_cast<std::uint64_t>(bottom_pct), 100))
      v(i) = Trop<T>::bottom();
    else
      v(i) = Trop<T>(T(rng.uniform(lo, hi)));
  }
  return v;
}

}  // namespace tropcone
