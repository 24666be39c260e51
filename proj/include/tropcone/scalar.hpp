#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "tropcone/error.hpp"

namespace tropcone {

namespace detail {
#if defined(__SIZEOF_INT128__)
__extension__ typedef __int128 Wide;
#else
#error "128-bit integer support is required for exact rational arithmetic"
#endif
}  // namespace detail

/// Exact rational with normalized (reduced, positive-denominator) representation.
/// Arithmetic goes through 128-bit intermediates so that the knife-edge
/// comparisons of the solver never see rounding or overflow.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) {
    assert(d != 0);
    detail::Wide nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    detail::Wide g = gcd128(nn < 0 ? -nn : nn, dd);
    if (g > 1) { nn /= g; dd /= g; }
    num_ = narrow(nn);
    den_ = narrow(dd);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<detail::Wide>(a.num_) * b.den_ + static_cast<detail::Wide>(b.num_) * a.den_,
                static_cast<detail::Wide>(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(static_cast<detail::Wide>(a.num_) * b.den_ - static_cast<detail::Wide>(b.num_) * a.den_,
                static_cast<detail::Wide>(a.den_) * b.den_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<detail::Wide>(a.num_) * b.den_ < static_cast<detail::Wide>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  static detail::Wide gcd128(detail::Wide a, detail::Wide b) {
    while (b != 0) {
      detail::Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static long long narrow(detail::Wide v) {
    assert(v <= static_cast<detail::Wide>(INT64_MAX) && v >= static_cast<detail::Wide>(INT64_MIN));
    return static_cast<long long>(v);
  }
  static Rat make(detail::Wide n, detail::Wide d) {
    if (d < 0) { n = -n; d = -d; }
    detail::Wide g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  long long num_;
  long long den_;
};

/// Max-plus semiring element over an exact payload T (long long or Rat):
/// either a finite value or bottom (-inf, the semiring zero).
///
///   a + b  = max(a, b)        (tropical addition, zero = bottom)
///   a * b  = a plus b         (tropical multiplication, unity = finite 0)
///   inv(a) = -a               (tropical inverse, undefined for bottom)
///
/// Bottom is a tagged state, never a sentinel payload value.
template <class T>
class Trop {
 public:
  constexpr Trop() : fin_(false), v_() {}
  constexpr Trop(T v) : fin_(true), v_(std::move(v)) {}  // NOLINT: implicit by design

  static constexpr Trop bottom() { return Trop(); }
  static constexpr Trop unity() { return Trop(T(0)); }

  constexpr bool is_bottom() const { return !fin_; }
  constexpr bool is_finite() const { return fin_; }
  constexpr const T& value() const {
    assert(fin_);
    return v_;
  }

  friend constexpr Trop operator+(const Trop& a, const Trop& b) {
    if (!a.fin_) return b;
    if (!b.fin_) return a;
    return Trop(a.v_ < b.v_ ? b.v_ : a.v_);
  }
  friend constexpr Trop operator*(const Trop& a, const Trop& b) {
    if (!a.fin_ || !b.fin_) return Trop();
    return Trop(a.v_ + b.v_);
  }
  Trop& operator+=(const Trop& o) { return *this = *this + o; }
  Trop& operator*=(const Trop& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Trop& a, const Trop& b) {
    return a.fin_ == b.fin_ && (!a.fin_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(const Trop& a, const Trop& b) { return !(a == b); }
  // Total order with bottom below every finite value.
  friend constexpr bool operator<(const Trop& a, const Trop& b) {
    if (!a.fin_) return b.fin_;
    if (!b.fin_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(const Trop& a, const Trop& b) { return !(b < a); }
  friend constexpr bool operator>(const Trop& a, const Trop& b) { return b < a; }
  friend constexpr bool operator>=(const Trop& a, const Trop& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Trop& t) {
    if (!t.fin_) return os << "-inf";
    return os << t.v_;
  }

 private:
  bool fin_;
  T v_;
};

template <class T>
Trop<T> inv(const Trop<T>& a) {
  if (a.is_bottom()) throw InversionOfBottom();
  return Trop<T>(-a.value());
}

using Int = long long;

}  // namespace tropcone
