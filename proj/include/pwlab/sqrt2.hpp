#pragma once

#include <stdexcept>
#include <string>

namespace pwlab {

// Element a + b*sqrt(2) of the quadratic extension of a commutative ring T.
// Keeps all sqrt(2) factors exact; over a field T it is itself a field since
// 2 is not a square of any ratio of field elements we use (rationals and
// rational functions over Q).
template <class T>
struct Sq2 {
  T a{};  // rational part
  T b{};  // coefficient of sqrt(2)

  Sq2() = default;
  Sq2(T ra) : a(std::move(ra)) {}  // NOLINT: implicit lift is intended
  Sq2(T ra, T rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Sq2 sqrt2_times(const T& v) { return Sq2(T{}, v); }
  static Sq2 sqrt2() { return Sq2(T{}, T(1)); }  // only for scalar T with a unit ctor

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  Sq2 operator-() const { return Sq2(-a, -b); }
  Sq2& operator+=(const Sq2& o) { a += o.a; b += o.b; return *this; }
  Sq2& operator-=(const Sq2& o) { a -= o.a; b -= o.b; return *this; }
  friend Sq2 operator+(Sq2 x, const Sq2& y) { return x += y; }
  friend Sq2 operator-(Sq2 x, const Sq2& y) { return x -= y; }
  friend Sq2 operator*(const Sq2& x, const Sq2& y) {
    T two = y.b + y.b;
    return Sq2(x.a * y.a + x.b * two, x.a * y.b + x.b * y.a);
  }
  Sq2& operator*=(const Sq2& o) { return *this = *this * o; }

  // Multiplication by sqrt(2).
  Sq2 times_sqrt2() const { return Sq2(b + b, a); }

  Sq2 inv() const {
    // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2)
    T norm = a * a - (b * b + b * b);
    if (norm.is_zero()) throw std::domain_error("Sq2: inverse of zero (or non-unit)");
    return Sq2(a / norm, -(b / norm));
  }
  friend Sq2 operator/(const Sq2& x, const Sq2& y) { return x * y.inv(); }

  friend bool operator==(const Sq2& x, const Sq2& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Sq2& x, const Sq2& y) { return !(x == y); }
};

}  // namespace pwlab
