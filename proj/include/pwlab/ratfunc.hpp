#pragma once

#include <string>
#include <vector>

#include "pwlab/poly.hpp"

namespace pwlab {

// Rational function num/den over MultiPoly. The denominator is always a
// nonzero polynomial. Reduction is lazy: arithmetic does not run gcds, and
// exactness guarantees that the value is identically zero iff num is the zero
// polynomial, so is_zero() needs no normalization. normalize() divides out
// the gcd and rescales so the denominator is monic in graded-lex order.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}
  explicit RatFunc(const MultiPoly& num)
      : num_(num), den_(MultiPoly::constant(num.nvars(), Rational(1))) {}
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  static RatFunc zero(int nvars) { return RatFunc(MultiPoly::zero(nvars)); }
  static RatFunc constant(int nvars, const Rational& c) {
    return RatFunc(MultiPoly::constant(nvars, c));
  }
  static RatFunc variable(int nvars, int i) { return RatFunc(MultiPoly::variable(nvars, i)); }

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  // Polynomial content; requires a constant denominator (normalize first for
  // general inputs).
  MultiPoly as_polynomial() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc scaled(const Rational& c) const { return RatFunc::raw(num_.scaled(c), den_); }

  // Exact equality of values (cross-multiplication; no normalization).
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_ == b.num_ * a.den_);
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(int var) const;

  // Fully reduced representative, monic denominator.
  RatFunc normalized() const;

  // Exact evaluation; throws std::domain_error on a denominator zero.
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  static RatFunc raw(MultiPoly n, MultiPoly d) {
    RatFunc f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
  }
  MultiPoly num_, den_;
};

}  // namespace pwlab
