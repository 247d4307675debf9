#include "pwlab/ratfunc.hpp"

#include <stdexcept>

namespace pwlab {

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (num.nvars() != den.nvars()) throw std::invalid_argument("RatFunc: variable count mismatch");
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
}

MultiPoly RatFunc::as_polynomial() const {
  if (!den_.is_constant()) {
    RatFunc n = normalized();
    if (!n.den_.is_constant()) throw std::domain_error("RatFunc: not a polynomial");
    return n.num_.scaled(n.den_.constant_value().inv());
  }
  return num_.scaled(den_.constant_value().inv());
}

RatFunc RatFunc::operator-() const { return raw(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::raw(a.num_ + b.num_, a.den_);
  return RatFunc::raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return RatFunc::raw(a.num_ - b.num_, a.den_);
  return RatFunc::raw(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.nvars());
  return RatFunc::raw(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  if (a.is_zero()) return RatFunc::zero(a.nvars());
  return RatFunc::raw(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative(int var) const {
  if (is_polynomial()) return raw(num_.derivative(var), den_);
  // (n/d)' = (n'd - nd')/d^2
  return raw(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::normalized() const {
  if (is_zero()) return zero(nvars());
  MultiPoly n = num_, d = den_;
  MultiPoly g = poly_gcd(n, d);
  if (!g.is_constant()) {
    n = poly_divexact(n, g);
    d = poly_divexact(d, g);
  }
  Rational lc = d.lead_coeff();
  if (!lc.is_one()) {
    Rational inv = lc.inv();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return raw(std::move(n), std::move(d));
}

Rational RatFunc::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d.is_zero()) {
    RatFunc r = normalized();
    d = r.den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
    return r.num_.evaluate(point) / d;
  }
  return num_.evaluate(point) / d;
}

double RatFunc::evaluate_double(const std::vector<double>& point) const {
  return num_.evaluate_double(point) / den_.evaluate_double(point);
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (is_polynomial()) {
    MultiPoly p = num_.scaled(den_.constant_value().inv());
    return p.str(names);
  }
  return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

}  // namespace pwlab
