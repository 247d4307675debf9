#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwlab/monomial.hpp"
#include "pwlab/rational.hpp"

namespace pwlab {

// Sparse multivariate polynomial over Rational. Terms are kept in a sorted
// map under graded-lex order; zero coefficients are never stored, so the zero
// polynomial is exactly the empty map.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Rational constant_value() const;  // requires is_constant()
  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg(); }
  int degree_in(int var) const;
  size_t term_count() const { return terms_.size(); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  // Grlex-leading term; requires nonzero.
  const Monomial& lead_mono() const { return terms_.rbegin()->first; }
  const Rational& lead_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly mono_mul(const Monomial& m, const Rational& c) const;
  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// Exact division: requires that b divides a termwise-exactly as polynomials;
// throws std::domain_error otherwise.
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);

// Whether b divides a exactly (runs the division, no throw).
bool poly_divides(const MultiPoly& b, const MultiPoly& a);

// GCD over Q[x1..xk], normalized so the grlex-leading coefficient is 1.
// gcd(0,0) = 0; gcd(a,0) = a/lc(a).
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace pwlab
