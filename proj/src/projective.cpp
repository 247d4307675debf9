#include "pwlab/projective.hpp"

#include <iostream>

namespace pwlab {

namespace {

std::ostream* g_log = &std::cerr;

void note(const char* msg) {
  if (g_log) (*g_log) << "[projective] " << msg << "\n";
}

// Special representative of the projective class of D (constant volume).
Connection special_rep(const Connection& D) {
  if (is_special(D)) return D;
  note("input connection is not special; normalizing by a projective change");
  return make_special(D);
}

}  // namespace

void set_projective_log(std::ostream* os) { g_log = os; }

Connection projective_change(const Connection& D, const TensorField& upsilon) {
  const Chart& ch = D.chart();
  const int n = ch.dim;
  TensorField g = D.gamma();
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (c == b) g.at({c, a, b}) += upsilon.at({a});
        if (c == a) g.at({c, a, b}) += upsilon.at({b});
      }
  return Connection(g);
}

bool is_special(const Connection& D, const MultiPoly& volume) {
  TensorField tr = D.trace();
  RatFunc vol{volume};
  for (int b = 0; b < D.dim(); ++b) {
    RatFunc lhs = vol * tr.at({b});
    RatFunc rhs{volume.derivative(b)};
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

bool is_special(const Connection& D) {
  return is_special(D, MultiPoly::constant(D.dim(), Rational(1)));
}

TensorField normalizing_upsilon(const Connection& D) {
  return D.trace().scaled(Rational(-1, D.dim() + 1));
}

Connection make_special(const Connection& D) {
  return projective_change(D, normalizing_upsilon(D));
}

TensorField proj_schouten(const Connection& D) {
  Connection S = special_rep(D);
  return ricci(S).scaled(Rational(1, S.dim() - 1));
}

TensorField proj_schouten_general(const Connection& D) {
  const int n = D.dim();
  TensorField ric = ricci(D);
  TensorField sym = symmetrize(ric, {0, 1});
  TensorField asym = antisymmetrize(ric, {0, 1});
  return sym.scaled(Rational(1, n - 1)) + asym.scaled(Rational(1, n + 1));
}

namespace {

// W = R + P_{AD} delta^C_B - P_{BD} delta^C_A  (+ 2 P_{[AB]} delta^C_D when
// with_trace_term), slots (A,B,C,D).
TensorField weyl_from(const Connection& D, const TensorField& P, bool with_trace_term) {
  const Chart& ch = D.chart();
  const int n = ch.dim;
  TensorField W = riemann(D);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          RatFunc& w = W.at({a, b, c, d});
          if (c == b) w += P.at({a, d});
          if (c == a) w -= P.at({b, d});
          if (with_trace_term && c == d) w += P.at({a, b}) - P.at({b, a});
        }
  return W;
}

}  // namespace

TensorField proj_weyl(const Connection& D) {
  Connection S = special_rep(D);
  return weyl_from(S, proj_schouten(S), false);
}

TensorField proj_weyl_general(const Connection& D) {
  return weyl_from(D, proj_schouten_general(D), true);
}

namespace {

TensorField cotton_from(const Connection& D, const TensorField& P) {
  TensorField dP = covariant_derivative(P, D);  // slots (A, B, C) = D_A P_{BC}
  TensorField Y = antisymmetrize(dP, {0, 1}).scaled(Rational(2));
  return transpose(Y, {2, 0, 1});  // slots (C, A, B)
}

}  // namespace

TensorField proj_cotton(const Connection& D) {
  Connection S = special_rep(D);
  return cotton_from(S, proj_schouten(S));
}

TensorField proj_cotton_general(const Connection& D) {
  return cotton_from(D, proj_schouten_general(D));
}

}  // namespace pwlab
