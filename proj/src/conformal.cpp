#include "pwlab/conformal.hpp"

#include <stdexcept>

namespace pwlab {

RatFunc metric_trace(const TensorField& t, const TensorField& ginv) {
  const int m = t.dim();
  RatFunc s = RatFunc::zero(t.chart().dim);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) s += ginv.at({p, q}) * t.at({p, q});
  return s;
}

ConformalData conformal_curvature(const TensorField& g) {
  ConformalData cd;
  cd.g = g;
  cd.ginv = metric_inverse(g);
  cd.lc = levi_civita(g, cd.ginv);
  const int m = g.dim();

  TensorField ric = ricci(cd.lc);
  RatFunc sc = metric_trace(ric, cd.ginv);
  RatFunc jj = sc.scaled(Rational(1, 2 * (m - 1)));
  cd.schouten = (ric - g.scaled_fn(jj)).scaled(Rational(1, m - 2));
  cd.j = jj;

  TensorField riem = riemann(cd.lc);
  TensorField p_up = contract(tensor_product(cd.schouten, cd.ginv), 1, 2);  // P_a^c
  TensorField W = riem;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          RatFunc& w = W.at({a, b, c, d});
          if (c == a) w -= cd.schouten.at({b, d});
          if (c == b) w += cd.schouten.at({a, d});
          w += g.at({d, a}) * p_up.at({b, c}) - g.at({d, b}) * p_up.at({a, c});
        }
  cd.weyl = W;

  TensorField dP = covariant_derivative(cd.schouten, cd.lc);  // (a, b, c) = D_a P_bc
  TensorField Y = antisymmetrize(dP, {0, 1}).scaled(Rational(2));
  cd.cotton = transpose(Y, {2, 0, 1});  // (c, a, b)
  return cd;
}

TensorField conformal_killing_residual(const ConformalData& cd, const TensorField& xi) {
  const int m = cd.g.dim();
  TensorField flat = lower_index(xi, 0, cd.g);
  TensorField sym = symmetrize(covariant_derivative(flat, cd.lc), {0, 1});
  RatFunc tr = metric_trace(sym, cd.ginv);
  return sym - cd.g.scaled_fn(tr.scaled(Rational(1, m)));
}

TensorField conformal_rescale(const TensorField& g, const RatFunc& omega) {
  if (omega.is_zero()) throw std::invalid_argument("conformal_rescale: zero factor");
  return g.scaled_fn(omega * omega);
}

}  // namespace pwlab
