#include "pwlab/pw.hpp"

#include <stdexcept>

#include "pwlab/linalg.hpp"

namespace pwlab {

MultiPoly lift_to_phase(const MultiPoly& base, int n) {
  MultiPoly out(2 * n);
  for (const auto& [m, c] : base.terms()) {
    Monomial lifted(2 * n);
    for (int i = 0; i < n; ++i) lifted.set(i, m.exp(i));
    out.add_term(lifted, c);
  }
  return out;
}

RatFunc lift_to_phase(const RatFunc& base, int n) {
  return RatFunc(lift_to_phase(base.num(), n), lift_to_phase(base.den(), n));
}

TensorField pw_metric_from_gamma(const Connection& D) {
  const int n = D.dim();
  Chart ch = Chart::cotangent(n);
  const int nv = 2 * n;
  TensorField g(ch, {Idx::Down, Idx::Down});
  RatFunc one = RatFunc::constant(nv, Rational(1));
  for (int a = 0; a < n; ++a) {
    g.at({a, n + a}) = one;
    g.at({n + a, a}) = one;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RatFunc s = RatFunc::zero(nv);
      for (int c = 0; c < n; ++c) {
        RatFunc pc = RatFunc::variable(nv, n + c);
        s += pc * lift_to_phase(D.at(c, a, b), n);
      }
      g.at({a, b}) = s.scaled(Rational(-2));
    }
  return g;
}

TensorField euler_field(const Chart& phase_chart) {
  const int nv = phase_chart.dim;
  const int n = nv / 2;
  TensorField k(phase_chart, {Idx::Up});
  for (int a = 0; a < n; ++a)
    k.at({n + a}) = RatFunc::variable(nv, n + a).scaled(Rational(2));
  return k;
}

PWStructure pw_extend(const Connection& special_D) {
  if (!is_special(special_D))
    throw std::invalid_argument("pw_extend: connection must be volume-preserving (special)");
  PWStructure s;
  s.n = special_D.dim();
  s.source = special_D;
  s.chart = Chart::cotangent(s.n);
  s.g = pw_metric_from_gamma(special_D);
  s.ginv = metric_inverse(s.g);
  s.lc = levi_civita(s.g, s.ginv);
  s.k = euler_field(s.chart);
  const int nv = 2 * s.n;
  for (int a = 0; a < s.n; ++a) {
    TensorField v(s.chart, {Idx::Up});
    v.at({s.n + a}) = RatFunc::constant(nv, Rational(1));
    s.vertical.push_back(v);
    TensorField h(s.chart, {Idx::Up});
    h.at({a}) = RatFunc::constant(nv, Rational(1));
    for (int b = 0; b < s.n; ++b) {
      RatFunc comp = RatFunc::zero(nv);
      for (int c = 0; c < s.n; ++c)
        comp += RatFunc::variable(nv, s.n + c) * lift_to_phase(special_D.at(c, a, b), s.n);
      h.at({s.n + b}) = comp;
    }
    s.horizontal.push_back(h);
  }
  return s;
}

std::pair<int, int> signature_at(const TensorField& g, const std::vector<Rational>& point) {
  const int m = g.dim();
  QMat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = g.at({i, j}).evaluate(point);

  int pos = 0, neg = 0;
  for (int i = 0; i < m; ++i) {
    if (a(i, i).is_zero()) {
      int k = -1;
      for (int r = i + 1; r < m; ++r)
        if (!a(r, r).is_zero()) { k = r; break; }
      if (k >= 0) {
        a.row(i).swap(a.row(k));
        a.col(i).swap(a.col(k));
      } else {
        int rr = -1, cc = -1;
        for (int r = i; r < m && rr < 0; ++r)
          for (int c = r + 1; c < m; ++c)
            if (!a(r, c).is_zero()) { rr = r; cc = c; break; }
        if (rr < 0) throw std::domain_error("signature_at: degenerate at sample point");
        a.row(rr) += a.row(cc);
        a.col(rr) += a.col(cc);
        if (rr != i) {
          a.row(i).swap(a.row(rr));
          a.col(i).swap(a.col(rr));
        }
      }
    }
    Rational piv = a(i, i);
    for (int r = i + 1; r < m; ++r) {
      Rational f = a(r, i) / piv;
      if (f.is_zero()) continue;
      for (int c = 0; c < m; ++c) a(r, c) -= f * a(i, c);
      for (int c = 0; c < m; ++c) a(c, r) -= f * a(c, i);
    }
    (piv.sign() > 0 ? pos : neg)++;
  }
  return {pos, neg};
}

}  // namespace pwlab
