#include "pwlab/connection.hpp"

#include <stdexcept>

namespace pwlab {

Connection::Connection(const Chart& chart)
    : gamma_(chart, {Idx::Up, Idx::Down, Idx::Down}) {}

Connection::Connection(TensorField gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rank() != 3 || gamma_.valence()[0] != Idx::Up ||
      gamma_.valence()[1] != Idx::Down || gamma_.valence()[2] != Idx::Down)
    throw std::invalid_argument("Connection: valence must be (Up, Down, Down)");
  const int d = gamma_.dim();
  for (int c = 0; c < d; ++c)
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (gamma_.at({c, a, b}) != gamma_.at({c, b, a}))
          throw std::invalid_argument("Connection: Christoffel symbols not symmetric");
}

TensorField Connection::trace() const {
  TensorField t(chart(), {Idx::Down});
  const int d = dim();
  for (int b = 0; b < d; ++b) {
    RatFunc acc = RatFunc::zero(d);
    for (int p = 0; p < d; ++p) acc += gamma_.at({p, p, b});
    t.at({b}) = acc;
  }
  return t;
}

TensorField partial_derivative(const TensorField& t) {
  std::vector<Idx> val{Idx::Down};
  val.insert(val.end(), t.valence().begin(), t.valence().end());
  TensorField r(t.chart(), val, t.weight2());
  const int dim = t.dim();
  for (MultiIndex idx(dim, t.rank()); idx.valid(); idx.next()) {
    const RatFunc& v = t.at(*idx);
    if (v.is_zero()) continue;
    for (int c = 0; c < dim; ++c) {
      RatFunc dv = v.derivative(c);
      if (dv.is_zero()) continue;
      std::vector<int> out;
      out.reserve(static_cast<size_t>(t.rank()) + 1);
      out.push_back(c);
      out.insert(out.end(), (*idx).begin(), (*idx).end());
      r.at(out) += dv;
    }
  }
  return r;
}

TensorField covariant_derivative(const TensorField& t, const Connection& conn) {
  if (t.chart() != conn.chart())
    throw std::invalid_argument("covariant_derivative: chart mismatch");
  TensorField r = partial_derivative(t);
  const int dim = t.dim();
  const int rank = t.rank();
  if (rank == 0) return r;
  std::vector<int> out(static_cast<size_t>(rank) + 1);
  for (MultiIndex idx(dim, rank); idx.valid(); idx.next()) {
    const RatFunc& v = t.at(*idx);
    if (v.is_zero()) continue;
    for (int c = 0; c < dim; ++c) {
      for (int s = 0; s < rank; ++s) {
        int e = (*idx)[static_cast<size_t>(s)];
        for (int j = 0; j < dim; ++j) {
          // Up slot: +Gamma^j_{c e} T^..e.. lands at index j.
          // Down slot: -Gamma^e_{c j} T_..e.. lands at index j.
          const RatFunc& gval = t.valence()[static_cast<size_t>(s)] == Idx::Up
                                    ? conn.at(j, c, e)
                                    : conn.at(e, c, j);
          if (gval.is_zero()) continue;
          out[0] = c;
          for (int k = 0; k < rank; ++k) out[static_cast<size_t>(k) + 1] = (*idx)[static_cast<size_t>(k)];
          out[static_cast<size_t>(s) + 1] = j;
          if (t.valence()[static_cast<size_t>(s)] == Idx::Up)
            r.at(out) += gval * v;
          else
            r.at(out) -= gval * v;
        }
      }
    }
  }
  return r;
}

TensorField riemann(const Connection& conn) {
  const Chart& chart = conn.chart();
  const int d = chart.dim;
  TensorField dg = partial_derivative(conn.gamma());  // dg_{a}{}^c_{b d} = d_a Gamma^c_{bd}
  TensorField r(chart, {Idx::Down, Idx::Down, Idx::Up, Idx::Down});
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (b == a) continue;
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          RatFunc acc = dg.at({a, c, b, e}) - dg.at({b, c, a, e});
          for (int f = 0; f < d; ++f) {
            const RatFunc& g1 = conn.at(c, a, f);
            const RatFunc& g2 = conn.at(f, b, e);
            if (!g1.is_zero() && !g2.is_zero()) acc += g1 * g2;
            const RatFunc& g3 = conn.at(c, b, f);
            const RatFunc& g4 = conn.at(f, a, e);
            if (!g3.is_zero() && !g4.is_zero()) acc -= g3 * g4;
          }
          r.at({a, b, c, e}) = acc;
        }
    }
  return r;
}

TensorField ricci(const Connection& conn) {
  TensorField r = riemann(conn);
  return contract(r, 0, 2);
}

Connection levi_civita(const TensorField& g, const TensorField& ginv) {
  const int d = g.dim();
  TensorField dg = partial_derivative(g);  // dg_{c a b} = d_c g_{ab}
  TensorField gamma(g.chart(), {Idx::Up, Idx::Down, Idx::Down});
  Rational half(1, 2);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        RatFunc acc = RatFunc::zero(d);
        for (int e = 0; e < d; ++e) {
          const RatFunc& gce = ginv.at({c, e});
          if (gce.is_zero()) continue;
          acc += gce * (dg.at({a, e, b}) + dg.at({b, e, a}) - dg.at({e, a, b}));
        }
        gamma.at({c, a, b}) = acc.scaled(half);
        if (b != a) gamma.at({c, b, a}) = gamma.at({c, a, b});
      }
    }
  return Connection(std::move(gamma));
}

Connection levi_civita(const TensorField& g) { return levi_civita(g, metric_inverse(g)); }

}  // namespace pwlab
