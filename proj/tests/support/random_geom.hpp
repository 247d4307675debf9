#pragma once

#include <random>

#include "pwlab/connection.hpp"
#include "pwlab/projective.hpp"
#include "pwlab/tensor.hpp"
#include "support/random_gen.hpp"

namespace pwlab::testsupport {

inline TensorField random_tensor(std::mt19937_64& rng, const Chart& chart,
                                 std::vector<Idx> valence, int max_deg = 2, int terms = 3) {
  TensorField t(chart, std::move(valence));
  for (size_t i = 0; i < t.size(); ++i)
    t.flat_at(i) = RatFunc(random_poly(rng, chart.dim, max_deg, terms));
  return t;
}

inline Connection random_connection(std::mt19937_64& rng, const Chart& chart, int max_deg = 2,
                                    int terms = 2) {
  TensorField g(chart, {Idx::Up, Idx::Down, Idx::Down});
  for (int c = 0; c < chart.dim; ++c)
    for (int a = 0; a < chart.dim; ++a)
      for (int b = a; b < chart.dim; ++b) {
        RatFunc v{random_poly(rng, chart.dim, max_deg, terms)};
        g.at({c, a, b}) = v;
        g.at({c, b, a}) = v;
      }
  return Connection(g);
}

inline Connection random_special_connection(std::mt19937_64& rng, const Chart& chart,
                                            int max_deg = 2, int terms = 2) {
  return make_special(random_connection(rng, chart, max_deg, terms));
}

// Exact one-form d f for a random polynomial potential f.
inline TensorField random_exact_one_form(std::mt19937_64& rng, const Chart& chart,
                                         int max_deg = 2, int terms = 3) {
  MultiPoly f = random_poly(rng, chart.dim, max_deg, terms);
  TensorField u(chart, {Idx::Down});
  for (int a = 0; a < chart.dim; ++a) u.at({a}) = RatFunc(f.derivative(a));
  return u;
}

// Torsion-free connection with one independent symbol Gamma^c_{ab} = entry.
inline Connection single_symbol_connection(int n, int c, int a, int b, const MultiPoly& entry) {
  Chart ch = Chart::base(n);
  TensorField g(ch, {Idx::Up, Idx::Down, Idx::Down});
  g.at({c, a, b}) = RatFunc(entry);
  g.at({c, b, a}) = RatFunc(entry);
  return Connection(g);
}

}  // namespace pwlab::testsupport
