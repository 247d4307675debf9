#pragma once

#include "pwlab/tensor.hpp"

namespace pwlab {

// Torsion-free affine connection in a chart, stored through its Christoffel
// symbols Gamma^c_{ab} (symmetric in a,b; enforced on construction).
class Connection {
 public:
  Connection() = default;
  explicit Connection(const Chart& chart);
  // gamma must have valence (Up, Down, Down) and be symmetric in its Down pair.
  explicit Connection(TensorField gamma);

  static Connection flat(const Chart& chart) { return Connection(chart); }

  const Chart& chart() const { return gamma_.chart(); }
  int dim() const { return gamma_.dim(); }
  const TensorField& gamma() const { return gamma_; }
  const RatFunc& at(int c, int a, int b) const { return gamma_.at({c, a, b}); }
  RatFunc& at(int c, int a, int b) { return gamma_.at({c, a, b}); }

  // Gamma^p_{pb} as a one-form.
  TensorField trace() const;

 private:
  TensorField gamma_;
};

// Covariant derivative; the new Down slot comes first:
// (D T)_{c i1...ik} = d_c T + sum Gamma-corrections. Weights are inert (the
// scale trivializing them is parallel for every connection used here).
TensorField covariant_derivative(const TensorField& t, const Connection& conn);

// Partial (coordinate) derivative with the same slot convention.
TensorField partial_derivative(const TensorField& t);

// Curvature from the commutator convention
//   (D_a D_b - D_b D_a) xi^c = R_{ab}^c{}_d xi^d,
// i.e. R_{ab}^c{}_d = d_a Gamma^c_{bd} - d_b Gamma^c_{ad}
//                     + Gamma^c_{ae} Gamma^e_{bd} - Gamma^c_{be} Gamma^e_{ad}.
// Valence (Down, Down, Up, Down).
TensorField riemann(const Connection& conn);

// Ricci contraction R_{pa}^p{}_b of the curvature above.
TensorField ricci(const Connection& conn);

// Levi-Civita connection of a symmetric nondegenerate all-Down metric.
Connection levi_civita(const TensorField& g, const TensorField& ginv);
Connection levi_civita(const TensorField& g);

}  // namespace pwlab
