#pragma once

#include "pwlab/connection.hpp"

namespace pwlab {

// Curvature package of a pseudo-Riemannian metric in a chart, everything
// exact. Conventions (m = chart dimension):
//   Schouten  P_ab = (1/(m-2)) (Ric_ab - Sc/(2(m-1)) g_ab)
//   J         = g^{pq} P_pq = Sc / (2(m-1))
//   Weyl      W_ab^c_d = R_ab^c_d - (delta^c_a P_bd - delta^c_b P_ad)
//                        + (g_da P_b^c - g_db P_a^c)
//   Cotton    Y_cab = 2 D_{[a} P_{b]c}
struct ConformalData {
  TensorField g;         // (Down,Down)
  TensorField ginv;      // (Up,Up)
  Connection lc;         // Levi-Civita connection
  TensorField schouten;  // (Down,Down), symmetric
  RatFunc j;
  TensorField weyl;      // slots (a,b,c,d), valence (Down,Down,Up,Down)
  TensorField cotton;    // slots (c,a,b), antisymmetric in (a,b)
};

ConformalData conformal_curvature(const TensorField& g);

// Trace-free symmetrized derivative of the lowered field:
// D_{(a} xi_{b)} - (1/m) g_ab D_p xi^p. Zero exactly on conformal Killing
// fields.
TensorField conformal_killing_residual(const ConformalData& cd, const TensorField& xi);

// omega^2 * g; throws if omega is identically zero.
TensorField conformal_rescale(const TensorField& g, const RatFunc& omega);

// g^{pq} t_{pq} for a rank-2 Down tensor.
RatFunc metric_trace(const TensorField& t, const TensorField& ginv);

}  // namespace pwlab
