#pragma once

#include <utility>
#include <vector>

#include "pwlab/connection.hpp"
#include "pwlab/projective.hpp"

namespace pwlab {

// Split-signature extension of an n-dimensional special connection to the
// 2n-chart (x^1..x^n, p_1..p_n): the metric pairs the coordinate fields
// d/dx^a with d/dp_a and twists the x-x block by the connection symbols,
//   g = 2 dx^a (sym) dp_a  -  2 p_c Gamma^c_{ab} dx^a dx^b.
// The fibre directions span{d/dp_a} are null and parallel; the twisted
// horizontal lifts H_a = d/dx^a + p_c Gamma^c_{ab} d/dp_b are null and pair
// with the fibre frame in the identity matrix.
struct PWStructure {
  int n = 0;
  Connection source;                    // special connection on the base chart
  Chart chart;                          // 2n phase chart
  TensorField g;                        // (Down,Down), symmetric
  TensorField ginv;                     // (Up,Up)
  Connection lc;                        // Levi-Civita connection of g
  TensorField k;                        // dilation-type vector field 2 p_a d/dp_a
  std::vector<TensorField> vertical;    // V_a = d/dp_a
  std::vector<TensorField> horizontal;  // H_a as above
};

// Embed a base-chart function into the 2n phase chart (same x-variables,
// no p-dependence).
MultiPoly lift_to_phase(const MultiPoly& base, int n);
RatFunc lift_to_phase(const RatFunc& base, int n);

// The metric components alone, by the coordinate formula; no preconditions
// (used for representative comparisons).
TensorField pw_metric_from_gamma(const Connection& D);

// Full extension; requires a special connection.
PWStructure pw_extend(const Connection& special_D);

// k = 2 p_a d/dp_a on the phase chart.
TensorField euler_field(const Chart& phase_chart);

// Signature (positives, negatives) of a symmetric rank-2 Down tensor at a
// rational point, by congruence reduction; throws on degeneracy there.
std::pair<int, int> signature_at(const TensorField& g, const std::vector<Rational>& point);

}  // namespace pwlab
