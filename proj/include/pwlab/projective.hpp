#pragma once

#include <iosfwd>

#include "pwlab/connection.hpp"

namespace pwlab {

// Projective differential geometry of torsion-free connections on the base
// chart. A connection is "special" relative to a volume density when the
// density is parallel; for the constant density this means Gamma^P_{PB} = 0.
// Curvature operations normalize their input to the special representative of
// its projective class first (a note goes to the log sink when that happens).

// Where normalization notes are written; pass nullptr to silence. Defaults to
// std::cerr.
void set_projective_log(std::ostream* os);

// Gamma^C_{AB} + Upsilon_A delta^C_B + Upsilon_B delta^C_A.
Connection projective_change(const Connection& D, const TensorField& upsilon);

// Whether D makes the density `volume` (coefficient of dx^1...dx^n) parallel:
// volume * Gamma^P_{PB} == d_B volume for every B.
bool is_special(const Connection& D, const MultiPoly& volume);
bool is_special(const Connection& D);  // volume = 1

// The unique one-form Upsilon with projective_change(D, Upsilon) special for
// the constant volume: Upsilon = -(1/(n+1)) Gamma^P_{PB} dx^B.
TensorField normalizing_upsilon(const Connection& D);
Connection make_special(const Connection& D);

// Schouten tensor of a special connection: (1/(n-1)) R_{PA}^P{}_B. Symmetric.
// Non-special input is replaced by its special representative.
TensorField proj_schouten(const Connection& D);

// Trace adjustment of an arbitrary torsion-free connection (no volume
// normalization): (1/(n-1)) Ric_{(AB)} + (1/(n+1)) Ric_{[AB]}. Used for the
// change-of-connection law; agrees with proj_schouten on special connections.
TensorField proj_schouten_general(const Connection& D);

// Projective Weyl curvature, slots (A, B, C, D) valence (Down,Down,Up,Down):
//   W = R + P_{AD} delta^C_B - P_{BD} delta^C_A
// for the special representative. Trace-free in every contraction; vanishes
// identically when n = 2.
TensorField proj_weyl(const Connection& D);

// Same trace-free projection for an arbitrary torsion-free connection; needs
// the extra pure-trace term 2 P_{[AB]} delta^C_D.
TensorField proj_weyl_general(const Connection& D);

// Cotton tensor Y_{CAB} = 2 D_{[A} P_{B]C} of the special representative.
TensorField proj_cotton(const Connection& D);

// Cotton tensor of an arbitrary torsion-free connection, via the general
// trace adjustment and that connection's own derivative.
TensorField proj_cotton_general(const Connection& D);

}  // namespace pwlab
