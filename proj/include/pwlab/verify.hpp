#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwlab/pw.hpp"
#include "pwlab/tractor.hpp"

namespace pwlab {

// One verified identity: a stable machine name, the identity itself in index
// notation, the outcome, a residual summary ("0" for an exact zero,
// otherwise a short description of a nonzero component or sampled value),
// and the wall time the check took.
struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string residual;
  double seconds = 0.0;
};

// Outcome of one suite on one structure. Check names are unique within a
// suite and stable across runs; the seed (when present) reproduces both the
// structure and the sample points.
struct VerificationReport {
  std::string suite;
  std::string structure;
  int n = 0;
  std::optional<uint64_t> seed;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const CheckResult& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  // 0 = take FEFFERMAN_LAB_THREADS from the environment, else the hardware
  // concurrency. Checks within a suite run in parallel up to this cap.
  int threads = 0;
  // Seed for the pointwise spot checks (sample points are drawn from it).
  uint64_t sample_seed = 20260816u;
};

// Everything the suites need, built once per structure: the split metric
// with its curvature, spin, and tractor calculus, the dilation field, the
// top exterior spinor, the fibre frame, and the lowered curvature pieces.
struct VerifyGeometry {
  int n = 0;
  std::string descriptor;
  std::optional<uint64_t> seed;
  Connection source;                  // base connection when metric-extended, else empty
  TensorField k;                      // candidate dilation field, valence (Up)
  SpinorField chi;                    // candidate parallel spinor (top form, weight 1/2)
  std::vector<TensorField> vertical;  // fibre coordinate fields d/dp_a
  TensorField klow;                   // k lowered with g
  TensorField wlow;                   // Weyl tensor fully lowered
  TractorCalc tc;                     // owns conformal and spin geometry

  const ConformalData& conf() const { return tc.conf(); }
  const Chart& chart() const { return tc.chart(); }
};

// Extend a special connection to its split metric and assemble the calculus.
// Throws std::invalid_argument when the connection is not special.
VerifyGeometry build_geometry(const Connection& special_D,
                              std::optional<uint64_t> seed = std::nullopt);

// Assemble the calculus directly from a split metric on a 2n-chart whose
// fibre coordinate fields d/dp_a are null, with the canonical coordinate
// candidates k = 2 p_a d/dp_a and chi the top exterior spinor. Used to probe
// metrics that need not come from a connection.
VerifyGeometry build_metric_geometry(const TensorField& g, std::string descriptor,
                                     std::optional<uint64_t> seed = std::nullopt);

// Suite 1: the intrinsic characterization of induced split metrics. Checks:
// the dilation field is conformal Killing and its adjoint-tractor lift
// squares to the identity (six slot residuals), the top spinor is a twistor
// spinor and its tractor lift is pure at a sample point, the dilation
// rescales the spinor by -(n+1)/2, the Weyl tensor annihilates pairs of
// fibre directions in slots (2,4), and the fibre frame is involutive.
VerificationReport characterize(const VerifyGeometry& g, const VerifyOptions& opt = {});

// Suite 2: the distinguished-scale conditions. Checks: the conformal scalar
// curvature vanishes, the Schouten tensor has no fibre components, the top
// spinor is parallel, and the scale tractor is (0,0,1) and is covariantly
// constant along the fibres.
VerificationReport reduced_scale_check(const VerifyGeometry& g, const VerifyOptions& opt = {});

// Suite 3: the ten first-order consequences of the parallel objects, each a
// named residual: the derivative split of k, the derivative of mu, Schouten
// contractions with k / mu / fibre directions, Cotton contractions with k
// and fibre directions, and the Weyl contractions with k, mu, and fibre
// pairs.
VerificationReport prolongation_suite(const VerifyGeometry& g, const VerifyOptions& opt = {});

// Suite 4: the corrected curvature Om' = Om + (1/2)[K, Om] of the tractor
// curvature Om. Checks: Om' annihilates the spinor lift of chi, commutes
// with K, has no fibre contractions, matches the closed slot formula
// (-Y_cab; W_abcd - W_ab^r_[c mu_d]r + k_[c Y_d]ab | 0; (1/2) k^r W_abrc)
// termwise, and <Om, K> = 0.
VerificationReport omega_prime_suite(const VerifyGeometry& g, const VerifyOptions& opt = {});

// All four suites on a shared geometry, in the order above.
std::vector<VerificationReport> verify_all(const VerifyGeometry& g, const VerifyOptions& opt = {});

// Bottom slot (1/2) k^r W_abrc of the corrected curvature in directions
// (a, b): the obstruction to the corrected connection being torsion-free.
// Identically zero when n = 2.
TensorField induced_torsion_slot(const VerifyGeometry& g, int a, int b);
bool induced_torsion_vanishes(const VerifyGeometry& g);

// The algebraic suite on the exact Lie-theoretic model for one n: grading
// brackets, distinguished spinor eigenvalues and pairings, codifferential
// square zero on random 2-cochains, eigenvalue 2 of the algebraic Laplacian
// on the correction component, the worked lowering example (n >= 3), and the
// normalization pipeline on random closed curvature-shaped cochains.
VerificationReport kostant_suite(int n, uint64_t seed = 1u, int cochain_trials = 20,
                                 const VerifyOptions& opt = {});

// Seeded generator of special structures: symmetric Christoffel entries with
// up to three monomials of total degree <= max_degree and coefficients in
// {-3..3}, trace-adjusted to the special representative. Deterministic in
// the seed for a fixed build.
Connection random_projective_structure(int n, uint64_t seed, int max_degree = 2);

// Parallelism cap: FEFFERMAN_LAB_THREADS when set and positive, else the
// hardware concurrency, at least 1.
int thread_budget();

}  // namespace pwlab
