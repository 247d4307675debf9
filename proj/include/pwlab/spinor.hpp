#pragma once

#include <vector>

#include "pwlab/conformal.hpp"
#include "pwlab/linalg.hpp"
#include "pwlab/sqrt2.hpp"

namespace pwlab {

// Spinor components live in the quadratic extension by sqrt(2) of the
// rational-function field; every Clifford product of two frame vectors lands
// back in the rational part.
using SpinScalar = Sq2<RatFunc>;

SpinScalar spin_zero(int nvars);
SpinScalar spin_one(int nvars);
SpinScalar spin_from(const RatFunc& f);
SpinScalar spin_derivative(const SpinScalar& s, int var);

// Element of the exterior-algebra spinor model on a 2n-chart: component
// e_S per subset S of {1..n} (bitmask), homogeneous parity |S| mod 2, with a
// doubled half-integer weight tag (weight2 = 1 means weight 1/2).
class SpinorField {
 public:
  SpinorField() : n_(0), parity_(0), weight2_(0) {}
  SpinorField(Chart chart, int parity, int weight2);

  static SpinorField zero(const Chart& chart, int parity, int weight2) {
    return SpinorField(chart, parity, weight2);
  }
  static SpinorField basis(const Chart& chart, unsigned mask, int weight2);
  // Top component e_1 ^ ... ^ e_n; the canonical parallel representative.
  static SpinorField vol(const Chart& chart, int weight2 = 1);
  // e_empty.
  static SpinorField unit(const Chart& chart, int weight2 = 1);

  const Chart& chart() const { return chart_; }
  int n() const { return n_; }
  int parity() const { return parity_; }
  int weight2() const { return weight2_; }
  SpinorField& set_weight2(int w2) { weight2_ = w2; return *this; }
  size_t dim() const { return comp_.size(); }

  const SpinScalar& comp(unsigned mask) const { return comp_[mask]; }
  // Mutation checks the parity invariant (throws on mismatch for nonzero v).
  void set_comp(unsigned mask, const SpinScalar& v);

  bool is_zero() const;

  SpinorField operator-() const;
  friend SpinorField operator+(const SpinorField& a, const SpinorField& b);
  friend SpinorField operator-(const SpinorField& a, const SpinorField& b);
  SpinorField& operator+=(const SpinorField& o) { return *this = *this + o; }
  SpinorField& operator-=(const SpinorField& o) { return *this = *this - o; }
  SpinorField scaled(const Rational& c) const;
  SpinorField scaled_fn(const RatFunc& f) const;
  SpinorField scaled_spin(const SpinScalar& s) const;

  // e_a ^ psi and iota_a psi (0-based a), with the interleaving signs.
  SpinorField wedge(int a) const;
  SpinorField contract(int a) const;

  // Componentwise coordinate derivative.
  SpinorField partial(int var) const;

 private:
  Chart chart_;
  int n_;
  int parity_;
  int weight2_;
  std::vector<SpinScalar> comp_;
};

// Canonical bilinear pairing of the exterior-algebra model,
// beta(phi, psi) = top component of rev(phi) ^ psi, where rev flips a
// degree-k monomial by (-1)^(k(k-1)/2). Both wedge and contraction operators
// are self-adjoint for beta, hence so is every Clifford action; dual spinors
// are represented by elements of the same model through this pairing.
SpinScalar beta_pair(const SpinorField& phi, const SpinorField& psi);

// Null frame adapted to a split metric whose fibre coordinate fields d/dp_a
// are null: n null fields h_a, n null fields v_a = d/dp_a with
// g(v_a, h_b) = delta_ab. Frame order in matrices: (h_1..h_n, v_1..v_n).
struct WittFrame {
  Chart chart;
  int n = 0;
  std::vector<TensorField> h;
  std::vector<TensorField> v;
  FMat frame_to_coord;  // column alpha = coordinate components of frame vector alpha
  FMat coord_to_frame;  // its inverse
};

WittFrame build_witt_frame(const TensorField& g);

// Clifford/spin calculus of a split metric: gamma action, spin derivative,
// Dirac and twistor operators, spinorial Lie derivative, kernels.
// gamma(v_a) = +sqrt2 * wedge_a, gamma(h_a) = -sqrt2 * contract_a, so that
// gamma(x)gamma(y) + gamma(y)gamma(x) = -2 g(x,y).
class SpinGeometry {
 public:
  explicit SpinGeometry(ConformalData cd);
  explicit SpinGeometry(const TensorField& g) : SpinGeometry(conformal_curvature(g)) {}

  const ConformalData& conf() const { return cd_; }
  const WittFrame& frame() const { return frame_; }
  int n() const { return frame_.n; }

  // Clifford action of frame vector alpha (0..2n-1, h's first).
  SpinorField gamma_frame(int alpha, const SpinorField& psi) const;
  // Clifford action of the coordinate field d/dz^mu.
  SpinorField gamma_coord(int mu, const SpinorField& psi) const;
  // Clifford action of a vector field (Up tensor).
  SpinorField gamma(const TensorField& vec, const SpinorField& psi) const;

  // D_mu psi = d_mu psi - (1/4) omega_mu^{ab} gamma_a gamma_b psi.
  SpinorField spin_derivative(int mu, const SpinorField& psi) const;
  // gamma^p D_p.
  SpinorField dirac(const SpinorField& psi) const;
  // Component a of D_a psi + (1/m) gamma_a (dirac psi), m = chart dimension.
  std::vector<SpinorField> twistor_residual(const SpinorField& psi) const;
  // D_k psi - (1/4) (D_[a k_b]) gamma^a gamma^b psi - (w/m) (D_p k^p) psi,
  // with w the weight tag of psi.
  SpinorField lie_derivative(const TensorField& k, const SpinorField& psi) const;

  // Pointwise-in-the-field solutions of gamma(v) psi = 0; columns are
  // coordinate components over the sqrt2-extended function field.
  Mat<SpinScalar> spinor_kernel(const SpinorField& psi) const;
  // Maximal isotropy of the kernel: dimension equals n.
  bool purity_check(const SpinorField& psi) const;

  // Spin connection coefficients with both frame indices raised,
  // lambda_mu^{alpha beta}; antisymmetric (metricity).
  const FMat& spin_coeff(int mu) const { return lambda_[static_cast<size_t>(mu)]; }

 private:
  ConformalData cd_;
  WittFrame frame_;
  std::vector<FMat> lambda_;
};

}  // namespace pwlab
