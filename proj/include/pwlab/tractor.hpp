#pragma once

#include <utility>
#include <vector>

#include "pwlab/conformal.hpp"
#include "pwlab/spinor.hpp"
#include "pwlab/tensor.hpp"

namespace pwlab {

// Standard tractor in slotted form relative to a fixed metric:
// top scalar rho (weight -1), middle one-form phi_a (weight 1),
// bottom scalar sigma (weight 1). The tractor metric is
// h(T,T) = 2 rho sigma + g^{ab} phi_a phi_b.
struct StdTractor {
  RatFunc rho;
  TensorField phi;
  RatFunc sigma;

  StdTractor() = default;
  explicit StdTractor(const Chart& chart)
      : rho(RatFunc::zero(chart.dim)), phi(chart, {Idx::Down}), sigma(RatFunc::zero(chart.dim)) {}
  StdTractor(RatFunc r, TensorField p, RatFunc s)
      : rho(std::move(r)), phi(std::move(p)), sigma(std::move(s)) {}

  bool is_zero() const { return rho.is_zero() && phi.is_zero() && sigma.is_zero(); }
  StdTractor operator+(const StdTractor& o) const { return {rho + o.rho, phi + o.phi, sigma + o.sigma}; }
  StdTractor operator-(const StdTractor& o) const { return {rho - o.rho, phi - o.phi, sigma - o.sigma}; }
  StdTractor scaled(const Rational& c) const {
    return {rho.scaled(c), phi.scaled(c), sigma.scaled(c)};
  }
  StdTractor scaled_fn(const RatFunc& f) const { return {rho * f, phi.scaled_fn(f), sigma * f}; }
};

// Spin tractor: top spinor tau (weight -1/2), bottom spinor chi (weight 1/2),
// of complementary parities.
struct SpinTractor {
  SpinorField tau;
  SpinorField chi;

  bool is_zero() const { return tau.is_zero() && chi.is_zero(); }
  SpinTractor operator+(const SpinTractor& o) const { return {tau + o.tau, chi + o.chi}; }
  SpinTractor operator-(const SpinTractor& o) const { return {tau - o.tau, chi - o.chi}; }
  SpinTractor scaled(const Rational& c) const { return {tau.scaled(c), chi.scaled(c)}; }
  SpinTractor scaled_fn(const RatFunc& f) const { return {tau.scaled_fn(f), chi.scaled_fn(f)}; }
  SpinTractor scaled_spin(const SpinScalar& s) const {
    return {tau.scaled_spin(s), chi.scaled_spin(s)};
  }
};

// Adjoint tractor (two-form tractor) in slotted form: top one-form rho_a,
// middle pair (antisymmetric mu_{ab} of weight 2 | scalar phi),
// bottom one-form k_a of weight 2.
struct AdjTractor {
  TensorField rho;
  TensorField mu;
  RatFunc phi;
  TensorField k;

  AdjTractor() = default;
  explicit AdjTractor(const Chart& chart)
      : rho(chart, {Idx::Down}), mu(chart, {Idx::Down, Idx::Down}),
        phi(RatFunc::zero(chart.dim)), k(chart, {Idx::Down}) {}
  AdjTractor(TensorField r, TensorField m, RatFunc p, TensorField kk)
      : rho(std::move(r)), mu(std::move(m)), phi(std::move(p)), k(std::move(kk)) {}

  bool is_zero() const { return rho.is_zero() && mu.is_zero() && phi.is_zero() && k.is_zero(); }
  AdjTractor operator+(const AdjTractor& o) const {
    return {rho + o.rho, mu + o.mu, phi + o.phi, k + o.k};
  }
  AdjTractor operator-(const AdjTractor& o) const {
    return {rho - o.rho, mu - o.mu, phi - o.phi, k - o.k};
  }
  AdjTractor scaled(const Rational& c) const {
    return {rho.scaled(c), mu.scaled(c), phi.scaled(c), k.scaled(c)};
  }
  AdjTractor scaled_fn(const RatFunc& f) const {
    return {rho.scaled_fn(f), mu.scaled_fn(f), phi * f, k.scaled_fn(f)};
  }
};

// Residuals whose simultaneous vanishing says the adjoint tractor squares to
// the identity endomorphism: both legs null, mu eigenvector relations, the
// pairing normalization, and the mu-square relation.
struct InvolutionResiduals {
  RatFunc k_null;        // k^a k_a
  RatFunc rho_null;      // rho^a rho_a
  TensorField mu_k;      // mu^a_b k^b - phi k^a
  TensorField mu_rho;    // mu^a_b rho^b + phi rho^a
  RatFunc pairing;       // k^a rho_a - (phi^2 - 1)
  TensorField mu_square; // mu_a^c mu_cb - g_ab - k_a rho_b - rho_a k_b

  bool all_zero() const {
    return k_null.is_zero() && rho_null.is_zero() && mu_k.is_zero() && mu_rho.is_zero() &&
           pairing.is_zero() && mu_square.is_zero();
  }
};

// Slot calculus of the standard, spin, and adjoint tractor bundles over a
// split metric, in the scale of that metric: connections, curvature action,
// Clifford action, splitting operators, and the induced-structure residual
// systems. All operations are exact on rational-function slots.
class TractorCalc {
 public:
  explicit TractorCalc(const TensorField& g);
  explicit TractorCalc(SpinGeometry sg);

  const ConformalData& conf() const { return sg_.conf(); }
  const SpinGeometry& spin() const { return sg_; }
  const Chart& chart() const { return conf().g.chart(); }
  int dim() const { return chart().dim; }

  // h(T1,T2) = rho1 sigma2 + sigma1 rho2 + g^{ab} phi1_a phi2_b.
  RatFunc h_pair(const StdTractor& t1, const StdTractor& t2) const;

  // Slotwise tractor connections in coordinate direction c.
  StdTractor std_connection(const StdTractor& t, int c) const;
  SpinTractor spin_connection(const SpinTractor& s, int c) const;
  AdjTractor adj_connection(const AdjTractor& a, int c) const;

  // Action of an adjoint tractor on a standard tractor,
  // (rho_a; mu|phi; k_a) . (nu; om_b; sigma) =
  //   (rho^r om_r - phi nu; mu_b^r om_r - sigma rho_b - nu k_b; k^r om_r + phi sigma).
  StdTractor adj_action(const AdjTractor& a, const StdTractor& t) const;
  // Induced action on spin tractors: -(1/4) A^{IJ} G_I G_J with G the tractor
  // Clifford action and indices raised by the tractor metric.
  SpinTractor adj_action_spin(const AdjTractor& a, const SpinTractor& s) const;
  // Killing-type pairing of two adjoint tractors, up to normalization:
  // the endomorphism trace of the composition.
  RatFunc adj_pairing(const AdjTractor& a, const AdjTractor& b) const;

  // Commutator [a, b] of the induced endomorphisms, slotted again; exact
  // because the commutator of two h-skew endomorphisms is h-skew.
  AdjTractor adj_bracket(const AdjTractor& a, const AdjTractor& b) const;

  // Clifford action of a standard tractor on a spin tractor:
  // (rho, phi, sigma) . (tau, chi) =
  //   (-phi_a gamma^a tau + sqrt2 rho chi; phi_a gamma^a chi - sqrt2 sigma tau).
  SpinTractor clifford(const StdTractor& t, const SpinTractor& s) const;

  // Pairing of a dual spin tractor (given by representatives through beta)
  // with a spin tractor: <(etabar; eta), (taubar; chi)> =
  // beta(etabar, chi) + beta(eta, taubar).
  SpinScalar spin_tractor_pairing(const SpinTractor& dual_rep, const SpinTractor& s) const;

  // Splitting operators: bottom slot is the input, the other slots are the
  // unique normalization making the result a distinguished lift.
  StdTractor split_scalar(const RatFunc& sigma) const;
  SpinTractor split_spinor(const SpinorField& chi) const;
  AdjTractor split_vector(const TensorField& kvec) const;

  // Curvature of the standard tractor connection in directions (a, b), as an
  // adjoint tractor: slots (-Y_{c ab}; W_{ab c0 c1} | 0; 0).
  AdjTractor curvature(int a, int b) const;

  // The six relations equivalent to adj_action(a, adj_action(a, .)) = id.
  InvolutionResiduals involution_residuals(const AdjTractor& a) const;

  // The twelve spinor relations equivalent to the +-1 eigentractor split of
  // the standard bundle defined by (k, s_F, s_E). Dual spinors are passed by
  // beta-representatives. Groups are returned in display order; vector-valued
  // relations contribute one spinor per coordinate index.
  std::vector<std::vector<SpinorField>> eigentractor_residuals(const AdjTractor& K,
                                                               const SpinTractor& sF,
                                                               const SpinTractor& sE_rep) const;

  // Canonical dual spin tractor in a reduced scale: etabar = -1/2 e_empty,
  // eta = (1/(2 sqrt2)) gamma(k) etabar, normalized by <s_E, s_F> = -1/2.
  SpinTractor canonical_dual(const TensorField& kvec) const;

 private:
  SpinGeometry sg_;
  TensorField pmix_;  // Schouten with the second slot raised
  TensorField wlow_;  // Weyl tensor fully lowered

  TensorField raise(const TensorField& oneform) const;
  SpinorField gamma_raised(int a, const SpinorField& psi) const;
};

}  // namespace pwlab
