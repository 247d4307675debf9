#include "pwlab/tractor.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "pwlab/connection.hpp"

namespace pwlab {

namespace {

SpinorField retag(SpinorField s, int w2) {
  s.set_weight2(w2);
  return s;
}

// Basis of the standard tractor bundle in a scale: the pure-rho lift, the m
// middle covectors, the pure-sigma section. Index order (0, 1..m, m+1).
std::vector<StdTractor> std_basis(const Chart& ch) {
  const int m = ch.dim;
  std::vector<StdTractor> basis;
  basis.reserve(static_cast<size_t>(m) + 2);
  StdTractor brho(ch);
  brho.rho = RatFunc::constant(m, Rational(1));
  basis.push_back(brho);
  for (int a = 0; a < m; ++a) {
    StdTractor ba(ch);
    ba.phi.at({a}) = RatFunc::constant(m, Rational(1));
    basis.push_back(ba);
  }
  StdTractor bsigma(ch);
  bsigma.sigma = RatFunc::constant(m, Rational(1));
  basis.push_back(bsigma);
  return basis;
}

// Matrix K^I_J of the action of an adjoint tractor in the basis above.
std::vector<std::vector<RatFunc>> endo_matrix(const TractorCalc& tc, const AdjTractor& a) {
  const int m = tc.dim();
  const int nb = m + 2;
  const auto basis = std_basis(tc.chart());
  std::vector<std::vector<RatFunc>> em(static_cast<size_t>(nb),
                                       std::vector<RatFunc>(static_cast<size_t>(nb), RatFunc::zero(m)));
  for (int j = 0; j < nb; ++j) {
    StdTractor out = tc.adj_action(a, basis[static_cast<size_t>(j)]);
    em[0][static_cast<size_t>(j)] = out.rho;
    for (int i = 0; i < m; ++i) em[static_cast<size_t>(1 + i)][static_cast<size_t>(j)] = out.phi.at({i});
    em[static_cast<size_t>(nb - 1)][static_cast<size_t>(j)] = out.sigma;
  }
  return em;
}

}  // namespace

TractorCalc::TractorCalc(const TensorField& g) : TractorCalc(SpinGeometry(g)) {}

TractorCalc::TractorCalc(SpinGeometry sg) : sg_(std::move(sg)) {
  const ConformalData& cd = sg_.conf();
  pmix_ = raise_index(cd.schouten, 1, cd.ginv);
  wlow_ = lower_index(cd.weyl, 2, cd.g);
}

TensorField TractorCalc::raise(const TensorField& oneform) const {
  return raise_index(oneform, 0, conf().ginv);
}

SpinorField TractorCalc::gamma_raised(int a, const SpinorField& psi) const {
  const ConformalData& cd = conf();
  const int m = dim();
  SpinorField acc = SpinorField::zero(chart(), 1 - (psi.parity() & 1), psi.weight2());
  for (int b = 0; b < m; ++b) {
    const RatFunc& gab = cd.ginv.at({a, b});
    if (gab.is_zero()) continue;
    acc += sg_.gamma_coord(b, psi).scaled_fn(gab);
  }
  return acc;
}

RatFunc TractorCalc::h_pair(const StdTractor& t1, const StdTractor& t2) const {
  const ConformalData& cd = conf();
  const int m = dim();
  RatFunc acc = t1.rho * t2.sigma + t1.sigma * t2.rho;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) acc += cd.ginv.at({a, b}) * t1.phi.at({a}) * t2.phi.at({b});
  return acc;
}

StdTractor TractorCalc::std_connection(const StdTractor& t, int c) const {
  const ConformalData& cd = conf();
  const int m = dim();
  TensorField dphi = covariant_derivative(t.phi, cd.lc);
  StdTractor r(chart());
  r.rho = t.rho.derivative(c);
  for (int b = 0; b < m; ++b) r.rho -= pmix_.at({c, b}) * t.phi.at({b});
  for (int a = 0; a < m; ++a)
    r.phi.at({a}) = dphi.at({c, a}) + t.sigma * cd.schouten.at({c, a}) + t.rho * cd.g.at({c, a});
  r.phi.set_weight2(t.phi.weight2());
  r.sigma = t.sigma.derivative(c) - t.phi.at({c});
  return r;
}

SpinTractor TractorCalc::spin_connection(const SpinTractor& s, int c) const {
  const int m = dim();
  const SpinScalar inv_sqrt2(RatFunc::zero(m), RatFunc::constant(m, Rational(1, 2)));
  SpinorField tau = sg_.spin_derivative(c, s.tau);
  for (int q = 0; q < m; ++q) {
    const RatFunc& p = pmix_.at({c, q});
    if (p.is_zero()) continue;
    tau += retag(sg_.gamma_coord(q, s.chi).scaled_spin(inv_sqrt2).scaled_fn(p), s.tau.weight2());
  }
  SpinorField chi = sg_.spin_derivative(c, s.chi);
  chi += retag(sg_.gamma_coord(c, s.tau).scaled_spin(inv_sqrt2), s.chi.weight2());
  return {tau, chi};
}

AdjTractor TractorCalc::adj_connection(const AdjTractor& a, int c) const {
  const ConformalData& cd = conf();
  const int m = dim();
  TensorField drho = covariant_derivative(a.rho, cd.lc);
  TensorField dmu = covariant_derivative(a.mu, cd.lc);
  TensorField dk = covariant_derivative(a.k, cd.lc);
  AdjTractor r(chart());
  for (int i = 0; i < m; ++i) {
    RatFunc v = drho.at({c, i}) - cd.schouten.at({c, i}) * a.phi;
    for (int p = 0; p < m; ++p) v -= pmix_.at({c, p}) * a.mu.at({p, i});
    r.rho.at({i}) = v;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      r.mu.at({i, j}) = dmu.at({c, i, j}) + cd.g.at({c, i}) * a.rho.at({j}) -
                        cd.g.at({c, j}) * a.rho.at({i}) + cd.schouten.at({c, i}) * a.k.at({j}) -
                        cd.schouten.at({c, j}) * a.k.at({i});
  r.phi = a.phi.derivative(c) + a.rho.at({c});
  for (int p = 0; p < m; ++p) r.phi -= pmix_.at({c, p}) * a.k.at({p});
  for (int i = 0; i < m; ++i)
    r.k.at({i}) = dk.at({c, i}) - a.mu.at({c, i}) + cd.g.at({c, i}) * a.phi;
  return r;
}

StdTractor TractorCalc::adj_action(const AdjTractor& a, const StdTractor& t) const {
  const ConformalData& cd = conf();
  const int m = dim();
  std::vector<RatFunc> phiup(static_cast<size_t>(m), RatFunc::zero(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) phiup[static_cast<size_t>(i)] += cd.ginv.at({i, j}) * t.phi.at({j});
  StdTractor r(chart());
  r.rho = RatFunc::zero(m) - a.phi * t.rho;
  for (int i = 0; i < m; ++i) r.rho += a.rho.at({i}) * phiup[static_cast<size_t>(i)];
  for (int b = 0; b < m; ++b) {
    RatFunc v = RatFunc::zero(m) - t.sigma * a.rho.at({b}) - t.rho * a.k.at({b});
    for (int s = 0; s < m; ++s) v += a.mu.at({b, s}) * phiup[static_cast<size_t>(s)];
    r.phi.at({b}) = v;
  }
  r.phi.set_weight2(t.phi.weight2());
  r.sigma = a.phi * t.sigma;
  for (int i = 0; i < m; ++i) r.sigma += a.k.at({i}) * phiup[static_cast<size_t>(i)];
  return r;
}

SpinTractor TractorCalc::adj_action_spin(const AdjTractor& a, const SpinTractor& s) const {
  const ConformalData& cd = conf();
  const int m = dim();
  const int nb = m + 2;
  const auto basis = std_basis(chart());
  const auto em = endo_matrix(*this, a);
  // Raise the second index with the inverse tractor metric, whose only
  // nonzero blocks are the two unit corners and the middle g_{ij} block.
  std::vector<std::vector<RatFunc>> up(static_cast<size_t>(nb),
                                       std::vector<RatFunc>(static_cast<size_t>(nb), RatFunc::zero(m)));
  for (int i = 0; i < nb; ++i) {
    up[static_cast<size_t>(i)][0] = em[static_cast<size_t>(i)][static_cast<size_t>(nb - 1)];
    up[static_cast<size_t>(i)][static_cast<size_t>(nb - 1)] = em[static_cast<size_t>(i)][0];
    for (int j = 0; j < m; ++j) {
      RatFunc acc = RatFunc::zero(m);
      for (int l = 0; l < m; ++l) acc += em[static_cast<size_t>(i)][static_cast<size_t>(1 + l)] * cd.g.at({l, j});
      up[static_cast<size_t>(i)][static_cast<size_t>(1 + j)] = acc;
    }
  }
  std::vector<SpinTractor> gs;
  gs.reserve(static_cast<size_t>(nb));
  for (int j = 0; j < nb; ++j) gs.push_back(clifford(basis[static_cast<size_t>(j)], s));
  SpinTractor out{SpinorField::zero(chart(), s.tau.parity(), s.tau.weight2()),
                  SpinorField::zero(chart(), s.chi.parity(), s.chi.weight2())};
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      const RatFunc& c = up[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (c.is_zero()) continue;
      out = out + clifford(basis[static_cast<size_t>(i)], gs[static_cast<size_t>(j)]).scaled_fn(c);
    }
  return out.scaled(Rational(-1, 4));
}

RatFunc TractorCalc::adj_pairing(const AdjTractor& a, const AdjTractor& b) const {
  const int nb = dim() + 2;
  const auto ea = endo_matrix(*this, a);
  const auto eb = endo_matrix(*this, b);
  RatFunc tr = RatFunc::zero(dim());
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      tr += ea[static_cast<size_t>(i)][static_cast<size_t>(j)] * eb[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return tr;
}

AdjTractor TractorCalc::adj_bracket(const AdjTractor& a, const AdjTractor& b) const {
  const ConformalData& cd = conf();
  const int m = dim();
  const int nb = m + 2;
  const auto ea = endo_matrix(*this, a);
  const auto eb = endo_matrix(*this, b);
  std::vector<std::vector<RatFunc>> c(static_cast<size_t>(nb),
                                      std::vector<RatFunc>(static_cast<size_t>(nb), RatFunc::zero(m)));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      RatFunc v = RatFunc::zero(m);
      for (int k = 0; k < nb; ++k)
        v += ea[static_cast<size_t>(i)][static_cast<size_t>(k)] * eb[static_cast<size_t>(k)][static_cast<size_t>(j)] -
             eb[static_cast<size_t>(i)][static_cast<size_t>(k)] * ea[static_cast<size_t>(k)][static_cast<size_t>(j)];
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  // Columns are images of the basis (0, e_1..e_m, m+1); the action formula
  // identifies the slots: bottom column carries (-rho_b, phi), top column
  // carries -k_b, and middle columns carry mu_b{}^c, lowered against g.
  AdjTractor r(chart());
  r.phi = c[static_cast<size_t>(nb - 1)][static_cast<size_t>(nb - 1)];
  for (int i = 0; i < m; ++i) {
    r.rho.at({i}) = -c[static_cast<size_t>(1 + i)][static_cast<size_t>(nb - 1)];
    r.k.at({i}) = -c[static_cast<size_t>(1 + i)][0];
    for (int j = 0; j < m; ++j) {
      RatFunc v = RatFunc::zero(m);
      for (int e = 0; e < m; ++e)
        v += c[static_cast<size_t>(1 + i)][static_cast<size_t>(1 + e)] * cd.g.at({e, j});
      r.mu.at({i, j}) = v;
    }
  }
  return r;
}

SpinTractor TractorCalc::clifford(const StdTractor& t, const SpinTractor& s) const {
  const int m = dim();
  const SpinScalar sqrt2(RatFunc::zero(m), RatFunc::constant(m, Rational(1)));
  TensorField phiup = raise(t.phi);
  SpinorField tau = retag(-sg_.gamma(phiup, s.tau), s.tau.weight2()) +
                    retag(s.chi.scaled_spin(sqrt2).scaled_fn(t.rho), s.tau.weight2());
  SpinorField chi = retag(sg_.gamma(phiup, s.chi), s.chi.weight2()) -
                    retag(s.tau.scaled_spin(sqrt2).scaled_fn(t.sigma), s.chi.weight2());
  return {tau, chi};
}

SpinScalar TractorCalc::spin_tractor_pairing(const SpinTractor& dual_rep, const SpinTractor& s) const {
  return beta_pair(dual_rep.tau, s.chi) + beta_pair(dual_rep.chi, s.tau);
}

StdTractor TractorCalc::split_scalar(const RatFunc& sigma) const {
  const ConformalData& cd = conf();
  const int m = dim();
  StdTractor r(chart());
  r.sigma = sigma;
  for (int a = 0; a < m; ++a) r.phi.at({a}) = sigma.derivative(a);
  TensorField hess = covariant_derivative(r.phi, cd.lc);
  RatFunc lap = metric_trace(hess, cd.ginv);
  r.rho = (lap + cd.j * sigma).scaled(Rational(-1, m));
  return r;
}

SpinTractor TractorCalc::split_spinor(const SpinorField& chi) const {
  const int m = dim();
  const SpinScalar c(RatFunc::zero(m), RatFunc::constant(m, Rational(1, 2 * sg_.n())));
  SpinorField tau = sg_.dirac(chi).scaled_spin(c);
  tau.set_weight2(chi.weight2() - 2);
  return {tau, chi};
}

AdjTractor TractorCalc::split_vector(const TensorField& kvec) const {
  const ConformalData& cd = conf();
  const int m = dim();
  TensorField klow = lower_index(kvec, 0, cd.g);
  TensorField dk = covariant_derivative(klow, cd.lc);
  TensorField ddk = covariant_derivative(dk, cd.lc);
  AdjTractor r(chart());
  r.k = klow;
  r.mu = antisymmetrize(dk, {0, 1});
  r.phi = metric_trace(dk, cd.ginv).scaled(Rational(-1, m));
  TensorField lap_k = contract(raise_index(ddk, 0, cd.ginv), 0, 1);
  TensorField cross = contract(raise_index(ddk, 0, cd.ginv), 0, 2);
  TensorField grad_div = contract(raise_index(ddk, 1, cd.ginv), 1, 2);
  TensorField pk = contract(tensor_product(cd.schouten, kvec), 0, 2);
  r.rho = lap_k.scaled(Rational(-1, 2 * m)) + cross.scaled(Rational(1, 2 * m)) +
          grad_div.scaled(Rational(1, m * m)) + pk.scaled(Rational(2, m)) +
          klow.scaled_fn(cd.j).scaled(Rational(-1, m));
  return r;
}

AdjTractor TractorCalc::curvature(int a, int b) const {
  const ConformalData& cd = conf();
  const int m = dim();
  AdjTractor r(chart());
  for (int c = 0; c < m; ++c) r.rho.at({c}) = -cd.cotton.at({c, a, b});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.mu.at({i, j}) = wlow_.at({a, b, i, j});
  return r;
}

InvolutionResiduals TractorCalc::involution_residuals(const AdjTractor& a) const {
  const ConformalData& cd = conf();
  const int m = dim();
  TensorField kup = raise(a.k);
  TensorField rhoup = raise(a.rho);
  TensorField muup = raise_index(a.mu, 0, cd.ginv);
  InvolutionResiduals r;
  r.k_null = RatFunc::zero(m);
  r.rho_null = RatFunc::zero(m);
  r.pairing = RatFunc::constant(m, Rational(1)) - a.phi * a.phi;
  for (int i = 0; i < m; ++i) {
    r.k_null += kup.at({i}) * a.k.at({i});
    r.rho_null += rhoup.at({i}) * a.rho.at({i});
    r.pairing += kup.at({i}) * a.rho.at({i});
  }
  r.mu_k = TensorField(chart(), {Idx::Up});
  r.mu_rho = TensorField(chart(), {Idx::Up});
  for (int i = 0; i < m; ++i) {
    RatFunc vk = RatFunc::zero(m) - a.phi * kup.at({i});
    RatFunc vr = a.phi * rhoup.at({i});
    for (int b = 0; b < m; ++b) {
      vk += muup.at({i, b}) * kup.at({b});
      vr += muup.at({i, b}) * rhoup.at({b});
    }
    r.mu_k.at({i}) = vk;
    r.mu_rho.at({i}) = vr;
  }
  r.mu_square = TensorField(chart(), {Idx::Down, Idx::Down});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RatFunc v = RatFunc::zero(m) - cd.g.at({i, j}) - a.k.at({i}) * a.rho.at({j}) -
                  a.rho.at({i}) * a.k.at({j});
      for (int c = 0; c < m; ++c) v += a.mu.at({i, c}) * muup.at({c, j});
      r.mu_square.at({i, j}) = v;
    }
  return r;
}

std::vector<std::vector<SpinorField>> TractorCalc::eigentractor_residuals(
    const AdjTractor& K, const SpinTractor& sF, const SpinTractor& sE_rep) const {
  const ConformalData& cd = conf();
  const int m = dim();
  const RatFunc one = RatFunc::constant(m, Rational(1));
  const SpinScalar sqrt2(RatFunc::zero(m), RatFunc::constant(m, Rational(1)));
  TensorField kup = raise(K.k);
  TensorField rhoup = raise(K.rho);
  TensorField muup = raise_index(K.mu, 0, cd.ginv);

  const SpinorField& chi = sF.chi;
  const SpinorField& chibar = sF.tau;
  const SpinorField& eta = sE_rep.chi;
  const SpinorField& etabar = sE_rep.tau;

  auto z = [](SpinorField s) { return retag(std::move(s), 0); };
  auto sq2_times = [&](const SpinorField& s, const RatFunc& f) {
    return z(s.scaled_spin(sqrt2).scaled_fn(f));
  };
  // gamma with the coordinate index raised, applied to each of the four
  // spinors once, reused across the vector-valued relations.
  auto gup = [&](const SpinorField& s) {
    std::vector<SpinorField> out;
    out.reserve(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) out.push_back(z(gamma_raised(a, s)));
    return out;
  };
  const auto gchi = gup(chi);
  const auto gchibar = gup(chibar);
  const auto geta = gup(eta);
  const auto getabar = gup(etabar);

  auto mu_contract = [&](const std::vector<SpinorField>& gs, int a) {
    SpinorField acc = SpinorField::zero(chart(), gs[0].parity(), 0);
    for (int b = 0; b < m; ++b) {
      const RatFunc& c = muup.at({a, b});
      if (c.is_zero()) continue;
      acc += gs[static_cast<size_t>(b)].scaled_fn(c);
    }
    return acc;
  };

  std::vector<std::vector<SpinorField>> groups;
  groups.reserve(12);
  // 1: k^a (gamma_a chi) = 0
  groups.push_back({z(sg_.gamma(kup, chi))});
  // 2: k^a (gamma_a chibar) - sqrt2 (phi + 1) chi = 0
  groups.push_back({z(sg_.gamma(kup, chibar)) - sq2_times(chi, K.phi + one)});
  // 3: (mu^a_b + delta^a_b) gamma^b chi + sqrt2 chibar k^a = 0
  {
    std::vector<SpinorField> g3;
    for (int a = 0; a < m; ++a)
      g3.push_back(mu_contract(gchi, a) + gchi[static_cast<size_t>(a)] +
                   sq2_times(chibar, kup.at({a})));
    groups.push_back(std::move(g3));
  }
  // 4: (mu^a_b + delta^a_b) gamma^b chibar + sqrt2 chi rho^a = 0
  {
    std::vector<SpinorField> g4;
    for (int a = 0; a < m; ++a)
      g4.push_back(mu_contract(gchibar, a) + gchibar[static_cast<size_t>(a)] +
                   sq2_times(chi, rhoup.at({a})));
    groups.push_back(std::move(g4));
  }
  // 5: rho^a (gamma_a chi) + sqrt2 (phi - 1) chibar = 0
  groups.push_back({z(sg_.gamma(rhoup, chi)) + sq2_times(chibar, K.phi - one)});
  // 6: rho^a (gamma_a chibar) = 0
  groups.push_back({z(sg_.gamma(rhoup, chibar))});
  // 7: k^a (gamma_a eta) = 0
  groups.push_back({z(sg_.gamma(kup, eta))});
  // 8: k^a (gamma_a etabar) + sqrt2 (phi - 1) eta = 0
  groups.push_back({z(sg_.gamma(kup, etabar)) + sq2_times(eta, K.phi - one)});
  // 9: (mu^a_b - delta^a_b) gamma^b eta - sqrt2 etabar k^a = 0
  {
    std::vector<SpinorField> g9;
    for (int a = 0; a < m; ++a)
      g9.push_back(mu_contract(geta, a) - geta[static_cast<size_t>(a)] -
                   sq2_times(etabar, kup.at({a})));
    groups.push_back(std::move(g9));
  }
  // 10: (mu^a_b - delta^a_b) gamma^b etabar - sqrt2 eta rho^a = 0
  {
    std::vector<SpinorField> g10;
    for (int a = 0; a < m; ++a)
      g10.push_back(mu_contract(getabar, a) - getabar[static_cast<size_t>(a)] -
                    sq2_times(eta, rhoup.at({a})));
    groups.push_back(std::move(g10));
  }
  // 11: rho^a (gamma_a eta) - sqrt2 (phi + 1) etabar = 0
  groups.push_back({z(sg_.gamma(rhoup, eta)) - sq2_times(etabar, K.phi + one)});
  // 12: rho^a (gamma_a etabar) = 0
  groups.push_back({z(sg_.gamma(rhoup, etabar))});
  return groups;
}

SpinTractor TractorCalc::canonical_dual(const TensorField& kvec) const {
  const int m = dim();
  SpinorField etabar = SpinorField::unit(chart(), -1).scaled(Rational(-1, 2));
  SpinorField eta = sg_.gamma(kvec, etabar)
                        .scaled_spin(SpinScalar(RatFunc::zero(m), RatFunc::constant(m, Rational(1, 4))));
  eta.set_weight2(1);
  return {etabar, eta};
}

}  // namespace pwlab
