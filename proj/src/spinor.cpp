#include "pwlab/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace pwlab {

SpinScalar spin_zero(int nvars) {
  return SpinScalar(RatFunc::zero(nvars), RatFunc::zero(nvars));
}

SpinScalar spin_one(int nvars) {
  return SpinScalar(RatFunc::constant(nvars, Rational(1)), RatFunc::zero(nvars));
}

SpinScalar spin_from(const RatFunc& f) { return SpinScalar(f, RatFunc::zero(f.nvars())); }

SpinScalar spin_derivative(const SpinScalar& s, int var) {
  return SpinScalar(s.a.derivative(var), s.b.derivative(var));
}

namespace {

SpinScalar sqrt2_coeff(int nvars, const Rational& c) {
  return SpinScalar(RatFunc::zero(nvars), RatFunc::constant(nvars, c));
}

int subset_parity(unsigned mask) { return std::popcount(mask) & 1; }

// (-1)^(number of frame indices below a present in mask).
Rational interleave_sign(unsigned mask, int a) {
  unsigned below = mask & ((1u << a) - 1u);
  return (std::popcount(below) & 1) ? Rational(-1) : Rational(1);
}

}  // namespace

SpinorField::SpinorField(Chart chart, int parity, int weight2)
    : chart_(std::move(chart)), parity_(parity & 1), weight2_(weight2) {
  if (chart_.dim % 2 != 0) throw std::invalid_argument("SpinorField: chart dimension must be even");
  n_ = chart_.dim / 2;
  comp_.assign(1u << n_, spin_zero(chart_.dim));
}

SpinorField SpinorField::basis(const Chart& chart, unsigned mask, int weight2) {
  SpinorField s(chart, subset_parity(mask), weight2);
  s.comp_[mask] = spin_one(chart.dim);
  return s;
}

SpinorField SpinorField::vol(const Chart& chart, int weight2) {
  int n = chart.dim / 2;
  return basis(chart, (1u << n) - 1u, weight2);
}

SpinorField SpinorField::unit(const Chart& chart, int weight2) {
  return basis(chart, 0u, weight2);
}

void SpinorField::set_comp(unsigned mask, const SpinScalar& v) {
  if (subset_parity(mask) != parity_ && !v.is_zero())
    throw std::logic_error("SpinorField: component parity mismatch");
  comp_[mask] = v;
}

bool SpinorField::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

SpinorField SpinorField::operator-() const {
  SpinorField r = *this;
  for (auto& c : r.comp_) c = -c;
  return r;
}

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity_ != b.parity_) throw std::logic_error("SpinorField: adding mixed parities");
  if (a.weight2_ != b.weight2_) throw std::logic_error("SpinorField: adding mixed weights");
  SpinorField r = a;
  for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] += b.comp_[i];
  return r;
}

SpinorField operator-(const SpinorField& a, const SpinorField& b) { return a + (-b); }

SpinorField SpinorField::scaled(const Rational& c) const {
  return scaled_fn(RatFunc::constant(chart_.dim, c));
}

SpinorField SpinorField::scaled_fn(const RatFunc& f) const {
  return scaled_spin(spin_from(f));
}

SpinorField SpinorField::scaled_spin(const SpinScalar& s) const {
  SpinorField r = *this;
  for (auto& c : r.comp_) c *= s;
  return r;
}

SpinorField SpinorField::wedge(int a) const {
  SpinorField r(chart_, 1 - parity_, weight2_);
  unsigned bit = 1u << a;
  for (unsigned mask = 0; mask < comp_.size(); ++mask) {
    if (mask & bit) continue;
    if (comp_[mask].is_zero()) continue;
    RatFunc sgn = RatFunc::constant(chart_.dim, interleave_sign(mask, a));
    r.comp_[mask | bit] += comp_[mask] * spin_from(sgn);
  }
  return r;
}

SpinorField SpinorField::contract(int a) const {
  SpinorField r(chart_, 1 - parity_, weight2_);
  unsigned bit = 1u << a;
  for (unsigned mask = 0; mask < comp_.size(); ++mask) {
    if (!(mask & bit)) continue;
    if (comp_[mask].is_zero()) continue;
    unsigned rest = mask & ~bit;
    RatFunc sgn = RatFunc::constant(chart_.dim, interleave_sign(rest, a));
    r.comp_[rest] += comp_[mask] * spin_from(sgn);
  }
  return r;
}

SpinorField SpinorField::partial(int var) const {
  SpinorField r = *this;
  for (auto& c : r.comp_) c = spin_derivative(c, var);
  return r;
}

SpinScalar beta_pair(const SpinorField& phi, const SpinorField& psi) {
  if (phi.chart().dim != psi.chart().dim)
    throw std::invalid_argument("beta_pair: mismatched charts");
  const int nv = phi.chart().dim;
  const int n = nv / 2;
  const unsigned full = (1u << n) - 1u;
  SpinScalar acc = spin_zero(nv);
  for (unsigned mask = 0; mask <= full; ++mask) {
    const SpinScalar& a = phi.comp(mask);
    if (a.is_zero()) continue;
    const SpinScalar& b = psi.comp(full & ~mask);
    if (b.is_zero()) continue;
    int k = std::popcount(mask);
    // Inversions between mask and its complement give the shuffle sign of
    // e_S ^ e_Sc relative to the top monomial.
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < i; ++j)
        if (!(mask & (1u << j))) ++inv;
    }
    int sgn = ((k * (k - 1) / 2 + inv) & 1) ? -1 : 1;
    acc += (a * b) * spin_from(RatFunc::constant(nv, Rational(sgn)));
  }
  return acc;
}

WittFrame build_witt_frame(const TensorField& g) {
  const int nv = g.chart().dim;
  const int n = nv / 2;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!g.at({n + a, n + b}).is_zero())
        throw std::invalid_argument("build_witt_frame: fibre coordinate fields are not null");

  RatFunc zero = RatFunc::zero(nv);
  RatFunc one = RatFunc::constant(nv, Rational(1));

  FMat C(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C(a, b) = g.at({n + a, b});
  FMat Cinv = exact_inverse(C, zero, one);

  // First pass pairs with the fibre frame; second pass subtracts half the
  // induced quadratic form to reach null fields.
  FMat M(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      RatFunc s = zero;
      for (int r = 0; r < n; ++r)
        for (int t = 0; t < n; ++t) s += Cinv(r, b) * Cinv(t, c) * g.at({r, t});
      M(b, c) = s;
    }

  WittFrame f;
  f.chart = g.chart();
  f.n = n;
  f.frame_to_coord = FMat(nv, nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) f.frame_to_coord(i, j) = zero;

  for (int b = 0; b < n; ++b) {
    TensorField hb(g.chart(), {Idx::Up});
    for (int c = 0; c < n; ++c) hb.at({c}) = Cinv(c, b);
    for (int a = 0; a < n; ++a) hb.at({n + a}) = M(b, a).scaled(Rational(-1, 2));
    f.h.push_back(hb);
    for (int mu = 0; mu < nv; ++mu) f.frame_to_coord(mu, b) = hb.at({mu});
  }
  for (int a = 0; a < n; ++a) {
    TensorField va(g.chart(), {Idx::Up});
    va.at({n + a}) = one;
    f.v.push_back(va);
    f.frame_to_coord(n + a, n + a) = one;
  }
  f.coord_to_frame = exact_inverse(f.frame_to_coord, zero, one);
  return f;
}

SpinGeometry::SpinGeometry(ConformalData cd) : cd_(std::move(cd)), frame_(build_witt_frame(cd_.g)) {
  const int nv = cd_.g.chart().dim;
  const int m = nv;
  RatFunc zero = RatFunc::zero(nv);
  auto pair_of = [&](int beta) { return beta < frame_.n ? beta + frame_.n : beta - frame_.n; };

  lambda_.reserve(static_cast<size_t>(m));
  for (int mu = 0; mu < m; ++mu) {
    FMat omega(m, m);
    for (int alpha = 0; alpha < m; ++alpha)
      for (int beta = 0; beta < m; ++beta) omega(alpha, beta) = zero;
    for (int beta = 0; beta < m; ++beta) {
      // Coordinate components of the covariant derivative of frame vector beta.
      FVec d(m);
      for (int nu = 0; nu < m; ++nu) {
        RatFunc s = frame_.frame_to_coord(nu, beta).derivative(mu);
        for (int lam = 0; lam < m; ++lam)
          s += cd_.lc.at(nu, mu, lam) * frame_.frame_to_coord(lam, beta);
        d(nu) = s;
      }
      for (int alpha = 0; alpha < m; ++alpha) {
        RatFunc s = zero;
        for (int nu = 0; nu < m; ++nu) s += frame_.coord_to_frame(alpha, nu) * d(nu);
        omega(alpha, beta) = s;
      }
    }
    FMat lam(m, m);
    for (int alpha = 0; alpha < m; ++alpha)
      for (int beta = 0; beta < m; ++beta) lam(alpha, beta) = omega(alpha, pair_of(beta));
    lambda_.push_back(std::move(lam));
  }
}

SpinorField SpinGeometry::gamma_frame(int alpha, const SpinorField& psi) const {
  const int nv = cd_.g.chart().dim;
  if (alpha < frame_.n)
    return psi.contract(alpha).scaled_spin(sqrt2_coeff(nv, Rational(-1)));
  return psi.wedge(alpha - frame_.n).scaled_spin(sqrt2_coeff(nv, Rational(1)));
}

SpinorField SpinGeometry::gamma_coord(int mu, const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  SpinorField acc(psi.chart(), 1 - psi.parity(), psi.weight2());
  for (int alpha = 0; alpha < m; ++alpha) {
    const RatFunc& c = frame_.coord_to_frame(alpha, mu);
    if (c.is_zero()) continue;
    acc += gamma_frame(alpha, psi).scaled_fn(c);
  }
  return acc;
}

SpinorField SpinGeometry::gamma(const TensorField& vec, const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  SpinorField acc(psi.chart(), 1 - psi.parity(), psi.weight2());
  for (int alpha = 0; alpha < m; ++alpha) {
    RatFunc c = RatFunc::zero(m);
    for (int mu = 0; mu < m; ++mu) c += frame_.coord_to_frame(alpha, mu) * vec.at({mu});
    if (c.is_zero()) continue;
    acc += gamma_frame(alpha, psi).scaled_fn(c);
  }
  return acc;
}

SpinorField SpinGeometry::spin_derivative(int mu, const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  const FMat& lam = lambda_[static_cast<size_t>(mu)];
  SpinorField acc(psi.chart(), psi.parity(), psi.weight2());
  for (int beta = 0; beta < m; ++beta) {
    SpinorField gb = gamma_frame(beta, psi);
    if (gb.is_zero()) continue;
    for (int alpha = 0; alpha < m; ++alpha) {
      const RatFunc& l = lam(alpha, beta);
      if (l.is_zero()) continue;
      acc += gamma_frame(alpha, gb).scaled_fn(l);
    }
  }
  return psi.partial(mu) + acc.scaled(Rational(-1, 4));
}

SpinorField SpinGeometry::dirac(const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  SpinorField acc(psi.chart(), 1 - psi.parity(), psi.weight2());
  for (int nu = 0; nu < m; ++nu) {
    SpinorField dpsi = spin_derivative(nu, psi);
    if (dpsi.is_zero()) continue;
    for (int mu = 0; mu < m; ++mu) {
      const RatFunc& gmn = cd_.ginv.at({mu, nu});
      if (gmn.is_zero()) continue;
      acc += gamma_coord(mu, dpsi).scaled_fn(gmn);
    }
  }
  return acc;
}

std::vector<SpinorField> SpinGeometry::twistor_residual(const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  SpinorField slash = dirac(psi);
  std::vector<SpinorField> out;
  out.reserve(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    out.push_back(spin_derivative(a, psi) + gamma_coord(a, slash).scaled(Rational(1, m)));
  return out;
}

SpinorField SpinGeometry::lie_derivative(const TensorField& k, const SpinorField& psi) const {
  const int m = cd_.g.chart().dim;
  TensorField kflat = lower_index(k, 0, cd_.g);
  TensorField dk = covariant_derivative(kflat, cd_.lc);
  TensorField mu2 = antisymmetrize(dk, {0, 1});
  TensorField muUU = raise_index(raise_index(mu2, 0, cd_.ginv), 1, cd_.ginv);
  RatFunc div = metric_trace(dk, cd_.ginv);

  SpinorField directional(psi.chart(), psi.parity(), psi.weight2());
  for (int mu = 0; mu < m; ++mu) {
    const RatFunc& km = k.at({mu});
    if (km.is_zero()) continue;
    directional += spin_derivative(mu, psi).scaled_fn(km);
  }

  SpinorField rot(psi.chart(), psi.parity(), psi.weight2());
  for (int d = 0; d < m; ++d) {
    SpinorField gd = gamma_coord(d, psi);
    if (gd.is_zero()) continue;
    for (int c = 0; c < m; ++c) {
      const RatFunc& coeff = muUU.at({c, d});
      if (coeff.is_zero()) continue;
      rot += gamma_coord(c, gd).scaled_fn(coeff);
    }
  }

  SpinorField weight_term = psi.scaled_fn(div).scaled(Rational(-psi.weight2(), 2 * m));
  return directional + rot.scaled(Rational(-1, 4)) + weight_term;
}

Mat<SpinScalar> SpinGeometry::spinor_kernel(const SpinorField& psi) const {
  if (psi.is_zero()) throw std::domain_error("spinor_kernel: zero spinor");
  const int m = cd_.g.chart().dim;
  const int rows = 1 << frame_.n;
  Mat<SpinScalar> K(rows, m);
  for (int mu = 0; mu < m; ++mu) {
    SpinorField col = gamma_coord(mu, psi);
    for (int r = 0; r < rows; ++r) K(r, mu) = col.comp(static_cast<unsigned>(r));
  }
  return kernel_basis(K, spin_zero(m), spin_one(m));
}

bool SpinGeometry::purity_check(const SpinorField& psi) const {
  return spinor_kernel(psi).cols() == frame_.n;
}

}  // namespace pwlab
