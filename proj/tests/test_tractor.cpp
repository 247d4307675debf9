#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pwlab/conformal.hpp"
#include "pwlab/projective.hpp"
#include "pwlab/pw.hpp"
#include "pwlab/spinor.hpp"
#include "pwlab/tractor.hpp"
#include "support/random_gen.hpp"
#include "support/random_geom.hpp"

using namespace pwlab;
using namespace pwlab::testsupport;

namespace {

struct SilenceLog {
  SilenceLog() { set_projective_log(nullptr); }
} silence_log_;

int mask_parity(unsigned mask) {
  int p = 0;
  for (unsigned m = mask; m; m &= m - 1) p ^= 1;
  return p;
}

SpinorField random_spinor(std::mt19937_64& rng, const Chart& ch, int parity, int weight2,
                          int max_deg = 1, int terms = 2) {
  int n = ch.dim / 2;
  SpinorField s(ch, parity, weight2);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (mask_parity(mask) != (parity & 1)) continue;
    s.set_comp(mask, spin_from(RatFunc(random_poly(rng, ch.dim, max_deg, terms))));
  }
  return s;
}

PWStructure curved_structure(int n) {
  // Gamma^1_{22} = x^1 before the trace normalization; any special source works.
  Connection sym = single_symbol_connection(n, 0, 1, 1, MultiPoly::variable(n, 0));
  return pw_extend(make_special(sym));
}

StdTractor random_std(std::mt19937_64& rng, const Chart& ch, int max_deg = 1, int terms = 2) {
  StdTractor t(ch);
  t.rho = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
  t.sigma = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
  for (int a = 0; a < ch.dim; ++a) t.phi.at({a}) = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
  return t;
}

SpinTractor random_spin(std::mt19937_64& rng, const Chart& ch, int chi_parity, int max_deg = 1,
                        int terms = 2) {
  SpinorField chi = random_spinor(rng, ch, chi_parity, 1, max_deg, terms);
  SpinorField tau = random_spinor(rng, ch, 1 - chi_parity, -1, max_deg, terms);
  return {tau, chi};
}

AdjTractor random_adj(std::mt19937_64& rng, const Chart& ch, int max_deg = 1, int terms = 2) {
  AdjTractor a(ch);
  a.phi = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
  for (int i = 0; i < ch.dim; ++i) {
    a.rho.at({i}) = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
    a.k.at({i}) = RatFunc(random_poly(rng, ch.dim, max_deg, terms));
    for (int j = i + 1; j < ch.dim; ++j) {
      RatFunc v{random_poly(rng, ch.dim, max_deg, terms)};
      a.mu.at({i, j}) = v;
      a.mu.at({j, i}) = -v;
    }
  }
  return a;
}

// Basis (pure top scalar, middle covectors, pure bottom scalar).
std::vector<StdTractor> tractor_basis(const Chart& ch) {
  std::vector<StdTractor> basis;
  StdTractor top(ch);
  top.rho = RatFunc::constant(ch.dim, Rational(1));
  basis.push_back(top);
  for (int a = 0; a < ch.dim; ++a) {
    StdTractor mid(ch);
    mid.phi.at({a}) = RatFunc::constant(ch.dim, Rational(1));
    basis.push_back(mid);
  }
  StdTractor bot(ch);
  bot.sigma = RatFunc::constant(ch.dim, Rational(1));
  basis.push_back(bot);
  return basis;
}

SpinorField retagged(SpinorField s, int w2) {
  s.set_weight2(w2);
  return s;
}

// Right Clifford action on a dual spinor corresponds, on beta
// representatives, to the left action with the middle slot negated.
StdTractor flip_middle(StdTractor t) {
  t.phi = -t.phi;
  return t;
}

bool all_groups_zero(const std::vector<std::vector<SpinorField>>& groups) {
  for (const auto& g : groups)
    for (const auto& s : g)
      if (!s.is_zero()) return false;
  return true;
}

// Slot transformation of a standard tractor under g -> omega^2 g, with the
// per-slot trivialization factor omega^weight included.
StdTractor hat_slots(const ConformalData& cd, const StdTractor& t, const RatFunc& omega) {
  const int m = cd.g.dim();
  TensorField ups(cd.g.chart(), {Idx::Down});
  for (int a = 0; a < m; ++a) ups.at({a}) = omega.derivative(a) / omega;
  TensorField upsup = raise_index(ups, 0, cd.ginv);
  RatFunc ups_phi = RatFunc::zero(m);
  RatFunc ups_sq = RatFunc::zero(m);
  for (int a = 0; a < m; ++a) {
    ups_phi += upsup.at({a}) * t.phi.at({a});
    ups_sq += upsup.at({a}) * ups.at({a});
  }
  StdTractor r(cd.g.chart());
  r.sigma = omega * t.sigma;
  for (int a = 0; a < m; ++a) r.phi.at({a}) = omega * (t.phi.at({a}) + ups.at({a}) * t.sigma);
  r.rho = (t.rho - ups_phi - ups_sq.scaled(Rational(1, 2)) * t.sigma) / omega;
  return r;
}

}  // namespace

TEST_CASE("tractor metric has the anti-diagonal block form") {
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  auto basis = tractor_basis(s.chart);
  const RatFunc one = RatFunc::constant(m, Rational(1));
  CHECK(tc.h_pair(basis[0], basis.back()) == one);
  CHECK(tc.h_pair(basis.back(), basis[0]) == one);
  CHECK(tc.h_pair(basis[0], basis[0]).is_zero());
  CHECK(tc.h_pair(basis.back(), basis.back()).is_zero());
  for (int a = 0; a < m; ++a) {
    CHECK(tc.h_pair(basis[0], basis[static_cast<size_t>(1 + a)]).is_zero());
    CHECK(tc.h_pair(basis.back(), basis[static_cast<size_t>(1 + a)]).is_zero());
    for (int b = 0; b < m; ++b)
      CHECK(tc.h_pair(basis[static_cast<size_t>(1 + a)], basis[static_cast<size_t>(1 + b)]) ==
            s.ginv.at({a, b}));
  }
}

TEST_CASE("standard connection preserves the tractor metric") {
  std::mt19937_64 rng(401u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  StdTractor t1 = random_std(rng, s.chart);
  StdTractor t2 = random_std(rng, s.chart);
  RatFunc h12 = tc.h_pair(t1, t2);
  for (int c = 0; c < s.chart.dim; ++c) {
    RatFunc lhs = tc.h_pair(tc.std_connection(t1, c), t2) + tc.h_pair(t1, tc.std_connection(t2, c));
    CHECK(lhs == h12.derivative(c));
  }
}

TEST_CASE("standard connection on the unit bottom slot") {
  SUBCASE("flat structure is parallel") {
    PWStructure s = pw_extend(Connection::flat(Chart::base(2)));
    TractorCalc tc(s.g);
    StdTractor unit(s.chart);
    unit.sigma = RatFunc::constant(s.chart.dim, Rational(1));
    for (int c = 0; c < s.chart.dim; ++c) {
      StdTractor d = tc.std_connection(unit, c);
      CHECK(d.is_zero());
    }
  }
  SUBCASE("curved structure exposes the Schouten row") {
    PWStructure s = curved_structure(2);
    TractorCalc tc(s.g);
    const TensorField& schouten = tc.conf().schouten;
    StdTractor unit(s.chart);
    unit.sigma = RatFunc::constant(s.chart.dim, Rational(1));
    for (int c = 0; c < s.chart.dim; ++c) {
      StdTractor d = tc.std_connection(unit, c);
      CHECK(d.rho.is_zero());
      CHECK(d.sigma.is_zero());
      for (int a = 0; a < s.chart.dim; ++a) CHECK(d.phi.at({a}) == schouten.at({c, a}));
    }
  }
}

TEST_CASE("standard curvature acts by the slotted two-form") {
  std::mt19937_64 rng(402u);
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    StdTractor t = random_std(rng, s.chart, 1, 1);
    std::vector<StdTractor> first;
    for (int b = 0; b < m; ++b) first.push_back(tc.std_connection(t, b));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        StdTractor comm = tc.std_connection(first[static_cast<size_t>(b)], a) -
                          tc.std_connection(first[static_cast<size_t>(a)], b);
        StdTractor expect = tc.adj_action(tc.curvature(a, b), t);
        CHECK((comm - expect).is_zero());
      }
  }
}

TEST_CASE("spin connection satisfies the Leibniz rule over the Clifford action") {
  std::mt19937_64 rng(403u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  StdTractor t = random_std(rng, s.chart);
  SpinTractor sp = random_spin(rng, s.chart, 0);
  for (int c = 0; c < s.chart.dim; ++c) {
    SpinTractor lhs = tc.spin_connection(tc.clifford(t, sp), c);
    SpinTractor rhs = tc.clifford(tc.std_connection(t, c), sp) + tc.clifford(t, tc.spin_connection(sp, c));
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("volume spin tractor is parallel") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    CHECK(sf.tau.is_zero());
    for (int c = 0; c < s.chart.dim; ++c) CHECK(tc.spin_connection(sf, c).is_zero());
  }
}

TEST_CASE("flat spin connection reduces to the Clifford shift") {
  std::mt19937_64 rng(404u);
  PWStructure s = pw_extend(Connection::flat(Chart::base(2)));
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  // Constant slots: chi even, tau odd.
  SpinTractor sp{SpinorField::basis(s.chart, 0b01u, -1), SpinorField::unit(s.chart, 1)};
  const SpinScalar inv_sqrt2(RatFunc::zero(m), RatFunc::constant(m, Rational(1, 2)));
  for (int c = 0; c < m; ++c) {
    SpinTractor d = tc.spin_connection(sp, c);
    CHECK(d.tau.is_zero());
    SpinorField expect = retagged(tc.spin().gamma_coord(c, sp.tau).scaled_spin(inv_sqrt2), 1);
    CHECK((d.chi - expect).is_zero());
  }
}

TEST_CASE("spin curvature matches the adjoint action and kills the volume tractor") {
  std::mt19937_64 rng(405u);
  SUBCASE("random sections, low dimension") {
    PWStructure s = curved_structure(2);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    SpinTractor sp = random_spin(rng, s.chart, 0, 1, 1);
    std::vector<SpinTractor> first;
    for (int b = 0; b < m; ++b) first.push_back(tc.spin_connection(sp, b));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        SpinTractor comm = tc.spin_connection(first[static_cast<size_t>(b)], a) -
                           tc.spin_connection(first[static_cast<size_t>(a)], b);
        SpinTractor expect = tc.adj_action_spin(tc.curvature(a, b), sp);
        CHECK((comm - expect).is_zero());
      }
  }
  SUBCASE("volume tractor in the kernel") {
    for (int n : {2, 3}) {
      PWStructure s = curved_structure(n);
      TractorCalc tc(s.g);
      const int m = s.chart.dim;
      const ConformalData& cd = tc.conf();
      SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          CHECK(tc.adj_action_spin(tc.curvature(a, b), sf).is_zero());
          // Contracted curvature spinor: sum_c Y_{cab} gamma^c chi = 0.
          SpinorField acc = SpinorField::zero(s.chart, 1 - sf.chi.parity(), 0);
          for (int c = 0; c < m; ++c) {
            const RatFunc& y = cd.cotton.at({c, a, b});
            if (y.is_zero()) continue;
            for (int d = 0; d < m; ++d) {
              const RatFunc& gcd = cd.ginv.at({c, d});
              if (gcd.is_zero()) continue;
              acc += retagged(tc.spin().gamma_coord(d, sf.chi).scaled_fn(y * gcd), 0);
            }
          }
          CHECK(acc.is_zero());
        }
    }
  }
}

TEST_CASE("tractor Clifford action squares to minus the metric") {
  std::mt19937_64 rng(406u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  StdTractor t = random_std(rng, s.chart);
  SpinTractor sp = random_spin(rng, s.chart, 0);
  SpinTractor twice = tc.clifford(t, tc.clifford(t, sp));
  CHECK((twice + sp.scaled_fn(tc.h_pair(t, t))).is_zero());
}

TEST_CASE("tractor Clifford slot examples") {
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  SUBCASE("bottom scalar hits the top spinor slot") {
    StdTractor bot(s.chart);
    bot.sigma = RatFunc::constant(m, Rational(1));
    SpinorField tau = SpinorField::basis(s.chart, 0b01u, -1);
    SpinTractor sp{tau, SpinorField::zero(s.chart, 0, 1)};
    SpinTractor out = tc.clifford(bot, sp);
    CHECK(out.tau.is_zero());
    SpinorField expect = retagged(tau.scaled_spin(SpinScalar(RatFunc::zero(m), RatFunc::constant(m, Rational(-1)))), 1);
    CHECK((out.chi - expect).is_zero());
  }
  SUBCASE("scale tractor annihilates the volume tractor") {
    for (int n : {2, 3}) {
      PWStructure sn = curved_structure(n);
      TractorCalc tn(sn.g);
      StdTractor scale = tn.split_scalar(RatFunc::constant(sn.chart.dim, Rational(1)));
      SpinTractor sf = tn.split_spinor(SpinorField::vol(sn.chart));
      CHECK(tn.clifford(scale, sf).is_zero());
    }
  }
}

TEST_CASE("splitting operators take their reduced-scale values") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    SUBCASE("unit scalar lifts to the unit bottom tractor") {
      StdTractor scale = tc.split_scalar(RatFunc::constant(m, Rational(1)));
      CHECK(scale.rho.is_zero());
      CHECK(scale.phi.is_zero());
      CHECK(scale.sigma == RatFunc::constant(m, Rational(1)));
    }
    SUBCASE("volume spinor lifts with zero top slot") {
      SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
      CHECK(sf.tau.is_zero());
      CHECK((sf.chi - SpinorField::vol(s.chart)).is_zero());
    }
    SUBCASE("dilation field lifts to the involution tractor") {
      AdjTractor k = tc.split_vector(s.k);
      CHECK(k.rho.is_zero());
      CHECK(k.phi == RatFunc::constant(m, Rational(-1)));
      // mu pairs fibre and base covectors in the identity pattern.
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const RatFunc& v = k.mu.at({i, j});
          if (i >= n && j < m - n && i - n == j)
            CHECK(v == RatFunc::constant(m, Rational(1)));
          else if (i < m - n && j >= n && j - n == i)
            CHECK(v == RatFunc::constant(m, Rational(-1)));
          else
            CHECK(v.is_zero());
        }
      // k-slot is the lowered dilation field.
      CHECK((k.k - lower_index(s.k, 0, s.g)).is_zero());
    }
  }
}

TEST_CASE("involution residuals vanish exactly for the dilation tractor") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    AdjTractor k = tc.split_vector(s.k);
    InvolutionResiduals r = tc.involution_residuals(k);
    CHECK(r.k_null.is_zero());
    CHECK(r.rho_null.is_zero());
    CHECK(r.mu_k.is_zero());
    CHECK(r.mu_rho.is_zero());
    CHECK(r.pairing.is_zero());
    CHECK(r.mu_square.is_zero());
    CHECK(r.all_zero());
  }
}

TEST_CASE("involution residuals reject non-dilation fields") {
  PWStructure s = pw_extend(Connection::flat(Chart::base(2)));
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  const RatFunc one = RatFunc::constant(m, Rational(1));
  SUBCASE("coordinate translation") {
    TensorField xi(s.chart, {Idx::Up});
    xi.at({0}) = one;
    AdjTractor a = tc.split_vector(xi);
    CHECK(a.phi.is_zero());
    CHECK(a.rho.is_zero());
    InvolutionResiduals r = tc.involution_residuals(a);
    CHECK(r.pairing == one);
    CHECK_FALSE(r.all_zero());
  }
  SUBCASE("zero field") {
    TensorField xi(s.chart, {Idx::Up});
    AdjTractor a = tc.split_vector(xi);
    InvolutionResiduals r = tc.involution_residuals(a);
    CHECK(r.pairing == one);
    CHECK_FALSE(r.all_zero());
  }
}

TEST_CASE("dilation tractor squares to the identity on sections") {
  std::mt19937_64 rng(407u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  AdjTractor k = tc.split_vector(s.k);
  StdTractor t = random_std(rng, s.chart);
  CHECK((tc.adj_action(k, tc.adj_action(k, t)) - t).is_zero());
  // Endomorphism trace of the square = fibre dimension.
  CHECK(tc.adj_pairing(k, k) == RatFunc::constant(s.chart.dim, Rational(s.chart.dim + 2)));
}

TEST_CASE("adjoint action slot activations match the display") {
  std::mt19937_64 rng(408u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  StdTractor t = random_std(rng, s.chart);
  SUBCASE("scalar slot only") {
    AdjTractor a(s.chart);
    a.phi = RatFunc::constant(m, Rational(1));
    StdTractor out = tc.adj_action(a, t);
    CHECK(out.rho == -t.rho);
    CHECK(out.phi.is_zero());
    CHECK(out.sigma == t.sigma);
  }
  SUBCASE("bottom one-form slot only") {
    AdjTractor a(s.chart);
    for (int i = 0; i < m; ++i) a.k.at({i}) = RatFunc(random_poly(rng, m, 1, 2));
    StdTractor out = tc.adj_action(a, t);
    CHECK(out.rho.is_zero());
    for (int b = 0; b < m; ++b) CHECK(out.phi.at({b}) == -(t.rho * a.k.at({b})));
    RatFunc expect = RatFunc::zero(m);
    TensorField kup = raise_index(a.k, 0, tc.conf().ginv);
    for (int r = 0; r < m; ++r) expect += kup.at({r}) * t.phi.at({r});
    CHECK(out.sigma == expect);
  }
}

TEST_CASE("derivative of the dilation tractor is the contracted curvature") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    AdjTractor k = tc.split_vector(s.k);
    for (int b = 0; b < m; ++b) {
      AdjTractor lhs = tc.adj_connection(k, b);
      AdjTractor rhs(s.chart);
      for (int a = 0; a < m; ++a) {
        const RatFunc& ka = s.k.at({a});
        if (ka.is_zero()) continue;
        rhs = rhs + tc.curvature(a, b).scaled_fn(ka);
      }
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("dilation tractor acts by minus one on the bottom eigenspace") {
  std::mt19937_64 rng(409u);
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    AdjTractor k = tc.split_vector(s.k);
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    // Sections with a lowered-vertical middle slot and free bottom slot.
    StdTractor v(s.chart);
    for (int a = 0; a < n; ++a) {
      TensorField low = lower_index(s.vertical[static_cast<size_t>(a)], 0, s.g);
      RatFunc f{random_poly(rng, m, 1, 2)};
      for (int i = 0; i < m; ++i) v.phi.at({i}) += f * low.at({i});
    }
    v.sigma = RatFunc(random_poly(rng, m, 1, 2));
    CHECK((tc.adj_action(k, v) + v).is_zero());
    CHECK(tc.clifford(v, sf).is_zero());
    // A lowered-horizontal middle slot leaves the eigenspace.
    StdTractor w(s.chart);
    w.phi = lower_index(s.horizontal[0], 0, s.g);
    CHECK_FALSE((tc.adj_action(k, w) + w).is_zero());
    CHECK_FALSE((tc.adj_action(k, w) - w).is_zero());
    CHECK_FALSE(tc.clifford(w, sf).is_zero());
  }
}

TEST_CASE("dilation tractor acts by plus one on the annihilator of the dual") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    AdjTractor k = tc.split_vector(s.k);
    SpinTractor se = tc.canonical_dual(s.k);
    // Horizontal-type section: middle slot H_1 flat, bottom slot p_1.
    StdTractor e1(s.chart);
    e1.phi = lower_index(s.horizontal[0], 0, s.g);
    e1.sigma = RatFunc::variable(m, n);
    CHECK((tc.adj_action(k, e1) - e1).is_zero());
    CHECK(tc.clifford(flip_middle(e1), se).is_zero());
    // Top-type section: unit top slot, middle slot minus half the lowered
    // dilation field.
    StdTractor e2(s.chart);
    e2.rho = RatFunc::constant(m, Rational(1));
    e2.phi = lower_index(s.k, 0, s.g).scaled(Rational(-1, 2));
    CHECK((tc.adj_action(k, e2) - e2).is_zero());
    CHECK(tc.clifford(flip_middle(e2), se).is_zero());
  }
}

TEST_CASE("eigentractor spinor relations hold on the reduced scale") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    AdjTractor k = tc.split_vector(s.k);
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    SpinTractor se = tc.canonical_dual(s.k);
    auto groups = tc.eigentractor_residuals(k, sf, se);
    REQUIRE(groups.size() == 12);
    CHECK(all_groups_zero(groups));
  }
}

TEST_CASE("dilation field annihilates the volume spinor on the flat structure") {
  PWStructure s = pw_extend(Connection::flat(Chart::base(2)));
  TractorCalc tc(s.g);
  CHECK(tc.spin().gamma(s.k, SpinorField::vol(s.chart)).is_zero());
}

TEST_CASE("rotation slot has the split eigenvalues on the frame") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    AdjTractor k = tc.split_vector(s.k);
    TensorField muup = raise_index(k.mu, 0, tc.conf().ginv);
    auto apply_mu = [&](const TensorField& vec) {
      TensorField out(s.chart, {Idx::Up});
      for (int i = 0; i < m; ++i) {
        RatFunc acc = RatFunc::zero(m);
        for (int j = 0; j < m; ++j) acc += muup.at({i, j}) * vec.at({j});
        out.at({i}) = acc;
      }
      return out;
    };
    for (int a = 0; a < n; ++a) {
      CHECK((apply_mu(s.vertical[static_cast<size_t>(a)]) + s.vertical[static_cast<size_t>(a)]).is_zero());
      CHECK((apply_mu(s.horizontal[static_cast<size_t>(a)]) - s.horizontal[static_cast<size_t>(a)]).is_zero());
    }
  }
}

TEST_CASE("adjoint action is skew for the tractor metric") {
  std::mt19937_64 rng(410u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  AdjTractor a = random_adj(rng, s.chart);
  StdTractor t1 = random_std(rng, s.chart);
  StdTractor t2 = random_std(rng, s.chart);
  RatFunc sum = tc.h_pair(tc.adj_action(a, t1), t2) + tc.h_pair(t1, tc.adj_action(a, t2));
  CHECK(sum.is_zero());
}

TEST_CASE("spin action of adjoint tractors intertwines the Clifford action") {
  std::mt19937_64 rng(411u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  AdjTractor a = random_adj(rng, s.chart, 1, 1);
  StdTractor v = random_std(rng, s.chart, 1, 1);
  SpinTractor sp = random_spin(rng, s.chart, 0, 1, 1);
  SpinTractor lhs = tc.adj_action_spin(a, tc.clifford(v, sp)) - tc.clifford(v, tc.adj_action_spin(a, sp));
  SpinTractor rhs = tc.clifford(tc.adj_action(a, v), sp);
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("dilation tractor spin eigenvalue") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    AdjTractor k = tc.split_vector(s.k);
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    SpinTractor lhs = tc.adj_action_spin(k, sf);
    CHECK((lhs - sf.scaled(Rational(-(n + 1), 2))).is_zero());
  }
}

TEST_CASE("canonical dual pairing normalization") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    SpinTractor se = tc.canonical_dual(s.k);
    SpinScalar expect = spin_from(RatFunc::constant(m, Rational(-1, 2)));
    CHECK(tc.spin_tractor_pairing(se, sf) == expect);
    CHECK(beta_pair(se.tau, sf.chi) == expect);
  }
}

TEST_CASE("beta pairing is Clifford self-adjoint and nondegenerate on the basis") {
  std::mt19937_64 rng(412u);
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    SpinGeometry sg(s.g);
    const int m = s.chart.dim;
    SpinorField phi = random_spinor(rng, s.chart, 0, 0);
    SpinorField psi = random_spinor(rng, s.chart, 1, 0);
    for (int mu = 0; mu < m; ++mu)
      CHECK(beta_pair(sg.gamma_coord(mu, phi), psi) == beta_pair(phi, sg.gamma_coord(mu, psi)));
    const unsigned full = (1u << n) - 1u;
    for (unsigned a = 0; a <= full; ++a)
      for (unsigned b = 0; b <= full; ++b) {
        SpinScalar v = beta_pair(SpinorField::basis(s.chart, a, 0), SpinorField::basis(s.chart, b, 0));
        if (b == (full & ~a))
          CHECK_FALSE(v.is_zero());
        else
          CHECK(v.is_zero());
      }
  }
}

TEST_CASE("spinor bilinears rebuild the dilation slots") {
  for (int n : {2, 3}) {
    PWStructure s = curved_structure(n);
    TractorCalc tc(s.g);
    const int m = s.chart.dim;
    const ConformalData& cd = tc.conf();
    AdjTractor k = tc.split_vector(s.k);
    SpinTractor sf = tc.split_spinor(SpinorField::vol(s.chart));
    SpinTractor se = tc.canonical_dual(s.k);
    auto graised = [&](int a, const SpinorField& psi) {
      SpinorField acc = SpinorField::zero(s.chart, 1 - psi.parity(), psi.weight2());
      for (int b = 0; b < m; ++b) {
        const RatFunc& gab = cd.ginv.at({a, b});
        if (gab.is_zero()) continue;
        acc += tc.spin().gamma_coord(b, psi).scaled_fn(gab);
      }
      return acc;
    };
    // Vector slot: k^a = 2 sqrt2 <eta, gamma^a chi>.
    const SpinScalar two_sqrt2(RatFunc::zero(m), RatFunc::constant(m, Rational(2)));
    for (int a = 0; a < m; ++a) {
      SpinScalar val = two_sqrt2 * beta_pair(se.chi, graised(a, sf.chi));
      CHECK(val == spin_from(s.k.at({a})));
    }
    // Rotation slot: mu_{ab} = 2 <etabar, gamma_{[a} gamma_{b]} chi>.
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        SpinorField asym = tc.spin().gamma_coord(a, tc.spin().gamma_coord(b, sf.chi)) -
                           tc.spin().gamma_coord(b, tc.spin().gamma_coord(a, sf.chi));
        SpinScalar val = beta_pair(se.tau, asym);
        CHECK(val == spin_from(k.mu.at({a, b})));
      }
  }
}

TEST_CASE("standard slots transform coherently under a change of scale") {
  std::mt19937_64 rng(413u);
  PWStructure s = curved_structure(2);
  TractorCalc tc(s.g);
  const int m = s.chart.dim;
  RatFunc omega = RatFunc::constant(m, Rational(1)) + RatFunc::variable(m, 0);
  TensorField ghat = conformal_rescale(s.g, omega);
  TractorCalc tchat(ghat);
  StdTractor t1 = random_std(rng, s.chart);
  StdTractor t2 = random_std(rng, s.chart);
  StdTractor h1 = hat_slots(tc.conf(), t1, omega);
  StdTractor h2 = hat_slots(tc.conf(), t2, omega);
  SUBCASE("tractor metric is scale-invariant") {
    CHECK(tchat.h_pair(h1, h2) == tc.h_pair(t1, t2));
  }
  SUBCASE("connection commutes with the slot transformation") {
    for (int c = 0; c < m; ++c) {
      StdTractor lhs = tchat.std_connection(h1, c);
      StdTractor rhs = hat_slots(tc.conf(), tc.std_connection(t1, c), omega);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("projective cotractor connection has the displayed curvature") {
  std::mt19937_64 rng(414u);
  struct CoT {
    TensorField phi;
    RatFunc sigma;
  };
  for (int n : {2, 3}) {
    Chart base = Chart::base(n);
    Connection d = make_special(random_connection(rng, base, 1, 1));
    TensorField p = proj_schouten(d);
    TensorField w = proj_weyl(d);
    TensorField y = proj_cotton(d);
    CoT t{TensorField(base, {Idx::Down}), RatFunc(random_poly(rng, n, 2, 2))};
    for (int a = 0; a < n; ++a) t.phi.at({a}) = RatFunc(random_poly(rng, n, 2, 2));
    auto cot_deriv = [&](const CoT& u, int c) {
      TensorField dphi = covariant_derivative(u.phi, d);
      CoT r{TensorField(base, {Idx::Down}), u.sigma.derivative(c) - u.phi.at({c})};
      for (int a = 0; a < n; ++a) r.phi.at({a}) = dphi.at({c, a}) + p.at({c, a}) * u.sigma;
      return r;
    };
    if (n == 2) CHECK(w.is_zero());
    std::vector<CoT> first;
    for (int c = 0; c < n; ++c) first.push_back(cot_deriv(t, c));
    for (int c = 0; c < n; ++c)
      for (int e = c + 1; e < n; ++e) {
        CoT comm{first[static_cast<size_t>(e)].phi, RatFunc::zero(n)};
        comm = cot_deriv(first[static_cast<size_t>(e)], c);
        CoT other = cot_deriv(first[static_cast<size_t>(c)], e);
        comm.phi -= other.phi;
        comm.sigma -= other.sigma;
        CHECK(comm.sigma.is_zero());
        for (int a = 0; a < n; ++a) {
          RatFunc expect = y.at({a, c, e}) * t.sigma;
          for (int b = 0; b < n; ++b) expect -= w.at({c, e, b, a}) * t.phi.at({b});
          CHECK(comm.phi.at({a}) == expect);
        }
      }
  }
}
