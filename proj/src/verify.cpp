#include "pwlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pwlab/kostant.hpp"
#include "pwlab/kostant_gen.hpp"
#include "pwlab/projective.hpp"

namespace pwlab {

namespace {

struct CheckJob {
  std::string name;
  std::string anchor;
  std::function<std::pair<bool, std::string>()> run;
};

int resolve_threads(const VerifyOptions& opt) {
  return opt.threads > 0 ? opt.threads : thread_budget();
}

// Checks are independent; the report vector is the only join point.
std::vector<CheckResult> run_jobs(std::vector<CheckJob> jobs, int threads) {
  std::vector<CheckResult> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      CheckResult r;
      r.name = jobs[i].name;
      r.anchor = jobs[i].anchor;
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto [ok, note] = jobs[i].run();
        r.passed = ok;
        r.residual = note;
      } catch (const std::exception& e) {
        r.passed = false;
        r.residual = std::string("error: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out[i] = std::move(r);
    }
  };
  int nt = std::min<int>(std::max(threads, 1), static_cast<int>(jobs.size()));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return out;
}

std::string clip(std::string s) {
  if (s.size() > 110) {
    s.resize(107);
    s += "...";
  }
  return s;
}

std::string idx_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

std::string tensor_note(const TensorField& t) {
  if (t.is_zero()) return "0";
  for (MultiIndex mi(t.dim(), t.rank()); mi.valid(); mi.next()) {
    const RatFunc& v = t.at(*mi);
    if (!v.is_zero())
      return "nonzero at " + idx_str(*mi) + ": " + clip(v.normalized().str(t.chart().names));
  }
  return "nonzero";
}

std::pair<bool, std::string> from_tensor(const TensorField& t) {
  bool z = t.is_zero();
  return {z, z ? "0" : tensor_note(t)};
}

std::pair<bool, std::string> from_ratfunc(const RatFunc& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return {true, "0"};
  return {false, "nonzero: " + clip(f.normalized().str(names))};
}

std::pair<bool, std::string> from_spinor(const SpinorField& s) {
  if (s.is_zero()) return {true, "0"};
  for (unsigned mask = 0; mask < s.dim(); ++mask)
    if (!s.comp(mask).is_zero())
      return {false, "nonzero at spinor component " + std::to_string(mask)};
  return {false, "nonzero"};
}

// Coordinate Lie bracket [v, w]^mu = v^nu d_nu w^mu - w^nu d_nu v^mu.
TensorField vf_bracket(const TensorField& v, const TensorField& w) {
  const int m = v.dim();
  TensorField out(v.chart(), {Idx::Up});
  for (int mu = 0; mu < m; ++mu) {
    RatFunc acc = RatFunc::zero(m);
    for (int nu = 0; nu < m; ++nu)
      acc += v.at({nu}) * w.at({mu}).derivative(nu) - w.at({nu}) * v.at({mu}).derivative(nu);
    out.at({mu}) = acc;
  }
  return out;
}

// Maximal isotropy of the annihilator of a tractor spinor, at one sample
// point: the kernel of T -> T.s has dimension n+1 and pairs to zero under
// the tractor metric. Points with a vanishing denominator are redrawn.
std::pair<bool, std::string> tractor_spinor_purity(const TractorCalc& tc, const SpinTractor& sF,
                                                   int n, uint64_t seed) {
  using SQ = Sq2<Rational>;
  const int m = tc.dim();
  const int nb = m + 2;
  const Chart& ch = tc.chart();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-8, 8);

  std::vector<StdTractor> basis;
  basis.reserve(static_cast<size_t>(nb));
  StdTractor top(ch);
  top.rho = RatFunc::constant(m, Rational(1));
  basis.push_back(top);
  for (int a = 0; a < m; ++a) {
    StdTractor mid(ch);
    mid.phi.at({a}) = RatFunc::constant(m, Rational(1));
    basis.push_back(mid);
  }
  StdTractor bot(ch);
  bot.sigma = RatFunc::constant(m, Rational(1));
  basis.push_back(bot);

  std::vector<SpinTractor> image;
  image.reserve(static_cast<size_t>(nb));
  for (const StdTractor& t : basis) image.push_back(tc.clifford(t, sF));

  const size_t sd = static_cast<size_t>(1) << n;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> pt;
    for (int i = 0; i < m; ++i) pt.emplace_back(numer(rng), 5);
    try {
      Mat<SQ> mat(static_cast<Eigen::Index>(2 * sd), nb);
      for (int j = 0; j < nb; ++j) {
        for (size_t mask = 0; mask < sd; ++mask) {
          const SpinScalar& a = image[static_cast<size_t>(j)].tau.comp(static_cast<unsigned>(mask));
          const SpinScalar& b = image[static_cast<size_t>(j)].chi.comp(static_cast<unsigned>(mask));
          mat(static_cast<Eigen::Index>(mask), j) = SQ(a.a.evaluate(pt), a.b.evaluate(pt));
          mat(static_cast<Eigen::Index>(sd + mask), j) = SQ(b.a.evaluate(pt), b.b.evaluate(pt));
        }
      }
      Mat<SQ> ker = kernel_basis(mat, SQ(), SQ(Rational(1)));
      if (ker.cols() != n + 1)
        return {false, "annihilator dimension " + std::to_string(ker.cols()) + " instead of " +
                           std::to_string(n + 1) + " at a sample point"};
      // Tractor metric on the basis: h(top,bot) = 1, h(e_a,e_b) = g^{ab}.
      QMat h(nb, nb);
      h(0, nb - 1) = Rational(1);
      h(nb - 1, 0) = Rational(1);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) h(1 + a, 1 + b) = tc.conf().ginv.at({a, b}).evaluate(pt);
      for (Eigen::Index i = 0; i < ker.cols(); ++i)
        for (Eigen::Index j = i; j < ker.cols(); ++j) {
          SQ acc;
          for (int r = 0; r < nb; ++r)
            for (int s = 0; s < nb; ++s) acc += ker(r, i) * ker(s, j) * SQ(h(r, s));
          if (!acc.is_zero()) return {false, "annihilator is not isotropic at a sample point"};
        }
      return {true, "0"};
    } catch (const std::domain_error&) {
      continue;  // denominator vanished at the drawn point
    }
  }
  return {false, "no sample point with nonvanishing denominators found"};
}

VerifyGeometry finish_geometry(const TensorField& g, int n, std::string desc,
                               std::optional<uint64_t> seed, Connection source, TensorField k,
                               std::vector<TensorField> vertical) {
  TractorCalc tc{SpinGeometry(conformal_curvature(g))};
  const ConformalData& cd = tc.conf();
  TensorField klow = lower_index(k, 0, cd.g);
  TensorField wlow = lower_index(cd.weyl, 2, cd.g);
  SpinorField chi = SpinorField::vol(tc.chart());
  return VerifyGeometry{n,
                        std::move(desc),
                        seed,
                        std::move(source),
                        std::move(k),
                        std::move(chi),
                        std::move(vertical),
                        std::move(klow),
                        std::move(wlow),
                        std::move(tc)};
}

}  // namespace

int thread_budget() {
  if (const char* env = std::getenv("FEFFERMAN_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

VerifyGeometry build_geometry(const Connection& special_D, std::optional<uint64_t> seed) {
  if (!is_special(special_D))
    throw std::invalid_argument("build_geometry: connection is not special");
  PWStructure pw = pw_extend(special_D);
  int nnz = 0;
  const int n = pw.n;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (!special_D.at(c, a, b).is_zero()) ++nnz;
  std::ostringstream os;
  os << "split extension, n=" << n << ", " << nnz << " nonzero connection symbols";
  if (seed) os << ", seed=" << *seed;
  return finish_geometry(pw.g, n, os.str(), seed, special_D, pw.k, pw.vertical);
}

VerifyGeometry build_metric_geometry(const TensorField& g, std::string descriptor,
                                     std::optional<uint64_t> seed) {
  if (g.rank() != 2 || g.valence()[0] != Idx::Down || g.valence()[1] != Idx::Down)
    throw std::invalid_argument("build_metric_geometry: metric must be all-covariant rank 2");
  if (g.dim() % 2 != 0)
    throw std::invalid_argument("build_metric_geometry: chart dimension must be even");
  const int n = g.dim() / 2;
  const int m = g.dim();
  TensorField k = euler_field(g.chart());
  std::vector<TensorField> vertical;
  for (int i = 0; i < n; ++i) {
    TensorField v(g.chart(), {Idx::Up});
    v.at({n + i}) = RatFunc::constant(m, Rational(1));
    vertical.push_back(v);
  }
  if (descriptor.empty()) descriptor = "split metric, n=" + std::to_string(n);
  return finish_geometry(g, n, std::move(descriptor), seed, Connection(), std::move(k),
                         std::move(vertical));
}

VerificationReport characterize(const VerifyGeometry& g, const VerifyOptions& opt) {
  VerificationReport rep{"characterize", g.descriptor, g.n, g.seed, {}};
  const TractorCalc& tc = g.tc;
  const ConformalData& cd = g.conf();
  const SpinGeometry& sg = tc.spin();
  const int n = g.n;
  const int m = 2 * n;
  std::vector<CheckJob> jobs;

  jobs.push_back({"conformal-killing", "D_(a k_b)_0 = 0",
                  [&] { return from_tensor(conformal_killing_residual(cd, g.k)); }});

  auto inv = [&] { return tc.involution_residuals(tc.split_vector(g.k)); };
  jobs.push_back({"involution-k-null", "k^a k_a = 0",
                  [&, inv] { return from_ratfunc(inv().k_null, g.chart().names); }});
  jobs.push_back({"involution-rho-null", "rho^a rho_a = 0",
                  [&, inv] { return from_ratfunc(inv().rho_null, g.chart().names); }});
  jobs.push_back(
      {"involution-mu-k", "mu^a_b k^b = phi k^a", [inv] { return from_tensor(inv().mu_k); }});
  jobs.push_back(
      {"involution-mu-rho", "mu^a_b rho^b = -phi rho^a", [inv] { return from_tensor(inv().mu_rho); }});
  jobs.push_back({"involution-pairing", "k^a rho_a = phi^2 - 1",
                  [&, inv] { return from_ratfunc(inv().pairing, g.chart().names); }});
  jobs.push_back({"involution-mu-square", "mu_a^c mu_cb = g_ab + 2 k_(a rho_b)",
                  [inv] { return from_tensor(inv().mu_square); }});

  jobs.push_back({"twistor-spinor", "D_a chi + (1/m) gamma_a D/ chi = 0", [&] {
                    std::vector<SpinorField> res = sg.twistor_residual(g.chi);
                    for (int a = 0; a < m; ++a) {
                      auto [ok, note] = from_spinor(res[static_cast<size_t>(a)]);
                      if (!ok) return std::pair<bool, std::string>{
                          false, "direction " + std::to_string(a) + ": " + note};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"spinor-purity", "annihilator of the spinor lift is maximally isotropic",
                  [&, seed = opt.sample_seed] {
                    return tractor_spinor_purity(tc, tc.split_spinor(g.chi), n, seed);
                  }});

  jobs.push_back({"spinor-scaling", "L_k chi = -(1/2)(n+1) chi", [&] {
                    SpinorField r = sg.lie_derivative(g.k, g.chi) + g.chi.scaled(Rational(n + 1, 2));
                    return from_spinor(r);
                  }});

  jobs.push_back({"vertical-weyl", "v^r w^s W_arbs = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down, Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int i = 0; i < n; ++i)
                        for (int b = 0; b < m; ++b)
                          for (int j = 0; j < n; ++j)
                            r.at({a, n + i, b, n + j}) = g.wlow.at({a, n + i, b, n + j});
                    return from_tensor(r);
                  }});

  jobs.push_back({"vertical-frame-integrability", "[v_i, v_j] stays in the fibre distribution",
                  [&] {
                    for (int i = 0; i < n; ++i)
                      for (int j = i + 1; j < n; ++j) {
                        TensorField br = vf_bracket(g.vertical[static_cast<size_t>(i)],
                                                    g.vertical[static_cast<size_t>(j)]);
                        for (int mu = 0; mu < n; ++mu)
                          if (!br.at({mu}).is_zero())
                            return std::pair<bool, std::string>{
                                false, "bracket (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") leaves the fibre distribution"};
                      }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  rep.checks = run_jobs(std::move(jobs), resolve_threads(opt));
  return rep;
}

VerificationReport reduced_scale_check(const VerifyGeometry& g, const VerifyOptions& opt) {
  VerificationReport rep{"reduced-scale", g.descriptor, g.n, g.seed, {}};
  const TractorCalc& tc = g.tc;
  const ConformalData& cd = g.conf();
  const SpinGeometry& sg = tc.spin();
  const int n = g.n;
  const int m = 2 * n;
  std::vector<CheckJob> jobs;

  jobs.push_back(
      {"scalar-curvature", "J = 0", [&] { return from_ratfunc(cd.j, g.chart().names); }});

  jobs.push_back({"schouten-horizontal", "v^a P_ab = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down});
                    for (int i = 0; i < n; ++i)
                      for (int b = 0; b < m; ++b) r.at({n + i, b}) = cd.schouten.at({n + i, b});
                    return from_tensor(r);
                  }});

  jobs.push_back({"parallel-spinor", "D_a chi = 0", [&] {
                    for (int mu = 0; mu < m; ++mu) {
                      auto [ok, note] = from_spinor(sg.spin_derivative(mu, g.chi));
                      if (!ok) return std::pair<bool, std::string>{
                          false, "direction " + std::to_string(mu) + ": " + note};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"scale-tractor-form", "L0(1) = (0,0,1)", [&] {
                    StdTractor s = tc.split_scalar(RatFunc::constant(m, Rational(1)));
                    if (!s.rho.is_zero())
                      return std::pair<bool, std::string>{
                          false, "top slot " + clip(s.rho.normalized().str(g.chart().names))};
                    if (!s.phi.is_zero())
                      return std::pair<bool, std::string>{false, "middle slot nonzero"};
                    RatFunc diff = s.sigma - RatFunc::constant(m, Rational(1));
                    if (!diff.is_zero())
                      return std::pair<bool, std::string>{false, "bottom slot differs from 1"};
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"scale-tractor-horizontal", "v^c grad_c (0,0,1) = 0", [&] {
                    StdTractor s(g.chart());
                    s.sigma = RatFunc::constant(m, Rational(1));
                    for (int i = 0; i < n; ++i) {
                      StdTractor d = tc.std_connection(s, n + i);
                      if (!d.is_zero())
                        return std::pair<bool, std::string>{
                            false, "fibre direction " + std::to_string(i) + ": derivative nonzero"};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  rep.checks = run_jobs(std::move(jobs), resolve_threads(opt));
  return rep;
}

VerificationReport prolongation_suite(const VerifyGeometry& g, const VerifyOptions& opt) {
  VerificationReport rep{"prolongation", g.descriptor, g.n, g.seed, {}};
  const ConformalData& cd = g.conf();
  const int n = g.n;
  const int m = 2 * n;

  struct Pre {
    TensorField dk, mu, dmu, mu_up1, mu_upup;
  };
  auto pre = std::make_shared<Pre>();
  pre->dk = covariant_derivative(g.klow, cd.lc);
  pre->mu = antisymmetrize(pre->dk, {0, 1});
  pre->dmu = covariant_derivative(pre->mu, cd.lc);
  pre->mu_up1 = raise_index(pre->mu, 0, cd.ginv);
  pre->mu_upup = raise_index(pre->mu_up1, 1, cd.ginv);

  std::vector<CheckJob> jobs;

  jobs.push_back({"prolong-dk", "D_a k_b - mu_ab - g_ab = 0",
                  [&, pre] { return from_tensor(pre->dk - pre->mu - cd.g); }});

  jobs.push_back({"prolong-dmu", "D_a mu_bc + 2 P_a[b k_c] - k^d W_dabc = 0", [&, pre] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int b = 0; b < m; ++b)
                        for (int c = 0; c < m; ++c) {
                          RatFunc v = pre->dmu.at({a, b, c});
                          v += cd.schouten.at({a, b}) * g.klow.at({c});
                          v -= cd.schouten.at({a, c}) * g.klow.at({b});
                          for (int d = 0; d < m; ++d)
                            v -= g.k.at({d}) * g.wlow.at({d, a, b, c});
                          r.at({a, b, c}) = v;
                        }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-schouten-k", "P_ab k^b = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down});
                    for (int a = 0; a < m; ++a) {
                      RatFunc v = RatFunc::zero(m);
                      for (int b = 0; b < m; ++b) v += cd.schouten.at({a, b}) * g.k.at({b});
                      r.at({a}) = v;
                    }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-schouten-mu", "P_ac (mu^c_b - delta^c_b) - Y_abc k^c = 0", [&, pre] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int b = 0; b < m; ++b) {
                        RatFunc v = RatFunc::zero(m) - cd.schouten.at({a, b});
                        for (int c = 0; c < m; ++c) {
                          v += cd.schouten.at({a, c}) * pre->mu_up1.at({c, b});
                          v -= cd.cotton.at({a, b, c}) * g.k.at({c});
                        }
                        r.at({a, b}) = v;
                      }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-schouten-vertical", "P_ab v^b = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int i = 0; i < n; ++i) r.at({a, n + i}) = cd.schouten.at({a, n + i});
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-cotton-k", "Y_abc k^c = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int b = 0; b < m; ++b) {
                        RatFunc v = RatFunc::zero(m);
                        for (int c = 0; c < m; ++c) v += cd.cotton.at({a, b, c}) * g.k.at({c});
                        r.at({a, b}) = v;
                      }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-weyl-k-vertical", "k^a W_abcd v^c = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down, Idx::Down});
                    for (int b = 0; b < m; ++b)
                      for (int i = 0; i < n; ++i)
                        for (int d = 0; d < m; ++d) {
                          RatFunc v = RatFunc::zero(m);
                          for (int a = 0; a < m; ++a)
                            v += g.k.at({a}) * g.wlow.at({a, b, n + i, d});
                          r.at({b, n + i, d}) = v;
                        }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-weyl-mu", "W_abcd mu^cd = 0", [&, pre] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int b = 0; b < m; ++b) {
                        RatFunc v = RatFunc::zero(m);
                        for (int c = 0; c < m; ++c)
                          for (int d = 0; d < m; ++d)
                            v += g.wlow.at({a, b, c, d}) * pre->mu_upup.at({c, d});
                        r.at({a, b}) = v;
                      }
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-weyl-vertical-pair", "W_abcd v^c w^d = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down, Idx::Down, Idx::Down});
                    for (int a = 0; a < m; ++a)
                      for (int b = 0; b < m; ++b)
                        for (int i = 0; i < n; ++i)
                          for (int j = 0; j < n; ++j)
                            r.at({a, b, n + i, n + j}) = g.wlow.at({a, b, n + i, n + j});
                    return from_tensor(r);
                  }});

  jobs.push_back({"prolong-cotton-vertical", "v^a Y_abc = 0", [&] {
                    TensorField r(g.chart(), {Idx::Down, Idx::Down, Idx::Down});
                    for (int i = 0; i < n; ++i)
                      for (int b = 0; b < m; ++b)
                        for (int c = 0; c < m; ++c)
                          r.at({n + i, b, c}) = cd.cotton.at({n + i, b, c});
                    return from_tensor(r);
                  }});

  rep.checks = run_jobs(std::move(jobs), resolve_threads(opt));
  return rep;
}

namespace {

// Names the first nonzero slot of a slotted two-form value.
std::string adj_note(const AdjTractor& a, int i, int j) {
  std::string where = " at directions (" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (!a.rho.is_zero()) return "top slot nonzero" + where;
  if (!a.mu.is_zero()) return "two-form slot nonzero" + where;
  if (!a.phi.is_zero()) return "scalar slot nonzero" + where;
  if (!a.k.is_zero()) return "bottom slot nonzero" + where;
  return "0";
}

}  // namespace

TensorField induced_torsion_slot(const VerifyGeometry& g, int a, int b) {
  const int m = 2 * g.n;
  TensorField r(g.chart(), {Idx::Down});
  for (int c = 0; c < m; ++c) {
    RatFunc v = RatFunc::zero(m);
    for (int s = 0; s < m; ++s) v += g.k.at({s}) * g.wlow.at({a, b, s, c});
    r.at({c}) = v.scaled(Rational(1, 2));
  }
  return r;
}

bool induced_torsion_vanishes(const VerifyGeometry& g) {
  const int m = 2 * g.n;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!induced_torsion_slot(g, a, b).is_zero()) return false;
  return true;
}

VerificationReport omega_prime_suite(const VerifyGeometry& g, const VerifyOptions& opt) {
  VerificationReport rep{"omega-prime", g.descriptor, g.n, g.seed, {}};
  const TractorCalc& tc = g.tc;
  const ConformalData& cd = g.conf();
  const int n = g.n;
  const int m = 2 * n;

  AdjTractor K = tc.split_vector(g.k);
  SpinTractor sF = tc.split_spinor(g.chi);

  struct PairData {
    int a, b;
    AdjTractor om, omp;
  };
  auto pairs = std::make_shared<std::vector<PairData>>();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      AdjTractor om = tc.curvature(a, b);
      AdjTractor omp = om + tc.adj_bracket(K, om).scaled(Rational(1, 2));
      pairs->push_back({a, b, std::move(om), std::move(omp)});
    }

  std::vector<CheckJob> jobs;

  jobs.push_back({"omega-prime-spinor", "Om'_ab . s_F = 0", [&, pairs, sF] {
                    for (const auto& p : *pairs) {
                      SpinTractor r = tc.adj_action_spin(p.omp, sF);
                      if (!r.is_zero())
                        return std::pair<bool, std::string>{
                            false, "nonzero at directions (" + std::to_string(p.a) + "," +
                                       std::to_string(p.b) + ")"};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"omega-prime-grading", "[Om'_ab, K] = 0", [&, pairs, K] {
                    for (const auto& p : *pairs) {
                      AdjTractor r = tc.adj_bracket(p.omp, K);
                      if (!r.is_zero())
                        return std::pair<bool, std::string>{false, adj_note(r, p.a, p.b)};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"omega-prime-vertical", "iota_v Om' = 0", [&, pairs] {
                    for (const auto& p : *pairs) {
                      if (p.b < n) continue;  // no fibre index in the pair
                      if (!p.omp.is_zero())
                        return std::pair<bool, std::string>{false, adj_note(p.omp, p.a, p.b)};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back(
      {"curvature-relation",
       "Om'_ab = (-Y_cab; W_abcd - W_ab^r_[c mu_d]r + k_[c Y_d]ab | 0; (1/2) k^r W_abrc)",
       [&, pairs, K] {
         for (const auto& p : *pairs) {
           AdjTractor ind(g.chart());
           for (int c = 0; c < m; ++c) {
             ind.rho.at({c}) = -cd.cotton.at({c, p.a, p.b});
             RatFunc kv = RatFunc::zero(m);
             for (int r = 0; r < m; ++r) kv += g.k.at({r}) * g.wlow.at({p.a, p.b, r, c});
             ind.k.at({c}) = kv.scaled(Rational(1, 2));
           }
           for (int c0 = 0; c0 < m; ++c0)
             for (int c1 = 0; c1 < m; ++c1) {
               RatFunc v = g.wlow.at({p.a, p.b, c0, c1});
               RatFunc t = RatFunc::zero(m);
               for (int r = 0; r < m; ++r) {
                 t += cd.weyl.at({p.a, p.b, r, c0}) * K.mu.at({c1, r});
                 t -= cd.weyl.at({p.a, p.b, r, c1}) * K.mu.at({c0, r});
               }
               v -= t.scaled(Rational(1, 2));
               RatFunc y = g.klow.at({c0}) * cd.cotton.at({c1, p.a, p.b}) -
                           g.klow.at({c1}) * cd.cotton.at({c0, p.a, p.b});
               v += y.scaled(Rational(1, 2));
               ind.mu.at({c0, c1}) = v;
             }
           AdjTractor diff = ind - p.omp;
           if (!diff.is_zero())
             return std::pair<bool, std::string>{false, adj_note(diff, p.a, p.b)};
         }
         return std::pair<bool, std::string>{true, "0"};
       }});

  jobs.push_back({"curvature-k-pairing", "<Om_ab, K> = 0", [&, pairs, K] {
                    for (const auto& p : *pairs) {
                      RatFunc v = tc.adj_pairing(p.om, K);
                      if (!v.is_zero())
                        return std::pair<bool, std::string>{
                            false, "nonzero at directions (" + std::to_string(p.a) + "," +
                                       std::to_string(p.b) + ")"};
                    }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  rep.checks = run_jobs(std::move(jobs), resolve_threads(opt));
  return rep;
}

std::vector<VerificationReport> verify_all(const VerifyGeometry& g, const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  out.push_back(characterize(g, opt));
  out.push_back(reduced_scale_check(g, opt));
  out.push_back(prolongation_suite(g, opt));
  out.push_back(omega_prime_suite(g, opt));
  return out;
}

namespace {

QVec unit_qvec(int d, int i) {
  QVec v(d);
  v(i) = Rational(1);
  return v;
}

LieMatrix unit_lmat(int d, int i, int j) {
  LieMatrix u = mat_zero(d);
  u(i, j) = Rational(1);
  return u;
}

// f-hat direction tensored with a fibre 2-vector, as an ambient 1-cochain.
Cochain fhat_tensor(const KostantModel& km, int g, int b, int c) {
  LieMatrix val = wedge_map(km, nu_of(km, km.Zdual[static_cast<size_t>(b)]),
                            nu_of(km, km.Zdual[static_cast<size_t>(c)]));
  return decomposable1(km, km.Zdual[static_cast<size_t>(g)], val, 2 * km.n);
}

LieMatrix random_span_combo(const SpanSet& s, std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pick(0, s.dim() - 1);
  LieMatrix acc = mat_zero(d);
  for (int t = 0; t < 3; ++t) {
    int c = coef(rng);
    if (c == 0) continue;
    acc = LieMatrix(acc + s.mats[static_cast<size_t>(pick(rng))] * Rational(c));
  }
  return acc;
}

}  // namespace

VerificationReport kostant_suite(int n, uint64_t seed, int cochain_trials,
                                 const VerifyOptions& opt) {
  auto km = std::make_shared<const KostantModel>(build_model(n));
  VerificationReport rep{"kostant", "exact Lie-theoretic model, n=" + std::to_string(n), n, seed,
                         {}};
  const int N = km->N;
  const int d = km->dim;
  std::vector<CheckJob> jobs;

  jobs.push_back({"grading-brackets", "[K, L2E] = 2 L2E, [K, L2F] = -2 L2F, [K, i'(gl)] = 0",
                  [km, N, d] {
                    for (const LieMatrix& a : km->lambda2E.mats) {
                      LieMatrix r = lie_bracket(km->K, a) - a * Rational(2);
                      if (!mat_is_zero(r))
                        return std::pair<bool, std::string>{false, "eigenvalue 2 fails on L2E"};
                    }
                    for (const LieMatrix& a : km->lambda2F.mats) {
                      LieMatrix r = lie_bracket(km->K, a) + a * Rational(2);
                      if (!mat_is_zero(r))
                        return std::pair<bool, std::string>{false, "eigenvalue -2 fails on L2F"};
                    }
                    for (int i = 0; i < N; ++i)
                      for (int j = 0; j < N; ++j) {
                        LieMatrix e = diag_embed(*km, unit_lmat(N, i, j));
                        LieMatrix r = lie_bracket(km->K, e);
                        if (!mat_is_zero(r))
                          return std::pair<bool, std::string>{false,
                                                              "block-diagonal part does not commute"};
                      }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back({"bottom-spinor-eigenvalue", "K . s_F = -(1/2)(n+1) s_F", [km, n] {
                    SpinVector r = spin_action(*km, km->K, km->sF) -
                                   km->sF.scaled(SpinCoef(Rational(-(n + 1), 2)));
                    return std::pair<bool, std::string>{r.is_zero(), r.is_zero() ? "0" : "nonzero"};
                  }});

  jobs.push_back({"top-spinor-eigenvalue", "K . s_E = (1/2)(n+1) s_E", [km, n] {
                    SpinVector r = spin_action(*km, km->K, km->sE) -
                                   km->sE.scaled(SpinCoef(Rational(n + 1, 2)));
                    return std::pair<bool, std::string>{r.is_zero(), r.is_zero() ? "0" : "nonzero"};
                  }});

  jobs.push_back({"spinor-pairing", "<s_E, s_F> = -1/2", [km] {
                    SpinCoef p = spin_pair(km->sE, km->sF);
                    bool ok = (p == SpinCoef(Rational(-1, 2)));
                    return std::pair<bool, std::string>{ok, ok ? "0" : "pairing differs"};
                  }});

  jobs.push_back({"clifford-pairing-compatibility", "h(x, K y) = 2 <s_E, (c(x)c(y) + h(x,y)) s_F>",
                  [km, d] {
                    for (int xi = 0; xi < d; ++xi)
                      for (int yi = 0; yi < d; ++yi) {
                        QVec x = unit_qvec(d, xi), y = unit_qvec(d, yi);
                        QVec ky = km->K * y;
                        Rational lhs = (x.transpose() * (km->h * ky))(0, 0);
                        Rational hxy = (x.transpose() * (km->h * y))(0, 0);
                        SpinVector v = spin_clifford(*km, x, spin_clifford(*km, y, km->sF)) +
                                       km->sF.scaled(SpinCoef(hxy));
                        SpinCoef rhs = spin_pair(km->sE, v);
                        if (!(SpinCoef(lhs) == rhs + rhs))
                          return std::pair<bool, std::string>{
                              false, "fails at generator pair (" + std::to_string(xi) + "," +
                                         std::to_string(yi) + ")"};
                      }
                    return std::pair<bool, std::string>{true, "0"};
                  }});

  jobs.push_back(
      {"codifferential-square-zero", "del* del* = 0 on random 2-cochains",
       [km, n, d, seed, cochain_trials] {
         std::mt19937 rng(static_cast<unsigned>(seed));
         for (int t = 0; t < cochain_trials; ++t) {
           bool ambient = (t % 2 == 0);
           const SpanSet& pool = ambient ? km->gtilde : km->g;
           Cochain c(ambient ? 2 * n : n, 2, d);
           for (int i = 0; i < c.ncomp(); ++i) c.component(i) = random_span_combo(pool, rng, d);
           Cochain dd = kostant_del_star(*km, kostant_del_star(*km, c));
           if (!dd.is_zero())
             return std::pair<bool, std::string>{
                 false, "nonzero square on trial " + std::to_string(t)};
         }
         return std::pair<bool, std::string>{true, "0"};
       }});

  jobs.push_back(
      {"laplacian-eigenvalue-two", "box psi = 2 psi on the correction component", [km, n, d] {
         std::vector<Cochain> family;
         for (int a = 0; a < n; ++a)
           for (int c = 0; c < n; ++c)
             if (a != c) family.push_back(fhat_tensor(*km, a, a, c));
         for (int a = 0; a < n; ++a)
           for (int b = a + 1; b < n; ++b)
             for (int c = 0; c < n; ++c)
               if (c != a && c != b)
                 family.push_back(fhat_tensor(*km, a, b, c) + fhat_tensor(*km, b, a, c));
         QMat coords(2 * n * d * d, static_cast<int>(family.size()));
         for (size_t i = 0; i < family.size(); ++i) {
           const Cochain& psi = family[i];
           QVec alt = alternation(*km, psi);
           for (Eigen::Index r = 0; r < alt.size(); ++r)
             if (!alt(r).is_zero())
               return std::pair<bool, std::string>{false, "family member leaves the kernel"};
           if (kostant_laplacian(*km, psi) != psi.scaled(Rational(2)))
             return std::pair<bool, std::string>{false,
                                                 "eigenvalue 2 fails on a family member"};
           for (int t = 0; t < psi.ncomp(); ++t)
             coords.block(t * d * d, static_cast<int>(i), d * d, 1) = vec_mat(psi.component(t));
         }
         const int expected = n * (n * (n - 1) / 2) - n * (n - 1) * (n - 2) / 6;
         if (exact_rank(coords) != expected)
           return std::pair<bool, std::string>{false, "family does not span the component"};
         return std::pair<bool, std::string>{true, "0"};
       }});

  if (n >= 3) {
    jobs.push_back(
        {"lowering-worked-example",
         "del*(extend(phi)) = -Z_1 (x) Z_n ^ Z_2 - Z_n (x) Z_1 ^ Z_2",
         [km, n, d] {
           auto val = [&](int i, int j) {
             return LieMatrix(lie_bracket(km->X[static_cast<size_t>(i)],
                                          km->Zsl[static_cast<size_t>(j)]));
           };
           Cochain phi =
               decomposable2(*km, km->Zsl[0], km->Zsl[1], val(n - 1, n - 1) - val(0, 0), n) +
               decomposable2(*km, km->Zsl[static_cast<size_t>(n - 1)], km->Zsl[1], val(n - 1, 0),
                             n);
           if (!kostant_del_star(*km, phi).is_zero())
             return std::pair<bool, std::string>{false, "example is not closed"};
           NormalizeStep st = normalize_step(*km, phi);
           Cochain expected(2 * n, 1, d);
           expected.set({0},
                        LieMatrix(-wedge_map(*km, nu_of(*km, km->Zdual[static_cast<size_t>(n - 1)]),
                                             nu_of(*km, km->Zdual[1]))));
           expected.set({n - 1}, LieMatrix(-wedge_map(*km, nu_of(*km, km->Zdual[0]),
                                                      nu_of(*km, km->Zdual[1]))));
           if (!(st.del_star == expected))
             return std::pair<bool, std::string>{false, "lowered value differs"};
           if (!(st.correction == expected.scaled(Rational(-1, 2))))
             return std::pair<bool, std::string>{false, "correction differs"};
           Cochain corrected = st.extended + kostant_del(*km, st.correction);
           if (!kostant_del_star(*km, corrected).is_zero())
             return std::pair<bool, std::string>{false, "corrected cochain is not closed"};
           return std::pair<bool, std::string>{true, "0"};
         }});
  }

  jobs.push_back(
      {"closed-normalization",
       "del*(extend(kappa)) lies in fhat (x) L2Fbar and ker(alt); corrected cochain closed",
       [km, n, seed] {
         QMat ker = weyl_closed_kernel(*km);
         if (n == 2) {
           bool ok = (ker.cols() == 0);
           return std::pair<bool, std::string>{
               ok, ok ? "0" : "unexpected closed curvature shapes in dimension 2"};
         }
         std::mt19937 rng(static_cast<unsigned>(seed ^ 0x5bd1e995u));
         for (int trial = 0; trial < 3; ++trial) {
           Cochain kappa = random_weyl_closed(*km, ker, rng);
           NormalizeStep st = normalize_step(*km, kappa);  // throws when membership fails
           QVec alt = alternation(*km, st.del_star);
           for (Eigen::Index r = 0; r < alt.size(); ++r)
             if (!alt(r).is_zero())
               return std::pair<bool, std::string>{false, "obstruction has nonzero alternation"};
           Cochain corrected = st.extended + kostant_del(*km, st.correction);
           if (!kostant_del_star(*km, corrected).is_zero())
             return std::pair<bool, std::string>{false, "corrected cochain is not closed"};
         }
         return std::pair<bool, std::string>{true, "0"};
       }});

  rep.checks = run_jobs(std::move(jobs), resolve_threads(opt));
  return rep;
}

Connection random_projective_structure(int n, uint64_t seed, int max_degree) {
  if (n < 2) throw std::invalid_argument("random_projective_structure: need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, max_degree);
  Chart ch = Chart::base(n);
  TensorField gam(ch, {Idx::Up, Idx::Down, Idx::Down});
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        MultiPoly p(n);
        for (int t = 0; t < 3; ++t) {
          Monomial mo(n);
          int budget = max_degree;
          for (int i = 0; i < n; ++i) {
            int e = expo(rng) % (budget + 1);
            mo.set(i, e);
            budget -= e;
          }
          p.add_term(mo, Rational(coeff(rng)));
        }
        RatFunc v{p};
        gam.at({c, a, b}) = v;
        gam.at({c, b, a}) = v;
      }
  return make_special(Connection(gam));
}

}  // namespace pwlab
