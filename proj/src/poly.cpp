#include "pwlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pwlab {

namespace {

void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p(nvars);
  p.add_term(Monomial::var(nvars, i), Rational(1));
  return p;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
  return terms_.begin()->second;
}

int MultiPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  // Iterate the smaller factor outside.
  const MultiPoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const MultiPoly& l = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [ms, cs] : s.terms_)
    for (const auto& [ml, cl] : l.terms_) r.add_term(ms * ml, cs * cl);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

MultiPoly MultiPoly::mono_mul(const Monomial& m, const Rational& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("MultiPoly: negative power");
  MultiPoly acc = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp(var);
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.add_term(d, c * Rational(e));
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MultiPoly: evaluation point dimension mismatch");
  // Power cache per variable up to the max exponent present.
  std::vector<std::vector<Rational>> pw(static_cast<size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) pw[static_cast<size_t>(i)] = {Rational(1)};
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exp(i);
      auto& cache = pw[static_cast<size_t>(i)];
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[static_cast<size_t>(i)]);
      t *= cache[static_cast<size_t>(e)];
    }
    acc += t;
  }
  return acc;
}

double MultiPoly::evaluate_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MultiPoly: evaluation point dimension mismatch");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exp(i); ++e) t *= point[static_cast<size_t>(i)];
    acc += t;
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest grlex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool printed_coeff = false;
    if (!a.is_one() || m.is_one()) {
      os << a.str();
      printed_coeff = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exp(i);
      if (e == 0) continue;
      if (printed_coeff) os << "*";
      os << names[static_cast<size_t>(i)];
      if (e > 1) os << "^" << e;
      printed_coeff = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd.

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero polynomial");
  MultiPoly rem = a;
  MultiPoly q(a.nvars());
  const Monomial& lb = b.lead_mono();
  const Rational& cb = b.lead_coeff();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.lead_mono();
    if (!lb.divides(lr)) throw std::domain_error("poly_divexact: not divisible");
    Monomial q_m = lb.div_into(lr);
    Rational q_c = rem.lead_coeff() / cb;
    q.add_term(q_m, q_c);
    rem -= b.mono_mul(q_m, q_c);
  }
  return q;
}

bool poly_divides(const MultiPoly& b, const MultiPoly& a) {
  if (b.is_zero()) return a.is_zero();
  MultiPoly rem = a;
  const Monomial& lb = b.lead_mono();
  const Rational& cb = b.lead_coeff();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.lead_mono();
    if (!lb.divides(lr)) return false;
    Monomial q_m = lb.div_into(lr);
    rem -= b.mono_mul(q_m, rem.lead_coeff() / cb);
  }
  return true;
}

namespace {

// Univariate view in variable `v`: coefficients are polynomials in the other
// variables (stored with the same nvars, exponent of v equal to zero).
std::vector<MultiPoly> uni_coeffs(const MultiPoly& p, int v) {
  int d = p.degree_in(v);
  std::vector<MultiPoly> cs(static_cast<size_t>(d + 1), MultiPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    int e = m.exp(v);
    stripped.set(v, 0);
    cs[static_cast<size_t>(e)].add_term(stripped, c);
  }
  return cs;
}

MultiPoly from_uni(const std::vector<MultiPoly>& cs, int v, int nvars) {
  MultiPoly p(nvars);
  for (size_t e = 0; e < cs.size(); ++e) {
    if (cs[e].is_zero()) continue;
    Monomial me = Monomial::var(nvars, v, static_cast<int>(e));
    for (const auto& [m, c] : cs[e].terms()) p.add_term(m * me, c);
  }
  return p;
}

int uni_deg(const std::vector<MultiPoly>& cs) {
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
    if (!cs[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

// Pseudo-remainder of a by b in variable v (both as coefficient vectors).
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  int db = uni_deg(b);
  const MultiPoly& lb = b[static_cast<size_t>(db)];
  int da = uni_deg(a);
  while (da >= db) {
    MultiPoly la = a[static_cast<size_t>(da)];
    // a := lb*a - la * x^(da-db) * b
    for (int i = 0; i <= da; ++i) a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] * lb;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(i + da - db)] -= la * b[static_cast<size_t>(i)];
    int nda = da - 1;
    while (nda >= 0 && a[static_cast<size_t>(nda)].is_zero()) --nda;
    a.resize(static_cast<size_t>(std::max(nda, db - 1) + 1), MultiPoly(lb.nvars()));
    da = uni_deg(a);
  }
  a.resize(static_cast<size_t>(std::max(uni_deg(a), 0) + 1), MultiPoly(lb.nvars()));
  return a;
}

MultiPoly content_of(const std::vector<MultiPoly>& cs) {
  MultiPoly g(cs.empty() ? 0 : cs[0].nvars());
  for (const auto& c : cs) g = poly_gcd(g, c);
  return g;
}

MultiPoly normalize_lead(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lead_coeff().inv());
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.nvars(), Rational(1));

  // Main variable: highest index occurring in either operand.
  int v = -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { v = i; break; }
  }
  if (v < 0) return MultiPoly::constant(a.nvars(), Rational(1));

  auto ca = uni_coeffs(a, v);
  auto cb = uni_coeffs(b, v);
  MultiPoly cont_a = content_of(ca);
  MultiPoly cont_b = content_of(cb);
  MultiPoly cont_g = poly_gcd(cont_a, cont_b);

  // Primitive parts.
  for (auto& c : ca) if (!c.is_zero()) c = poly_divexact(c, cont_a);
  for (auto& c : cb) if (!c.is_zero()) c = poly_divexact(c, cont_b);

  // Primitive PRS in v.
  std::vector<MultiPoly>* u = &ca;
  std::vector<MultiPoly>* w = &cb;
  if (uni_deg(*u) < uni_deg(*w)) std::swap(u, w);
  while (true) {
    if (uni_deg(*w) < 0) break;
    auto r = pseudo_rem(*u, *w);
    if (uni_deg(r) < 0) { *u = *w; w->assign(1, MultiPoly(a.nvars())); break; }
    MultiPoly cont_r = content_of(r);
    for (auto& c : r) if (!c.is_zero()) c = poly_divexact(c, cont_r);
    *u = *w;
    *w = std::move(r);
  }
  MultiPoly prim = from_uni(*u, v, a.nvars());
  return normalize_lead(prim * cont_g);
}

}  // namespace pwlab
