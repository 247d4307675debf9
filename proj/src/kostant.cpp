#include "pwlab/kostant.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace pwlab {

namespace {

int partner_index(int k, int N) { return k < N ? k + N : k - N; }

LieMatrix unit_mat(int d, int i, int j) {
  LieMatrix m(d, d);
  m(i, j) = Rational(1);
  return m;
}

QVec basis_vec(int d, int i) {
  QVec v(d);
  v(i) = Rational(1);
  return v;
}

QMat cols_of(const std::vector<LieMatrix>& mats) {
  if (mats.empty()) return QMat(0, 0);
  const int d2 = static_cast<int>(mats[0].rows() * mats[0].cols());
  QMat c(d2, static_cast<int>(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k) c.col(static_cast<Eigen::Index>(k)) = vec_mat(mats[k]);
  return c;
}

SpanSet span_from_mats(std::vector<LieMatrix> mats) {
  SpanSet s;
  s.cols = cols_of(mats);
  s.mats = std::move(mats);
  return s;
}

LieMatrix unvec(const QVec& v, int d) {
  LieMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  return m;
}

// Keeps an independent subset of the columns (pivot columns of the rref).
SpanSet span_from_cols(const QMat& cand, int d) {
  QMat work = cand;
  std::vector<int> piv = rref(work);
  SpanSet s;
  if (cand.rows() == 0 || piv.empty()) {
    s.cols = QMat(cand.rows(), 0);
    return s;
  }
  s.cols = QMat(cand.rows(), static_cast<int>(piv.size()));
  for (size_t k = 0; k < piv.size(); ++k) {
    s.cols.col(static_cast<Eigen::Index>(k)) = cand.col(piv[k]);
    s.mats.push_back(unvec(cand.col(piv[k]), d));
  }
  return s;
}

// Rows expressing h-skewness of a d x d matrix in row-major coordinates.
QMat skew_rows(const KostantModel& m) {
  const int d = m.dim, N = m.N;
  QMat rows(d * (d + 1) / 2, d * d);
  int r = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      rows(r, partner_index(j, N) * d + i) += Rational(1);
      rows(r, partner_index(i, N) * d + j) += Rational(1);
      ++r;
    }
  return rows;
}

// Rows expressing (ad_E - eig) M = 0.
QMat ad_rows(const LieMatrix& E, const Rational& eig, int d) {
  QMat rows(d * d, d * d);
  int r = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (!E(i, k).is_zero()) rows(r, k * d + j) += E(i, k);
        if (!E(k, j).is_zero()) rows(r, i * d + k) -= E(k, j);
      }
      rows(r, i * d + j) -= eig;
      ++r;
    }
  return rows;
}

QMat stack_rows(const QMat& a, const QMat& b) {
  QMat out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

// Exact left inverse of a full-column-rank matrix via its Gram matrix.
QMat left_inverse(const QMat& t) {
  QMat gram = t.transpose() * t;
  QMat ginv = exact_inverse(gram, Rational(0), Rational(1));
  return ginv * t.transpose();
}

const std::vector<LieMatrix>& side_args(const KostantModel& m, int nargs,
                                        std::vector<LieMatrix>& scratch) {
  if (nargs == 2 * m.n) return m.X;
  if (nargs == m.n) {
    scratch.assign(m.X.begin(), m.X.begin() + m.n);
    return scratch;
  }
  throw std::invalid_argument("cochain argument count matches neither side of the model");
}

std::vector<std::vector<int>> gen_combos(int nargs, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > nargs) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == nargs - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

SpinVector clifford_generator(int N, int k, const SpinVector& s) {
  const SpinCoef sqrt2(Rational(0), Rational(1));
  if (k < N) return s.wedge(k).scaled(sqrt2);
  return s.contract(k - N).scaled(-sqrt2);
}

}  // namespace

// ---------------------------------------------------------------------------
// matrix basics

LieMatrix mat_zero(int d) { return LieMatrix(d, d); }

bool mat_is_zero(const LieMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

QVec vec_mat(const LieMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  QVec v(r * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) v(i * c + j) = m(i, j);
  return v;
}

LieMatrix lie_bracket(const LieMatrix& a, const LieMatrix& b) { return a * b - b * a; }

Rational trace_pair(const LieMatrix& a, const LieMatrix& b) {
  Rational t(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
  return t;
}

Rational killing_form(const KostantModel& m, const LieMatrix& a, const LieMatrix& b) {
  return Rational(2 * m.n) * trace_pair(a, b);
}

Rational dual_form(const LieMatrix& a, const LieMatrix& b) {
  return Rational(-1, 2) * trace_pair(a, b);
}

// ---------------------------------------------------------------------------
// spin vectors

SpinVector::SpinVector(int N) : N_(N), comp_(size_t(1) << N) {
  if (N < 0 || N > 20) throw std::invalid_argument("SpinVector: bad generator count");
}

void SpinVector::set_comp(unsigned mask, const SpinCoef& v) {
  if (mask >= comp_.size()) throw std::out_of_range("SpinVector: bad component mask");
  comp_[mask] = v;
}

bool SpinVector::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

SpinVector SpinVector::operator-() const {
  SpinVector out(N_);
  for (size_t i = 0; i < comp_.size(); ++i) out.comp_[i] = -comp_[i];
  return out;
}

SpinVector operator+(const SpinVector& a, const SpinVector& b) {
  if (a.N_ != b.N_) throw std::invalid_argument("SpinVector: size mismatch");
  SpinVector out(a.N_);
  for (size_t i = 0; i < a.comp_.size(); ++i) out.comp_[i] = a.comp_[i] + b.comp_[i];
  return out;
}

SpinVector operator-(const SpinVector& a, const SpinVector& b) { return a + (-b); }

SpinVector SpinVector::scaled(const SpinCoef& c) const {
  SpinVector out(N_);
  for (size_t i = 0; i < comp_.size(); ++i) out.comp_[i] = comp_[i] * c;
  return out;
}

bool operator==(const SpinVector& a, const SpinVector& b) {
  return a.N_ == b.N_ && (a - b).is_zero();
}

SpinVector SpinVector::wedge(int k) const {
  SpinVector out(N_);
  const unsigned bit = 1u << k;
  const unsigned below = bit - 1;
  for (unsigned mask = 0; mask < comp_.size(); ++mask) {
    if (comp_[mask].is_zero() || (mask & bit)) continue;
    int sgn = __builtin_popcount(mask & below) & 1 ? -1 : 1;
    out.comp_[mask | bit] += comp_[mask] * SpinCoef(Rational(sgn));
  }
  return out;
}

SpinVector SpinVector::contract(int k) const {
  SpinVector out(N_);
  const unsigned bit = 1u << k;
  const unsigned below = bit - 1;
  for (unsigned mask = 0; mask < comp_.size(); ++mask) {
    if (comp_[mask].is_zero() || !(mask & bit)) continue;
    int sgn = __builtin_popcount(mask & below) & 1 ? -1 : 1;
    out.comp_[mask ^ bit] += comp_[mask] * SpinCoef(Rational(sgn));
  }
  return out;
}

SpinVector spin_basis(int N, unsigned mask) {
  SpinVector s(N);
  s.set_comp(mask, SpinCoef(Rational(1)));
  return s;
}

SpinCoef spin_pair(const SpinVector& a, const SpinVector& b) {
  if (a.generators() != b.generators())
    throw std::invalid_argument("spin_pair: size mismatch");
  const int N = a.generators();
  const unsigned full = (1u << N) - 1;
  SpinCoef acc;
  for (unsigned mask = 0; mask <= full; ++mask) {
    const SpinCoef& x = a.comp(mask);
    if (x.is_zero()) continue;
    const SpinCoef& y = b.comp(full ^ mask);
    if (y.is_zero()) continue;
    int k = __builtin_popcount(mask);
    int sgn = (k * (k - 1) / 2) & 1 ? -1 : 1;
    // Inversions between the sorted monomial and its complement.
    int inv = 0;
    for (int i = 0; i < N; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < i; ++j)
        if (!(mask & (1u << j))) ++inv;
    }
    if (inv & 1) sgn = -sgn;
    acc += x * y * SpinCoef(Rational(sgn));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// spans

bool in_span(const SpanSet& s, const LieMatrix& m) {
  QVec v = vec_mat(m);
  if (s.dim() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return false;
    return true;
  }
  QMat aug(s.cols.rows(), s.cols.cols() + 1);
  aug.leftCols(s.cols.cols()) = s.cols;
  aug.col(s.cols.cols()) = v;
  return exact_rank(aug) == s.dim();
}

QVec span_coords(const SpanSet& s, const LieMatrix& m) {
  return exact_solve(s.cols, vec_mat(m), Rational(0), Rational(1));
}

bool spans_equal(const SpanSet& a, const SpanSet& b) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  QMat joint(a.cols.rows(), a.cols.cols() + b.cols.cols());
  joint.leftCols(a.cols.cols()) = a.cols;
  joint.rightCols(b.cols.cols()) = b.cols;
  return exact_rank(joint) == a.dim();
}

SpanSet intersect_spans(const SpanSet& a, const SpanSet& b) {
  if (a.dim() == 0) return a;
  if (b.dim() == 0) return b;
  const int d = static_cast<int>(a.mats[0].rows());
  QMat joint(a.cols.rows(), a.cols.cols() + b.cols.cols());
  joint.leftCols(a.cols.cols()) = a.cols;
  for (Eigen::Index j = 0; j < b.cols.cols(); ++j) joint.col(a.cols.cols() + j) = -b.cols.col(j);
  QMat ker = kernel_basis(joint, Rational(0), Rational(1));
  QMat cand(a.cols.rows(), ker.cols());
  for (Eigen::Index k = 0; k < ker.cols(); ++k)
    cand.col(k) = a.cols * ker.col(k).topRows(a.cols.cols());
  return span_from_cols(cand, d);
}

SpanSet bracket_span(const SpanSet& a, const SpanSet& b) {
  const int d = static_cast<int>(a.mats.empty() ? 0 : a.mats[0].rows());
  std::vector<LieMatrix> cand;
  for (const auto& x : a.mats)
    for (const auto& y : b.mats) cand.push_back(lie_bracket(x, y));
  return span_from_cols(cols_of(cand), d);
}

SpanSet make_span(const std::vector<LieMatrix>& mats) {
  const int d = static_cast<int>(mats.empty() ? 0 : mats[0].rows());
  return span_from_cols(cols_of(mats), d);
}

// ---------------------------------------------------------------------------
// model helpers

LieMatrix diag_embed(const KostantModel& m, const LieMatrix& a) {
  if (a.rows() != m.N || a.cols() != m.N)
    throw std::invalid_argument("diag_embed: expects an N x N block");
  LieMatrix out = mat_zero(m.dim);
  for (int i = 0; i < m.N; ++i)
    for (int j = 0; j < m.N; ++j) {
      out(i, j) = a(i, j);
      out(m.N + i, m.N + j) = -a(j, i);
    }
  return out;
}

LieMatrix wedge_map(const KostantModel& m, const QVec& x, const QVec& y) {
  QVec hx = m.h * x, hy = m.h * y;
  LieMatrix out(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) out(i, j) = y(i) * hx(j) - x(i) * hy(j);
  return out;
}

QVec nu_of(const KostantModel& m, const LieMatrix& z) {
  QVec out(m.dim);
  for (int i = 0; i < m.dim; ++i) out(i) = z(i, m.N);
  return out;
}

LieMatrix grade_minus(const KostantModel& m, const LieMatrix& a) {
  LieMatrix ad = lie_bracket(m.grading, a);
  LieMatrix ad2 = lie_bracket(m.grading, ad);
  return (ad2 - ad) * Rational(1, 2);
}

bool is_ambient_skew(const KostantModel& m, const LieMatrix& a) {
  return mat_is_zero(a.transpose() * m.h + m.h * a);
}

LieMatrix block_diagonal_part(const KostantModel& m, const LieMatrix& a) {
  LieMatrix out = mat_zero(m.dim);
  for (int i = 0; i < m.N; ++i)
    for (int j = 0; j < m.N; ++j) {
      out(i, j) = a(i, j);
      out(m.N + i, m.N + j) = a(m.N + i, m.N + j);
    }
  return out;
}

QVec coset_coords(const KostantModel& m, const LieMatrix& a) {
  return m.coset_proj * vec_mat(a);
}

QVec sl_coset_coords(const KostantModel& m, const LieMatrix& a) {
  return m.sl_coset_proj * vec_mat(a);
}

// ---------------------------------------------------------------------------
// spin representation

SpinVector spin_clifford(const KostantModel& m, const QVec& v, const SpinVector& s) {
  if (v.size() != m.dim) throw std::invalid_argument("spin_clifford: bad vector size");
  SpinVector out(m.N);
  for (int k = 0; k < m.dim; ++k) {
    if (v(k).is_zero()) continue;
    out += clifford_generator(m.N, k, s).scaled(SpinCoef(v(k)));
  }
  return out;
}

SpinVector spin_action(const KostantModel& m, const LieMatrix& a, const SpinVector& s) {
  if (!is_ambient_skew(m, a))
    throw std::invalid_argument("spin_action: element is not h-skew");
  SpinVector out(m.N);
  const Rational half(1, 2);
  for (int k = 0; k < m.dim; ++k)
    for (int l = k + 1; l < m.dim; ++l) {
      const Rational& c = a(l, partner_index(k, m.N));
      if (c.is_zero()) continue;
      SpinVector term = clifford_generator(m.N, k, clifford_generator(m.N, l, s));
      if (l == partner_index(k, m.N)) term += s;
      out += term.scaled(SpinCoef(half * c));
    }
  return out;
}

// ---------------------------------------------------------------------------
// model construction

KostantModel build_model(int n) {
  if (n < 2) throw std::invalid_argument("build_model: n must be at least 2");
  KostantModel m;
  m.n = n;
  m.N = n + 1;
  m.dim = 2 * m.N;
  const int d = m.dim, N = m.N;

  m.h = mat_zero(d);
  for (int k = 0; k < d; ++k) m.h(k, partner_index(k, N)) = Rational(1);
  m.K = mat_zero(d);
  for (int k = 0; k < d; ++k) m.K(k, k) = Rational(k < N ? 1 : -1);

  m.grading = wedge_map(m, basis_vec(d, N), basis_vec(d, 0) + basis_vec(d, 2 * N - 1));

  QMat skew = skew_rows(m);
  m.gtilde = span_from_cols(kernel_basis(skew, Rational(0), Rational(1)), d);

  {
    std::vector<LieMatrix> mats;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (a != b) mats.push_back(diag_embed(m, unit_mat(N, a, b)));
    for (int k = 0; k + 1 < N; ++k)
      mats.push_back(diag_embed(m, unit_mat(N, k, k) - unit_mat(N, k + 1, k + 1)));
    m.g = span_from_mats(std::move(mats));
  }

  {
    // Ray stabilizer: M v proportional to v for v = e_1 + f_N.
    QMat ray(d - 1, d * d);
    int r = 0;
    for (int k = 1; k < d - 1; ++k) {
      ray(r, k * d + 0) += Rational(1);
      ray(r, k * d + (d - 1)) += Rational(1);
      ++r;
    }
    ray(r, 0 * d + 0) += Rational(1);
    ray(r, 0 * d + (d - 1)) += Rational(1);
    ray(r, (d - 1) * d + 0) -= Rational(1);
    ray(r, (d - 1) * d + (d - 1)) -= Rational(1);
    m.ptilde = span_from_cols(
        kernel_basis(stack_rows(skew, ray), Rational(0), Rational(1)), d);
  }

  m.ptilde_plus = span_from_cols(
      kernel_basis(stack_rows(skew, ad_rows(m.grading, Rational(1), d)), Rational(0), Rational(1)),
      d);
  m.gtilde0 = span_from_cols(
      kernel_basis(stack_rows(skew, ad_rows(m.grading, Rational(0), d)), Rational(0), Rational(1)),
      d);

  m.q = intersect_spans(m.g, m.ptilde);
  m.q0 = intersect_spans(m.q, m.gtilde0);

  {
    std::vector<LieMatrix> mats;
    for (int j = 1; j < N; ++j) mats.push_back(diag_embed(m, unit_mat(N, 0, j)));
    for (int a = 1; a < N; ++a)
      for (int b = 1; b < N; ++b)
        if (a != b) mats.push_back(diag_embed(m, unit_mat(N, a, b)));
    for (int k = 0; k + 1 < N; ++k)
      mats.push_back(diag_embed(m, unit_mat(N, k, k) - unit_mat(N, k + 1, k + 1)));
    m.p = span_from_mats(std::move(mats));
  }
  {
    std::vector<LieMatrix> mats;
    for (int j = 1; j < N; ++j) mats.push_back(diag_embed(m, unit_mat(N, 0, j)));
    m.p_plus = span_from_mats(std::move(mats));
  }

  {
    std::vector<LieMatrix> e2, f2, fbar2;
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        e2.push_back(wedge_map(m, basis_vec(d, a), basis_vec(d, b)));
        f2.push_back(wedge_map(m, basis_vec(d, N + a), basis_vec(d, N + b)));
        if (a >= 1) fbar2.push_back(wedge_map(m, basis_vec(d, N + a), basis_vec(d, N + b)));
      }
    m.lambda2E = span_from_mats(std::move(e2));
    m.lambda2F = span_from_mats(std::move(f2));
    m.lambda2Fbar = span_from_mats(std::move(fbar2));
  }

  for (int i = 1; i <= n; ++i) m.X.push_back(diag_embed(m, unit_mat(N, i, 0)));
  for (int j = 1; j <= n - 1; ++j) m.X.push_back(diag_embed(m, unit_mat(N, N - 1, j)));
  m.X.push_back(diag_embed(
      m, (unit_mat(N, 0, 0) + unit_mat(N, N - 1, N - 1)) * Rational(-1, 2)));
  for (const auto& x : m.X) m.Xminus.push_back(grade_minus(m, x));

  {
    const int c = 2 * n;
    QMat pairing(c, c);
    for (int a = 0; a < c; ++a)
      for (int i = 0; i < c; ++i) pairing(a, i) = dual_form(m.X[static_cast<size_t>(a)],
                                                            m.ptilde_plus.mats[static_cast<size_t>(i)]);
    QMat inv = exact_inverse(pairing, Rational(0), Rational(1));
    for (int b = 0; b < c; ++b) {
      LieMatrix z = mat_zero(d);
      for (int i = 0; i < c; ++i)
        if (!inv(i, b).is_zero()) z = z + m.ptilde_plus.mats[static_cast<size_t>(i)] * inv(i, b);
      m.Zdual.push_back(z);
    }
  }
  {
    QMat pairing(n, n);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) pairing(a, i) = dual_form(m.X[static_cast<size_t>(a)],
                                                            m.p_plus.mats[static_cast<size_t>(i)]);
    QMat inv = exact_inverse(pairing, Rational(0), Rational(1));
    for (int b = 0; b < n; ++b) {
      LieMatrix z = mat_zero(d);
      for (int i = 0; i < n; ++i)
        if (!inv(i, b).is_zero()) z = z + m.p_plus.mats[static_cast<size_t>(i)] * inv(i, b);
      m.Zsl.push_back(z);
    }
  }

  m.fhat = span_from_mats(std::vector<LieMatrix>(m.Zdual.begin(), m.Zdual.begin() + n));

  m.sF = spin_basis(N, 0);
  {
    int t = (N * (N - 1) / 2) & 1 ? -1 : 1;
    m.sE = spin_basis(N, (1u << N) - 1).scaled(SpinCoef(Rational(-t, 2)));
  }

  {
    QMat t(d * d, 2 * n + m.ptilde.dim());
    for (int a = 0; a < 2 * n; ++a) t.col(a) = vec_mat(m.X[static_cast<size_t>(a)]);
    for (int i = 0; i < m.ptilde.dim(); ++i) t.col(2 * n + i) = m.ptilde.cols.col(i);
    m.coset_proj = left_inverse(t).topRows(2 * n);
  }
  {
    QMat t(d * d, n + m.p.dim());
    for (int a = 0; a < n; ++a) t.col(a) = vec_mat(m.X[static_cast<size_t>(a)]);
    for (int i = 0; i < m.p.dim(); ++i) t.col(n + i) = m.p.cols.col(i);
    m.sl_coset_proj = left_inverse(t).topRows(n);
  }

  return m;
}

// ---------------------------------------------------------------------------
// cochains

Cochain::Cochain(int nargs, int degree, int matdim)
    : nargs_(nargs), degree_(degree), matdim_(matdim) {
  if (nargs < 0 || degree < 0 || degree > nargs)
    throw std::invalid_argument("Cochain: bad shape");
  tuples_ = gen_combos(nargs, degree);
  comp_.assign(tuples_.size(), mat_zero(matdim));
}

int Cochain::rank_of(const std::vector<int>& idx) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), idx);
  if (it == tuples_.end() || *it != idx)
    throw std::out_of_range("Cochain: bad index tuple");
  return static_cast<int>(it - tuples_.begin());
}

LieMatrix Cochain::eval(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("Cochain::eval: wrong arity");
  std::vector<int> s = idx;
  int sgn = 1;
  for (size_t i = 1; i < s.size(); ++i)
    for (size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
      std::swap(s[j], s[j - 1]);
      sgn = -sgn;
    }
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return mat_zero(matdim_);
  for (int v : s)
    if (v < 0 || v >= nargs_) throw std::out_of_range("Cochain::eval: index out of range");
  const LieMatrix& c = comp_[static_cast<size_t>(rank_of(s))];
  return sgn > 0 ? c : LieMatrix(-c);
}

void Cochain::set(const std::vector<int>& idx, const LieMatrix& v) {
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] >= idx[i + 1])
      throw std::invalid_argument("Cochain::set: tuple must be strictly increasing");
  comp_[static_cast<size_t>(rank_of(idx))] = v;
}

void Cochain::add(const std::vector<int>& idx, const LieMatrix& v) {
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] >= idx[i + 1])
      throw std::invalid_argument("Cochain::add: tuple must be strictly increasing");
  LieMatrix& c = comp_[static_cast<size_t>(rank_of(idx))];
  c = c + v;
}

bool Cochain::is_zero() const {
  for (const auto& c : comp_)
    if (!mat_is_zero(c)) return false;
  return true;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& c : out.comp_) c = LieMatrix(-c);
  return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.nargs_ != b.nargs_ || a.degree_ != b.degree_ || a.matdim_ != b.matdim_)
    throw std::invalid_argument("Cochain: shape mismatch");
  Cochain out = a;
  for (size_t i = 0; i < out.comp_.size(); ++i) out.comp_[i] = out.comp_[i] + b.comp_[i];
  return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

Cochain Cochain::scaled(const Rational& c) const {
  Cochain out = *this;
  for (auto& v : out.comp_) v = v * c;
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.nargs_ != b.nargs_ || a.degree_ != b.degree_ || a.matdim_ != b.matdim_) return false;
  return (a - b).is_zero();
}

Cochain decomposable1(const KostantModel& m, const LieMatrix& za, const LieMatrix& value,
                      int nargs) {
  std::vector<LieMatrix> scratch;
  const auto& args = side_args(m, nargs, scratch);
  Cochain out(nargs, 1, m.dim);
  for (int a = 0; a < nargs; ++a) {
    Rational c = dual_form(za, args[static_cast<size_t>(a)]);
    if (!c.is_zero()) out.set({a}, value * c);
  }
  return out;
}

Cochain decomposable2(const KostantModel& m, const LieMatrix& za, const LieMatrix& zb,
                      const LieMatrix& value, int nargs) {
  std::vector<LieMatrix> scratch;
  const auto& args = side_args(m, nargs, scratch);
  QVec ca(nargs), cb(nargs);
  for (int a = 0; a < nargs; ++a) {
    ca(a) = dual_form(za, args[static_cast<size_t>(a)]);
    cb(a) = dual_form(zb, args[static_cast<size_t>(a)]);
  }
  Cochain out(nargs, 2, m.dim);
  const Rational half(1, 2);
  for (int a = 0; a < nargs; ++a)
    for (int b = a + 1; b < nargs; ++b) {
      Rational c = half * (ca(a) * cb(b) - ca(b) * cb(a));
      if (!c.is_zero()) out.set({a, b}, value * c);
    }
  return out;
}

namespace {

const std::vector<LieMatrix>& side_duals(const KostantModel& m, int nargs) {
  if (nargs == 2 * m.n) return m.Zdual;
  if (nargs == m.n) return m.Zsl;
  throw std::invalid_argument("cochain argument count matches neither side of the model");
}

QVec side_coset_coords(const KostantModel& m, int nargs, const LieMatrix& a) {
  return nargs == 2 * m.n ? coset_coords(m, a) : sl_coset_coords(m, a);
}

}  // namespace

Cochain kostant_del_star_lowering(const KostantModel& m, const Cochain& phi) {
  if (phi.degree() < 1)
    throw std::invalid_argument("kostant_del_star: needs degree >= 1");
  const int na = phi.nargs(), k = phi.degree();
  std::vector<LieMatrix> scratch;
  const auto& args = side_args(m, na, scratch);
  const auto& duals = side_duals(m, na);
  Cochain out(na, k - 1, m.dim);
  for (int t = 0; t < out.ncomp(); ++t) {
    const std::vector<int>& J = out.tuple(t);
    LieMatrix acc = mat_zero(m.dim);
    for (int a = 0; a < na; ++a) {
      for (size_t s = 0; s < J.size(); ++s) {
        LieMatrix br = lie_bracket(duals[static_cast<size_t>(a)],
                                   args[static_cast<size_t>(J[s])]);
        QVec c = side_coset_coords(m, na, br);
        for (int b = 0; b < na; ++b) {
          if (c(b).is_zero()) continue;
          std::vector<int> idx;
          idx.push_back(a);
          for (size_t u = 0; u < J.size(); ++u) idx.push_back(u == s ? b : J[u]);
          acc = acc + phi.eval(idx) * c(b);
        }
      }
    }
    out.set(J, acc);
  }
  return out;
}

Cochain kostant_del_star(const KostantModel& m, const Cochain& phi) {
  if (phi.degree() < 1)
    throw std::invalid_argument("kostant_del_star: needs degree >= 1");
  const int na = phi.nargs(), k = phi.degree();
  const auto& duals = side_duals(m, na);
  Cochain out(na, k - 1, m.dim);
  const Rational deg(k);
  for (int t = 0; t < out.ncomp(); ++t) {
    const std::vector<int>& J = out.tuple(t);
    LieMatrix acc = mat_zero(m.dim);
    std::vector<int> idx(static_cast<size_t>(k));
    for (int a = 0; a < na; ++a) {
      idx[0] = a;
      for (size_t u = 0; u < J.size(); ++u) idx[u + 1] = J[u];
      LieMatrix val = phi.eval(idx);
      if (mat_is_zero(val)) continue;
      acc = acc + lie_bracket(val, duals[static_cast<size_t>(a)]) * deg;
    }
    out.set(J, acc);
  }
  return out + kostant_del_star_lowering(m, phi);
}

Cochain kostant_del(const KostantModel& m, const Cochain& phi) {
  const int na = phi.nargs(), k = phi.degree();
  if (na != 2 * m.n && na != m.n)
    throw std::invalid_argument("cochain argument count matches neither side of the model");
  if (k >= na) throw std::invalid_argument("kostant_del: cochain already has top degree");
  const std::vector<LieMatrix>* reps = &m.Xminus;
  std::vector<LieMatrix> slreps;
  if (na == m.n) {
    slreps.assign(m.X.begin(), m.X.begin() + m.n);
    reps = &slreps;
  }
  Cochain out(na, k + 1, m.dim);
  for (int t = 0; t < out.ncomp(); ++t) {
    const std::vector<int>& I = out.tuple(t);
    LieMatrix acc = mat_zero(m.dim);
    for (size_t i = 0; i < I.size(); ++i) {
      std::vector<int> rest;
      for (size_t u = 0; u < I.size(); ++u)
        if (u != i) rest.push_back(I[u]);
      LieMatrix val = phi.eval(rest);
      if (mat_is_zero(val)) continue;
      LieMatrix term = lie_bracket((*reps)[static_cast<size_t>(I[i])], val);
      if (i & 1)
        acc = acc - term;
      else
        acc = acc + term;
    }
    out.set(I, acc);
  }
  return out;
}

Cochain kostant_laplacian(const KostantModel& m, const Cochain& phi) {
  // In top degree the differential vanishes identically, in degree 0 the
  // codifferential does; both composites stay well-typed this way.
  if (phi.degree() == phi.nargs()) return kostant_del(m, kostant_del_star(m, phi));
  Cochain up = kostant_del_star(m, kostant_del(m, phi));
  if (phi.degree() == 0) return up;
  return kostant_del(m, kostant_del_star(m, phi)) + up;
}

Cochain extend_cochain(const KostantModel& m, const Cochain& phi) {
  if (phi.nargs() != m.n)
    throw std::invalid_argument("extend_cochain: expects an sl-side cochain");
  Cochain out(2 * m.n, phi.degree(), m.dim);
  for (int t = 0; t < phi.ncomp(); ++t) out.set(phi.tuple(t), phi.component(t));
  return out;
}

Cochain cochain_action(const KostantModel& m, const LieMatrix& a, const Cochain& phi) {
  if (phi.nargs() != 2 * m.n)
    throw std::invalid_argument("cochain_action: expects an ambient-side cochain");
  std::vector<QVec> lowered;
  for (int b = 0; b < 2 * m.n; ++b)
    lowered.push_back(coset_coords(m, lie_bracket(a, m.X[static_cast<size_t>(b)])));
  Cochain out(phi.nargs(), phi.degree(), m.dim);
  for (int t = 0; t < phi.ncomp(); ++t) {
    const std::vector<int>& I = phi.tuple(t);
    LieMatrix acc = lie_bracket(a, phi.component(t));
    for (size_t s = 0; s < I.size(); ++s) {
      const QVec& c = lowered[static_cast<size_t>(I[s])];
      for (int b = 0; b < 2 * m.n; ++b) {
        if (c(b).is_zero()) continue;
        std::vector<int> idx(I.begin(), I.end());
        idx[s] = b;
        acc = acc - phi.eval(idx) * c(b);
      }
    }
    out.set(I, acc);
  }
  return out;
}

QVec alternation(const KostantModel& m, const Cochain& phi) {
  if (phi.nargs() != 2 * m.n || phi.degree() != 1)
    throw std::invalid_argument("alternation: expects an ambient-side 1-cochain");
  const int n = m.n, N = m.N;
  // f-index pairs (a, b), 2 <= a < b <= N, in the order of the
  // lambda2Fbar basis.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 2; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) pairs.emplace_back(a, b);
  // f-index triples, lexicographic.
  std::vector<std::array<int, 3>> triples;
  for (int a = 2; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b)
      for (int c = b + 1; c <= N; ++c) triples.push_back({a, b, c});
  QVec out(static_cast<int>(triples.size()));
  for (int g = 0; g < 2 * n; ++g) {
    LieMatrix v = phi.eval({g});
    if (mat_is_zero(v)) continue;
    if (g >= n)
      throw std::domain_error("alternation: cochain has vertical support");
    QVec coords = [&]() {
      try {
        return span_coords(m.lambda2Fbar, v);
      } catch (const std::domain_error&) {
        throw std::domain_error("alternation: value outside lambda2Fbar");
      }
    }();
    const int lead = g + 2;  // nu of the g-th horizontal dual is f_(g+2)
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (coords(static_cast<int>(p)).is_zero()) continue;
      int a = pairs[p].first, b = pairs[p].second;
      if (lead == a || lead == b) continue;
      // Sort (lead, a, b) with sign.
      int x = lead, y = a, z = b, sgn = 1;
      if (x > y) { std::swap(x, y); sgn = -sgn; }
      if (y > z) { std::swap(y, z); sgn = -sgn; }
      if (x > y) { std::swap(x, y); sgn = -sgn; }
      for (size_t tr = 0; tr < triples.size(); ++tr)
        if (triples[tr][0] == x && triples[tr][1] == y && triples[tr][2] == z) {
          out(static_cast<int>(tr)) += Rational(sgn) * coords(static_cast<int>(p));
          break;
        }
    }
  }
  return out;
}

NormalizeStep normalize_step(const KostantModel& m, const Cochain& kappa) {
  if (kappa.nargs() != m.n || kappa.degree() != 2)
    throw std::invalid_argument("normalize_step: expects an sl-side 2-cochain");
  NormalizeStep st;
  st.extended = extend_cochain(m, kappa);
  st.del_star = kostant_del_star(m, st.extended);
  for (int g = m.n; g < 2 * m.n; ++g)
    if (!mat_is_zero(st.del_star.eval({g})))
      throw std::domain_error("normalize_step: obstruction has vertical support");
  for (int g = 0; g < m.n; ++g) {
    LieMatrix v = st.del_star.eval({g});
    if (!mat_is_zero(v) && !in_span(m.lambda2Fbar, v))
      throw std::domain_error("normalize_step: obstruction value outside lambda2Fbar");
  }
  QVec alt = alternation(m, st.del_star);
  for (Eigen::Index i = 0; i < alt.size(); ++i)
    if (!alt(i).is_zero())
      throw std::domain_error("normalize_step: obstruction has nonzero alternation");
  st.correction = st.del_star.scaled(Rational(-1, 2));
  return st;
}

}  // namespace pwlab
