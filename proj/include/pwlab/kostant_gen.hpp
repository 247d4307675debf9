#pragma once

// Generators of curvature-shaped 2-cochains on the horizontal directions:
// trace-free, Bianchi-symmetric, codifferential-closed.  Coordinates are
// taken over values [X_i, Z_j]; the admissible set is the kernel of the
// stacked linear conditions.

#include <random>
#include <stdexcept>
#include <vector>

#include "pwlab/kostant.hpp"

namespace pwlab {

inline int weyl_ncoords(int n) { return n * (n - 1) / 2 * n * n; }

inline int pair_rank(int n, int a, int b) {
  int r = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == a && y == b) return r;
      ++r;
    }
  throw std::logic_error("pair_rank: bad pair");
}

inline Cochain weyl_from_coords(const KostantModel& m, const QVec& w) {
  const int n = m.n;
  Cochain out(n, 2, m.dim);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      LieMatrix v = mat_zero(m.dim);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational& c = w((pair_rank(n, a, b) * n + i) * n + j);
          if (!c.is_zero())
            v = v + lie_bracket(m.X[static_cast<size_t>(i)], m.Zsl[static_cast<size_t>(j)]) * c;
        }
      out.set({a, b}, v);
    }
  return out;
}

// Kernel of the linear conditions, one coefficient vector per column.
inline QMat weyl_closed_kernel(const KostantModel& m) {
  const int n = m.n;
  const int nc = weyl_ncoords(n);
  std::vector<QVec> cols;
  for (int e = 0; e < nc; ++e) {
    QVec w(nc);
    w(e) = Rational(1);
    Cochain k = weyl_from_coords(m, w);
    Cochain ds = kostant_del_star(m, k);
    std::vector<Rational> rows;
    for (int t = 0; t < ds.ncomp(); ++t) {
      QVec v = vec_mat(ds.component(t));
      for (Eigen::Index r = 0; r < v.size(); ++r) rows.push_back(v(r));
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          LieMatrix s = lie_bracket(k.eval({a, b}), m.X[static_cast<size_t>(c)]) +
                        lie_bracket(k.eval({b, c}), m.X[static_cast<size_t>(a)]) +
                        lie_bracket(k.eval({c, a}), m.X[static_cast<size_t>(b)]);
          QVec cc = sl_coset_coords(m, s);
          for (Eigen::Index r = 0; r < cc.size(); ++r) rows.push_back(cc(r));
        }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Rational t(0);
        for (int i = 0; i < n; ++i) t += w((pair_rank(n, a, b) * n + i) * n + i);
        rows.push_back(t);
      }
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < n; ++j) {
        Rational t(0);
        for (int a = 0; a < n; ++a) {
          if (a == b) continue;
          if (a < b)
            t += w((pair_rank(n, a, b) * n + a) * n + j);
          else
            t -= w((pair_rank(n, b, a) * n + a) * n + j);
        }
        rows.push_back(t);
      }
    QVec cv(static_cast<int>(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r) cv(static_cast<Eigen::Index>(r)) = rows[r];
    cols.push_back(cv);
  }
  QMat sys(cols[0].size(), nc);
  for (int e = 0; e < nc; ++e) sys.col(e) = cols[static_cast<size_t>(e)];
  return kernel_basis(sys, Rational(0), Rational(1));
}

inline Cochain random_weyl_closed(const KostantModel& m, const QMat& ker, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    bool nonzero = false;
    QVec c(ker.cols());
    for (Eigen::Index i = 0; i < ker.cols(); ++i) {
      int x = coef(rng);
      c(i) = Rational(x);
      if (x != 0) nonzero = true;
    }
    if (!nonzero && ker.cols() > 0) continue;
    return weyl_from_coords(m, QVec(ker * c));
  }
}

}  // namespace pwlab
