#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

#include "pwlab/ratfunc.hpp"
#include "pwlab/sqrt2.hpp"

// Eigen scalar traits for the exact types. Only the container/arithmetic side
// of Eigen is used; decompositions are replaced by the exact elimination
// routines below.
namespace Eigen {

template <>
struct NumTraits<pwlab::Rational> {
  using Real = pwlab::Rational;
  using NonInteger = pwlab::Rational;
  using Literal = pwlab::Rational;
  using Nested = pwlab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16,
  };
  static inline Real epsilon() { return pwlab::Rational(0); }
  static inline Real dummy_precision() { return pwlab::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<pwlab::RatFunc> {
  using Real = pwlab::RatFunc;
  using NonInteger = pwlab::RatFunc;
  using Literal = pwlab::RatFunc;
  using Nested = pwlab::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return pwlab::RatFunc(); }
  static inline Real dummy_precision() { return pwlab::RatFunc(); }
  static inline int digits10() { return 0; }
};

template <typename T>
struct NumTraits<pwlab::Sq2<T>> {
  using Real = pwlab::Sq2<T>;
  using NonInteger = pwlab::Sq2<T>;
  using Literal = pwlab::Sq2<T>;
  using Nested = pwlab::Sq2<T>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<T>::ReadCost,
    AddCost = 2 * NumTraits<T>::AddCost,
    MulCost = 4 * NumTraits<T>::MulCost,
  };
  static inline Real epsilon() { return pwlab::Sq2<T>(); }
  static inline Real dummy_precision() { return pwlab::Sq2<T>(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pwlab {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using QMat = Mat<Rational>;
using QVec = Vec<Rational>;
using FMat = Mat<RatFunc>;
using FVec = Vec<RatFunc>;

namespace detail {
template <class K>
bool scalar_is_zero(const K& v) { return v.is_zero(); }
template <class K>
K scalar_inv(const K& v) { return v.inv(); }
template <>
inline RatFunc scalar_inv<RatFunc>(const RatFunc& v) {
  return RatFunc::constant(v.nvars(), Rational(1)) / v;
}
}  // namespace detail

// Gauss-Jordan over an exact field K: returns the reduced row echelon form
// in place and the list of pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!detail::scalar_is_zero(m(i, c))) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    K inv = detail::scalar_inv(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || detail::scalar_is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <class K>
int exact_rank(Mat<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel, one vector per column.
template <class K>
Mat<K> kernel_basis(Mat<K> m, const K& zero, const K& one) {
  const Eigen::Index cols = m.cols();
  std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  Eigen::Index nfree = cols - static_cast<Eigen::Index>(piv.size());
  Mat<K> basis(cols, nfree);
  for (Eigen::Index i = 0; i < cols; ++i)
    for (Eigen::Index j = 0; j < nfree; ++j) basis(i, j) = zero;
  Eigen::Index fj = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    basis(c, fj) = one;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      basis(piv[pi], fj) = -m(static_cast<Eigen::Index>(pi), c);
    ++fj;
  }
  return basis;
}

// Exact inverse via Gauss-Jordan; throws if singular.
template <class K>
Mat<K> exact_inverse(const Mat<K>& m, const K& zero, const K& one) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exact_inverse: not square");
  Mat<K> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = m(i, j);
      aug(i, n + j) = (i == j) ? one : zero;
    }
  std::vector<int> piv = rref(aug);
  if (static_cast<Eigen::Index>(piv.size()) != n ||
      piv.back() != static_cast<int>(n - 1))
    throw std::domain_error("exact_inverse: singular matrix");
  return aug.rightCols(n);
}

// Solve m x = b exactly; throws if inconsistent or underdetermined.
template <class K>
Vec<K> exact_solve(const Mat<K>& m, const Vec<K>& b, const K& zero, const K& one) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Mat<K> aug(rows, cols + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b(i);
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == static_cast<int>(cols))
    throw std::domain_error("exact_solve: inconsistent system");
  if (static_cast<Eigen::Index>(piv.size()) != cols)
    throw std::domain_error("exact_solve: underdetermined system");
  Vec<K> x(cols);
  for (Eigen::Index j = 0; j < cols; ++j) x(j) = zero;
  for (size_t pi = 0; pi < piv.size(); ++pi) x(piv[pi]) = aug(static_cast<Eigen::Index>(pi), cols);
  (void)one;
  return x;
}

}  // namespace pwlab
