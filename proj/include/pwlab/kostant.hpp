#pragma once

#include <stdexcept>
#include <vector>

#include "pwlab/linalg.hpp"
#include "pwlab/rational.hpp"
#include "pwlab/sqrt2.hpp"

namespace pwlab {

// Exact matrix model of the graded Lie theory behind the split-signature
// lift: the orthogonal algebra of the neutral pairing on R^(2N), N = n+1,
// together with its null-ray stabilizer, the block-embedded special linear
// algebra with its own parabolic, the spin representation on exterior forms,
// and a Kostant-style (co)differential calculus on coset cochains used to
// normalize curvature.
//
// Ground conventions, fixed once for the whole module:
//  - ambient basis e_1..e_N, f_1..f_N of R^(2N); the pairing h swaps the two
//    halves: h(e_i, f_j) = delta_ij, h(e, e) = h(f, f) = 0;
//  - the reflection K is +1 on the e-half and -1 on the f-half;
//  - sl(N) embeds block-diagonally as A |-> diag(A, -A^T); its standard
//    parabolic is the stabilizer of the line R e_1;
//  - the distinguished null ray of the ambient parabolic is R(e_1 + f_N);
//  - wedge_map(x, y) z = h(x, z) y - h(y, z) x identifies Lambda^2 R^(2N)
//    with the ambient orthogonal algebra;
//  - coset directions are ordered: n horizontals diag-embedded from
//    E_(i+1,1), then n-1 verticals from E_(N,j+1), then the vertical
//    -1/2 diag-embed(E_11 + E_NN);
//  - duality between coset directions and the nilradical uses the pairing
//    -1/2 tr(AB).  This multiple of the trace form is the one induced by h
//    on Lambda^2 R^(2N) under wedge_map, and it is the normalization for
//    which the algebraic Laplacian acts by exactly 2 on the
//    curvature-correction component.
using LieMatrix = QMat;
using SpinCoef = Sq2<Rational>;

// Element of the exterior algebra on N generators with Sq2-rational
// coefficients; component e_S per subset S of {1..N} (bitmask, bit i-1 for
// generator i).  Carrier of the spin representation of the ambient algebra.
class SpinVector {
 public:
  SpinVector() : N_(0) {}
  explicit SpinVector(int N);

  int generators() const { return N_; }
  size_t dim() const { return comp_.size(); }
  const SpinCoef& comp(unsigned mask) const { return comp_[mask]; }
  void set_comp(unsigned mask, const SpinCoef& v);

  bool is_zero() const;
  SpinVector operator-() const;
  friend SpinVector operator+(const SpinVector& a, const SpinVector& b);
  friend SpinVector operator-(const SpinVector& a, const SpinVector& b);
  SpinVector& operator+=(const SpinVector& o) { return *this = *this + o; }
  SpinVector& operator-=(const SpinVector& o) { return *this = *this - o; }
  SpinVector scaled(const SpinCoef& c) const;
  friend bool operator==(const SpinVector& a, const SpinVector& b);

  // Exterior multiplication by generator k and its interior dual (0-based),
  // with the usual interleaving signs.
  SpinVector wedge(int k) const;
  SpinVector contract(int k) const;

 private:
  int N_;
  std::vector<SpinCoef> comp_;
};

SpinVector spin_basis(int N, unsigned mask);

// All subalgebra data is carried around as explicit spans: the matrices and
// their vectorized images (one column per element, always independent).
struct SpanSet {
  std::vector<LieMatrix> mats;
  QMat cols;
  int dim() const { return static_cast<int>(mats.size()); }
};

struct KostantModel {
  int n = 0;    // dimension of the underlying projective directions
  int N = 0;    // n + 1
  int dim = 0;  // 2N, size of the ambient matrices

  LieMatrix h;        // neutral pairing
  LieMatrix K;        // half-space reflection
  LieMatrix grading;  // grading element of the ambient parabolic

  // Coset representatives of the 2n ambient coset directions (all lie in the
  // embedded sl(N)), their pure grade -1 parts, and the dual basis of the
  // ambient nilradical with respect to dual_form.
  std::vector<LieMatrix> X;
  std::vector<LieMatrix> Xminus;
  std::vector<LieMatrix> Zdual;
  // Duals of the n horizontal directions inside the sl-side nilradical.
  std::vector<LieMatrix> Zsl;

  SpanSet gtilde;       // ambient orthogonal algebra
  SpanSet g;            // embedded sl(N)
  SpanSet ptilde;       // stabilizer of the distinguished null ray
  SpanSet ptilde_plus;  // its nilradical = pure grade +1
  SpanSet gtilde0;      // grade 0 part
  SpanSet q;            // g intersected with ptilde
  SpanSet q0;           // q intersected with gtilde0
  SpanSet p;            // sl-side parabolic, embedded
  SpanSet p_plus;       // its nilradical, embedded
  SpanSet lambda2E;     // wedges of two e-vectors
  SpanSet lambda2F;     // wedges of two f-vectors
  SpanSet lambda2Fbar;  // wedges of f_2..f_N only
  SpanSet fhat;         // span of the n horizontal duals

  // Distinguished pure spinors: sF = e_empty, sE = the top form scaled so
  // that spin_pair(sE, sF) = -1/2.
  SpinVector sF;
  SpinVector sE;

  // Left inverses mapping vectorized matrices to coordinates over
  // [X | ptilde basis] and [X_horizontal | p basis]; rows beyond the coset
  // block are dropped.
  QMat coset_proj;
  QMat sl_coset_proj;
};

// Builds the full model; requires n >= 2.
KostantModel build_model(int n);

// tr(ab), the ambient Killing form 2n tr(ab), and the duality pairing
// -1/2 tr(ab).
Rational trace_pair(const LieMatrix& a, const LieMatrix& b);
Rational killing_form(const KostantModel& m, const LieMatrix& a, const LieMatrix& b);
Rational dual_form(const LieMatrix& a, const LieMatrix& b);

LieMatrix lie_bracket(const LieMatrix& a, const LieMatrix& b);
QVec vec_mat(const LieMatrix& m);
bool mat_is_zero(const LieMatrix& m);
LieMatrix mat_zero(int d);

// Standard block embedding A |-> diag(A, -A^T); a must be N x N.
LieMatrix diag_embed(const KostantModel& m, const LieMatrix& a);
// Orthogonal-algebra element of the 2-vector x ^ y.
LieMatrix wedge_map(const KostantModel& m, const QVec& x, const QVec& y);
// Action of a nilradical element on the first f-generator; identifies the
// horizontal duals with the f_2..f_N directions.
QVec nu_of(const KostantModel& m, const LieMatrix& z);
// Projection onto the grade -1 part of the ambient algebra.
LieMatrix grade_minus(const KostantModel& m, const LieMatrix& a);
// Membership in the ambient orthogonal algebra (h-skewness).
bool is_ambient_skew(const KostantModel& m, const LieMatrix& a);
// Kills the off-diagonal blocks; the result is the diag(A, -A^T) part.
LieMatrix block_diagonal_part(const KostantModel& m, const LieMatrix& a);

bool in_span(const SpanSet& s, const LieMatrix& m);
// Coordinates over the span basis; throws if the element lies outside.
QVec span_coords(const SpanSet& s, const LieMatrix& m);
bool spans_equal(const SpanSet& a, const SpanSet& b);
SpanSet intersect_spans(const SpanSet& a, const SpanSet& b);
// Span of all pairwise brackets of the two bases.
SpanSet bracket_span(const SpanSet& a, const SpanSet& b);
// Span of an arbitrary list of matrices, discarding dependent ones.
SpanSet make_span(const std::vector<LieMatrix>& mats);

// Coordinates of an ambient-algebra element over the 2n coset directions
// (modulo ptilde), and of an sl element over the n horizontal directions
// (modulo p).
QVec coset_coords(const KostantModel& m, const LieMatrix& a);
QVec sl_coset_coords(const KostantModel& m, const LieMatrix& a);

// Clifford action of an ambient vector (2N coordinates): e-generators act
// by sqrt2 * wedge, f-generators by -sqrt2 * contract, so that
// c(x) c(y) + c(y) c(x) = -2 h(x, y).
SpinVector spin_clifford(const KostantModel& m, const QVec& v, const SpinVector& s);
// Spin representation of the ambient orthogonal algebra; throws if a is not
// h-skew.
SpinVector spin_action(const KostantModel& m, const LieMatrix& a, const SpinVector& s);
// Symmetric pairing of the exterior algebra model: the coefficient of the
// top form in rev(a) ^ b, where rev flips degree-k monomials by
// (-1)^(k(k-1)/2).
SpinCoef spin_pair(const SpinVector& a, const SpinVector& b);

// Alternating matrix-valued cochain on coset directions.  nargs is either
// 2n (ambient side) or n (sl side); components are stored on strictly
// increasing index tuples and evaluation antisymmetrizes.  A decomposable
// wedge of k duals is represented by the function that contracts its
// arguments through dual_form and divides by k!.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int nargs, int degree, int matdim);

  int nargs() const { return nargs_; }
  int degree() const { return degree_; }
  int matdim() const { return matdim_; }
  int ncomp() const { return static_cast<int>(comp_.size()); }
  const std::vector<int>& tuple(int i) const { return tuples_[static_cast<size_t>(i)]; }
  const LieMatrix& component(int i) const { return comp_[static_cast<size_t>(i)]; }
  LieMatrix& component(int i) { return comp_[static_cast<size_t>(i)]; }

  // Evaluation on an arbitrary index tuple (antisymmetrized, repeated
  // indices give zero).
  LieMatrix eval(const std::vector<int>& idx) const;
  // Assignment/accumulation on a strictly increasing tuple.
  void set(const std::vector<int>& idx, const LieMatrix& v);
  void add(const std::vector<int>& idx, const LieMatrix& v);

  bool is_zero() const;
  Cochain operator-() const;
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  Cochain scaled(const Rational& c) const;
  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

 private:
  int rank_of(const std::vector<int>& idx) const;
  int nargs_ = 0;
  int degree_ = 0;
  int matdim_ = 0;
  std::vector<std::vector<int>> tuples_;
  std::vector<LieMatrix> comp_;
};

// Cochains za (x) value and (za ^ zb) (x) value in the function
// representation above; nargs selects the side the arguments live on.
Cochain decomposable1(const KostantModel& m, const LieMatrix& za, const LieMatrix& value,
                      int nargs);
Cochain decomposable2(const KostantModel& m, const LieMatrix& za, const LieMatrix& zb,
                      const LieMatrix& value, int nargs);

// Kostant codifferential on degree >= 1 cochains (throws on degree 0).  The
// leading term brackets components against the dual directions with a
// factor equal to the degree; the argument-lowering term (returned alone by
// kostant_del_star_lowering) re-inserts brackets of duals with coset
// representatives and vanishes identically here because the gradings have
// depth one.
Cochain kostant_del_star(const KostantModel& m, const Cochain& phi);
Cochain kostant_del_star_lowering(const KostantModel& m, const Cochain& phi);
// Chevalley-Eilenberg differential of the abelian negative-grade part,
// using the pure grade -1 representatives of the inserted directions.
Cochain kostant_del(const KostantModel& m, const Cochain& phi);
// del del* + del* del (only del* del on degree 0).
Cochain kostant_laplacian(const KostantModel& m, const Cochain& phi);

// Extends an sl-side cochain (n arguments) by zero on the vertical
// directions, giving an ambient-side cochain (2n arguments).
Cochain extend_cochain(const KostantModel& m, const Cochain& phi);

// Adjoint action of a filtration-compatible algebra element on an
// ambient-side cochain: brackets the values and subtracts the action on
// arguments through coset_coords.
Cochain cochain_action(const KostantModel& m, const LieMatrix& a, const Cochain& phi);

// Alternation of a horizontal 1-cochain with values in lambda2Fbar: maps
// each horizontal dual through nu_of and wedges with the 2-vector of the
// value; coordinates are returned over f_a ^ f_b ^ f_c, 2 <= a < b < c <= N,
// lexicographically.  Throws if a horizontal value is not in lambda2Fbar or
// a vertical component is nonzero.
QVec alternation(const KostantModel& m, const Cochain& phi);

// One normalization step: extends a degree-2 sl-side curvature cochain,
// applies the codifferential, checks that the obstruction lies in the
// expected component (horizontal support, lambda2Fbar values, kernel of the
// alternation) and returns it together with the correction -1/2 of it.
// Throws std::domain_error if the component membership fails.
struct NormalizeStep {
  Cochain extended;
  Cochain del_star;
  Cochain correction;
};
NormalizeStep normalize_step(const KostantModel& m, const Cochain& kappa);

}  // namespace pwlab
