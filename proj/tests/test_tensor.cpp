#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pwlab/connection.hpp"
#include "pwlab/tensor.hpp"
#include "support/random_geom.hpp"

using namespace pwlab;
using testsupport::random_connection;
using testsupport::random_tensor;

namespace {

RatFunc rf(const MultiPoly& p) { return RatFunc(p); }

}  // namespace

TEST_CASE("identity endomorphism: trace and parallelism") {
  Chart ch = Chart::base(3);
  TensorField d = TensorField::delta(ch);
  TensorField tr = contract(d, 0, 1);
  CHECK(tr.rank() == 0);
  CHECK((tr.at(std::vector<int>{}) - RatFunc::constant(3, Rational(3))).is_zero());

  std::mt19937_64 rng(11u);
  Connection conn = random_connection(rng, ch);
  CHECK(covariant_derivative(d, conn).is_zero());
}

TEST_CASE("flat connection: covariant derivative is the coordinate derivative") {
  Chart ch = Chart::base(2);
  Connection flat = Connection::flat(ch);
  std::mt19937_64 rng(12u);
  TensorField t = random_tensor(rng, ch, {Idx::Up, Idx::Down});
  TensorField dcov = covariant_derivative(t, flat);
  TensorField dpar = partial_derivative(t);
  CHECK((dcov - dpar).is_zero());
  CHECK(riemann(flat).is_zero());
}

TEST_CASE("curvature convention matches the derivative commutator exactly") {
  Chart ch = Chart::base(2);
  std::mt19937_64 rng(13u);
  for (int trial = 0; trial < 3; ++trial) {
    Connection conn = random_connection(rng, ch);
    TensorField riem = riemann(conn);

    TensorField xi = random_tensor(rng, ch, {Idx::Up});
    TensorField ddxi = covariant_derivative(covariant_derivative(xi, conn), conn);
    TensorField comm = ddxi - transpose(ddxi, {1, 0, 2});
    TensorField rhs = contract(tensor_product(riem, xi), 3, 4);
    CHECK((comm - rhs).is_zero());

    // One-forms pick up the opposite sign through the pairing.
    TensorField om = random_tensor(rng, ch, {Idx::Down});
    TensorField ddom = covariant_derivative(covariant_derivative(om, conn), conn);
    TensorField comm1 = ddom - transpose(ddom, {1, 0, 2});
    TensorField rhs1 = -contract(tensor_product(riem, om), 2, 4);
    CHECK((comm1 - rhs1).is_zero());
  }
}

TEST_CASE("first Bianchi symmetry for torsion-free curvature") {
  Chart ch = Chart::base(2);
  std::mt19937_64 rng(14u);
  Connection conn = random_connection(rng, ch);
  TensorField riem = riemann(conn);
  CHECK(antisymmetrize(riem, {0, 1, 3}).is_zero());
  // Antisymmetry in the first pair.
  CHECK((riem + transpose(riem, {1, 0, 2, 3})).is_zero());
}

TEST_CASE("symmetrizers are projectors and annihilate each other") {
  Chart ch = Chart::base(2);
  std::mt19937_64 rng(15u);
  TensorField t = random_tensor(rng, ch, {Idx::Down, Idx::Down});
  TensorField s = symmetrize(t, {0, 1});
  TensorField a = antisymmetrize(t, {0, 1});
  CHECK((s + a - t).is_zero());
  CHECK((symmetrize(s, {0, 1}) - s).is_zero());
  CHECK((antisymmetrize(a, {0, 1}) - a).is_zero());
  CHECK(antisymmetrize(s, {0, 1}).is_zero());
  CHECK(symmetrize(a, {0, 1}).is_zero());
  // Explicit normalization: sym(t)_ab = (t_ab + t_ba)/2.
  TensorField half_sum = (t + transpose(t, {1, 0})).scaled(Rational(1, 2));
  CHECK((s - half_sum).is_zero());
}

TEST_CASE("metric inverse, raising and lowering") {
  Chart ch = Chart::base(2);
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly one = MultiPoly::constant(2, Rational(1));

  TensorField g(ch, {Idx::Down, Idx::Down}, 2);
  g.at({0, 0}) = rf(one);
  g.at({0, 1}) = rf(x);
  g.at({1, 0}) = rf(x);
  g.at({1, 1}) = rf(one + x * x + y * y);

  TensorField ginv = metric_inverse(g);
  CHECK(ginv.weight2() == -2);
  TensorField prod = contract(tensor_product(ginv, g), 1, 2);
  CHECK((prod - TensorField::delta(ch)).is_zero());

  std::mt19937_64 rng(16u);
  TensorField v = random_tensor(rng, ch, {Idx::Up});
  TensorField back = raise_index(lower_index(v, 0, g), 0, ginv);
  CHECK((back - v).is_zero());
  CHECK(lower_index(v, 0, g).weight2() == 2);
  CHECK(back.weight2() == 0);
}

TEST_CASE("split-block metric inverse takes the closed form") {
  // dim 4 chart, coordinates x1,x2 then p1,p2; metric [[A, I], [I, 0]].
  Chart ch = Chart::cotangent(2);
  const int nv = 4;
  MultiPoly x1 = MultiPoly::variable(nv, 0), x2 = MultiPoly::variable(nv, 1);
  TensorField g(ch, {Idx::Down, Idx::Down}, 2);
  g.at({0, 0}) = rf(x1);
  g.at({0, 1}) = rf(x2);
  g.at({1, 0}) = rf(x2);
  g.at({0, 2}) = RatFunc::constant(nv, Rational(1));
  g.at({2, 0}) = RatFunc::constant(nv, Rational(1));
  g.at({1, 3}) = RatFunc::constant(nv, Rational(1));
  g.at({3, 1}) = RatFunc::constant(nv, Rational(1));

  TensorField ginv = metric_inverse(g);
  // Expected block form [[0, I], [I, -A]].
  CHECK(ginv.at({0, 0}).is_zero());
  CHECK((ginv.at({0, 2}) - RatFunc::constant(nv, Rational(1))).is_zero());
  CHECK((ginv.at({2, 2}) + rf(x1)).is_zero());
  CHECK((ginv.at({2, 3}) + rf(x2)).is_zero());
  TensorField prod = contract(tensor_product(ginv, g), 1, 2);
  CHECK((prod - TensorField::delta(ch)).is_zero());
}

TEST_CASE("Levi-Civita connection: closed-form symbols and metricity") {
  Chart ch = Chart::base(2);
  const int nv = 2;
  MultiPoly x = MultiPoly::variable(nv, 0);
  MultiPoly one = MultiPoly::constant(nv, Rational(1));

  SUBCASE("warped plane metric dx^2 + x^2 dy^2") {
    TensorField g(ch, {Idx::Down, Idx::Down});
    g.at({0, 0}) = rf(one);
    g.at({1, 1}) = rf(x * x);
    Connection lc = levi_civita(g);
    CHECK((lc.at(0, 1, 1) + rf(x)).is_zero());
    CHECK((lc.at(1, 0, 1) - RatFunc(one, x)).is_zero());
    CHECK((lc.at(1, 1, 0) - RatFunc(one, x)).is_zero());
    CHECK(lc.at(0, 0, 0).is_zero());
    CHECK(covariant_derivative(g, lc).is_zero());
    // Constant-curvature check: this metric is flat.
    CHECK(riemann(lc).is_zero());
  }

  SUBCASE("generic polynomial metric: metricity and Ricci symmetry") {
    MultiPoly y = MultiPoly::variable(nv, 1);
    TensorField g(ch, {Idx::Down, Idx::Down});
    g.at({0, 0}) = rf(one);
    g.at({0, 1}) = rf(x);
    g.at({1, 0}) = rf(x);
    g.at({1, 1}) = rf(one + x * x + y * y);
    Connection lc = levi_civita(g);
    CHECK(covariant_derivative(g, lc).is_zero());
    TensorField ric = ricci(lc);
    CHECK((ric - transpose(ric, {1, 0})).is_zero());
  }
}

TEST_CASE("connection trace is the contracted symbol") {
  Chart ch = Chart::base(2);
  std::mt19937_64 rng(17u);
  Connection conn = random_connection(rng, ch);
  TensorField tr = conn.trace();
  for (int b = 0; b < 2; ++b) {
    RatFunc s = RatFunc::zero(2);
    for (int p = 0; p < 2; ++p) s += conn.at(p, p, b);
    CHECK((tr.at({b}) - s).is_zero());
  }
}

TEST_CASE("tensor product weight bookkeeping") {
  Chart ch = Chart::base(2);
  TensorField a = TensorField::scalar(ch, RatFunc::constant(2, Rational(3)), 2);
  TensorField b = TensorField::scalar(ch, RatFunc::constant(2, Rational(5)), -4);
  TensorField p = tensor_product(a, b);
  CHECK(p.weight2() == -2);
  CHECK((p.at(std::vector<int>{}) - RatFunc::constant(2, Rational(15))).is_zero());
}
