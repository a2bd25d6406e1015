#include <gtest/gtest.h>

#include "antiflex/fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace antiflex;
using Q = Rational;
namespace fx = fixtures;

namespace {

Matrix<Q> identity(Index n) { return Matrix<Q>::Identity(n, n); }

// Both pre-anti-flexible identities expanded with explicit products.
bool pre_anti_flexible_oracle(const PreAlgebra<Q>& p) {
  const Index n = p.dim();
  const Tensor3<Q> sum = p.prec + p.succ;
  const auto pr = [&](const Vector<Q>& x, const Vector<Q>& y) { return oracle::mul(p.prec, x, y); };
  const auto su = [&](const Vector<Q>& x, const Vector<Q>& y) { return oracle::mul(p.succ, x, y); };
  const auto st = [&](const Vector<Q>& x, const Vector<Q>& y) { return oracle::mul(sum, x, y); };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Vector<Q> x = oracle::e(n, i), y = oracle::e(n, j), z = oracle::e(n, k);
        const Vector<Q> mid_xyz = pr(su(x, y), z) - su(x, pr(y, z));
        const Vector<Q> mid_zyx = pr(su(z, y), x) - su(z, pr(y, x));
        const Vector<Q> left_xyz = su(st(x, y), z) - su(x, su(y, z));
        const Vector<Q> right_zyx = pr(pr(z, y), x) - pr(z, st(y, x));
        if (mid_xyz != mid_zyx || left_xyz != right_zyx) return false;
      }
  return true;
}

bool rota_baxter_oracle(const Algebra<Q>& a, const Matrix<Q>& rb) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<Q> x = oracle::e(n, i), y = oracle::e(n, j);
      const Vector<Q> lhs = oracle::mul(a.constants(), rb * x, rb * y);
      const Vector<Q> rhs = rb * Vector<Q>(oracle::mul(a.constants(), rb * x, y) + oracle::mul(a.constants(), x, rb * y));
      if (lhs != rhs) return false;
    }
  return true;
}

PreAlgebra<Q> random_pre(gen::Rng& rng, Index n) {
  PreAlgebra<Q> p(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        if (rng.coin(0.4)) p.prec(i, j, k) = rng.entry();
        if (rng.coin(0.4)) p.succ(i, j, k) = rng.entry();
      }
  return p;
}

}  // namespace

TEST(OOperator, FixtureVerdicts) {
  const Bimodule<Q> d1 = pre_bimodule(fx::d1());
  EXPECT_TRUE(check_o_operator(identity(1), d1).passed());
  EXPECT_TRUE(check_o_operator(Matrix<Q>(Matrix<Q>::Zero(2, 3)), zero_bimodule(fx::af2(), 3)).passed());
  const auto bad = check_o_operator(identity(2), regular_bimodule(fx::af2()));
  ASSERT_FALSE(bad.passed());
  EXPECT_EQ(bad.witnesses().front().indices, (std::vector<Index>{0, 0}));
  Vector<Q> expect(2);
  expect << Q(-1), Q(0);
  EXPECT_EQ(std::get<Vector<Q>>(bad.witnesses().front().residual), expect);
}

TEST(OOperator, Preconditions) {
  const Bimodule<Q> bad(fx::a1(), 1, {Matrix<Q>(identity(1))}, {Matrix<Q>(2 * identity(1))});
  EXPECT_THROW(check_o_operator(identity(1), bad), PreconditionError);
  EXPECT_THROW(check_o_operator(identity(2), fx::b1()), InputError);
  EXPECT_THROW(check_rota_baxter(fx::af2(), identity(3)), InputError);
}

TEST(OOperator, RotaBaxterMatchesOracle) {
  gen::Rng rng(51);
  int pass = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng, 2);
    Matrix<Q> rb = gen::matrix(rng, a.dim(), a.dim());
    if (trial % 3 == 0) rb.setZero();
    if (trial % 3 == 1) rb.col(0).setZero();
    const bool ok = check_rota_baxter(a, rb, 1).passed();
    pass += ok;
    EXPECT_EQ(ok, rota_baxter_oracle(a, rb)) << trial;
  }
  EXPECT_GE(pass, 27);
}

TEST(OOperator, SolutionFromOperator) {
  const auto [w, r] = solution_from_o_operator(identity(1), pre_bimodule(fx::d1()));
  EXPECT_EQ(w, fx::w2());
  EXPECT_EQ(r, fx::r_star());
  EXPECT_TRUE(is_skew_symmetric(r));
  EXPECT_THROW(solution_from_o_operator(identity(2), fx::b1()), InputError);
}

TEST(OOperator, SolutionSolvesExactlyForOOperators) {
  gen::Rng rng(52);
  int operators = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng, 2);
    const Bimodule<Q> bm = gen::passing_bimodule(rng, a, 2);
    Matrix<Q> t = gen::matrix(rng, a.dim(), bm.mdim());
    if (trial % 4 == 0) t.setZero();
    if (trial % 4 == 1 && bm == regular_bimodule(a)) t = identity(a.dim());
    const bool o = check_o_operator(t, bm, 1).passed();
    operators += o;
    const auto [w, r] = solution_from_o_operator(t, bm);
    EXPECT_EQ(o, check_afybe(w, r, 1).passed()) << trial;
    EXPECT_TRUE(is_anti_flexible(w)) << trial;
  }
  EXPECT_GE(operators, 20);
}

TEST(PreAlgebra, FixtureVerdicts) {
  const auto d1 = check_pre_anti_flexible(fx::d1());
  EXPECT_TRUE(d1.identities.passed());
  EXPECT_TRUE(d1.dendriform.passed());
  EXPECT_TRUE(check_pre_anti_flexible(PreAlgebra<Q>(3)).identities.passed());
  EXPECT_TRUE(check_pre_anti_flexible(fx::p1()).identities.passed());
  EXPECT_EQ(associated_algebra(fx::p1()), fx::w2());
  const PreAlgebra<Q> af2_left(Tensor3<Q>(2, 2, 2), fx::af2().constants());
  EXPECT_FALSE(check_pre_anti_flexible(af2_left).identities.passed());
  EXPECT_FALSE(pre_anti_flexible_oracle(af2_left));
  EXPECT_THROW(PreAlgebra<Q>(Tensor3<Q>(2, 2, 2), Tensor3<Q>(1, 1, 1)), InputError);
}

TEST(PreAlgebra, VerdictMatchesOracle) {
  gen::Rng rng(53);
  int pass = 0;
  for (int trial = 0; trial < 120; ++trial) {
    PreAlgebra<Q> p = trial % 2 ? random_pre(rng, rng.uniform(1, 2)) : rng.pick(gen::pre_seeds());
    if (trial % 4 == 2) {
      const Index n = p.dim();
      auto& table = rng.coin() ? p.prec : p.succ;
      table(rng.uniform(0, static_cast<int>(n) - 1), rng.uniform(0, static_cast<int>(n) - 1),
            rng.uniform(0, static_cast<int>(n) - 1)) += rng.nonzero_entry();
    }
    const bool ok = check_pre_anti_flexible(p, 1).identities.passed();
    pass += ok;
    EXPECT_EQ(ok, pre_anti_flexible_oracle(p)) << trial;
    if (ok) {
      EXPECT_TRUE(is_anti_flexible(associated_algebra(p))) << trial;
      EXPECT_TRUE(check_bimodule(pre_bimodule(p)).passed()) << trial;
    }
  }
  EXPECT_GE(pass, 30);
}

TEST(PreAlgebra, PreBimoduleOfD1) {
  const Bimodule<Q> bm = pre_bimodule(fx::d1());
  EXPECT_EQ(bm.base(), fx::a1());
  EXPECT_EQ(bm.left(0), identity(1));
  EXPECT_TRUE(is_zero(bm.right(0)));
  const PreAlgebra<Q> broken(Tensor3<Q>(2, 2, 2), fx::af2().constants());
  EXPECT_THROW(pre_bimodule(broken), PreconditionError);
}

TEST(PreAlgebra, OperatorRoundTrips) {
  for (const auto& p : gen::pre_seeds()) {
    const Bimodule<Q> bm = pre_bimodule(p);
    EXPECT_EQ(pre_from_o_operator(identity(p.dim()), bm), p);
    EXPECT_EQ(pre_from_invertible_o(associated_algebra(p), identity(p.dim()), bm), p);
    EXPECT_EQ(image_pre_structure(identity(p.dim()), p), std::optional<PreAlgebra<Q>>(p));
  }
  EXPECT_EQ(image_pre_structure(Matrix<Q>(Matrix<Q>::Zero(2, 2)), fx::p1()), std::nullopt);
  EXPECT_THROW(pre_from_o_operator(identity(2), regular_bimodule(fx::af2())), PreconditionError);
  const Bimodule<Q> d1 = pre_bimodule(fx::d1());
  EXPECT_THROW(pre_from_invertible_o(fx::a1(), Matrix<Q>(Matrix<Q>::Zero(1, 1)), d1), InputError);
  EXPECT_THROW(pre_from_invertible_o(fx::af2(), identity(2), regular_bimodule(fx::af2())), PreconditionError);
}

TEST(PreAlgebra, FromOmega) {
  const auto omega = omega_correspondence(fx::w2(), fx::r_star()).first;
  const PreAlgebra<Q> p = pre_from_omega(fx::w2(), omega);
  EXPECT_EQ(p, fx::p1());
  EXPECT_EQ(p.succ(0, 0, 0), Q(1));
  EXPECT_EQ(p.succ(0, 1, 1), Q(1));
  EXPECT_EQ(p.prec(0, 1, 1), Q(-1));
  EXPECT_EQ(p.prec(1, 0, 1), Q(1));
  EXPECT_EQ(associated_algebra(p), fx::w2());
  const Matrix<Q> skew = fx::af2_r();
  EXPECT_THROW(pre_from_omega(fx::af2(), BilinearForm<Q>(skew)), PreconditionError);
  EXPECT_THROW(pre_from_omega(fx::w2(), BilinearForm<Q>(identity(2))), PreconditionError);
  EXPECT_THROW(pre_from_omega(fx::w2(), BilinearForm<Q>(Matrix<Q>(Matrix<Q>::Zero(2, 2)))), PreconditionError);
  EXPECT_THROW(pre_from_omega(fx::w2(), BilinearForm<Q>(identity(3))), InputError);
}

TEST(PreAlgebra, CanonicalSolution) {
  const auto [w, r] = canonical_solution(fx::d1());
  EXPECT_EQ(w, fx::w2());
  EXPECT_EQ(r, fx::r_star());
  const auto [w4, r4] = canonical_solution(fx::p1());
  EXPECT_EQ(w4.dim(), 4);
  EXPECT_TRUE(check_afybe(w4, r4).passed());
  EXPECT_TRUE(check_bialgebra(w4, coboundary_delta(w4, r4)).passed());
  const auto [z, rz] = canonical_solution(PreAlgebra<Q>(2));
  EXPECT_EQ(z, Algebra<Q>(4));
  EXPECT_EQ(rz, canonical_tensor<Q>(2));
  EXPECT_THROW(canonical_solution(PreAlgebra<Q>(Tensor3<Q>(2, 2, 2), fx::af2().constants())),
               PreconditionError);
}

TEST(PreAlgebra, DimensionZero) {
  const PreAlgebra<Q> p(0);
  EXPECT_TRUE(check_pre_anti_flexible(p).identities.passed());
  EXPECT_EQ(associated_algebra(p).dim(), 0);
  EXPECT_EQ(canonical_solution(p).first.dim(), 0);
}
