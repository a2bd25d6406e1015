#include <gtest/gtest.h>

#include "antiflex/fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace antiflex;
using Q = Rational;
namespace fx = fixtures;

namespace {

Tensor2<Q> pure(Index n, Index i, Index j, Q c = 1) {
  Tensor2<Q> t = Tensor2<Q>::Zero(n, n);
  t(i, j) = c;
  return t;
}

// Σ r(i,j) e_i ⊗ x·e_j + Σ r(i,j) e_j·x ⊗ e_i, expanded term by term.
Comultiplication<Q> coboundary_oracle(const Algebra<Q>& a, const Tensor2<Q>& r) {
  const Index n = a.dim();
  std::vector<Tensor2<Q>> out;
  for (Index x = 0; x < n; ++x) {
    Tensor2<Q> t = Tensor2<Q>::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Vector<Q> xej = oracle::mul(a.constants(), oracle::e(n, x), oracle::e(n, j));
        const Vector<Q> ejx = oracle::mul(a.constants(), oracle::e(n, j), oracle::e(n, x));
        for (Index p = 0; p < n; ++p) {
          t(i, p) += r(i, j) * xej(p);
          t(p, i) += r(i, j) * ejx(p);
        }
      }
    out.push_back(t);
  }
  return Comultiplication<Q>(out);
}

const std::vector<std::pair<RProduct, std::string>>& product_names() {
  static const std::vector<std::pair<RProduct, std::string>> names{
      {RProduct::R12R13, "r12r13"}, {RProduct::R23R12, "r23r12"}, {RProduct::R13R23, "r13r23"},
      {RProduct::R21R13, "r21r13"}, {RProduct::R31R21, "r31r21"}, {RProduct::R21R32, "r21r32"},
      {RProduct::R23R31, "r23r31"}, {RProduct::R13R21, "r13r21"}, {RProduct::R12R23, "r12r23"},
      {RProduct::R23R13, "r23r13"}, {RProduct::R21R31, "r21r31"}, {RProduct::R31R23, "r31r23"},
      {RProduct::R32R21, "r32r21"}};
  return names;
}

}  // namespace

TEST(Comultiplication, FixtureValues) {
  const Comultiplication<Q> d = fx::delta1();
  EXPECT_EQ(d(0), pure(2, 0, 1, -1));
  EXPECT_EQ(d(1), pure(2, 1, 1, -1));
  Algebra<Q> dual(2);
  dual(0, 1, 0) = -1;
  dual(1, 1, 1) = -1;
  EXPECT_EQ(dual_product(d), dual);
  EXPECT_EQ(comultiplication_from_product(dual_product(d)), d);
  EXPECT_EQ(dual_product(comultiplication_from_product(fx::af2())), fx::af2());
  EXPECT_EQ(flipped(flipped(d)), d);
  EXPECT_EQ(flipped(d)(0), pure(2, 1, 0, -1));
}

TEST(Comultiplication, ShapeValidation) {
  EXPECT_THROW(Comultiplication<Q>(std::vector<Tensor2<Q>>{Tensor2<Q>::Zero(2, 2)}), InputError);
  EXPECT_THROW(check_bialgebra(fx::w2(), Comultiplication<Q>(3)), InputError);
  EXPECT_THROW(fx::delta1().apply(oracle::e(3, 0)), InputError);
}

TEST(Comultiplication, EDeltaVanishesForAnAntiFlexibleDual) {
  // Δ(u) = u⊗u, Δ(v) = v⊗u: the dual product u*u* = u*, v*u* = v*
  const Comultiplication<Q> d(std::vector<Tensor2<Q>>{pure(2, 0, 0), pure(2, 1, 0)});
  for (const auto& t : e_delta_residual(d)) EXPECT_TRUE(t.is_zero());
  const auto rep = check_bialgebra(fx::w2(), d, 1000);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.has_relation("co-anti-flexible"));
  EXPECT_FALSE(rep.has_relation("anti-flexible"));
}

TEST(Comultiplication, EDeltaMatchesOracle) {
  gen::Rng rng(41);
  int zero = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Index n = rng.uniform(1, 3);
    const Comultiplication<Q> d = trial % 2 ? gen::random_delta(rng, n)
                                            : comultiplication_from_product(gen::anti_flexible(rng, n));
    bool all_zero = true;
    for (const auto& t : e_delta_residual(d)) all_zero = all_zero && t.is_zero();
    zero += all_zero;
    EXPECT_EQ(all_zero, oracle::dual_anti_flexible(d)) << trial;
    EXPECT_EQ(all_zero, is_anti_flexible(dual_product(d))) << trial;
  }
  EXPECT_GE(zero, 40);
}

TEST(Bialgebra, FixtureAndZero) {
  EXPECT_TRUE(check_bialgebra(fx::w2(), fx::delta1()).passed());
  for (const auto& a : gen::anti_flexible_seeds())
    EXPECT_TRUE(check_bialgebra(a, Comultiplication<Q>(a.dim())).passed());
  Comultiplication<Q> broken = fx::delta1();
  broken(0)(0, 1) = 1;
  EXPECT_FALSE(check_bialgebra(fx::w2(), broken).passed());
}

TEST(Bialgebra, DualIsAnInvolution) {
  const auto [astar, gamma] = dual_bialgebra(fx::w2(), fx::delta1());
  EXPECT_EQ(astar, fx::w2_dual());
  const auto [back, delta] = dual_bialgebra(astar, gamma);
  EXPECT_EQ(back, fx::w2());
  EXPECT_EQ(delta, fx::delta1());
  const Comultiplication<Q> uu(std::vector<Tensor2<Q>>{pure(2, 0, 0), pure(2, 1, 0)});
  EXPECT_THROW(dual_bialgebra(fx::w2(), uu), PreconditionError);
}

TEST(Bialgebra, InducedLieBialgebra) {
  EXPECT_TRUE(induced_lie_bialgebra(fx::w2(), fx::delta1()).passed());
  gen::Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const gen::Bialgebra b = gen::pipeline_bialgebra(rng);
    ASSERT_TRUE(check_bialgebra(b.a, b.delta).passed()) << trial;
    EXPECT_TRUE(induced_lie_bialgebra(b.a, b.delta).passed()) << trial;
  }
  const Comultiplication<Q> uu(std::vector<Tensor2<Q>>{pure(2, 0, 0), pure(2, 1, 0)});
  EXPECT_THROW(induced_lie_bialgebra(fx::w2(), uu), PreconditionError);
}

TEST(Bialgebra, SymmetricComultiplicationHasZeroCobracket) {
  gen::Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    Comultiplication<Q> d = gen::random_delta(rng, 3);
    for (Index k = 0; k < 3; ++k) d(k) = Tensor2<Q>(d(k) + d(k).transpose());
    const Comultiplication<Q> cob = lie_cobracket(d);
    for (const auto& t : cob.values()) EXPECT_TRUE(is_zero(t));
  }
  EXPECT_EQ(lie_cobracket(fx::delta1())(0), Tensor2<Q>(pure(2, 0, 1, -1) + pure(2, 1, 0, 1)));
}

TEST(Coboundary, MatchesOracleAndAf2Values) {
  std::vector<Tensor2<Q>> expect{Tensor2<Q>(pure(2, 0, 1, Q(1) / 5) + pure(2, 1, 0, Q(-2) / 5)),
                                 pure(2, 1, 1, Q(-9) / 5)};
  EXPECT_EQ(coboundary_delta(fx::af2(), fx::af2_r()), Comultiplication<Q>(expect));
  EXPECT_EQ(coboundary_oracle(fx::af2(), fx::af2_r()), Comultiplication<Q>(expect));
  gen::Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra<Q> a = trial % 3 ? gen::anti_flexible(rng) : gen::random_table(rng, 2);
    const Tensor2<Q> r = gen::matrix(rng, a.dim(), a.dim());
    const Comultiplication<Q> d = coboundary_delta(a, r);
    EXPECT_EQ(d, coboundary_oracle(a, r)) << trial;
    EXPECT_EQ(sigma_coboundary_delta(a, r), flipped(d)) << trial;
  }
}

TEST(YangBaxter, RProductsMatchPlacement) {
  gen::Rng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra<Q> a = trial % 2 ? gen::anti_flexible(rng) : gen::random_table(rng, rng.uniform(1, 3));
    const Tensor2<Q> r = gen::matrix(rng, a.dim(), a.dim());
    for (const auto& [which, name] : product_names())
      EXPECT_EQ(r_product(a, r, which), oracle::placed_product(a, r, name)) << name << " trial " << trial;
    EXPECT_EQ(afybe_residual(a, r), oracle::afybe(a, r)) << trial;
  }
  EXPECT_THROW(r_product(fx::w2(), Tensor2<Q>(Tensor2<Q>::Zero(3, 3)), RProduct::R12R13), InputError);
}

TEST(YangBaxter, FixtureSolutions) {
  EXPECT_TRUE(check_afybe(fx::w2(), fx::r_star()).passed());
  const auto af2 = check_afybe(fx::af2(), fx::af2_r());
  ASSERT_FALSE(af2.passed());
  EXPECT_EQ(af2.witnesses().front().relation, "afybe");
  gen::Rng rng(1);
  EXPECT_TRUE(check_afybe(fx::z2(), gen::matrix(rng, 2, 2)).passed());
  const MNPQ<Q> zero = mnpq(fx::af2(), Tensor2<Q>(Tensor2<Q>::Zero(2, 2)));
  for (const auto* t : {&zero.m, &zero.n, &zero.p, &zero.q}) EXPECT_TRUE(t->is_zero());
}

TEST(YangBaxter, SkewSolutionsGiveCoboundaryBialgebras) {
  gen::Rng rng(47);
  int solutions = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng);
    const Tensor2<Q> r = gen::skew(rng, a.dim());
    const bool solves = check_afybe(a, r, 1).passed();
    solutions += solves;
    EXPECT_EQ(solves, operator_form_residual(a, r, 1).passed()) << trial;
    if (solves) EXPECT_TRUE(check_bialgebra(a, coboundary_delta(a, r)).passed()) << trial;
  }
  EXPECT_GE(solutions, 10);
}

TEST(YangBaxter, CocommutatorConditionsMatchBialgebraVerdict) {
  gen::Rng rng(48);
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng);
    Tensor2<Q> r = gen::skew(rng, a.dim());
    if (trial % 2) r += gen::matrix(rng, a.dim(), a.dim());
    EXPECT_EQ(check_cocommutator_conditions(a, r, 1).passed(), check_bialgebra(a, coboundary_delta(a, r), 1).passed())
        << trial;
  }
}

TEST(YangBaxter, Preconditions) {
  EXPECT_THROW(operator_form_residual(fx::w2(), pure(2, 0, 1)), PreconditionError);
  EXPECT_THROW(omega_correspondence(fx::w2(), pure(2, 0, 1)), PreconditionError);
  EXPECT_THROW(omega_correspondence(fx::w2(), Tensor2<Q>(Tensor2<Q>::Zero(2, 2))), PreconditionError);
  EXPECT_THROW(check_cocommutator_conditions(fx::w2(), Tensor2<Q>(Tensor2<Q>::Zero(3, 3))), InputError);
}

TEST(YangBaxter, CyclicForm) {
  const auto [omega, rep] = omega_correspondence(fx::w2(), fx::r_star());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(omega.matrix(), Matrix<Q>(inverse(fx::r_star())));
  EXPECT_TRUE(check_cyclic_form(fx::w2(), omega).passed());
  const auto id = check_cyclic_form(fx::w2(), BilinearForm<Q>(Matrix<Q>(Matrix<Q>::Identity(2, 2))));
  ASSERT_FALSE(id.passed());
  EXPECT_EQ(id.witnesses().front().indices, (std::vector<Index>{0, 0, 0}));
  gen::Rng rng(49);
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng);
    const Tensor2<Q> r = gen::skew(rng, a.dim());
    if (!is_invertible(r)) continue;
    EXPECT_EQ(omega_correspondence(a, r, 1).second.passed(), check_afybe(a, r, 1).passed()) << trial;
  }
}
