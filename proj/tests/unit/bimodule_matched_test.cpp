#include <gtest/gtest.h>

#include "antiflex/fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace antiflex;
using Q = Rational;
namespace fx = fixtures;

namespace {

Matrix<Q> scalar(Q q) {
  Matrix<Q> m(1, 1);
  m(0, 0) = q;
  return m;
}

Bimodule<Q> scalar_bimodule(Q l, Q r) { return Bimodule<Q>(fx::a1(), 1, {scalar(l)}, {scalar(r)}); }

Matrix<Q> diag2(Q a, Q b) {
  Matrix<Q> m = Matrix<Q>::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Bimodule, ScalarExamples) {
  EXPECT_TRUE(check_bimodule(fx::b1()).passed());
  const auto bad = check_bimodule(scalar_bimodule(1, 2));
  ASSERT_FALSE(bad.passed());
  EXPECT_EQ(bad.witnesses().front().relation, "bimodule-1");
  EXPECT_EQ(std::get<Matrix<Q>>(bad.witnesses().front().residual), scalar(-2));
  for (const auto& a : gen::anti_flexible_seeds()) EXPECT_TRUE(check_bimodule(zero_bimodule(a, 2)).passed());
}

TEST(Bimodule, RegularMatrices) {
  const Bimodule<Q> a1 = regular_bimodule(fx::a1());
  EXPECT_EQ(a1.left(0), scalar(1));
  EXPECT_EQ(a1.right(0), scalar(1));
  const Bimodule<Q> af2 = regular_bimodule(fx::af2());
  EXPECT_EQ(af2.left(0), diag2(1, Q(6) / 5));
  EXPECT_EQ(af2.right(0), diag2(1, Q(3) / 5));
  for (Index i = 0; i < 2; ++i) EXPECT_TRUE(is_zero(regular_bimodule(fx::z2()).left(i)));
}

TEST(Bimodule, DualSwapsAndTransposes) {
  const Bimodule<Q> d = dual_bimodule(fx::b1());
  EXPECT_EQ(d.left(0), scalar(Q(3) / 5));
  EXPECT_EQ(d.right(0), scalar(Q(6) / 5));
  EXPECT_TRUE(check_bimodule(d).passed());
  EXPECT_EQ(dual_bimodule(d), fx::b1());
  const Bimodule<Q> reg = regular_bimodule(fx::af2());
  const Bimodule<Q> coreg = dual_bimodule(reg);
  EXPECT_EQ(coreg.left(1), fx::af2().right(1).transpose());
  EXPECT_EQ(coreg.right(1), fx::af2().left(1).transpose());
  EXPECT_THROW(dual_bimodule(scalar_bimodule(1, 2)), PreconditionError);
}

TEST(Bimodule, SemidirectProducts) {
  Algebra<Q> af2(2);
  af2(0, 0, 0) = 1;
  af2(0, 1, 1) = Q(6) / 5;
  af2(1, 0, 1) = Q(3) / 5;
  EXPECT_EQ(semidirect_product(fx::a1(), fx::b1()), af2);
  EXPECT_EQ(semidirect_product(fx::a1(), fx::b1()).basis_names(), (std::vector<std::string>{"e", "f1"}));
  EXPECT_EQ(semidirect_product(fx::af2(), zero_bimodule(fx::af2(), 1)), gen::direct_sum(fx::af2(), Algebra<Q>(1)));
  EXPECT_FALSE(is_anti_flexible(semidirect_product(fx::a1(), scalar_bimodule(1, 2))));
  EXPECT_THROW(semidirect_product(fx::af2(), fx::b1()), InputError);
}

TEST(Bimodule, VerdictMatchesOracleAndSemidirect) {
  gen::Rng rng(12);
  int pass = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng, 2);
    const Bimodule<Q> bm = trial % 2 ? gen::passing_bimodule(rng, a, 2) : gen::perturb(rng, gen::passing_bimodule(rng, a, 2));
    const bool ok = check_bimodule(bm, 1).passed();
    pass += ok;
    EXPECT_EQ(ok, oracle::bimodule(bm)) << trial;
    EXPECT_EQ(ok, is_anti_flexible(semidirect_product(a, bm))) << trial;
  }
  EXPECT_GE(pass, 30);
}

TEST(Bimodule, LieRepresentation) {
  EXPECT_TRUE(check_lie_representation(fx::b1()).passed());
  EXPECT_TRUE(check_lie_representation(regular_bimodule(fx::af2())).passed());
  // necessary but not sufficient: the failing scalar module still passes in dimension 1
  EXPECT_TRUE(check_lie_representation(scalar_bimodule(1, 2)).passed());
}

TEST(Bimodule, Equivalence) {
  const Matrix<Q> one = scalar(1);
  EXPECT_TRUE(check_bimodule_equivalence(fx::b1(), fx::b1(), one).passed());
  const Bimodule<Q> reg = regular_bimodule(fx::a1());
  EXPECT_TRUE(check_bimodule_equivalence(reg, dual_bimodule(reg), one).passed());
  EXPECT_FALSE(check_bimodule_equivalence(fx::b1(), dual_bimodule(fx::b1()), one).passed());
  EXPECT_THROW(check_bimodule_equivalence(fx::b1(), fx::b1(), scalar(0)), InputError);
  gen::Rng rng(13);
  const Bimodule<Q> bm = gen::passing_bimodule(rng, fx::af2(), 2);
  const Matrix<Q> phi = gen::invertible(rng, bm.mdim());
  std::vector<Matrix<Q>> l, r;
  for (Index i = 0; i < 2; ++i) {
    l.push_back(phi * bm.left(i) * inverse(phi));
    r.push_back(phi * bm.right(i) * inverse(phi));
  }
  EXPECT_TRUE(check_bimodule_equivalence(bm, Bimodule<Q>(bm.base(), bm.mdim(), l, r), phi).passed());
}

TEST(Bimodule, ShapeValidation) {
  EXPECT_THROW(Bimodule<Q>(fx::a1(), 2, {scalar(1)}, {scalar(1)}), InputError);
  EXPECT_THROW(Bimodule<Q>(fx::af2(), 1, {scalar(1)}, {scalar(1)}), InputError);
}

TEST(MatchedPair, ZeroActionsAndDirectSum) {
  const std::vector<Matrix<Q>> z(2, Matrix<Q>::Zero(2, 2));
  const MatchedPairSpec<Q> mp{fx::af2(), fx::z2(), z, z, z, z};
  EXPECT_TRUE(check_matched_pair(mp).passed());
  EXPECT_EQ(build_double(mp), gen::direct_sum(fx::af2(), fx::z2()));
}

TEST(MatchedPair, DualPairOfTheBialgebraFixture) {
  const MatchedPairSpec<Q> mp = standard_matched_pair(fx::w2(), fx::w2_dual());
  EXPECT_TRUE(check_matched_pair(mp).passed());
  EXPECT_EQ(build_double(mp).dim(), 4);
  EXPECT_TRUE(is_anti_flexible(build_double(mp)));
  // perturbing one action entry by 1 fails with a named equation witness
  MatchedPairSpec<Q> bad = mp;
  bad.l_a[0](0, 1) += 1;
  const auto rep = check_matched_pair(bad);
  ASSERT_FALSE(rep.passed());
  EXPECT_FALSE(is_anti_flexible(build_double(bad)));
  const std::string rel = rep.witnesses().front().relation;
  EXPECT_TRUE(rel.rfind("bimodule-", 0) == 0 || rel.rfind("action-compat-", 0) == 0) << rel;
}

TEST(MatchedPair, HypothesisStageShortCircuits) {
  Algebra<Q> b(2);
  b(0, 0, 1) = 1;
  b(1, 0, 0) = 1;
  ASSERT_FALSE(is_anti_flexible(b));
  const std::vector<Matrix<Q>> on_b(1, Matrix<Q>::Zero(2, 2));
  const std::vector<Matrix<Q>> on_a(2, Matrix<Q>::Zero(1, 1));
  const MatchedPairSpec<Q> mp{fx::a1(), b, on_b, on_b, on_a, on_a};
  const auto rep = check_matched_pair(mp);
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.short_circuited());
  EXPECT_FALSE(rep.has_relation("action-compat-1"));
  EXPECT_FALSE(is_anti_flexible(build_double(mp)));
}

TEST(MatchedPair, CompatibilityEquationsAreComponentsOfTheDoubleResidual) {
  // F(u,v,w) = (u,v,w) − (w,v,u) in the double, split into its A and B parts.
  gen::Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const Algebra<Q> a = gen::anti_flexible(rng, 2), b = gen::anti_flexible(rng, 2);
    const Index n = a.dim(), m = b.dim();
    MatchedPairSpec<Q> mp{a, b, {}, {}, {}, {}};
    for (Index i = 0; i < n; ++i) {
      mp.l_a.push_back(gen::matrix(rng, m, m));
      mp.r_a.push_back(gen::matrix(rng, m, m));
    }
    for (Index i = 0; i < m; ++i) {
      mp.l_b.push_back(gen::matrix(rng, n, n));
      mp.r_b.push_back(gen::matrix(rng, n, n));
    }
    const Algebra<Q> d = build_double(mp);
    const detail::PairEquations<Q> eq{mp};
    const auto big = [&](const Vector<Q>& x, bool in_a) {
      Vector<Q> v = Vector<Q>::Zero(n + m);
      if (in_a) v.head(n) = x;
      else v.tail(m) = x;
      return v;
    };
    const auto f = [&](const Vector<Q>& u, const Vector<Q>& v, const Vector<Q>& w) {
      return Vector<Q>(oracle::assoc(d.constants(), u, v, w) - oracle::assoc(d.constants(), w, v, u));
    };
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < m; ++k) {
          const Vector<Q> x = oracle::e(n, i), y = oracle::e(n, j), s = oracle::e(m, k);
          EXPECT_EQ(Vector<Q>(f(big(x, true), big(y, true), big(s, false)).head(n)), eq.compat1(y, x, s));
          EXPECT_EQ(Vector<Q>(f(big(x, true), big(s, false), big(y, true)).head(n)), eq.compat3(x, y, s));
        }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j)
        for (Index k = 0; k < m; ++k) {
          const Vector<Q> x = oracle::e(n, i), s = oracle::e(m, j), t = oracle::e(m, k);
          EXPECT_EQ(Vector<Q>(f(big(s, false), big(t, false), big(x, true)).tail(m)), eq.compat2(x, t, s));
          EXPECT_EQ(Vector<Q>(f(big(s, false), big(x, true), big(t, false)).tail(m)), eq.compat4(x, s, t));
        }
  }
}

TEST(MatchedPair, ValidateRejectsBadShapes) {
  MatchedPairSpec<Q> mp = standard_matched_pair(fx::w2(), fx::w2_dual());
  mp.l_b.pop_back();
  EXPECT_THROW(build_double(mp), InputError);
  EXPECT_THROW(check_matched_pair(mp), InputError);
}

TEST(ManinTriple, StandardTripleOfTheFixture) {
  const ManinTripleSpec<Q> mt = standard_manin_triple(fx::w2(), fx::w2_dual());
  EXPECT_TRUE(check_manin_triple(mt).passed());
  ManinTripleSpec<Q> id = mt;
  id.form = BilinearForm<Q>(Matrix<Q>(Matrix<Q>::Identity(4, 4)));
  const auto iso = check_manin_triple(id, 1000);
  EXPECT_FALSE(iso.passed());
  EXPECT_TRUE(iso.has_relation("isotropy A+"));
  ManinTripleSpec<Q> mixed = mt;
  mixed.plus = {0, 2};
  mixed.minus = {1, 3};
  EXPECT_TRUE(check_manin_triple(mixed, 1000).has_relation("isotropy A+"));
}

TEST(ManinTriple, SmallAndFailingStandardTriples) {
  EXPECT_TRUE(check_manin_triple(standard_manin_triple(fx::a1(), Algebra<Q>(1))).passed());
  EXPECT_EQ(build_standard_manin(fx::a1(), Algebra<Q>(1)).first.dim(), 2);
  EXPECT_FALSE(check_manin_triple(standard_manin_triple(fx::af2(), fx::af2())).passed());
}

TEST(ManinTriple, DualMatchedConditions) {
  EXPECT_TRUE(check_dual_matched_conditions(fx::w2(), fx::w2_dual()).passed());
  EXPECT_FALSE(check_dual_matched_conditions(fx::af2(), fx::af2()).passed());
  EXPECT_TRUE(check_dual_matched_conditions(fx::z2(), fx::z2()).passed());
}

TEST(ManinTriple, StandardizeRoundTrips) {
  const ManinTripleSpec<Q> mt = standard_manin_triple(fx::w2(), fx::w2_dual());
  const StandardForm<Q> sf = standardize_manin(mt);
  EXPECT_EQ(sf.plus, fx::w2());
  EXPECT_EQ(sf.dual, fx::w2_dual());
  EXPECT_EQ(sf.embedding, Matrix<Q>(Matrix<Q>::Identity(4, 4)));
}

TEST(ManinTriple, StandardizeRecoversAScrambledDual) {
  gen::Rng rng(31);
  const ManinTripleSpec<Q> mt = standard_manin_triple(fx::w2(), fx::w2_dual());
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Q> p = Matrix<Q>::Identity(4, 4);
    p.bottomRightCorner(2, 2) = gen::invertible(rng, 2);
    ManinTripleSpec<Q> scrambled{change_basis(mt.big, p), mt.plus, mt.minus,
                                 BilinearForm<Q>(Matrix<Q>(p.transpose() * mt.form.matrix() * p))};
    ASSERT_TRUE(check_manin_triple(scrambled).passed());
    const StandardForm<Q> sf = standardize_manin(scrambled);
    EXPECT_EQ(sf.plus, fx::w2());
    EXPECT_EQ(sf.dual, fx::w2_dual());
    const auto [d, form] = build_standard_manin(sf.plus, sf.dual);
    EXPECT_EQ(change_basis(scrambled.big, sf.embedding), d);
  }
  ManinTripleSpec<Q> broken = mt;
  broken.form = BilinearForm<Q>(Matrix<Q>(Matrix<Q>::Identity(4, 4)));
  EXPECT_THROW(standardize_manin(broken), PreconditionError);
}

TEST(ManinTriple, ValidateRejectsBadIndexSets) {
  ManinTripleSpec<Q> mt = standard_manin_triple(fx::w2(), fx::w2_dual());
  mt.minus = {1, 2};
  EXPECT_THROW(check_manin_triple(mt), InputError);
  mt.minus = {2, 7};
  EXPECT_THROW(check_manin_triple(mt), InputError);
}
