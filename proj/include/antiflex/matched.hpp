#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "antiflex/bimodule.hpp"

namespace antiflex {

/// Two algebras acting on each other: l_A, r_A: A → End(B) and l_B, r_B: B → End(A).
template <typename Scalar>
struct MatchedPairSpec {
  Algebra<Scalar> a;
  Algebra<Scalar> b;
  std::vector<Matrix<Scalar>> l_a, r_a;  // dim(B)×dim(B), one per basis element of A
  std::vector<Matrix<Scalar>> l_b, r_b;  // dim(A)×dim(A), one per basis element of B

  void validate() const {
    const auto check = [](const std::vector<Matrix<Scalar>>& maps, Index count, Index size,
                          const char* what) {
      if (static_cast<Index>(maps.size()) != count)
        throw InputError(std::string("matched pair: wrong number of ") + what + " matrices");
      for (const auto& m : maps)
        if (m.rows() != size || m.cols() != size)
          throw InputError(std::string("matched pair: ") + what + " matrix has the wrong shape");
    };
    check(l_a, a.dim(), b.dim(), "lA");
    check(r_a, a.dim(), b.dim(), "rA");
    check(l_b, b.dim(), a.dim(), "lB");
    check(r_b, b.dim(), a.dim(), "rB");
  }

  Bimodule<Scalar> a_on_b() const { return Bimodule<Scalar>(a, b.dim(), l_a, r_a); }
  Bimodule<Scalar> b_on_a() const { return Bimodule<Scalar>(b, a.dim(), l_b, r_b); }
};

/// A ⋈ B on basis (A first, then B):
/// (x+a)*(y+b) = (x·y + l_B(a)y + r_B(b)x) + (a∘b + l_A(x)b + r_A(y)a).
template <typename Scalar>
Algebra<Scalar> build_double(const MatchedPairSpec<Scalar>& mp) {
  mp.validate();
  const Index n = mp.a.dim();
  const Index m = mp.b.dim();
  Algebra<Scalar> out(n + m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(i, j, k) = mp.a(i, j, k);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) out(n + i, n + j, n + k) = mp.b(i, j, k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      // e_i * f_j = r_B(f_j) e_i + l_A(e_i) f_j
      for (Index k = 0; k < n; ++k) out(i, n + j, k) = mp.r_b[sj](k, i);
      for (Index k = 0; k < m; ++k) out(i, n + j, n + k) = mp.l_a[si](k, j);
      // f_j * e_i = l_B(f_j) e_i + r_A(e_i) f_j
      for (Index k = 0; k < n; ++k) out(n + j, i, k) = mp.l_b[sj](k, i);
      for (Index k = 0; k < m; ++k) out(n + j, i, n + k) = mp.r_a[si](k, j);
    }
  const auto& an = mp.a.basis_names();
  const auto& bn = mp.b.basis_names();
  if (!an.empty() && !bn.empty()) {
    std::vector<std::string> names = an;
    names.insert(names.end(), bn.begin(), bn.end());
    out.set_basis_names(std::move(names));
  }
  return out;
}

namespace detail {

template <typename Scalar>
Matrix<Scalar> combine_maps(const std::vector<Matrix<Scalar>>& maps, const Vector<Scalar>& x,
                            Index size) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(size, size);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != Scalar(0)) out += x(i) * maps[static_cast<std::size_t>(i)];
  return out;
}

// Anti-flexibility of both algebras; returns false (and records) on failure.
template <typename Scalar>
bool check_pair_algebras(const Algebra<Scalar>& a, const Algebra<Scalar>& b,
                         CheckReport<Scalar>& report) {
  const CheckReport<Scalar> ra = check_axiom(a, Axiom::AntiFlexible, report.max_witnesses());
  const CheckReport<Scalar> rb = check_axiom(b, Axiom::AntiFlexible, report.max_witnesses());
  report.merge(ra, " (A)");
  report.merge(rb, " (B)");
  const bool ok = ra.passed() && rb.passed();
  return ok;
}

// The four compatibility families between the actions, on basis instances.
// compat1 (x,y ∈ A, a ∈ B) and compat3 live in A; compat2 (x ∈ A, a,b ∈ B) and compat4 live in B.
template <typename Scalar>
struct PairEquations {
  const MatchedPairSpec<Scalar>& mp;

  Matrix<Scalar> la(const Vector<Scalar>& x) const { return combine_maps(mp.l_a, x, mp.b.dim()); }
  Matrix<Scalar> ra(const Vector<Scalar>& x) const { return combine_maps(mp.r_a, x, mp.b.dim()); }
  Matrix<Scalar> lb(const Vector<Scalar>& a) const { return combine_maps(mp.l_b, a, mp.a.dim()); }
  Matrix<Scalar> rb(const Vector<Scalar>& a) const { return combine_maps(mp.r_b, a, mp.a.dim()); }
  Vector<Scalar> ma(const Vector<Scalar>& x, const Vector<Scalar>& y) const { return multiply(mp.a, x, y); }
  Vector<Scalar> mb(const Vector<Scalar>& x, const Vector<Scalar>& y) const { return multiply(mp.b, x, y); }

  Vector<Scalar> compat1(const Vector<Scalar>& x, const Vector<Scalar>& y, const Vector<Scalar>& a) const {
    return lb(a) * ma(x, y) + rb(a) * ma(y, x) - rb(Vector<Scalar>(la(x) * a)) * y -
           ma(y, Vector<Scalar>(rb(a) * x)) - lb(Vector<Scalar>(ra(x) * a)) * y -
           ma(Vector<Scalar>(lb(a) * x), y);
  }
  Vector<Scalar> compat2(const Vector<Scalar>& x, const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return la(x) * mb(a, b) + ra(x) * mb(b, a) - ra(Vector<Scalar>(lb(a) * x)) * b -
           mb(b, Vector<Scalar>(ra(x) * a)) - la(Vector<Scalar>(rb(a) * x)) * b -
           mb(Vector<Scalar>(la(x) * a), b);
  }
  Vector<Scalar> compat3(const Vector<Scalar>& x, const Vector<Scalar>& y, const Vector<Scalar>& a) const {
    return ma(y, Vector<Scalar>(lb(a) * x)) + ma(Vector<Scalar>(rb(a) * x), y) -
           ma(Vector<Scalar>(rb(a) * y), x) - lb(Vector<Scalar>(la(y) * a)) * x +
           rb(Vector<Scalar>(ra(x) * a)) * y + lb(Vector<Scalar>(la(x) * a)) * y -
           ma(x, Vector<Scalar>(lb(a) * y)) - rb(Vector<Scalar>(ra(y) * a)) * x;
  }
  Vector<Scalar> compat4(const Vector<Scalar>& x, const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return mb(b, Vector<Scalar>(la(x) * a)) + mb(Vector<Scalar>(ra(x) * a), b) -
           mb(Vector<Scalar>(ra(x) * b), a) - la(Vector<Scalar>(lb(b) * x)) * a +
           ra(Vector<Scalar>(rb(a) * x)) * b + la(Vector<Scalar>(lb(a) * x)) * b -
           mb(a, Vector<Scalar>(la(x) * b)) - ra(Vector<Scalar>(rb(b) * x)) * a;
  }
};

}  // namespace detail

/// Checks, in order: A and B anti-flexible, (l_A, r_A, B) and (l_B, r_B, A) bimodules,
/// then the four compatibility families. A failed hypothesis stage short-circuits.
template <typename Scalar>
CheckReport<Scalar> check_matched_pair(const MatchedPairSpec<Scalar>& mp,
                                       std::size_t max_witnesses = kDefaultMaxWitnesses) {
  mp.validate();
  CheckReport<Scalar> report(max_witnesses);
  if (!detail::check_pair_algebras(mp.a, mp.b, report)) {
    report.mark_short_circuited();
    return report;
  }
  const Bimodule<Scalar> ab = mp.a_on_b();
  const Bimodule<Scalar> ba = mp.b_on_a();
  detail::bimodule_identities(
      mp.a, [&](const Vector<Scalar>& x) { return ab.left(x); },
      [&](const Vector<Scalar>& x) { return ab.right(x); }, " (lA,rA)", report);
  detail::bimodule_identities(
      mp.b, [&](const Vector<Scalar>& x) { return ba.left(x); },
      [&](const Vector<Scalar>& x) { return ba.right(x); }, " (lB,rB)", report);
  if (!report.passed()) {
    report.mark_short_circuited();
    return report;
  }
  const detail::PairEquations<Scalar> eq{mp};
  const Index n = mp.a.dim();
  const Index m = mp.b.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < m; ++k) {
        const auto x = basis_vector<Scalar>(n, i), y = basis_vector<Scalar>(n, j);
        const auto a = basis_vector<Scalar>(m, k);
        report.expect_zero("action-compat-1", {i, j, k}, eq.compat1(x, y, a));
        report.expect_zero("action-compat-3", {i, j, k}, eq.compat3(x, y, a));
      }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) {
        const auto x = basis_vector<Scalar>(n, i);
        const auto a = basis_vector<Scalar>(m, j), b = basis_vector<Scalar>(m, k);
        report.expect_zero("action-compat-2", {i, j, k}, eq.compat2(x, a, b));
        report.expect_zero("action-compat-4", {i, j, k}, eq.compat4(x, a, b));
      }
  return report;
}

/// The six-tuple (A, A*, R*_·, L*_·, R*_∘, L*_∘) read off two structure-constant tables.
template <typename Scalar>
MatchedPairSpec<Scalar> standard_matched_pair(const Algebra<Scalar>& a, const Algebra<Scalar>& astar) {
  if (a.dim() != astar.dim()) throw InputError("standard matched pair: dimensions differ");
  MatchedPairSpec<Scalar> mp{a, astar, {}, {}, {}, {}};
  for (Index i = 0; i < a.dim(); ++i) {
    mp.l_a.push_back(dual_map(a.right(i)));
    mp.r_a.push_back(dual_map(a.left(i)));
    mp.l_b.push_back(dual_map(astar.right(i)));
    mp.r_b.push_back(dual_map(astar.left(i)));
  }
  return mp;
}

/// Block anti-diagonal pairing on A ⊕ A*: 𝔅(x + a*, y + b*) = ⟨a*, y⟩ + ⟨x, b*⟩.
template <typename Scalar>
BilinearForm<Scalar> standard_pairing(Index n) {
  Matrix<Scalar> b = Matrix<Scalar>::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    b(i, n + i) = Scalar(1);
    b(n + i, i) = Scalar(1);
  }
  return BilinearForm<Scalar>(std::move(b));
}

/// An algebra with a form and two complementary index sets for A⁺ and A⁻.
template <typename Scalar>
struct ManinTripleSpec {
  Algebra<Scalar> big;
  std::vector<Index> plus;
  std::vector<Index> minus;
  BilinearForm<Scalar> form;

  void validate() const {
    const Index total = big.dim();
    if (form.dim() != total) throw InputError("manin triple: form dimension does not match algebra");
    if (plus.size() != minus.size() || static_cast<Index>(plus.size() + minus.size()) != total)
      throw InputError("manin triple: index sets must split the basis into equal halves");
    std::vector<int> seen(static_cast<std::size_t>(total), 0);
    for (const auto* set : {&plus, &minus})
      for (Index i : *set) {
        if (i < 0 || i >= total) throw InputError("manin triple: basis index out of range");
        if (seen[static_cast<std::size_t>(i)]++) throw InputError("manin triple: index sets overlap");
      }
  }
};

template <typename Scalar>
std::pair<Algebra<Scalar>, BilinearForm<Scalar>> build_standard_manin(const Algebra<Scalar>& a,
                                                                      const Algebra<Scalar>& astar) {
  Algebra<Scalar> d = build_double(standard_matched_pair(a, astar));
  return {std::move(d), standard_pairing<Scalar>(a.dim())};
}

template <typename Scalar>
ManinTripleSpec<Scalar> standard_manin_triple(const Algebra<Scalar>& a, const Algebra<Scalar>& astar) {
  auto [big, form] = build_standard_manin(a, astar);
  std::vector<Index> plus, minus;
  for (Index i = 0; i < a.dim(); ++i) {
    plus.push_back(i);
    minus.push_back(a.dim() + i);
  }
  return {std::move(big), std::move(plus), std::move(minus), std::move(form)};
}

namespace detail {

template <typename Scalar>
void check_closed(const Algebra<Scalar>& big, const std::vector<Index>& idx, const std::string& name,
                  CheckReport<Scalar>& report) {
  std::vector<bool> inside(static_cast<std::size_t>(big.dim()), false);
  for (Index i : idx) inside[static_cast<std::size_t>(i)] = true;
  for (Index i : idx)
    for (Index j : idx) {
      Vector<Scalar> outside = Vector<Scalar>::Zero(big.dim());
      for (Index k = 0; k < big.dim(); ++k)
        if (!inside[static_cast<std::size_t>(k)]) outside(k) = big(i, j, k);
      report.expect_zero("subalgebra " + name, {i, j}, std::move(outside));
    }
}

}  // namespace detail

/// Big algebra anti-flexible, A⁺ and A⁻ closed, form symmetric invariant nondegenerate,
/// both halves isotropic.
template <typename Scalar>
CheckReport<Scalar> check_manin_triple(const ManinTripleSpec<Scalar>& mt,
                                       std::size_t max_witnesses = kDefaultMaxWitnesses) {
  mt.validate();
  CheckReport<Scalar> report(max_witnesses);
  report.merge(check_axiom(mt.big, Axiom::AntiFlexible, max_witnesses));
  detail::check_closed(mt.big, mt.plus, "A+", report);
  detail::check_closed(mt.big, mt.minus, "A-", report);
  report.merge(check_invariant_form(mt.big, mt.form, {.symmetric = true, .nondegenerate = true},
                                    max_witnesses));
  for (const auto* set : {&mt.plus, &mt.minus})
    for (Index i : *set)
      for (Index j : *set) {
        Vector<Scalar> v(1);
        v(0) = mt.form(i, j);
        report.expect_zero(set == &mt.plus ? "isotropy A+" : "isotropy A-", {i, j}, std::move(v));
      }
  return report;
}

/// The two reduced identities for the standard six-tuple of (A, A*), after both
/// algebras pass the anti-flexible check.
template <typename Scalar>
CheckReport<Scalar> check_dual_matched_conditions(const Algebra<Scalar>& a, const Algebra<Scalar>& astar,
                                                  std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (a.dim() != astar.dim()) throw InputError("dual matched conditions: dimensions differ");
  CheckReport<Scalar> report(max_witnesses);
  if (!detail::check_pair_algebras(a, astar, report)) {
    report.mark_short_circuited();
    return report;
  }
  const MatchedPairSpec<Scalar> mp = standard_matched_pair(a, astar);
  const detail::PairEquations<Scalar> eq{mp};
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const auto x = basis_vector<Scalar>(n, i), y = basis_vector<Scalar>(n, j);
        const auto s = basis_vector<Scalar>(n, k);
        report.expect_zero("dual-matched-1", {i, j, k}, Vector<Scalar>(-eq.compat1(x, y, s)));
        report.expect_zero("dual-matched-2", {i, j, k}, eq.compat3(x, y, s));
      }
  return report;
}

/// Result of standardizing a Manin triple: A⁺, the product transported to (A⁺)* via the
/// form, and the change of basis taking the standard double to the input big algebra.
template <typename Scalar>
struct StandardForm {
  Algebra<Scalar> plus;
  Algebra<Scalar> dual;
  Matrix<Scalar> embedding;  // columns: images of e_i then e_i* in the big algebra's basis
};

/// Identifies A⁻ with (A⁺)* through m ↦ 𝔅(m, ·)|A⁺. Throws PreconditionError unless the
/// triple passes check_manin_triple.
template <typename Scalar>
StandardForm<Scalar> standardize_manin(const ManinTripleSpec<Scalar>& mt) {
  if (!check_manin_triple(mt, 1).passed())
    throw PreconditionError("standardize_manin: input is not a Manin triple");
  const Index n = static_cast<Index>(mt.plus.size());
  Algebra<Scalar> plus = restrict_to(mt.big, mt.plus);
  Algebra<Scalar> minus = restrict_to(mt.big, mt.minus);
  Matrix<Scalar> pairing(n, n);  // pairing(a, b) = 𝔅(m_a, p_b)
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      pairing(a, b) = mt.form(mt.minus[static_cast<std::size_t>(a)], mt.plus[static_cast<std::size_t>(b)]);
  // e_i* corresponds to Σ_a p(a, i) m_a with p = pairing^{-T}.
  const Matrix<Scalar> p = inverse(Matrix<Scalar>(pairing.transpose()));
  Algebra<Scalar> dual = change_basis(minus, p);
  dual.set_basis_names({});
  Matrix<Scalar> embedding = Matrix<Scalar>::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    embedding(mt.plus[static_cast<std::size_t>(i)], i) = Scalar(1);
    for (Index a = 0; a < n; ++a) embedding(mt.minus[static_cast<std::size_t>(a)], n + i) = p(a, i);
  }
  return {std::move(plus), std::move(dual), std::move(embedding)};
}

}  // namespace antiflex
