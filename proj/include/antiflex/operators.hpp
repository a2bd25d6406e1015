#pragma once

#include <optional>
#include <utility>

#include "antiflex/bimodule.hpp"
#include "antiflex/yangbaxter.hpp"

namespace antiflex {

/// Two products on one space: x ≺ y = Σ_k prec(i,j,k) e_k and x ≻ y = Σ_k succ(i,j,k) e_k.
template <typename Scalar>
struct PreAlgebra {
  Tensor3<Scalar> prec;
  Tensor3<Scalar> succ;

  PreAlgebra() = default;
  explicit PreAlgebra(Index n) : prec(n, n, n), succ(n, n, n) {}
  PreAlgebra(Tensor3<Scalar> p, Tensor3<Scalar> s) : prec(std::move(p)), succ(std::move(s)) {
    const Index n = prec.dim(0);
    if (prec.dims() != std::array<Index, 3>{n, n, n} || succ.dims() != prec.dims())
      throw InputError("pre-algebra tables must both be n×n×n");
  }

  Index dim() const { return prec.dim(0); }

  friend bool operator==(const PreAlgebra& a, const PreAlgebra& b) {
    return a.prec == b.prec && a.succ == b.succ;
  }
};

template <typename Scalar>
Algebra<Scalar> associated_algebra(const PreAlgebra<Scalar>& p) {
  return Algebra<Scalar>(p.prec + p.succ);
}

/// T(u)·T(v) = T(l(T u)v + r(T v)u) on module basis pairs. T maps V (dim m) to A (dim n).
/// Throws PreconditionError unless bm is a bimodule.
template <typename Scalar>
CheckReport<Scalar> check_o_operator(const Matrix<Scalar>& t, const Bimodule<Scalar>& bm,
                                     std::size_t max_witnesses = kDefaultMaxWitnesses) {
  const Algebra<Scalar>& a = bm.base();
  if (t.rows() != a.dim() || t.cols() != bm.mdim())
    throw InputError("O-operator: T must be dim(A)×dim(V)");
  if (!check_bimodule(bm, 1).passed())
    throw PreconditionError("O-operator: the module maps are not a bimodule");
  CheckReport<Scalar> report(max_witnesses);
  const Index m = bm.mdim();
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v) {
      const Vector<Scalar> tu = t.col(u), tv = t.col(v);
      const Vector<Scalar> inner = bm.left(tu) * basis_vector<Scalar>(m, v) +
                                   bm.right(tv) * basis_vector<Scalar>(m, u);
      report.expect_zero("O-operator", {u, v}, Vector<Scalar>(multiply(a, tu, tv) - t * inner));
    }
  return report;
}

/// Weight-zero Rota–Baxter identity: the O-operator identity against the regular bimodule.
template <typename Scalar>
CheckReport<Scalar> check_rota_baxter(const Algebra<Scalar>& a, const Matrix<Scalar>& rb,
                                      std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (rb.rows() != a.dim() || rb.cols() != a.dim()) throw InputError("Rota-Baxter operator must be n×n");
  return check_o_operator(rb, regular_bimodule(a), max_witnesses);
}

/// W = A ⋉ V* with the transposed actions (r*, l*), basis A first, and r = T − σT where
/// T = Σ_a T(v_a) ⊗ v_a*.
template <typename Scalar>
std::pair<Algebra<Scalar>, Tensor2<Scalar>> solution_from_o_operator(const Matrix<Scalar>& t,
                                                                     const Bimodule<Scalar>& bm) {
  const Index n = bm.base().dim();
  const Index m = bm.mdim();
  if (t.rows() != n || t.cols() != m) throw InputError("O-operator: T must be dim(A)×dim(V)");
  Algebra<Scalar> w = semidirect_product(bm.base(), transposed_bimodule(bm));
  Tensor2<Scalar> embedded = Tensor2<Scalar>::Zero(n + m, n + m);
  embedded.topRightCorner(n, m) = t;
  Tensor2<Scalar> r = embedded - embedded.transpose();
  return {std::move(w), std::move(r)};
}

template <typename Scalar>
struct PreAntiFlexibleReport {
  CheckReport<Scalar> identities;  // the two pre-anti-flexible identities
  CheckReport<Scalar> dendriform;  // the three associator-like expressions vanishing
};

/// (x,y,z)_m = (z,y,x)_m and (x,y,z)_l = (z,y,x)_r on basis triples, where
/// (x,y,z)_m = (x≻y)≺z − x≻(y≺z), (x,y,z)_l = (x∗y)≻z − x≻(y≻z), (x,y,z)_r = (x≺y)≺z − x≺(y∗z).
template <typename Scalar>
PreAntiFlexibleReport<Scalar> check_pre_anti_flexible(const PreAlgebra<Scalar>& p,
                                                      std::size_t max_witnesses = kDefaultMaxWitnesses) {
  const Index n = p.dim();
  const Algebra<Scalar> prec(p.prec), succ(p.succ), sum = associated_algebra(p);
  const auto e = [&](Index t) { return basis_vector<Scalar>(n, t); };
  const auto mid = [&](Index x, Index y, Index z) {
    return Vector<Scalar>(multiply(prec, Vector<Scalar>(succ.product(x, y)), e(z)) -
                          multiply(succ, e(x), Vector<Scalar>(prec.product(y, z))));
  };
  const auto lft = [&](Index x, Index y, Index z) {
    return Vector<Scalar>(multiply(succ, Vector<Scalar>(sum.product(x, y)), e(z)) -
                          multiply(succ, e(x), Vector<Scalar>(succ.product(y, z))));
  };
  const auto rgt = [&](Index x, Index y, Index z) {
    return Vector<Scalar>(multiply(prec, Vector<Scalar>(prec.product(x, y)), e(z)) -
                          multiply(prec, e(x), Vector<Scalar>(sum.product(y, z))));
  };
  PreAntiFlexibleReport<Scalar> out{CheckReport<Scalar>(max_witnesses), CheckReport<Scalar>(max_witnesses)};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Vector<Scalar> m = mid(i, j, k), l = lft(i, j, k), r = rgt(i, j, k);
        out.identities.expect_zero("middle symmetry", {i, j, k}, Vector<Scalar>(m - mid(k, j, i)));
        out.identities.expect_zero("left-right symmetry", {i, j, k}, Vector<Scalar>(l - rgt(k, j, i)));
        out.dendriform.expect_zero("middle", {i, j, k}, m);
        out.dendriform.expect_zero("left", {i, j, k}, l);
        out.dendriform.expect_zero("right", {i, j, k}, r);
      }
  return out;
}

/// (L≻, R≺) as a bimodule over the associated algebra. Throws PreconditionError unless P is
/// pre-anti-flexible or if a postcondition fails.
template <typename Scalar>
Bimodule<Scalar> pre_bimodule(const PreAlgebra<Scalar>& p) {
  if (!check_pre_anti_flexible(p, 1).identities.passed())
    throw PreconditionError("pre_bimodule: input is not pre-anti-flexible");
  const Index n = p.dim();
  std::vector<Matrix<Scalar>> l, r;
  for (Index i = 0; i < n; ++i) {
    Matrix<Scalar> li(n, n), ri(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        li(k, j) = p.succ(i, j, k);
        ri(k, j) = p.prec(j, i, k);
      }
    l.push_back(std::move(li));
    r.push_back(std::move(ri));
  }
  Bimodule<Scalar> bm(associated_algebra(p), n, std::move(l), std::move(r));
  if (!check_bimodule(bm, 1).passed() ||
      !check_o_operator(Matrix<Scalar>(Matrix<Scalar>::Identity(n, n)), bm, 1).passed())
    throw PreconditionError("pre_bimodule: postcondition failed");
  return bm;
}

/// u ≻ v = l(T u)v, u ≺ v = r(T v)u. Throws PreconditionError unless T is an O-operator, or if
/// the result is not pre-anti-flexible or T fails to be a homomorphism of the sum product.
template <typename Scalar>
PreAlgebra<Scalar> pre_from_o_operator(const Matrix<Scalar>& t, const Bimodule<Scalar>& bm) {
  if (!check_o_operator(t, bm, 1).passed())
    throw PreconditionError("pre_from_o_operator: T is not an O-operator");
  const Index m = bm.mdim();
  PreAlgebra<Scalar> p(m);
  for (Index u = 0; u < m; ++u) {
    const Matrix<Scalar> lu = bm.left(Vector<Scalar>(t.col(u)));
    const Matrix<Scalar> ru = bm.right(Vector<Scalar>(t.col(u)));
    for (Index v = 0; v < m; ++v)
      for (Index k = 0; k < m; ++k) {
        p.succ(u, v, k) = lu(k, v);
        p.prec(v, u, k) = ru(k, v);
      }
  }
  if (!check_pre_anti_flexible(p, 1).identities.passed())
    throw PreconditionError("pre_from_o_operator: result is not pre-anti-flexible");
  const Algebra<Scalar> sum = associated_algebra(p);
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v)
      if (!is_zero(Vector<Scalar>(t * sum.product(u, v) -
                                  multiply(bm.base(), Vector<Scalar>(t.col(u)), Vector<Scalar>(t.col(v))))))
        throw PreconditionError("pre_from_o_operator: T is not a homomorphism");
  return p;
}

/// The structure T(u) ≻ T(v) = T(u ≻ v), T(u) ≺ T(v) = T(u ≺ v) on the image T(V), in the basis
/// T(v_1), …, T(v_m). Only materialized when T is injective.
template <typename Scalar>
std::optional<PreAlgebra<Scalar>> image_pre_structure(const Matrix<Scalar>& t, const PreAlgebra<Scalar>& p) {
  if (t.cols() != p.dim()) throw InputError("image structure: T and pre-algebra dimensions differ");
  if (rank(t) != t.cols()) return std::nullopt;
  return p;
}

/// x ≻ y = T(l(x)T⁻¹y), x ≺ y = T(r(y)T⁻¹x) for an invertible O-operator T: A → A.
/// Throws InputError for singular T and PreconditionError when T is not an O-operator.
template <typename Scalar>
PreAlgebra<Scalar> pre_from_invertible_o(const Algebra<Scalar>& a, const Matrix<Scalar>& t,
                                         const Bimodule<Scalar>& bm) {
  const Index n = a.dim();
  if (bm.base().dim() != n || t.rows() != n || t.cols() != bm.mdim() || bm.mdim() != n)
    throw InputError("pre_from_invertible_o: shape mismatch");
  if (!is_invertible(t)) throw InputError("pre_from_invertible_o: T is singular");
  if (!check_o_operator(t, bm, 1).passed())
    throw PreconditionError("pre_from_invertible_o: T is not an O-operator");
  const Matrix<Scalar> tinv = inverse(t);
  PreAlgebra<Scalar> p(n);
  for (Index i = 0; i < n; ++i) {
    const Matrix<Scalar> succ_i = t * bm.left(i) * tinv;   // column j = e_i ≻ e_j
    const Matrix<Scalar> prec_i = t * bm.right(i) * tinv;  // column j = e_j ≺ e_i
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        p.succ(i, j, k) = succ_i(k, j);
        p.prec(j, i, k) = prec_i(k, j);
      }
  }
  if (!(associated_algebra(p) == a))
    throw PreconditionError("pre_from_invertible_o: sum of the products differs from A");
  return p;
}

/// Solves ω(x≻y, z) = ω(y, z·x) and ω(x≺y, z) = ω(x, y·z). Throws PreconditionError when ω is
/// not skew, is degenerate, or fails the cyclic identity.
template <typename Scalar>
PreAlgebra<Scalar> pre_from_omega(const Algebra<Scalar>& a, const BilinearForm<Scalar>& omega) {
  const Index n = a.dim();
  if (omega.dim() != n) throw InputError("pre_from_omega: form dimension does not match algebra");
  if (!is_skew_symmetric(omega.matrix())) throw PreconditionError("pre_from_omega: form is not skew-symmetric");
  if (!is_invertible(omega.matrix())) throw PreconditionError("pre_from_omega: form is degenerate");
  if (!check_cyclic_form(a, omega, 1).passed())
    throw PreconditionError("pre_from_omega: form fails the cyclic identity");
  const Matrix<Scalar> solve = inverse(Matrix<Scalar>(omega.matrix().transpose()));
  PreAlgebra<Scalar> p(n);
  const auto e = [&](Index t) { return basis_vector<Scalar>(n, t); };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector<Scalar> bs(n), bp(n);
      for (Index z = 0; z < n; ++z) {
        bs(z) = omega(e(j), Vector<Scalar>(a.product(z, i)));
        bp(z) = omega(e(i), Vector<Scalar>(a.product(j, z)));
      }
      const Vector<Scalar> s = solve * bs, q = solve * bp;
      for (Index k = 0; k < n; ++k) {
        p.succ(i, j, k) = s(k);
        p.prec(i, j, k) = q(k);
      }
    }
  if (!check_pre_anti_flexible(p, 1).identities.passed() || !(associated_algebra(p) == a))
    throw PreconditionError("pre_from_omega: postcondition failed");
  return p;
}

/// r = Σ (e_i ⊗ e_i* − e_i* ⊗ e_i) in a 2n-dimensional space with basis (e, e*).
template <typename Scalar>
Tensor2<Scalar> canonical_tensor(Index n) {
  Tensor2<Scalar> r = Tensor2<Scalar>::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    r(i, n + i) = Scalar(1);
    r(n + i, i) = Scalar(-1);
  }
  return r;
}

/// W = (A, ∗) ⋉ A* with actions (R≺*, L≻*) and the canonical tensor. Throws PreconditionError
/// unless P is pre-anti-flexible or if r fails to solve the equation or give a bialgebra.
template <typename Scalar>
std::pair<Algebra<Scalar>, Tensor2<Scalar>> canonical_solution(const PreAlgebra<Scalar>& p) {
  const Bimodule<Scalar> bm = pre_bimodule(p);
  Algebra<Scalar> w = semidirect_product(bm.base(), dual_bimodule(bm));
  Tensor2<Scalar> r = canonical_tensor<Scalar>(p.dim());
  if (!afybe_residual(w, r).is_zero() || !check_bialgebra(w, coboundary_delta(w, r), 1).passed())
    throw PreconditionError("canonical_solution: postcondition failed");
  return {std::move(w), std::move(r)};
}

}  // namespace antiflex
