#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antiflex/algebra.hpp"

namespace antiflex {

/// Maps l, r: A → End(V), one m×m matrix per basis element of A.
/// Column j of left(i) holds the coordinates of l(e_i) f_j.
template <typename Scalar>
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(Algebra<Scalar> base, Index mdim, std::vector<Matrix<Scalar>> left,
           std::vector<Matrix<Scalar>> right)
      : base_(std::move(base)), mdim_(mdim), left_(std::move(left)), right_(std::move(right)) {
    const auto n = static_cast<std::size_t>(base_.dim());
    if (left_.size() != n || right_.size() != n)
      throw InputError("bimodule needs one l and one r matrix per basis element");
    for (std::size_t i = 0; i < n; ++i)
      if (left_[i].rows() != mdim_ || left_[i].cols() != mdim_ || right_[i].rows() != mdim_ ||
          right_[i].cols() != mdim_)
        throw InputError("bimodule matrices must be mdim×mdim");
  }

  const Algebra<Scalar>& base() const { return base_; }
  Index mdim() const { return mdim_; }
  const std::vector<Matrix<Scalar>>& left_maps() const { return left_; }
  const std::vector<Matrix<Scalar>>& right_maps() const { return right_; }
  const Matrix<Scalar>& left(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const Matrix<Scalar>& right(Index i) const { return right_[static_cast<std::size_t>(i)]; }
  Matrix<Scalar> left(const Vector<Scalar>& x) const { return combine(left_, x); }
  Matrix<Scalar> right(const Vector<Scalar>& x) const { return combine(right_, x); }

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.base_ == b.base_ && a.mdim_ == b.mdim_ && same(a.left_, b.left_) && same(a.right_, b.right_);
  }

 private:
  Matrix<Scalar> combine(const std::vector<Matrix<Scalar>>& maps, const Vector<Scalar>& x) const {
    if (x.size() != base_.dim()) throw InputError("vector length does not match base algebra");
    Matrix<Scalar> m = Matrix<Scalar>::Zero(mdim_, mdim_);
    for (Index i = 0; i < x.size(); ++i)
      if (x(i) != Scalar(0)) m += x(i) * maps[static_cast<std::size_t>(i)];
    return m;
  }

  Algebra<Scalar> base_;
  Index mdim_ = 0;
  std::vector<Matrix<Scalar>> left_;
  std::vector<Matrix<Scalar>> right_;
};

namespace detail {

// The two bimodule identities for (l, r) acting on a space, evaluated at basis pairs.
// Shared with matched pairs, where the acting maps are A → End(B).
template <typename Scalar, typename LeftFn, typename RightFn>
void bimodule_identities(const Algebra<Scalar>& a, LeftFn&& l, RightFn&& r, const std::string& tag,
                         CheckReport<Scalar>& report) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix<Scalar> li = l(basis_vector<Scalar>(n, i)), lj = l(basis_vector<Scalar>(n, j));
      const Matrix<Scalar> ri = r(basis_vector<Scalar>(n, i)), rj = r(basis_vector<Scalar>(n, j));
      Matrix<Scalar> eq1 = l(Vector<Scalar>(a.product(i, j))) - li * lj - ri * rj +
                           r(Vector<Scalar>(a.product(j, i)));
      report.expect_zero("bimodule-1" + tag, {i, j}, std::move(eq1));
      Matrix<Scalar> eq2 = li * rj - rj * li - lj * ri + ri * lj;
      report.expect_zero("bimodule-2" + tag, {i, j}, std::move(eq2));
    }
}

}  // namespace detail

/// l(x·y) − l(x)l(y) = r(x)r(y) − r(y·x) and l(x)r(y) − r(y)l(x) = l(y)r(x) − r(x)l(y)
/// on all basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_bimodule(const Bimodule<Scalar>& bm,
                                   std::size_t max_witnesses = kDefaultMaxWitnesses) {
  CheckReport<Scalar> report(max_witnesses);
  detail::bimodule_identities(
      bm.base(), [&](const Vector<Scalar>& x) { return bm.left(x); },
      [&](const Vector<Scalar>& x) { return bm.right(x); }, "", report);
  return report;
}

template <typename Scalar>
Bimodule<Scalar> regular_bimodule(const Algebra<Scalar>& a) {
  std::vector<Matrix<Scalar>> l, r;
  for (Index i = 0; i < a.dim(); ++i) {
    l.push_back(a.left(i));
    r.push_back(a.right(i));
  }
  return Bimodule<Scalar>(a, a.dim(), std::move(l), std::move(r));
}

template <typename Scalar>
Bimodule<Scalar> zero_bimodule(const Algebra<Scalar>& a, Index mdim) {
  std::vector<Matrix<Scalar>> z(static_cast<std::size_t>(a.dim()), Matrix<Scalar>::Zero(mdim, mdim));
  return Bimodule<Scalar>(a, mdim, z, z);
}

/// (r*, l*, V*) with no checks; dual_bimodule is the checked version.
template <typename Scalar>
Bimodule<Scalar> transposed_bimodule(const Bimodule<Scalar>& bm) {
  std::vector<Matrix<Scalar>> l, r;
  for (Index i = 0; i < bm.base().dim(); ++i) {
    l.push_back(dual_map(bm.right(i)));
    r.push_back(dual_map(bm.left(i)));
  }
  return Bimodule<Scalar>(bm.base(), bm.mdim(), std::move(l), std::move(r));
}

/// Throws PreconditionError unless bm is a bimodule.
template <typename Scalar>
Bimodule<Scalar> dual_bimodule(const Bimodule<Scalar>& bm) {
  if (!check_bimodule(bm, 1).passed())
    throw PreconditionError("dual_bimodule: input is not a bimodule");
  Bimodule<Scalar> dual = transposed_bimodule(bm);
  if (!check_bimodule(dual, 1).passed())
    throw PreconditionError("dual_bimodule: transposed maps fail the bimodule identities");
  return dual;
}

/// A ⋉ V on basis (e_1..e_n, f_1..f_m): e_i*f_j = l(e_i)f_j, f_j*e_i = r(e_i)f_j, V·V = 0.
template <typename Scalar>
Algebra<Scalar> semidirect_product(const Algebra<Scalar>& a, const Bimodule<Scalar>& bm) {
  if (bm.base().dim() != a.dim()) throw InputError("semidirect_product: bimodule is over another algebra");
  const Index n = a.dim();
  const Index m = bm.mdim();
  Algebra<Scalar> out(n + m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(i, j, k) = a(i, j, k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) {
        out(i, n + j, n + k) = bm.left(i)(k, j);
        out(n + j, i, n + k) = bm.right(i)(k, j);
      }
  if (!a.basis_names().empty()) {
    std::vector<std::string> names = a.basis_names();
    for (Index j = 0; j < m; ++j) names.push_back("f" + std::to_string(j + 1));
    out.set_basis_names(std::move(names));
  }
  return out;
}

/// [ρ(x), ρ(y)] = ρ([x, y]) for ρ = l − r, on basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_lie_representation(const Bimodule<Scalar>& bm,
                                             std::size_t max_witnesses = kDefaultMaxWitnesses) {
  CheckReport<Scalar> report(max_witnesses);
  const Algebra<Scalar> g = commutator_algebra(bm.base());
  const Index n = g.dim();
  const auto rho = [&](const Vector<Scalar>& x) { return Matrix<Scalar>(bm.left(x) - bm.right(x)); };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix<Scalar> ri = rho(basis_vector<Scalar>(n, i));
      const Matrix<Scalar> rj = rho(basis_vector<Scalar>(n, j));
      Matrix<Scalar> res = ri * rj - rj * ri - rho(Vector<Scalar>(g.product(i, j)));
      report.expect_zero("representation", {i, j}, std::move(res));
    }
  return report;
}

/// φ l₁(x) = l₂(x) φ and φ r₁(x) = r₂(x) φ. Throws InputError when φ is singular.
template <typename Scalar>
CheckReport<Scalar> check_bimodule_equivalence(const Bimodule<Scalar>& b1, const Bimodule<Scalar>& b2,
                                               const Matrix<Scalar>& phi,
                                               std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (b1.base().dim() != b2.base().dim() || b1.mdim() != b2.mdim() || phi.rows() != b1.mdim() ||
      phi.cols() != b1.mdim())
    throw InputError("bimodule equivalence: shape mismatch");
  if (!is_invertible(phi)) throw InputError("bimodule equivalence: phi is singular");
  CheckReport<Scalar> report(max_witnesses);
  for (Index i = 0; i < b1.base().dim(); ++i) {
    report.expect_zero("phi l1 = l2 phi", {i}, Matrix<Scalar>(phi * b1.left(i) - b2.left(i) * phi));
    report.expect_zero("phi r1 = r2 phi", {i}, Matrix<Scalar>(phi * b1.right(i) - b2.right(i) * phi));
  }
  return report;
}

}  // namespace antiflex
