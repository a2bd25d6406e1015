#pragma once

#include <utility>
#include <vector>

#include "antiflex/algebra.hpp"

namespace antiflex {

/// Δ: A → A⊗A stored as one n×n tensor per basis element, delta(k) = Δ(e_k).
template <typename Scalar>
class Comultiplication {
 public:
  Comultiplication() = default;
  explicit Comultiplication(Index dim)
      : dim_(dim), delta_(static_cast<std::size_t>(dim), Tensor2<Scalar>::Zero(dim, dim)) {}
  explicit Comultiplication(std::vector<Tensor2<Scalar>> delta)
      : dim_(static_cast<Index>(delta.size())), delta_(std::move(delta)) {
    for (const auto& t : delta_)
      if (t.rows() != dim_ || t.cols() != dim_)
        throw InputError("comultiplication: each value must be an n×n tensor");
  }

  Index dim() const { return dim_; }
  const Tensor2<Scalar>& operator()(Index k) const { return delta_[static_cast<std::size_t>(k)]; }
  Tensor2<Scalar>& operator()(Index k) { return delta_[static_cast<std::size_t>(k)]; }
  const std::vector<Tensor2<Scalar>>& values() const { return delta_; }

  /// Δ(x) for an arbitrary vector.
  Tensor2<Scalar> apply(const Vector<Scalar>& x) const {
    if (x.size() != dim_) throw InputError("comultiplication: vector length mismatch");
    Tensor2<Scalar> out = Tensor2<Scalar>::Zero(dim_, dim_);
    for (Index k = 0; k < dim_; ++k)
      if (x(k) != Scalar(0)) out += x(k) * (*this)(k);
    return out;
  }

  friend bool operator==(const Comultiplication& a, const Comultiplication& b) {
    return same(a.delta_, b.delta_);
  }

 private:
  Index dim_ = 0;
  std::vector<Tensor2<Scalar>> delta_;
};

/// The product on A* dual to Δ: ⟨e_i* ∘ e_j*, e_k⟩ = Δ(e_k)(i, j).
template <typename Scalar>
Algebra<Scalar> dual_product(const Comultiplication<Scalar>& delta) {
  const Index n = delta.dim();
  Algebra<Scalar> out(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(i, j, k) = delta(k)(i, j);
  return out;
}

/// The comultiplication on A* encoding A's product: γ(e_k*)(i, j) = c(i, j, k).
template <typename Scalar>
Comultiplication<Scalar> comultiplication_from_product(const Algebra<Scalar>& a) {
  const Index n = a.dim();
  Comultiplication<Scalar> out(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(k)(i, j) = a(i, j, k);
  return out;
}

template <typename Scalar>
Comultiplication<Scalar> flipped(const Comultiplication<Scalar>& delta) {
  std::vector<Tensor2<Scalar>> out;
  for (const auto& t : delta.values()) out.push_back(flip(t));
  return Comultiplication<Scalar>(std::move(out));
}

namespace detail {

// (D⊗id)t: T(p, q, j) = Σ_i t(i, j) D(e_i)(p, q).
template <typename Scalar>
Tensor3<Scalar> apply_first(const Comultiplication<Scalar>& d, const Tensor2<Scalar>& t) {
  const Index n = d.dim();
  Tensor3<Scalar> out(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (t(i, j) == Scalar(0)) continue;
      for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) out(p, q, j) += t(i, j) * d(i)(p, q);
    }
  return out;
}

// (id⊗D)t: T(i, p, q) = Σ_j t(i, j) D(e_j)(p, q).
template <typename Scalar>
Tensor3<Scalar> apply_second(const Comultiplication<Scalar>& d, const Tensor2<Scalar>& t) {
  const Index n = d.dim();
  Tensor3<Scalar> out(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (t(i, j) == Scalar(0)) continue;
      for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) out(i, p, q) += t(i, j) * d(j)(p, q);
    }
  return out;
}

}  // namespace detail

/// E_Δ(e_k) = (Δ⊗id)Δ − (id⊗Δ)Δ + (σΔ⊗id)σΔ − (id⊗σΔ)σΔ, evaluated at each e_k.
/// All zero exactly when the dual product is anti-flexible.
template <typename Scalar>
std::vector<Tensor3<Scalar>> e_delta_residual(const Comultiplication<Scalar>& delta) {
  const Comultiplication<Scalar> sd = flipped(delta);
  std::vector<Tensor3<Scalar>> out;
  for (Index k = 0; k < delta.dim(); ++k) {
    Tensor3<Scalar> t = detail::apply_first(delta, delta(k));
    t -= detail::apply_second(delta, delta(k));
    t += detail::apply_first(sd, sd(k));
    t -= detail::apply_second(sd, sd(k));
    out.push_back(std::move(t));
  }
  return out;
}

namespace detail {

template <typename Scalar>
void bialgebra_identities(const Algebra<Scalar>& a, const Comultiplication<Scalar>& delta,
                          CheckReport<Scalar>& report) {
  const Index n = a.dim();
  const auto op = [&](Index y, const Tensor2<Scalar>& t) {
    const Matrix<Scalar> ry = a.right(y), ly = a.left(y);
    const Tensor2<Scalar> id_r = t * ry.transpose();
    const Tensor2<Scalar> l_id = ly * t;
    return Tensor2<Scalar>(id_r.transpose() - id_r - l_id.transpose() + l_id);
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Tensor2<Scalar>& dx = delta(i);
      const Tensor2<Scalar>& dy = delta(j);
      const Matrix<Scalar> lx = a.left(i), rx = a.right(i), ly = a.left(j), ry = a.right(j);
      Tensor2<Scalar> first = delta.apply(Vector<Scalar>(a.product(i, j))) +
                              flip(delta.apply(Vector<Scalar>(a.product(j, i))));
      first -= Tensor2<Scalar>(dx * ly.transpose()).transpose();
      first -= ry * dx;
      first -= Tensor2<Scalar>(rx * dy).transpose();
      first -= dy * lx.transpose();
      report.expect_zero("bialgebra-compat-1", {i, j}, std::move(first));
      report.expect_zero("bialgebra-compat-2", {i, j}, Tensor2<Scalar>(op(j, dx) - op(i, dy)));
    }
}

}  // namespace detail

/// A anti-flexible, Δ* anti-flexible (E_Δ = 0), and the two compatibility families
/// between Δ and the product on all basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_bialgebra(const Algebra<Scalar>& a, const Comultiplication<Scalar>& delta,
                                    std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (delta.dim() != a.dim()) throw InputError("bialgebra: comultiplication dimension mismatch");
  CheckReport<Scalar> report(max_witnesses);
  report.merge(check_axiom(a, Axiom::AntiFlexible, max_witnesses));
  const auto e = e_delta_residual(delta);
  for (Index k = 0; k < a.dim(); ++k)
    report.expect_zero("co-anti-flexible", {k}, e[static_cast<std::size_t>(k)]);
  detail::bialgebra_identities(a, delta, report);
  return report;
}

/// (A*, γ) where γ encodes A's product. Throws PreconditionError unless (A, Δ) is a
/// bialgebra, or if the result fails to be one.
template <typename Scalar>
std::pair<Algebra<Scalar>, Comultiplication<Scalar>> dual_bialgebra(
    const Algebra<Scalar>& a, const Comultiplication<Scalar>& delta) {
  if (!check_bialgebra(a, delta, 1).passed())
    throw PreconditionError("dual_bialgebra: input is not an anti-flexible bialgebra");
  std::pair<Algebra<Scalar>, Comultiplication<Scalar>> out{dual_product(delta),
                                                           comultiplication_from_product(a)};
  if (!check_bialgebra(out.first, out.second, 1).passed())
    throw PreconditionError("dual_bialgebra: dual structure fails the bialgebra check");
  return out;
}

/// δ = Δ − σΔ.
template <typename Scalar>
Comultiplication<Scalar> lie_cobracket(const Comultiplication<Scalar>& delta) {
  std::vector<Tensor2<Scalar>> out;
  for (const auto& t : delta.values()) out.push_back(t - t.transpose());
  return Comultiplication<Scalar>(std::move(out));
}

/// For a bialgebra (A, Δ): δ* is a Lie bracket, and δ is a 1-cocycle of the commutator
/// algebra g(A), δ[x,y] = (ad x⊗id + id⊗ad x)δ(y) − (ad y⊗id + id⊗ad y)δ(x).
/// Throws PreconditionError unless (A, Δ) is a bialgebra.
template <typename Scalar>
CheckReport<Scalar> induced_lie_bialgebra(const Algebra<Scalar>& a, const Comultiplication<Scalar>& delta,
                                          std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (!check_bialgebra(a, delta, 1).passed())
    throw PreconditionError("induced Lie bialgebra: input is not an anti-flexible bialgebra");
  CheckReport<Scalar> report(max_witnesses);
  const Comultiplication<Scalar> cob = lie_cobracket(delta);
  report.merge(check_lie_algebra(dual_product(cob), max_witnesses), " (cobracket)");
  const Algebra<Scalar> g = commutator_algebra(a);
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix<Scalar> adx = g.left(i), ady = g.left(j);
      Tensor2<Scalar> res = cob.apply(Vector<Scalar>(g.product(i, j)));
      res -= adx * cob(j) + cob(j) * adx.transpose();
      res += ady * cob(i) + cob(i) * ady.transpose();
      report.expect_zero("cocycle", {i, j}, std::move(res));
    }
  return report;
}

}  // namespace antiflex
