#pragma once

// Small named examples, each built from a construction rather than typed in.

#include "antiflex/matched.hpp"
#include "antiflex/operators.hpp"

namespace antiflex::fixtures {

/// e·e = e.
template <typename Scalar = Rational>
Algebra<Scalar> a1() {
  Algebra<Scalar> a(1, "A1");
  a(0, 0, 0) = Scalar(1);
  a.set_basis_names({"e"});
  return a;
}

/// The zero algebra of dimension 2.
template <typename Scalar = Rational>
Algebra<Scalar> z2() {
  Algebra<Scalar> a(2, "Z2");
  a.set_basis_names({"e1", "e2"});
  return a;
}

/// The one-dimensional bimodule of A1 with l(e) = 6/5, r(e) = 3/5.
template <typename Scalar = Rational>
Bimodule<Scalar> b1() {
  Matrix<Scalar> l(1, 1), r(1, 1);
  l(0, 0) = Scalar(6) / Scalar(5);
  r(0, 0) = Scalar(3) / Scalar(5);
  return Bimodule<Scalar>(a1<Scalar>(), 1, {l}, {r});
}

/// A1 ⋉ B1: anti-flexible, neither flexible nor associative.
template <typename Scalar = Rational>
Algebra<Scalar> af2() {
  Algebra<Scalar> a = semidirect_product(a1<Scalar>(), b1<Scalar>());
  a.set_name("AF2");
  a.set_basis_names({"e1", "e2"});
  return a;
}

/// e1 ⊗ e2 − e2 ⊗ e1 over AF2.
template <typename Scalar = Rational>
Tensor2<Scalar> af2_r() {
  Tensor2<Scalar> r = Tensor2<Scalar>::Zero(2, 2);
  r(0, 1) = Scalar(1);
  r(1, 0) = Scalar(-1);
  return r;
}

/// One-dimensional dendriform algebra: e ≻ e = e, e ≺ e = 0.
template <typename Scalar = Rational>
PreAlgebra<Scalar> d1() {
  PreAlgebra<Scalar> p(1);
  p.succ(0, 0, 0) = Scalar(1);
  return p;
}

namespace detail {
template <typename Scalar>
std::pair<Algebra<Scalar>, Tensor2<Scalar>> d1_solution() {
  const Bimodule<Scalar> bm = pre_bimodule(d1<Scalar>());
  return solution_from_o_operator(Matrix<Scalar>(Matrix<Scalar>::Identity(1, 1)), bm);
}
}  // namespace detail

/// u·u = u, v·u = v.
template <typename Scalar = Rational>
Algebra<Scalar> w2() {
  Algebra<Scalar> w = detail::d1_solution<Scalar>().first;
  w.set_name("W2");
  w.set_basis_names({"u", "v"});
  return w;
}

/// u ⊗ v − v ⊗ u over W2.
template <typename Scalar = Rational>
Tensor2<Scalar> r_star() {
  return detail::d1_solution<Scalar>().second;
}

/// The coboundary-form comultiplication of r_star on W2: Δ(u) = −u⊗v, Δ(v) = −v⊗v.
template <typename Scalar = Rational>
Comultiplication<Scalar> delta1() {
  return coboundary_delta(w2<Scalar>(), r_star<Scalar>());
}

/// The product on W2* dual to delta1: u*∘v* = −u*, v*∘v* = −v*.
template <typename Scalar = Rational>
Algebra<Scalar> w2_dual() {
  Algebra<Scalar> a = dual_product(delta1<Scalar>());
  a.set_name("W2*");
  a.set_basis_names({"u*", "v*"});
  return a;
}

/// The pre-anti-flexible structure on W2 induced by the form inverse to r_star.
template <typename Scalar = Rational>
PreAlgebra<Scalar> p1() {
  const auto omega = omega_correspondence(w2<Scalar>(), r_star<Scalar>()).first;
  return pre_from_omega(w2<Scalar>(), omega);
}

}  // namespace antiflex::fixtures
