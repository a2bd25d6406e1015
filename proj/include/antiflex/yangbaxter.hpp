#pragma once

#include <array>
#include <utility>
#include <vector>

#include "antiflex/bialgebra.hpp"

namespace antiflex {

/// Δ(x) = (id⊗L(x))r + (R(x)⊗id)σr.
template <typename Scalar>
Comultiplication<Scalar> coboundary_delta(const Algebra<Scalar>& a, const Tensor2<Scalar>& r) {
  if (r.rows() != a.dim() || r.cols() != a.dim()) throw InputError("r must be an n×n tensor");
  std::vector<Tensor2<Scalar>> out;
  for (Index k = 0; k < a.dim(); ++k)
    out.push_back(r * a.left(k).transpose() + a.right(k) * r.transpose());
  return Comultiplication<Scalar>(std::move(out));
}

/// σΔ(x) = (L(x)⊗id)σr + (id⊗R(x))r, computed independently of coboundary_delta.
template <typename Scalar>
Comultiplication<Scalar> sigma_coboundary_delta(const Algebra<Scalar>& a, const Tensor2<Scalar>& r) {
  if (r.rows() != a.dim() || r.cols() != a.dim()) throw InputError("r must be an n×n tensor");
  std::vector<Tensor2<Scalar>> out;
  for (Index k = 0; k < a.dim(); ++k)
    out.push_back(a.left(k) * r.transpose() + r * a.right(k).transpose());
  return Comultiplication<Scalar>(std::move(out));
}

/// Products r_ab r_cd of two copies of r placed in A⊗A⊗A. The digits name the legs that
/// receive the first and second tensor factor, e.g. r21 = Σ b_i ⊗ a_i ⊗ 1.
enum class RProduct {
  R12R13, R23R12, R13R23, R21R13, R31R21, R21R32, R23R31,
  R13R21, R12R23, R23R13, R21R31, R31R23, R32R21,
};

/// With r = Σ r(i,j) e_i⊗e_j for the left copy and Σ r(k,l) e_k⊗e_l for the right one,
/// each product is Σ r(i,j) r(k,l) times a pure tensor with one leg multiplied out.
template <typename Scalar>
Tensor3<Scalar> r_product(const Algebra<Scalar>& a, const Tensor2<Scalar>& r, RProduct which) {
  const Index n = a.dim();
  if (r.rows() != n || r.cols() != n) throw InputError("r must be an n×n tensor");
  Tensor3<Scalar> t(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (r(i, j) == Scalar(0)) continue;
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) {
          if (r(k, l) == Scalar(0)) continue;
          const Scalar w = r(i, j) * r(k, l);
          for (Index p = 0; p < n; ++p) {
            switch (which) {
              case RProduct::R12R13: t(p, j, l) += w * a(i, k, p); break;
              case RProduct::R23R12: t(k, p, j) += w * a(i, l, p); break;
              case RProduct::R13R23: t(i, k, p) += w * a(j, l, p); break;
              case RProduct::R21R13: t(p, i, l) += w * a(j, k, p); break;
              case RProduct::R31R21: t(p, k, i) += w * a(j, l, p); break;
              case RProduct::R21R32: t(j, p, k) += w * a(i, l, p); break;
              case RProduct::R23R31: t(l, i, p) += w * a(j, k, p); break;
              case RProduct::R13R21: t(p, k, j) += w * a(i, l, p); break;
              case RProduct::R12R23: t(i, p, l) += w * a(j, k, p); break;
              case RProduct::R23R13: t(k, i, p) += w * a(j, l, p); break;
              case RProduct::R21R31: t(p, i, k) += w * a(j, l, p); break;
              case RProduct::R31R23: t(j, k, p) += w * a(i, l, p); break;
              case RProduct::R32R21: t(l, p, i) += w * a(j, k, p); break;
            }
          }
        }
    }
  return t;
}

/// r12 r13 − r23 r12 + r13 r23; zero exactly when r solves the anti-flexible Yang–Baxter equation.
template <typename Scalar>
Tensor3<Scalar> afybe_residual(const Algebra<Scalar>& a, const Tensor2<Scalar>& r) {
  return r_product(a, r, RProduct::R12R13) - r_product(a, r, RProduct::R23R12) +
         r_product(a, r, RProduct::R13R23);
}

/// afybe_residual as a report: one witness per nonzero coefficient, at its index triple.
template <typename Scalar>
CheckReport<Scalar> check_afybe(const Algebra<Scalar>& a, const Tensor2<Scalar>& r,
                                std::size_t max_witnesses = kDefaultMaxWitnesses) {
  const Tensor3<Scalar> t = afybe_residual(a, r);
  CheckReport<Scalar> report(max_witnesses);
  for (Index p = 0; p < t.dim(0); ++p)
    for (Index q = 0; q < t.dim(1); ++q)
      for (Index s = 0; s < t.dim(2); ++s)
        if (t(p, q, s) != Scalar(0)) {
          Vector<Scalar> v(1);
          v(0) = t(p, q, s);
          report.add("afybe", {p, q, s}, std::move(v));
        }
  return report;
}

template <typename Scalar>
struct MNPQ {
  Tensor3<Scalar> m, n, p, q;
};

template <typename Scalar>
MNPQ<Scalar> mnpq(const Algebra<Scalar>& a, const Tensor2<Scalar>& r) {
  const auto rp = [&](RProduct w) { return r_product(a, r, w); };
  return {
      rp(RProduct::R23R12) + rp(RProduct::R21R13) - rp(RProduct::R13R23),
      rp(RProduct::R31R21) - rp(RProduct::R21R32) - rp(RProduct::R23R31),
      rp(RProduct::R13R21) + rp(RProduct::R12R23) - rp(RProduct::R23R13),
      rp(RProduct::R21R31) - rp(RProduct::R31R23) - rp(RProduct::R32R21),
  };
}

/// The conditions under which the coboundary-form Δ of r makes (A, Δ) a bialgebra:
/// A anti-flexible, two identities on s = r + σr for basis pairs, and one identity on M(r)
/// for each basis element.
template <typename Scalar>
CheckReport<Scalar> check_cocommutator_conditions(const Algebra<Scalar>& a, const Tensor2<Scalar>& r,
                                                  std::size_t max_witnesses = kDefaultMaxWitnesses) {
  const Index n = a.dim();
  if (r.rows() != n || r.cols() != n) throw InputError("r must be an n×n tensor");
  CheckReport<Scalar> report(max_witnesses);
  report.merge(check_axiom(a, Axiom::AntiFlexible, max_witnesses));
  const Tensor2<Scalar> s = r + r.transpose();
  std::vector<Matrix<Scalar>> l, rt;
  for (Index i = 0; i < n; ++i) {
    l.push_back(a.left(i));
    rt.push_back(a.right(i));
  }
  const auto ap = [&](const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
    return Tensor2<Scalar>(x * s * y.transpose());
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto &lx = l[static_cast<std::size_t>(i)], &rx = rt[static_cast<std::size_t>(i)];
      const auto &ly = l[static_cast<std::size_t>(j)], &ry = rt[static_cast<std::size_t>(j)];
      report.expect_zero("symmetric-part-1", {i, j}, Tensor2<Scalar>(ap(lx, ry) + ap(rx, ly)));
      report.expect_zero("symmetric-part-2", {i, j},
                         Tensor2<Scalar>(ap(rx, ry) - ap(ry, rx) + ap(lx, ly) - ap(ly, lx)));
    }
  const Tensor3<Scalar> m = mnpq(a, r).m;
  const Tensor3<Scalar> m_cyc = perm3(m, Perm3::S12S13);
  const Tensor3<Scalar> m_12 = perm3(m, Perm3::S12);
  const Tensor3<Scalar> m_13 = perm3(m, Perm3::S13);
  for (Index k = 0; k < n; ++k) {
    const auto &lx = l[static_cast<std::size_t>(k)], &rx = rt[static_cast<std::size_t>(k)];
    Tensor3<Scalar> res = apply_leg(2, lx, m) - apply_leg(0, rx, m_cyc) + apply_leg(2, rx, m_12) -
                          apply_leg(0, lx, m_13);
    report.expect_zero("M-condition", {k}, std::move(res));
  }
  return report;
}

/// With ρ = r viewed as a map A* → A: ρ(a)·ρ(b) = ρ(R*(ρ(a))b + L*(ρ(b))a) on basis pairs.
/// Throws PreconditionError for non-skew r.
template <typename Scalar>
CheckReport<Scalar> operator_form_residual(const Algebra<Scalar>& a, const Tensor2<Scalar>& r,
                                           std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (r.rows() != a.dim() || r.cols() != a.dim()) throw InputError("r must be an n×n tensor");
  if (!is_skew_symmetric(r)) throw PreconditionError("operator form requires skew-symmetric r");
  const Matrix<Scalar> rho = tensor2_as_map(r);
  CheckReport<Scalar> report(max_witnesses);
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<Scalar> ri = rho.col(i), rj = rho.col(j);
      const Vector<Scalar> inner = dual_map(a.right(ri)) * basis_vector<Scalar>(n, j) +
                                   dual_map(a.left(rj)) * basis_vector<Scalar>(n, i);
      report.expect_zero("operator-form", {i, j}, Vector<Scalar>(multiply(a, ri, rj) - rho * inner));
    }
  return report;
}

/// ω(x·y, z) + ω(y·z, x) + ω(z·x, y) = 0 on all basis triples.
template <typename Scalar>
CheckReport<Scalar> check_cyclic_form(const Algebra<Scalar>& a, const BilinearForm<Scalar>& omega,
                                      std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (omega.dim() != a.dim()) throw InputError("form dimension does not match algebra");
  CheckReport<Scalar> report(max_witnesses);
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const auto e = [&](Index t) { return basis_vector<Scalar>(n, t); };
        Vector<Scalar> v(1);
        v(0) = omega(Vector<Scalar>(a.product(i, j)), e(k)) + omega(Vector<Scalar>(a.product(j, k)), e(i)) +
               omega(Vector<Scalar>(a.product(k, i)), e(j));
        report.expect_zero("cyclic", {i, j, k}, std::move(v));
      }
  return report;
}

/// ω(x, y) = ⟨ρ⁻¹x, y⟩ for skew nondegenerate r, with the cyclic-identity verdict.
/// Throws PreconditionError when r is not skew or is degenerate.
template <typename Scalar>
std::pair<BilinearForm<Scalar>, CheckReport<Scalar>> omega_correspondence(
    const Algebra<Scalar>& a, const Tensor2<Scalar>& r, std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (r.rows() != a.dim() || r.cols() != a.dim()) throw InputError("r must be an n×n tensor");
  if (!is_skew_symmetric(r)) throw PreconditionError("omega correspondence requires skew-symmetric r");
  if (!is_invertible(r)) throw PreconditionError("omega correspondence requires nondegenerate r");
  BilinearForm<Scalar> omega(inverse(r));
  CheckReport<Scalar> report = check_cyclic_form(a, omega, max_witnesses);
  return {std::move(omega), std::move(report)};
}

}  // namespace antiflex
