#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antiflex/check_report.hpp"
#include "antiflex/multilinear.hpp"

namespace antiflex {

/// Finite-dimensional algebra given by structure constants,
/// e_i · e_j = Σ_k c(i, j, k) e_k. No axiom is presumed.
template <typename Scalar>
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(Index dim, std::string name = {})
      : constants_(dim, dim, dim), name_(std::move(name)) {}
  explicit Algebra(Tensor3<Scalar> constants, std::string name = {})
      : constants_(std::move(constants)), name_(std::move(name)) {
    if (constants_.dim(0) != constants_.dim(1) || constants_.dim(0) != constants_.dim(2))
      throw InputError("structure constants must have shape n×n×n");
  }

  Index dim() const { return constants_.dim(0); }
  const Scalar& operator()(Index i, Index j, Index k) const { return constants_(i, j, k); }
  Scalar& operator()(Index i, Index j, Index k) { return constants_(i, j, k); }
  const Tensor3<Scalar>& constants() const { return constants_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Basis labels for reports; empty when none were supplied.
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names) {
    if (!names.empty() && static_cast<Index>(names.size()) != dim())
      throw InputError("basis name count does not match dimension");
    basis_names_ = std::move(names);
  }

  /// Matrix of L(e_i): y ↦ e_i · y.
  Matrix<Scalar> left(Index i) const {
    Matrix<Scalar> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j)
      for (Index k = 0; k < dim(); ++k) m(k, j) = constants_(i, j, k);
    return m;
  }

  /// Matrix of R(e_i): y ↦ y · e_i.
  Matrix<Scalar> right(Index i) const {
    Matrix<Scalar> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j)
      for (Index k = 0; k < dim(); ++k) m(k, j) = constants_(j, i, k);
    return m;
  }

  Matrix<Scalar> left(const Vector<Scalar>& x) const { return combine(x, true); }
  Matrix<Scalar> right(const Vector<Scalar>& x) const { return combine(x, false); }

  Vector<Scalar> product(Index i, Index j) const {
    Vector<Scalar> v(dim());
    for (Index k = 0; k < dim(); ++k) v(k) = constants_(i, j, k);
    return v;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.constants_ == b.constants_;
  }

 private:
  Matrix<Scalar> combine(const Vector<Scalar>& x, bool left_side) const {
    if (x.size() != dim()) throw InputError("vector length does not match algebra dimension");
    Matrix<Scalar> m = Matrix<Scalar>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (x(i) != Scalar(0)) m += x(i) * (left_side ? left(i) : right(i));
    return m;
  }

  Tensor3<Scalar> constants_;
  std::string name_;
  std::vector<std::string> basis_names_;
};

/// Matrix of a bilinear form, b(i, j) = 𝔅(e_i, e_j).
template <typename Scalar>
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix<Scalar> entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw InputError("bilinear form must be square");
  }
  static BilinearForm Zero(Index n) { return BilinearForm(Matrix<Scalar>::Zero(n, n)); }

  Index dim() const { return entries_.rows(); }
  const Matrix<Scalar>& matrix() const { return entries_; }
  Scalar operator()(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
    return x.dot(entries_ * y);
  }
  const Scalar& operator()(Index i, Index j) const { return entries_(i, j); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return same(a.entries_, b.entries_);
  }

 private:
  Matrix<Scalar> entries_;
};

template <typename Scalar>
Vector<Scalar> multiply(const Algebra<Scalar>& a, const Vector<Scalar>& x,
                        const Vector<Scalar>& y) {
  if (x.size() != a.dim() || y.size() != a.dim())
    throw InputError("multiply: vector length does not match algebra dimension");
  Vector<Scalar> out = Vector<Scalar>::Zero(a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    if (x(i) == Scalar(0)) continue;
    for (Index j = 0; j < a.dim(); ++j) {
      if (y(j) == Scalar(0)) continue;
      const Scalar w = x(i) * y(j);
      for (Index k = 0; k < a.dim(); ++k) out(k) += w * a(i, j, k);
    }
  }
  return out;
}

/// (x, y, z) = (xy)z − x(yz).
template <typename Scalar>
Vector<Scalar> associator(const Algebra<Scalar>& a, const Vector<Scalar>& x,
                          const Vector<Scalar>& y, const Vector<Scalar>& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

enum class Axiom { AntiFlexible, Flexible, Associative };

inline const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::AntiFlexible: return "anti-flexible";
    case Axiom::Flexible: return "flexible";
    case Axiom::Associative: return "associative";
  }
  return "?";
}

/// Checks an identity on every basis triple (i, j, k); sufficient by trilinearity.
/// Residuals: (i,j,k) − (k,j,i) for anti-flexible, (i,j,k) + (k,j,i) for flexible,
/// (i,j,k) for associative.
template <typename Scalar>
CheckReport<Scalar> check_axiom(const Algebra<Scalar>& a, Axiom axiom,
                                std::size_t max_witnesses = kDefaultMaxWitnesses) {
  CheckReport<Scalar> report(max_witnesses);
  const Index n = a.dim();
  std::vector<Vector<Scalar>> e;
  for (Index i = 0; i < n; ++i) e.push_back(basis_vector<Scalar>(n, i));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vector<Scalar> res = associator(a, e[i], e[j], e[k]);
        if (axiom == Axiom::AntiFlexible) res -= associator(a, e[k], e[j], e[i]);
        if (axiom == Axiom::Flexible) res += associator(a, e[k], e[j], e[i]);
        report.expect_zero(axiom_name(axiom), {i, j, k}, std::move(res));
      }
  return report;
}

template <typename Scalar>
bool is_anti_flexible(const Algebra<Scalar>& a) {
  return check_axiom(a, Axiom::AntiFlexible, 1).passed();
}

/// The bracket algebra [x, y] = x·y − y·x.
template <typename Scalar>
Algebra<Scalar> commutator_algebra(const Algebra<Scalar>& a) {
  Algebra<Scalar> g(a.dim(), a.name().empty() ? std::string{} : "g(" + a.name() + ")");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k) g(i, j, k) = a(i, j, k) - a(j, i, k);
  g.set_basis_names(a.basis_names());
  return g;
}

/// Anticommutativity on pairs and Jacobi on triples of a bracket table.
template <typename Scalar>
CheckReport<Scalar> check_lie_algebra(const Algebra<Scalar>& g,
                                      std::size_t max_witnesses = kDefaultMaxWitnesses) {
  CheckReport<Scalar> report(max_witnesses);
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      report.expect_zero("anticommutativity", {i, j},
                         Vector<Scalar>(g.product(i, j) + g.product(j, i)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const auto ei = basis_vector<Scalar>(n, i);
        const auto ej = basis_vector<Scalar>(n, j);
        const auto ek = basis_vector<Scalar>(n, k);
        Vector<Scalar> res = multiply(g, ei, multiply(g, ej, ek)) +
                             multiply(g, ej, multiply(g, ek, ei)) +
                             multiply(g, ek, multiply(g, ei, ej));
        report.expect_zero("jacobi", {i, j, k}, std::move(res));
      }
  return report;
}

struct FormFlags {
  bool symmetric = false;
  bool skew = false;
  bool nondegenerate = false;
};

/// 𝔅(x·y, z) = 𝔅(x, y·z) on basis triples, plus whichever flags are requested.
template <typename Scalar>
CheckReport<Scalar> check_invariant_form(const Algebra<Scalar>& a, const BilinearForm<Scalar>& b,
                                         FormFlags flags = {},
                                         std::size_t max_witnesses = kDefaultMaxWitnesses) {
  if (b.dim() != a.dim()) throw InputError("bilinear form dimension does not match algebra");
  CheckReport<Scalar> report(max_witnesses);
  const Index n = a.dim();
  const auto scalar = [](Scalar s) {
    Vector<Scalar> v(1);
    v(0) = std::move(s);
    return v;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const auto ei = basis_vector<Scalar>(n, i);
        const auto ek = basis_vector<Scalar>(n, k);
        const Scalar res = b(Vector<Scalar>(a.product(i, j)), ek) - b(ei, Vector<Scalar>(a.product(j, k)));
        report.expect_zero("invariance", {i, j, k}, scalar(res));
      }
  if (flags.symmetric)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        report.expect_zero("symmetry", {i, j}, scalar(b(i, j) - b(j, i)));
  if (flags.skew)
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        report.expect_zero("skew-symmetry", {i, j}, scalar(b(i, j) + b(j, i)));
  if (flags.nondegenerate && determinant(b.matrix()) == Scalar(0))
    report.add("nondegeneracy", {}, scalar(Scalar(0)));
  return report;
}

/// With φ: A → A*, ⟨φ(x), y⟩ = 𝔅(x, y), verifies φL(x) = R*(x)φ and φR(x) = L*(x)φ.
/// Throws PreconditionError unless 𝔅 is symmetric, invariant and nondegenerate.
template <typename Scalar>
CheckReport<Scalar> check_form_equivalence(const Algebra<Scalar>& a,
                                           const BilinearForm<Scalar>& b,
                                           std::size_t max_witnesses = kDefaultMaxWitnesses) {
  const auto pre = check_invariant_form(a, b, {.symmetric = true, .nondegenerate = true}, 1);
  if (!pre.passed())
    throw PreconditionError("form equivalence requires a symmetric invariant nondegenerate form (" +
                            pre.witnesses().front().relation + " fails)");
  CheckReport<Scalar> report(max_witnesses);
  const Matrix<Scalar> phi = b.matrix().transpose();
  for (Index i = 0; i < a.dim(); ++i) {
    const Matrix<Scalar> l = a.left(i);
    const Matrix<Scalar> r = a.right(i);
    report.expect_zero("phi L = R* phi", {i}, Matrix<Scalar>(phi * l - dual_map(r) * phi));
    report.expect_zero("phi R = L* phi", {i}, Matrix<Scalar>(phi * r - dual_map(l) * phi));
  }
  return report;
}

/// Rewrites the structure constants in the basis e'_i = Σ_a p(a, i) e_a.
template <typename Scalar>
Algebra<Scalar> change_basis(const Algebra<Scalar>& a, const Matrix<Scalar>& p) {
  const Index n = a.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("change_basis: shape mismatch");
  const Matrix<Scalar> pinv = inverse(p);
  Algebra<Scalar> out(n, a.name());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<Scalar> prod = multiply(a, Vector<Scalar>(p.col(i)), Vector<Scalar>(p.col(j)));
      const Vector<Scalar> coords = pinv * prod;
      for (Index k = 0; k < n; ++k) out(i, j, k) = coords(k);
    }
  return out;
}

/// The algebra on the subspace spanned by the given basis indices, assuming it is
/// closed; products leaving the span are dropped (callers check closure first).
template <typename Scalar>
Algebra<Scalar> restrict_to(const Algebra<Scalar>& a, const std::vector<Index>& idx) {
  const Index m = static_cast<Index>(idx.size());
  Algebra<Scalar> out(m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) out(i, j, k) = a(idx[i], idx[j], idx[k]);
  if (!a.basis_names().empty()) {
    std::vector<std::string> names;
    for (Index i : idx) names.push_back(a.basis_names()[static_cast<std::size_t>(i)]);
    out.set_basis_names(std::move(names));
  }
  return out;
}

}  // namespace antiflex
