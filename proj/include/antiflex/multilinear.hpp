#pragma once

// Dense exact multilinear algebra: vectors, matrices, 2- and 3-tensors over an
// exact field. Matrices act on coordinate columns. A Tensor2 t over A⊗B stores
// t(i, j) as the coefficient of e_i ⊗ f_j, so it is an ordinary Eigen matrix and
// (X ⊗ Y) t = X t Yᵀ.

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "antiflex/rational.hpp"

namespace antiflex {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Tensor2 = Matrix<Scalar>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Entrywise equality that is false (rather than an assertion) for different shapes.
template <typename A, typename B>
bool same(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <typename Scalar>
bool same(const std::vector<Matrix<Scalar>>& a, const std::vector<Matrix<Scalar>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

template <typename Scalar>
Vector<Scalar> basis_vector(Index n, Index i) {
  Vector<Scalar> v = Vector<Scalar>::Zero(n);
  v(i) = Scalar(1);
  return v;
}

/// Dense tensor in A⊗B⊗C; t(i, j, k) is the coefficient of e_i ⊗ f_j ⊗ g_k.
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index d0, Index d1, Index d2)
      : dims_{d0, d1, d2}, data_(static_cast<std::size_t>(d0 * d1 * d2), Scalar(0)) {}

  static Tensor3 Zero(Index d0, Index d1, Index d2) { return Tensor3(d0, d1, d2); }

  Index dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::array<Index, 3>& dims() const { return dims_; }

  Scalar& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
  const Scalar& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != Scalar(0)) return false;
    return true;
  }

  Tensor3& operator+=(const Tensor3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor3& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator-(Tensor3 a) { return a *= Scalar(-1); }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k);
  }
  void check_same(const Tensor3& o) const {
    if (o.dims_ != dims_) throw InputError("Tensor3 dimension mismatch");
  }

  std::array<Index, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

template <typename Scalar>
Tensor3<Scalar> outer(const Vector<Scalar>& u, const Vector<Scalar>& v, const Vector<Scalar>& w) {
  Tensor3<Scalar> t(u.size(), v.size(), w.size());
  for (Index i = 0; i < u.size(); ++i)
    for (Index j = 0; j < v.size(); ++j)
      for (Index k = 0; k < w.size(); ++k) t(i, j, k) = u(i) * v(j) * w(k);
  return t;
}

/// σ(x⊗y) = y⊗x.
template <typename Scalar>
Tensor2<Scalar> flip(const Tensor2<Scalar>& t) {
  if (t.rows() != t.cols()) throw InputError("flip requires dimA = dimB");
  return t.transpose();
}

/// Permutations of tensor legs. S12S13 maps x⊗y⊗z to z⊗x⊗y (σ12 applied, then σ13).
enum class Perm3 { S12, S13, S12S13 };

template <typename Scalar>
Tensor3<Scalar> perm3(const Tensor3<Scalar>& t, Perm3 which) {
  const Index n = t.dim(0);
  if (t.dim(1) != n || t.dim(2) != n) throw InputError("perm3 requires equal dimensions");
  Tensor3<Scalar> out(n, n, n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      for (Index s = 0; s < n; ++s) {
        switch (which) {
          case Perm3::S12: out(q, p, s) = t(p, q, s); break;
          case Perm3::S13: out(s, q, p) = t(p, q, s); break;
          case Perm3::S12S13: out(s, p, q) = t(p, q, s); break;
        }
      }
  return out;
}

/// α* for ⟨α*(x)u*, v⟩ = ⟨u*, α(x)v⟩ with ⟨e_i*, e_j⟩ = δ_ij: the transpose.
template <typename Scalar>
Matrix<Scalar> dual_map(const Matrix<Scalar>& m) {
  return m.transpose();
}

/// r ∈ A⊗A as the map A* → A with ⟨r, u*⊗v*⟩ = ⟨r(u*), v*⟩; column i is r(e_i*).
template <typename Scalar>
Matrix<Scalar> tensor2_as_map(const Tensor2<Scalar>& r) {
  if (r.rows() != r.cols()) throw InputError("tensor2_as_map requires a square tensor");
  return r.transpose();
}

/// (X ⊗ Y) t.
template <typename Scalar>
Tensor2<Scalar> tensor_apply(const Matrix<Scalar>& x, const Matrix<Scalar>& y,
                             const Tensor2<Scalar>& t) {
  return x * t * y.transpose();
}

/// Applies m to a single leg of t: leg 0 is (m⊗id⊗id), leg 2 is (id⊗id⊗m).
template <typename Scalar>
Tensor3<Scalar> apply_leg(int leg, const Matrix<Scalar>& m, const Tensor3<Scalar>& t) {
  std::array<Index, 3> d = t.dims();
  if (m.cols() != d[static_cast<std::size_t>(leg)])
    throw InputError("apply_leg dimension mismatch");
  d[static_cast<std::size_t>(leg)] = m.rows();
  Tensor3<Scalar> out(d[0], d[1], d[2]);
  for (Index p = 0; p < t.dim(0); ++p)
    for (Index q = 0; q < t.dim(1); ++q)
      for (Index s = 0; s < t.dim(2); ++s) {
        const Scalar& v = t(p, q, s);
        if (v == Scalar(0)) continue;
        for (Index a = 0; a < m.rows(); ++a) {
          switch (leg) {
            case 0: out(a, q, s) += m(a, p) * v; break;
            case 1: out(p, a, s) += m(a, q) * v; break;
            default: out(p, q, a) += m(a, s) * v; break;
          }
        }
      }
  return out;
}

template <typename Scalar>
bool is_skew_symmetric(const Tensor2<Scalar>& r) {
  return r.rows() == r.cols() && is_zero(r + r.transpose());
}

template <typename Scalar>
bool is_symmetric(const Matrix<Scalar>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

namespace detail {

// Row echelon form by exact Gaussian elimination; returns (rank, determinant sign/product).
template <typename Scalar>
std::pair<Index, Scalar> eliminate(Matrix<Scalar>& a, Matrix<Scalar>* companion) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Scalar det(1);
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index pivot = rank;
    while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) {
      det = Scalar(0);
      continue;
    }
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      if (companion) companion->row(pivot).swap(companion->row(rank));
      det = -det;
    }
    const Scalar p = a(rank, col);
    det *= p;
    for (Index j = 0; j < cols; ++j) a(rank, j) /= p;
    if (companion)
      for (Index j = 0; j < companion->cols(); ++j) (*companion)(rank, j) /= p;
    for (Index i = 0; i < rows; ++i) {
      if (i == rank || a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col);
      for (Index j = 0; j < cols; ++j) a(i, j) -= f * a(rank, j);
      if (companion)
        for (Index j = 0; j < companion->cols(); ++j)
          (*companion)(i, j) -= f * (*companion)(rank, j);
    }
    ++rank;
  }
  if (rank < rows || rank < cols) det = Scalar(0);
  return {rank, det};
}

}  // namespace detail

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  return detail::eliminate<Scalar>(a, nullptr).second;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  Matrix<Scalar> a = m;
  return detail::eliminate<Scalar>(a, nullptr).first;
}

template <typename Scalar>
bool is_invertible(const Matrix<Scalar>& m) {
  return m.rows() == m.cols() && determinant(m) != Scalar(0);
}

/// Exact inverse; throws PreconditionError when m is singular.
template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(m.rows(), m.rows());
  if (detail::eliminate<Scalar>(a, &inv).first != m.rows())
    throw PreconditionError("matrix is singular");
  return inv;
}

}  // namespace antiflex
