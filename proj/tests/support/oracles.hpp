#pragma once

// Straight-from-the-definition evaluations used to cross-check the library.
// Everything here loops over structure constants directly and shares no code with
// the checked routines beyond the containers.

#include <array>
#include <string>

#include "antiflex/antiflex.hpp"

namespace oracle {

using namespace antiflex;
using Q = Rational;

inline Vector<Q> mul(const Tensor3<Q>& c, const Vector<Q>& x, const Vector<Q>& y) {
  const Index n = c.dim(0);
  Vector<Q> out = Vector<Q>::Zero(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(k) += x(i) * y(j) * c(i, j, k);
  return out;
}

inline Vector<Q> e(Index n, Index i) {
  Vector<Q> v = Vector<Q>::Zero(n);
  v(i) = Q(1);
  return v;
}

inline Vector<Q> assoc(const Tensor3<Q>& c, const Vector<Q>& x, const Vector<Q>& y, const Vector<Q>& z) {
  return mul(c, mul(c, x, y), z) - mul(c, x, mul(c, y, z));
}

/// (x,y,z) = (z,y,x) on every basis triple.
inline bool anti_flexible(const Tensor3<Q>& c) {
  const Index n = c.dim(0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (assoc(c, e(n, i), e(n, j), e(n, k)) != assoc(c, e(n, k), e(n, j), e(n, i))) return false;
  return true;
}

/// The same, for a raw table given as Δ(e_k)(i, j) = c(i, j, k).
inline bool dual_anti_flexible(const Comultiplication<Q>& d) {
  const Index n = d.dim();
  Tensor3<Q> c(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) c(i, j, k) = d(k)(i, j);
  return anti_flexible(c);
}

/// r_{ab} r_{cd} in A⊗A⊗A by explicit placement: the first copy of r puts its legs on
/// positions a and b, the second on c and d; a position holding two factors multiplies
/// them in order, first copy on the left. Positions are 1-based.
inline Tensor3<Q> placed_product(const Algebra<Q>& alg, const Tensor2<Q>& r, std::array<int, 2> first,
                                 std::array<int, 2> second) {
  const Index n = alg.dim();
  Tensor3<Q> out(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) {
          const Q coef = r(i, j) * r(k, l);
          if (coef == 0) continue;
          std::array<std::vector<Index>, 3> slots;
          slots[first[0] - 1].push_back(i);
          slots[first[1] - 1].push_back(j);
          slots[second[0] - 1].push_back(k);
          slots[second[1] - 1].push_back(l);
          std::array<Vector<Q>, 3> legs;
          for (int p = 0; p < 3; ++p) {
            const auto& s = slots[p];
            legs[p] = s.size() == 1 ? e(n, s[0]) : mul(alg.constants(), e(n, s[0]), e(n, s[1]));
          }
          for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
              for (Index z = 0; z < n; ++z) out(x, y, z) += coef * legs[0](x) * legs[1](y) * legs[2](z);
        }
  return out;
}

/// Reads legs off a name such as "r23r12".
inline Tensor3<Q> placed_product(const Algebra<Q>& alg, const Tensor2<Q>& r, const std::string& name) {
  const auto d = [&](std::size_t at) { return name[at] - '0'; };
  return placed_product(alg, r, {d(1), d(2)}, {d(4), d(5)});
}

inline Tensor3<Q> afybe(const Algebra<Q>& alg, const Tensor2<Q>& r) {
  return placed_product(alg, r, "r12r13") - placed_product(alg, r, "r23r12") + placed_product(alg, r, "r13r23");
}

/// l(x) f = x ▷ f etc. checked by expanding both bimodule identities on basis triples (x, y, f).
inline bool bimodule(const Bimodule<Q>& bm) {
  const Index n = bm.base().dim(), m = bm.mdim();
  const auto& c = bm.base().constants();
  const auto act = [&](const std::vector<Matrix<Q>>& maps, const Vector<Q>& x, const Vector<Q>& f) {
    Vector<Q> out = Vector<Q>::Zero(m);
    for (Index i = 0; i < n; ++i) out += x(i) * (maps[static_cast<std::size_t>(i)] * f);
    return out;
  };
  const auto& l = bm.left_maps();
  const auto& r = bm.right_maps();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < m; ++k) {
        const Vector<Q> x = e(n, i), y = e(n, j), f = e(m, k);
        const Vector<Q> one = act(l, mul(c, x, y), f) - act(l, x, act(l, y, f)) - act(r, x, act(r, y, f)) +
                              act(r, mul(c, y, x), f);
        const Vector<Q> two = act(l, x, act(r, y, f)) - act(r, y, act(l, x, f)) - act(l, y, act(r, x, f)) +
                              act(r, x, act(l, y, f));
        if (!is_zero(one) || !is_zero(two)) return false;
      }
  return true;
}

}  // namespace oracle
