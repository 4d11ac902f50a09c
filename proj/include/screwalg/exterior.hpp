#pragma once

// Exterior algebra over an n-dimensional inner-product space: vectors,
// bivectors, trivectors, wedge/interior/scalar products, orthogonal
// splitting, and the n=3 pseudovector and skew-matrix correspondences.
// The basis is implicitly orthonormal; coefficients are stored densely in
// lexicographic order of the index pair/triple.

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>

namespace screwalg {

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr Eigen::Index pair_count(Eigen::Index n) {
  return n * (n - 1) / 2;
}

inline constexpr Eigen::Index triple_count(Eigen::Index n) {
  return n * (n - 1) * (n - 2) / 6;
}

// Lexicographic rank of (i,j) with 0 <= i < j < n.
inline Eigen::Index pair_index(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Lexicographic rank of (i,j,k) with 0 <= i < j < k < n.
inline Eigen::Index triple_index(Eigen::Index n, Eigen::Index i,
                                 Eigen::Index j, Eigen::Index k) {
  Eigen::Index rank = 0;
  for (Eigen::Index a = 0; a < i; ++a) rank += pair_count(n - 1 - a);
  for (Eigen::Index b = i + 1; b < j; ++b) rank += n - 1 - b;
  return rank + (k - j - 1);
}

namespace detail {
inline void check_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}
}  // namespace detail

template <class Scalar>
struct Bivector {
  Eigen::Index dim = 0;
  VectorX<Scalar> coeffs;  // pair_count(dim) entries, lexicographic (i,j), i<j

  Bivector() = default;
  explicit Bivector(Eigen::Index n)
      : dim(n), coeffs(VectorX<Scalar>::Zero(pair_count(n))) {}
  Bivector(Eigen::Index n, VectorX<Scalar> c) : dim(n), coeffs(std::move(c)) {
    if (coeffs.size() != pair_count(n))
      throw std::invalid_argument("bivector coefficient count");
  }

  // Signed coefficient a_{ij} with a_{ij} = -a_{ji}, a_{ii} = 0.
  Scalar coeff(Eigen::Index i, Eigen::Index j) const {
    if (i == j) return Scalar(0);
    if (i < j) return coeffs[pair_index(dim, i, j)];
    return -coeffs[pair_index(dim, j, i)];
  }

  Scalar& at(Eigen::Index i, Eigen::Index j) {
    return coeffs[pair_index(dim, i, j)];
  }
};

template <class Scalar>
struct Trivector {
  Eigen::Index dim = 0;
  VectorX<Scalar> coeffs;  // triple_count(dim) entries, lexicographic

  Trivector() = default;
  explicit Trivector(Eigen::Index n)
      : dim(n), coeffs(VectorX<Scalar>::Zero(triple_count(n))) {}
  Trivector(Eigen::Index n, VectorX<Scalar> c) : dim(n), coeffs(std::move(c)) {
    if (coeffs.size() != triple_count(n))
      throw std::invalid_argument("trivector coefficient count");
  }

  Scalar& at(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return coeffs[triple_index(dim, i, j, k)];
  }
};

template <class Scalar>
Bivector<Scalar> operator+(const Bivector<Scalar>& a, const Bivector<Scalar>& b) {
  detail::check_same_dim(a.dim, b.dim);
  return {a.dim, a.coeffs + b.coeffs};
}

template <class Scalar>
Bivector<Scalar> operator-(const Bivector<Scalar>& a, const Bivector<Scalar>& b) {
  detail::check_same_dim(a.dim, b.dim);
  return {a.dim, a.coeffs - b.coeffs};
}

template <class Scalar>
Bivector<Scalar> operator-(const Bivector<Scalar>& a) {
  return {a.dim, (-a.coeffs).eval()};
}

template <class Scalar>
Bivector<Scalar> operator*(Scalar s, const Bivector<Scalar>& a) {
  return {a.dim, (s * a.coeffs).eval()};
}

template <class Scalar>
Trivector<Scalar> operator+(const Trivector<Scalar>& a, const Trivector<Scalar>& b) {
  detail::check_same_dim(a.dim, b.dim);
  return {a.dim, a.coeffs + b.coeffs};
}

template <class Scalar>
Trivector<Scalar> operator*(Scalar s, const Trivector<Scalar>& a) {
  return {a.dim, (s * a.coeffs).eval()};
}

// v ^ w, coefficient at (i,j) is v_i w_j - v_j w_i.
template <class Scalar>
Bivector<Scalar> wedge_vv(const VectorX<Scalar>& v, const VectorX<Scalar>& w) {
  detail::check_same_dim(v.size(), w.size());
  const Eigen::Index n = v.size();
  Bivector<Scalar> out(n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p)
      out.coeffs[p] = v[i] * w[j] - v[j] * w[i];
  return out;
}

// u ^ a, coefficient at (i,j,k) is u_i a_{jk} - u_j a_{ik} + u_k a_{ij}.
template <class Scalar>
Trivector<Scalar> wedge_vb(const VectorX<Scalar>& u, const Bivector<Scalar>& a) {
  detail::check_same_dim(u.size(), a.dim);
  const Eigen::Index n = u.size();
  Trivector<Scalar> out(n);
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k, ++t)
        out.coeffs[t] =
            u[i] * a.coeff(j, k) - u[j] * a.coeff(i, k) + u[k] * a.coeff(i, j);
  return out;
}

// u -| a; on decomposables u -| (v ^ w) = (u.v) w - (u.w) v.
template <class Scalar>
VectorX<Scalar> interior_vb(const VectorX<Scalar>& u, const Bivector<Scalar>& a) {
  detail::check_same_dim(u.size(), a.dim);
  const Eigen::Index n = u.size();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p) {
      out[j] += u[i] * a.coeffs[p];
      out[i] -= u[j] * a.coeffs[p];
    }
  return out;
}

template <class Scalar>
Scalar dot_bb(const Bivector<Scalar>& a, const Bivector<Scalar>& b) {
  detail::check_same_dim(a.dim, b.dim);
  return a.coeffs.dot(b.coeffs);
}

template <class Scalar>
Scalar magnitude_b(const Bivector<Scalar>& a) {
  return a.coeffs.norm();
}

template <class Scalar>
Scalar magnitude_t(const Trivector<Scalar>& a) {
  return a.coeffs.norm();
}

// Recovers w with u ^ w = a, given u != 0 and u ^ a = 0 (trivector lemma).
// The returned w is the canonical representative orthogonal to u; absent
// when u ^ a is not zero within tolerance.
template <class Scalar>
std::optional<VectorX<Scalar>> trivector_factor(const VectorX<Scalar>& u,
                                                const Bivector<Scalar>& a,
                                                Scalar tol = Scalar(1e-9)) {
  detail::check_same_dim(u.size(), a.dim);
  const Scalar un = u.norm();
  if (un == Scalar(0)) throw std::invalid_argument("trivector_factor: u = 0");
  const Scalar residual = magnitude_t(wedge_vb(u, a));
  if (residual > tol * un * std::max(magnitude_b(a), Scalar(1)))
    return std::nullopt;
  return VectorX<Scalar>((interior_vb(u, a) / (un * un)).eval());
}

// Splits a = beta + u ^ z with u -| beta = 0 and z orthogonal to u.
template <class Scalar>
struct OrthogonalSplit {
  Bivector<Scalar> beta;
  VectorX<Scalar> z;
};

template <class Scalar>
OrthogonalSplit<Scalar> orthogonal_split(const VectorX<Scalar>& u,
                                         const Bivector<Scalar>& a) {
  detail::check_same_dim(u.size(), a.dim);
  const Scalar uu = u.squaredNorm();
  if (uu == Scalar(0)) throw std::invalid_argument("orthogonal_split: u = 0");
  VectorX<Scalar> z = interior_vb(u, a) / uu;  // automatically orthogonal to u
  Bivector<Scalar> beta = a - wedge_vv(u, z);
  return {std::move(beta), std::move(z)};
}

// Anti-symmetric matrix M with M u = u -| a for every u (the Lie-algebra
// identification of a bivector with an infinitesimal rotation).
template <class Scalar>
MatrixX<Scalar> bivector_to_skew(const Bivector<Scalar>& a) {
  const Eigen::Index n = a.dim;
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar c = a.coeff(i, j);
      m(j, i) = c;
      m(i, j) = -c;
    }
  return m;
}

template <class Scalar>
Bivector<Scalar> skew_to_bivector(const MatrixX<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("skew_to_bivector: not square");
  Bivector<Scalar> a(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) a.at(i, j) = m(j, i);
  return a;
}

// n = 3 only: right-handed convention, e1 ^ e2 <-> e3; wedge_vv maps to the
// classical cross product.
template <class Scalar>
VectorX<Scalar> bivector_to_pseudovector(const Bivector<Scalar>& a) {
  if (a.dim != 3)
    throw std::invalid_argument("bivector_to_pseudovector: dim != 3");
  VectorX<Scalar> out(3);
  out << a.coeffs[2], -a.coeffs[1], a.coeffs[0];
  return out;
}

template <class Scalar>
Bivector<Scalar> pseudovector_to_bivector(const VectorX<Scalar>& v) {
  if (v.size() != 3)
    throw std::invalid_argument("pseudovector_to_bivector: dim != 3");
  Bivector<Scalar> a(3);
  a.coeffs << v[2], -v[1], v[0];
  return a;
}

using Vectord = VectorX<double>;
using Bivectord = Bivector<double>;
using Trivectord = Trivector<double>;

}  // namespace screwalg
