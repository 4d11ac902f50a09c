#pragma once

// Line bivectors (screws): sliding vectors and couples, moment functions,
// vector/trivector invariants, classification, the Poinsot central-axis
// reduction, decomposition into sliding vectors at given points, and
// reconstruction from sampled moments.
//
// A screw is stored canonically as the pair (u, m0): the vector invariant
// together with the moment at the coordinate origin O0. This makes equality
// trivial; the (P, u, alpha) representation is not unique.

#include "screwalg/exterior.hpp"
#include "screwalg/point_space.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace screwalg {

template <class Scalar>
struct LineBivector {
  VectorX<Scalar> u;    // vector invariant
  Bivector<Scalar> m0;  // moment at O0

  Eigen::Index dim() const { return u.size(); }
};

template <class Scalar>
struct SlidingVector {
  Point<Scalar> point;
  VectorX<Scalar> u;
};

template <class Scalar>
LineBivector<Scalar> zero_screw(Eigen::Index n) {
  return {VectorX<Scalar>::Zero(n), Bivector<Scalar>(n)};
}

template <class Scalar>
LineBivector<Scalar> from_sliding(const Point<Scalar>& p, const VectorX<Scalar>& u) {
  detail::check_same_dim(p.size(), u.size());
  return {u, wedge_vv(p, u)};
}

template <class Scalar>
LineBivector<Scalar> from_sliding(const SlidingVector<Scalar>& s) {
  return from_sliding(s.point, s.u);
}

template <class Scalar>
LineBivector<Scalar> from_couple(const Bivector<Scalar>& a) {
  return {VectorX<Scalar>::Zero(a.dim), a};
}

template <class Scalar>
LineBivector<Scalar> operator+(const LineBivector<Scalar>& a,
                               const LineBivector<Scalar>& b) {
  detail::check_same_dim(a.dim(), b.dim());
  return {a.u + b.u, a.m0 + b.m0};
}

template <class Scalar>
LineBivector<Scalar> operator-(const LineBivector<Scalar>& a,
                               const LineBivector<Scalar>& b) {
  detail::check_same_dim(a.dim(), b.dim());
  return {a.u - b.u, a.m0 - b.m0};
}

template <class Scalar>
LineBivector<Scalar> operator*(Scalar c, const LineBivector<Scalar>& m) {
  return {(c * m.u).eval(), c * m.m0};
}

template <class Scalar>
Scalar screw_norm(const LineBivector<Scalar>& m) {
  return std::sqrt(m.u.squaredNorm() + m.m0.coeffs.squaredNorm());
}

// The moment function O -> (P-O) ^ u + alpha, evaluated from the canonical
// pair as m0 + (O0 - O) ^ u.
template <class Scalar>
Bivector<Scalar> moment_at(const LineBivector<Scalar>& m, const Point<Scalar>& o) {
  detail::check_same_dim(m.dim(), o.size());
  return m.m0 - wedge_vv(o, m.u);
}

template <class Scalar>
const VectorX<Scalar>& vector_invariant(const LineBivector<Scalar>& m) {
  return m.u;
}

template <class Scalar>
Trivector<Scalar> trivector_invariant(const LineBivector<Scalar>& m) {
  return wedge_vb(m.u, m.m0);
}

// u1 ^ M2 + u2 ^ M1, independent of the evaluation point.
template <class Scalar>
Trivector<Scalar> bilinear_trivector_invariant(const LineBivector<Scalar>& m1,
                                               const LineBivector<Scalar>& m2) {
  detail::check_same_dim(m1.dim(), m2.dim());
  return wedge_vb(m1.u, m2.m0) + wedge_vb(m2.u, m1.m0);
}

enum class ScrewKind { zero, sliding, couple, general };

template <class Scalar>
struct Classification {
  ScrewKind kind;
  Point<Scalar> point;        // a point on the line (sliding only)
  VectorX<Scalar> direction;  // line direction (sliding only)
  Bivector<Scalar> couple;    // the couple (couple only)
};

template <class Scalar>
struct AxisDecomposition {
  enum class Kind { sliding_plus_couple, pure_couple };
  Kind kind;
  Point<Scalar> q;         // canonical axis point, (Q-O0) orthogonal to u
  VectorX<Scalar> u;
  Bivector<Scalar> beta;   // residual couple, u -| beta = 0
};

// Poinsot reduction M = Q ^ u + beta with u -| beta = 0. The canonical Q is
// the axis point closest to O0.
template <class Scalar>
AxisDecomposition<Scalar> central_axis(const LineBivector<Scalar>& m) {
  const Eigen::Index n = m.dim();
  if (m.u.norm() == Scalar(0)) {
    return {AxisDecomposition<Scalar>::Kind::pure_couple,
            VectorX<Scalar>::Zero(n), m.u, m.m0};
  }
  // m0 = beta + u ^ z with z orthogonal to u, so m0 = (-z) ^ u + beta.
  auto split = orthogonal_split(m.u, m.m0);
  return {AxisDecomposition<Scalar>::Kind::sliding_plus_couple,
          (-split.z).eval(), m.u, std::move(split.beta)};
}

template <class Scalar>
Classification<Scalar> classify(const LineBivector<Scalar>& m,
                                Scalar tol = Scalar(1e-9)) {
  const Eigen::Index n = m.dim();
  Classification<Scalar> out{ScrewKind::general, VectorX<Scalar>::Zero(n),
                             VectorX<Scalar>::Zero(n), Bivector<Scalar>(n)};
  const Scalar un = m.u.norm();
  const Scalar mn = magnitude_b(m.m0);
  const Scalar scale = un + mn;
  if (scale == Scalar(0)) {
    out.kind = ScrewKind::zero;
    return out;
  }
  if (un <= tol * scale) {
    out.kind = ScrewKind::couple;
    out.couple = m.m0;
    return out;
  }
  if (magnitude_t(trivector_invariant(m)) <= tol * un * std::max(mn, un)) {
    out.kind = ScrewKind::sliding;
    auto axis = central_axis(m);
    out.point = axis.q;
    out.direction = m.u;
    return out;
  }
  return out;
}

// Expresses M as a sum of n sliding vectors at the first n of the given n+1
// affinely independent points (the P_i ^ P_j expansion in the point basis).
template <class Scalar>
std::vector<SlidingVector<Scalar>> decompose_at_points(
    const LineBivector<Scalar>& m, const std::vector<Point<Scalar>>& points) {
  const Eigen::Index n = m.dim();
  if (static_cast<Eigen::Index>(points.size()) != n + 1)
    throw std::invalid_argument("decompose_at_points: need n+1 points");
  for (const auto& p : points) detail::check_same_dim(p.size(), n);

  const Eigen::Index d = n + pair_count(n);  // C(n+1,2)
  MatrixX<Scalar> basis(d, d);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  pairs.reserve(d);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i <= n; ++i)
    for (Eigen::Index j = i + 1; j <= n; ++j, ++col) {
      // P_i ^ P_j = P_i ^ (P_j - P_i) as a screw.
      auto b = from_sliding<Scalar>(points[i], points[j] - points[i]);
      basis.col(col).head(n) = b.u;
      basis.col(col).tail(d - n) = b.m0.coeffs;
      pairs.emplace_back(i, j);
    }

  VectorX<Scalar> rhs(d);
  rhs.head(n) = m.u;
  rhs.tail(d - n) = m.m0.coeffs;

  Eigen::FullPivLU<MatrixX<Scalar>> lu(basis);
  if (!lu.isInvertible())
    throw std::domain_error("decompose_at_points: points affinely dependent");
  VectorX<Scalar> c = lu.solve(rhs);

  std::vector<SlidingVector<Scalar>> out;
  out.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.push_back({points[i], VectorX<Scalar>::Zero(n)});
  for (Eigen::Index p = 0; p < d; ++p) {
    auto [i, j] = pairs[p];
    if (i < n) out[i].u += c[p] * (points[j] - points[i]);
  }
  return out;
}

// P ^ u + v ^ w = P ^ (u-w) + (P+v) ^ w: two sliding vectors.
template <class Scalar>
std::pair<SlidingVector<Scalar>, SlidingVector<Scalar>> decompose_two(
    const Point<Scalar>& p, const VectorX<Scalar>& u, const VectorX<Scalar>& v,
    const VectorX<Scalar>& w) {
  detail::check_same_dim(p.size(), u.size());
  detail::check_same_dim(p.size(), v.size());
  detail::check_same_dim(p.size(), w.size());
  return {{p, u - w}, {(p + v).eval(), w}};
}

// Recovers the screw from moments sampled at three non-collinear points.
// Throws when the points are collinear or the data is not a moment function.
template <class Scalar>
LineBivector<Scalar> from_three_moments(
    const Point<Scalar>& o1, const Point<Scalar>& o2, const Point<Scalar>& o3,
    const Bivector<Scalar>& m1, const Bivector<Scalar>& m2,
    const Bivector<Scalar>& m3, Scalar tol = Scalar(1e-9)) {
  const Eigen::Index n = o1.size();
  detail::check_same_dim(o2.size(), n);
  detail::check_same_dim(o3.size(), n);
  detail::check_same_dim(m1.dim, n);
  detail::check_same_dim(m2.dim, n);
  detail::check_same_dim(m3.dim, n);

  const VectorX<Scalar> d2 = o1 - o2;
  const VectorX<Scalar> d3 = o1 - o3;
  if (magnitude_b(wedge_vv(d2, d3)) <= tol * d2.norm() * d3.norm())
    throw std::domain_error("from_three_moments: collinear points");

  // (O1-O) ^ u is linear in u; stack both difference equations.
  const Eigen::Index np = pair_count(n);
  MatrixX<Scalar> sys = MatrixX<Scalar>::Zero(2 * np, n);
  VectorX<Scalar> rhs(2 * np);
  auto fill = [&](Eigen::Index block, const VectorX<Scalar>& d,
                  const Bivector<Scalar>& mo) {
    Eigen::Index p = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j, ++p) {
        sys(block * np + p, j) += d[i];
        sys(block * np + p, i) -= d[j];
        rhs[block * np + p] = mo.coeffs[p] - m1.coeffs[p];
      }
  };
  fill(0, d2, m2);
  fill(1, d3, m3);

  VectorX<Scalar> u = sys.colPivHouseholderQr().solve(rhs);
  LineBivector<Scalar> m{u, m1 + wedge_vv(o1, u)};

  const Scalar scale =
      magnitude_b(m1) + magnitude_b(m2) + magnitude_b(m3) +
      u.norm() * (Scalar(1) + o1.norm() + o2.norm() + o3.norm());
  const Scalar residual = magnitude_b(moment_at(m, o1) - m1) +
                          magnitude_b(moment_at(m, o2) - m2) +
                          magnitude_b(moment_at(m, o3) - m3);
  if (residual > tol * std::max(scale, Scalar(1)))
    throw std::domain_error("from_three_moments: data is not a moment function");
  return m;
}

using LineBivectord = LineBivector<double>;
using SlidingVectord = SlidingVector<double>;

}  // namespace screwalg
