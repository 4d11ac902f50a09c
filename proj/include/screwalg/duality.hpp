#pragma once

// The dual picture: force covectors in V*, angular velocities in the Lie
// algebra L of anti-symmetric transformations, torques in L*, the moment
// map, wrench and twist moment functions, the bilinear scalar invariant,
// and the power theorem.
//
// Torque elements use the same pair-indexed layout as bivectors, with the
// pairing <A, omega> = sum_{i<j} A_ij omega_ij. Under these conventions the
// defining identity <z |_| u, omega> = u(omega z) fixes the angular-velocity
// matrix to omega_ij on the upper triangle; note this is the transpose of
// bivector_to_skew, and (z |_| u)_ij = -(z ^ u)_ij.

#include "screwalg/exterior.hpp"
#include "screwalg/point_space.hpp"

#include <vector>

namespace screwalg {

template <class Scalar>
using Covector = VectorX<Scalar>;

template <class Scalar>
struct TorqueElement {
  Eigen::Index dim = 0;
  VectorX<Scalar> coeffs;  // pair-indexed, lexicographic (i,j), i<j

  TorqueElement() = default;
  explicit TorqueElement(Eigen::Index n)
      : dim(n), coeffs(VectorX<Scalar>::Zero(pair_count(n))) {}
  TorqueElement(Eigen::Index n, VectorX<Scalar> c)
      : dim(n), coeffs(std::move(c)) {
    if (coeffs.size() != pair_count(n))
      throw std::invalid_argument("torque coefficient count");
  }
};

template <class Scalar>
TorqueElement<Scalar> operator+(const TorqueElement<Scalar>& a,
                                const TorqueElement<Scalar>& b) {
  detail::check_same_dim(a.dim, b.dim);
  return {a.dim, a.coeffs + b.coeffs};
}

template <class Scalar>
struct AngularVelocity {
  MatrixX<Scalar> skew;  // anti-symmetric; acts on V as z -> skew * z

  Eigen::Index dim() const { return skew.rows(); }
};

template <class Scalar>
AngularVelocity<Scalar> angular_velocity_from_pairs(Eigen::Index n,
                                                    const VectorX<Scalar>& c) {
  if (c.size() != pair_count(n))
    throw std::invalid_argument("angular velocity coefficient count");
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p) {
      m(i, j) = c[p];
      m(j, i) = -c[p];
    }
  return {std::move(m)};
}

template <class Scalar>
VectorX<Scalar> angular_velocity_pairs(const AngularVelocity<Scalar>& w) {
  const Eigen::Index n = w.dim();
  VectorX<Scalar> c(pair_count(n));
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p) c[p] = w.skew(i, j);
  return c;
}

template <class Scalar>
Scalar pairing(const TorqueElement<Scalar>& a, const AngularVelocity<Scalar>& w) {
  detail::check_same_dim(a.dim, w.dim());
  return a.coeffs.dot(angular_velocity_pairs(w));
}

// The moment map (z, u) -> z |_| u, defined by <z |_| u, omega> = u(omega z).
template <class Scalar>
TorqueElement<Scalar> moment_map(const VectorX<Scalar>& z,
                                 const Covector<Scalar>& u) {
  detail::check_same_dim(z.size(), u.size());
  const Eigen::Index n = z.size();
  TorqueElement<Scalar> out(n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p)
      out.coeffs[p] = u[i] * z[j] - u[j] * z[i];
  return out;
}

// Explicit conversions; the core operations never identify V with V* or
// L* with bivectors silently. A couple bivector alpha corresponds to the
// torque with coefficients -alpha (the moment-map side of the sign note
// above).
template <class Scalar>
TorqueElement<Scalar> torque_from_couple(const Bivector<Scalar>& a) {
  return {a.dim, (-a.coeffs).eval()};
}

template <class Scalar>
Covector<Scalar> covector_from_vector(const VectorX<Scalar>& v) {
  return v;
}

template <class Scalar>
struct Wrench {
  Point<Scalar> p;
  Covector<Scalar> u;
  TorqueElement<Scalar> mp;  // M(P)
};

template <class Scalar>
struct Twist {
  Point<Scalar> q;
  AngularVelocity<Scalar> omega;
  VectorX<Scalar> vq;  // velocity at Q
};

// v(O) = omega (O-Q) + v(Q)
template <class Scalar>
VectorX<Scalar> twist_eval(const Twist<Scalar>& t, const Point<Scalar>& o) {
  detail::check_same_dim(t.q.size(), o.size());
  return t.omega.skew * (o - t.q) + t.vq;
}

// M(O) = (P-O) |_| u + M(P)
template <class Scalar>
TorqueElement<Scalar> wrench_eval(const Wrench<Scalar>& w, const Point<Scalar>& o) {
  detail::check_same_dim(w.p.size(), o.size());
  return moment_map<Scalar>((w.p - o).eval(), w.u) + w.mp;
}

// u v(O) + M(O) omega; independent of the reference point O.
template <class Scalar>
Scalar scalar_invariant(const Wrench<Scalar>& w, const Twist<Scalar>& t,
                        const Point<Scalar>& o) {
  return w.u.dot(twist_eval(t, o)) + pairing(wrench_eval(w, o), t.omega);
}

template <class Scalar>
struct PointCovector {
  Point<Scalar> point;
  Covector<Scalar> u;
};

// Aggregate wrench of a force system, referenced at O0.
template <class Scalar>
Wrench<Scalar> aggregate_wrench(const std::vector<PointCovector<Scalar>>& forces,
                                Eigen::Index n) {
  Wrench<Scalar> w{Point<Scalar>::Zero(n), Covector<Scalar>::Zero(n),
                   TorqueElement<Scalar>(n)};
  for (const auto& f : forces) {
    detail::check_same_dim(f.point.size(), n);
    detail::check_same_dim(f.u.size(), n);
    w.u += f.u;
    w.mp = w.mp + moment_map(f.point, f.u);
  }
  return w;
}

// Power of a force system against a rigid motion: the direct sum of force
// times velocity at the point of application.
template <class Scalar>
Scalar power(const std::vector<PointCovector<Scalar>>& forces,
             const Twist<Scalar>& t) {
  Scalar total = Scalar(0);
  for (const auto& f : forces) total += f.u.dot(twist_eval(t, f.point));
  return total;
}

using Covectord = Covector<double>;
using TorqueElementd = TorqueElement<double>;
using AngularVelocityd = AngularVelocity<double>;
using Wrenchd = Wrench<double>;
using Twistd = Twist<double>;
using PointCovectord = PointCovector<double>;

}  // namespace screwalg
