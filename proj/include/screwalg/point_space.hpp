#pragma once

// The (n+1)-dimensional point-vector space: points embed at level 1, free
// vectors at level 0, and every element resolves uniquely as t*P + u
// relative to a chosen point. Coordinates are relative to the fixed origin
// O0 = (0,...,0).

#include "screwalg/exterior.hpp"

namespace screwalg {

template <class Scalar>
using Point = VectorX<Scalar>;

template <class Scalar>
struct PointVector {
  Scalar lvl = Scalar(0);
  VectorX<Scalar> vpart;  // vector part relative to O0

  Eigen::Index dim() const { return vpart.size(); }
};

template <class Scalar>
PointVector<Scalar> embed_point(const Point<Scalar>& p) {
  return {Scalar(1), p};
}

template <class Scalar>
PointVector<Scalar> embed_vector(const VectorX<Scalar>& u) {
  return {Scalar(0), u};
}

template <class Scalar>
Scalar level(const PointVector<Scalar>& a) {
  return a.lvl;
}

template <class Scalar>
PointVector<Scalar> operator+(const PointVector<Scalar>& a,
                              const PointVector<Scalar>& b) {
  detail::check_same_dim(a.dim(), b.dim());
  return {a.lvl + b.lvl, a.vpart + b.vpart};
}

template <class Scalar>
PointVector<Scalar> operator*(Scalar s, const PointVector<Scalar>& a) {
  return {s * a.lvl, (s * a.vpart).eval()};
}

// s*P + t*Q of two weighted points; a weighted point when s+t != 0, the free
// vector t(Q-P) when s+t = 0.
template <class Scalar>
PointVector<Scalar> weighted_sum(Scalar s, const Point<Scalar>& p, Scalar t,
                                 const Point<Scalar>& q) {
  detail::check_same_dim(p.size(), q.size());
  return {s + t, s * p + t * q};
}

// Unique representation A = t*P + u with u a free vector.
template <class Scalar>
struct Resolution {
  Scalar t;
  VectorX<Scalar> u;
};

template <class Scalar>
Resolution<Scalar> resolve(const PointVector<Scalar>& a, const Point<Scalar>& p) {
  detail::check_same_dim(a.dim(), p.size());
  return {a.lvl, a.vpart - a.lvl * p};
}

// The displacement function O -> t(P-O) + u.
template <class Scalar>
VectorX<Scalar> displacement_eval(Scalar t, const Point<Scalar>& p,
                                  const VectorX<Scalar>& u,
                                  const Point<Scalar>& o) {
  detail::check_same_dim(p.size(), u.size());
  detail::check_same_dim(p.size(), o.size());
  return t * (p - o) + u;
}

// Interior product of the level function with a decomposable point-vector
// bivector A ^ B: the result is level(A) B - level(B) A.
template <class Scalar>
PointVector<Scalar> level_interior(const PointVector<Scalar>& a,
                                   const PointVector<Scalar>& b) {
  detail::check_same_dim(a.dim(), b.dim());
  return a.lvl * b + (-b.lvl) * a;
}

using Pointd = Point<double>;
using PointVectord = PointVector<double>;

}  // namespace screwalg
