#pragma once

// Rigid-body statics: force systems as sums of sliding vectors plus couples,
// resultants, equilibrium testing, and the planar three-way classification.

#include "screwalg/screw.hpp"

#include <vector>

namespace screwalg {

template <class Scalar>
struct PointForce {
  Point<Scalar> point;
  VectorX<Scalar> force;
};

template <class Scalar>
struct ForceSystem {
  Eigen::Index dim = 0;
  std::vector<PointForce<Scalar>> forces;
  std::vector<Bivector<Scalar>> couples;
};

template <class Scalar>
LineBivector<Scalar> resultant(const ForceSystem<Scalar>& sys) {
  LineBivector<Scalar> total = zero_screw<Scalar>(sys.dim);
  for (const auto& f : sys.forces) {
    detail::check_same_dim(f.point.size(), sys.dim);
    detail::check_same_dim(f.force.size(), sys.dim);
    total = total + from_sliding(f.point, f.force);
  }
  for (const auto& c : sys.couples) {
    detail::check_same_dim(c.dim, sys.dim);
    total = total + from_couple(c);
  }
  return total;
}

// Magnitude scale of the system; equilibrium residuals are judged relative
// to this rather than to absolute zero.
template <class Scalar>
Scalar system_scale(const ForceSystem<Scalar>& sys) {
  Scalar scale = Scalar(0);
  for (const auto& f : sys.forces)
    scale += f.force.norm() * (Scalar(1) + f.point.norm());
  for (const auto& c : sys.couples) scale += magnitude_b(c);
  return scale;
}

template <class Scalar>
bool is_equilibrium(const ForceSystem<Scalar>& sys, Scalar tol = Scalar(1e-9)) {
  const LineBivector<Scalar> r = resultant(sys);
  const Scalar scale = system_scale(sys);
  return r.u.norm() <= tol * scale && magnitude_b(r.m0) <= tol * scale;
}

enum class PlanarKind { zero, sliding, couple };

// n = 2 only; trivectors vanish, so "general" cannot occur.
template <class Scalar>
PlanarKind classify_planar(const LineBivector<Scalar>& m,
                           Scalar tol = Scalar(1e-9)) {
  if (m.dim() != 2) throw std::invalid_argument("classify_planar: dim != 2");
  switch (classify(m, tol).kind) {
    case ScrewKind::zero:
      return PlanarKind::zero;
    case ScrewKind::couple:
      return PlanarKind::couple;
    case ScrewKind::sliding:
      return PlanarKind::sliding;
    default:
      throw std::logic_error("classify_planar: planar screw classified general");
  }
}

using ForceSystemd = ForceSystem<double>;
using PointForced = PointForce<double>;

}  // namespace screwalg
