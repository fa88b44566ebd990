#pragma once

#include <Eigen/Dense>

#include "chyp/projective.hpp"

namespace chyp {

/// A point of the one-point compactified Heisenberg space C x R.
class HeisenbergPoint {
 public:
  HeisenbergPoint(Complex zeta, double v) : zeta_(zeta), v_(v), infinite_(false) {}

  static HeisenbergPoint infinity() { return HeisenbergPoint(); }

  bool is_infinity() const { return infinite_; }
  Complex zeta() const { return zeta_; }
  double v() const { return v_; }

 private:
  HeisenbergPoint() : zeta_(0.0), v_(0.0), infinite_(true) {}

  Complex zeta_;
  double v_;
  bool infinite_;
};

/// Heisenberg group law matching the Siegel chart:
/// (z1, v1) * (z2, v2) = (z1 + z2, v1 + v2 - 2 Im(conj(z1) z2)).
HeisenbergPoint heis_mul(const HeisenbergPoint& a, const HeisenbergPoint& b);

/// Siegel-model matrix of left translation by (zeta, v).
CMat3 heis_translation(Complex zeta, double v);

/// A point of the boundary 3-sphere: a projective point that is null under
/// its declared form.
class BoundaryPoint {
 public:
  /// Throws unless v is null to relative tolerance `tol`.
  BoundaryPoint(const CVec3& v, Form form, double tol = kKernelTol);
  BoundaryPoint(const ProjPoint& p, Form form, double tol = kKernelTol);

  /// Radial projection of any vector with a nonzero ball third coordinate
  /// onto the ball model's unit sphere, returned in `form` coordinates.
  static BoundaryPoint project(const CVec3& v, Form form);

  const ProjPoint& point() const { return point_; }
  const CVec3& rep() const { return point_.rep(); }
  Form form() const { return form_; }

  BoundaryPoint in(Form target) const;

 private:
  struct Unchecked {};
  BoundaryPoint(const CVec3& v, Form form, Unchecked) : point_(v), form_(form) {}

  ProjPoint point_;
  Form form_;
};

/// (zeta, v) -> [-|zeta|^2 + iv : sqrt 2 zeta : 1], infinity -> [1:0:0].
BoundaryPoint heis_embed(const HeisenbergPoint& h);

/// Inverse chart. Non-null input is rejected; points whose ball image lies
/// within 1e-8 (chordal) of the image of [1:0:0] map to infinity.
HeisenbergPoint heis_project(const BoundaryPoint& b);

/// Unit representative (z1, z2) in C^2 of the ball-model point.
Eigen::Vector2cd ball_coordinates(const BoundaryPoint& b);

/// Euclidean distance on S^3 subset C^2 after conversion to the ball model.
double chordal_dist(const BoundaryPoint& a, const BoundaryPoint& b);

/// The complex line {z : <z, p> = 0} tangent to the sphere at p.
ProjLine tangent_complex_line(const BoundaryPoint& p);

/// Image of a boundary point under a form-unitary map given in the same form.
BoundaryPoint apply(const ProjMap& g, const BoundaryPoint& b);

}  // namespace chyp
