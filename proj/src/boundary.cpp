#include "chyp/boundary.hpp"

#include <cmath>

namespace chyp {

namespace {

constexpr double kInfinityRadius = 1e-8;

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

HeisenbergPoint heis_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    throw GeometryError("heis_mul: the point at infinity is not a group element");
  }
  const Complex z = a.zeta() + b.zeta();
  const double v = a.v() + b.v() - 2.0 * (std::conj(a.zeta()) * b.zeta()).imag();
  return {z, v};
}

CMat3 heis_translation(Complex zeta, double v) {
  CMat3 t;
  t << 1.0, -kSqrt2 * std::conj(zeta), Complex(-std::norm(zeta), v),
       0.0, 1.0, kSqrt2 * zeta,
       0.0, 0.0, 1.0;
  return t;
}

BoundaryPoint::BoundaryPoint(const CVec3& v, Form form, double tol)
    : point_(v), form_(form) {
  if (sign_class(form, point_.rep(), tol) != SignClass::Null) {
    throw GeometryError("boundary point: representative is not null");
  }
}

BoundaryPoint::BoundaryPoint(const ProjPoint& p, Form form, double tol)
    : BoundaryPoint(p.rep(), form, tol) {}

BoundaryPoint BoundaryPoint::project(const CVec3& v, Form form) {
  const CVec3 x = change_form(form, Form::Ball, v);
  const double n = x.norm();
  if (!(n > 0.0) || std::abs(x(2)) <= 1e-300) {
    throw GeometryError("boundary projection: vector has no ball-chart image");
  }
  Eigen::Vector2cd w(x(0) / x(2), x(1) / x(2));
  const double r = w.norm();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeometryError("boundary projection: vector has no radial direction");
  }
  w /= r;
  const CVec3 on_sphere(w(0), w(1), 1.0);
  return BoundaryPoint(change_form(Form::Ball, form, on_sphere), form, Unchecked{});
}

BoundaryPoint BoundaryPoint::in(Form target) const {
  if (target == form_) return *this;
  return BoundaryPoint(change_form(form_, target, rep()), target, Unchecked{});
}

BoundaryPoint heis_embed(const HeisenbergPoint& h) {
  if (h.is_infinity()) return BoundaryPoint(CVec3(1.0, 0.0, 0.0), Form::Siegel);
  const Complex z = h.zeta();
  const CVec3 v(Complex(-std::norm(z), h.v()), kSqrt2 * z, 1.0);
  return BoundaryPoint(v, Form::Siegel);
}

Eigen::Vector2cd ball_coordinates(const BoundaryPoint& b) {
  const CVec3 x = change_form(b.form(), Form::Ball, b.rep());
  Eigen::Vector2cd w(x(0) / x(2), x(1) / x(2));
  return w / w.norm();
}

HeisenbergPoint heis_project(const BoundaryPoint& b) {
  const Eigen::Vector2cd w = ball_coordinates(b);
  // The point at infinity [1:0:0] sits at (1, 0) in the ball chart.
  if ((w - Eigen::Vector2cd(1.0, 0.0)).norm() <= kInfinityRadius) {
    return HeisenbergPoint::infinity();
  }
  const CVec3 s = change_form(b.form(), Form::Siegel, b.rep());
  const Complex z1 = s(0) / s(2);
  const Complex z2 = s(1) / s(2);
  return {z2 / kSqrt2, z1.imag()};
}

double chordal_dist(const BoundaryPoint& a, const BoundaryPoint& b) {
  return (ball_coordinates(a) - ball_coordinates(b)).norm();
}

ProjLine tangent_complex_line(const BoundaryPoint& p) {
  // <z, p> = sum_i z_i (J conj(p))_i.
  return ProjLine(gram(p.form()) * p.rep().conjugate());
}

BoundaryPoint apply(const ProjMap& g, const BoundaryPoint& b) {
  return BoundaryPoint::project(g(b.rep()), b.form());
}

}  // namespace chyp
