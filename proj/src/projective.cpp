#include "chyp/projective.hpp"

#include <cmath>
#include <limits>

namespace chyp {

namespace {

constexpr double kSignificant = 1e-8;

}  // namespace

CVec3 ProjPoint::canonical(const CVec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError("projective point: zero or non-finite representative");
  }
  CVec3 u = v;
  // Already canonical up to rounding in the norm: keep the bits.
  bool canonical_already = std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon();
  if (canonical_already) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(v(i)) > kSignificant) {
        canonical_already = v(i).imag() == 0.0 && v(i).real() > 0.0;
        break;
      }
    }
    if (canonical_already) return v;
  }
  u /= n;
  for (int i = 0; i < 3; ++i) {
    const double a = std::abs(u(i));
    if (a > kSignificant) {
      u *= std::conj(u(i)) / a;
      u(i) = Complex(u(i).real(), 0.0);
      break;
    }
  }
  return u;
}

ProjPoint::ProjPoint(const CVec3& v) : rep_(canonical(v)) {}

bool approx_equal(const ProjPoint& a, const ProjPoint& b, double tol) {
  return (a.rep() - b.rep()).norm() <= tol;
}

double proj_distance(const CVec3& a, const CVec3& b) {
  const CVec3 ua = a.normalized();
  const CVec3 ub = b.normalized();
  // Residual of ua after projecting onto the complex line of ub.
  return (ua - ub * ub.dot(ua)).norm();
}

double proj_distance(const ProjPoint& a, const ProjPoint& b) {
  return proj_distance(a.rep(), b.rep());
}

ProjLine::ProjLine(const CVec3& coeffs) : coeffs_(ProjPoint::canonical(coeffs)) {}

double ProjLine::residual(const ProjPoint& p) const {
  return std::abs(coeffs_.cwiseProduct(p.rep()).sum());
}

bool ProjLine::contains(const ProjPoint& p, double tol) const {
  return residual(p) <= tol;
}

ProjMap::ProjMap(const CMat3& m) {
  const double scale = m.norm();
  if (!(scale > 0.0) || std::abs(m.determinant()) <= 1e-14 * scale * scale * scale) {
    throw GeometryError("projective map: singular matrix");
  }
  m_ = det_normalized(m);
}

ProjMap ProjMap::identity() { return ProjMap(CMat3::Identity()); }

ProjMap ProjMap::inverse() const { return ProjMap(m_.inverse()); }

ProjMap ProjMap::operator*(const ProjMap& other) const { return ProjMap(m_ * other.m_); }

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  const CVec3 x = boxtimes(Form::Ball, p.rep(), q.rep());
  if (x.norm() <= kKernelTol) throw GeometryError("line_through: coincident points");
  // <z, x>_ball = 0 reads sum_i z_i (J conj(x))_i = 0.
  return ProjLine(gram(Form::Ball) * x.conjugate());
}

ProjPoint apply(const ProjMap& g, const ProjPoint& p) { return ProjPoint(g(p.rep())); }

ProjLine apply(const ProjMap& g, const ProjLine& line) {
  return ProjLine(g.matrix().inverse().transpose() * line.coeffs());
}

}  // namespace chyp
