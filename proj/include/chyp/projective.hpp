#pragma once

#include "chyp/hermitian.hpp"

namespace chyp {

/// A point of P^2_C held by its canonical representative: unit Euclidean
/// norm, first significant component (|v_i| > 1e-8 |v|) real positive.
class ProjPoint {
 public:
  explicit ProjPoint(const CVec3& v);

  const CVec3& rep() const { return rep_; }
  const Complex& operator[](int i) const { return rep_(i); }

  /// Canonical representative of [v]. Idempotent, bit-identical on reuse.
  static CVec3 canonical(const CVec3& v);

 private:
  CVec3 rep_;
};

/// Plain comparison of canonical representatives.
bool approx_equal(const ProjPoint& a, const ProjPoint& b, double tol = kKernelTol);

/// sin of the Fubini-Study angle between [a] and [b]; zero iff equal.
double proj_distance(const ProjPoint& a, const ProjPoint& b);
double proj_distance(const CVec3& a, const CVec3& b);

/// The line {A x + B y + C z = 0}, coefficients canonically normalized.
class ProjLine {
 public:
  explicit ProjLine(const CVec3& coeffs);

  const CVec3& coeffs() const { return coeffs_; }

  /// |A x + B y + C z| <= tol for the unit representative of p.
  bool contains(const ProjPoint& p, double tol = kKernelTol) const;
  double residual(const ProjPoint& p) const;

 private:
  CVec3 coeffs_;
};

/// A projective transformation, stored as its determinant-one lift.
class ProjMap {
 public:
  explicit ProjMap(const CMat3& m);

  static ProjMap identity();

  const CMat3& matrix() const { return m_; }

  ProjMap inverse() const;
  ProjMap operator*(const ProjMap& other) const;

  CVec3 operator()(const CVec3& v) const { return m_ * v; }

 private:
  CMat3 m_;
};

/// Line through two distinct points, from the Ball cross product of the
/// representatives. Throws when p and q coincide.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

ProjPoint apply(const ProjMap& g, const ProjPoint& p);

/// Image line: coefficients transform by the inverse transpose.
ProjLine apply(const ProjMap& g, const ProjLine& line);

}  // namespace chyp
