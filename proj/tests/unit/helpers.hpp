#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "chyp/random.hpp"

namespace test {

using chyp::Complex;
using chyp::CVec3;
using chyp::CMat3;

inline const Complex I(0.0, 1.0);
inline const double kSqrt2 = std::sqrt(2.0);
inline constexpr double kPi = std::numbers::pi;

// Projective equality by the rank-one test |a x b| / (|a| |b|).
inline double proj_gap(const CVec3& a, const CVec3& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      worst = std::max(worst, std::abs(a(i) * b(j) - a(j) * b(i)));
    }
  }
  return worst / (a.norm() * b.norm());
}

// Direct expansion of the two forms, independent of the library's Gram
// matrices.
inline Complex ball_form(const CVec3& z, const CVec3& w) {
  return z(0) * std::conj(w(0)) + z(1) * std::conj(w(1)) - z(2) * std::conj(w(2));
}
inline Complex siegel_form(const CVec3& z, const CVec3& w) {
  return z(0) * std::conj(w(2)) + z(1) * std::conj(w(1)) + z(2) * std::conj(w(0));
}

}  // namespace test
