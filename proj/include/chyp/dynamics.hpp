#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chyp/chains.hpp"

namespace chyp {

enum class IsometryClass { Loxodromic, Elliptic, Parabolic };
const char* to_string(IsometryClass c);

/// Moduli within this band of 1 count as unit.
inline constexpr double kUnitModulusTol = 1e-8;

/// Rejects maps that are not form-unitary at 1e-9.
IsometryClass classify_isometry(const ProjMap& g, Form form, double tol = kUnitModulusTol);

struct FixedPoints {
  BoundaryPoint attracting;
  BoundaryPoint repelling;
};

/// Null eigenvectors of the largest and smallest modulus eigenvalues.
FixedPoints fixed_boundary_points(const ProjMap& g, Form form, double tol = kUnitModulusTol);

struct LoxodromicData {
  Complex lambda;
  /// The multiplier of zeta; its square is lambda.
  Complex sqrt_lambda;
  BoundaryPoint attracting;
  BoundaryPoint repelling;
  /// Siegel-model map taking attracting to [0:0:1] and repelling to [1:0:0].
  ProjMap conjugator;
};

LoxodromicData normalize_loxodromic(const ProjMap& g, Form form, double tol = kUnitModulusTol);

/// (zeta, v) -> (lambda^{1/2} zeta, |lambda| v).
HeisenbergPoint normal_form_action(const LoxodromicData& d, const HeisenbergPoint& x);

/// Largest chart discrepancy between h g h^-1 and the normal form over the
/// probes, measured as |dzeta| + |dv| / (1 + |v|).
double normal_form_residual(const ProjMap& g, Form form, const LoxodromicData& d,
                            std::span<const HeisenbergPoint> probes);

/// g^k x for k = 1..n, each projected back onto the sphere.
std::vector<BoundaryPoint> iterate_on_boundary(const ProjMap& g, const BoundaryPoint& x, std::size_t n);

}  // namespace chyp
