#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "chyp/chains.hpp"

namespace chyp {

enum class DerivativeSource { Analytic, FiniteDifference, Interpolated };

/// A Heisenberg-chart curve with analytic derivatives up to order two.
struct HeisenbergCurve {
  std::function<Complex(double)> zeta, dzeta, ddzeta;
  std::function<double(double)> v, dv, ddv;
};

/// A closed boundary curve t in [0,1) -> [v(t)] given by a lift and its
/// derivatives. The acceleration may be absent; it is then obtained by
/// central differences of the velocity.
struct CurveLift {
  Form form = Form::Siegel;
  std::function<CVec3(double)> position;
  std::function<CVec3(double)> velocity;
  std::function<CVec3(double)> acceleration;
  DerivativeSource source = DerivativeSource::Analytic;

  static CurveLift analytic(Form form, std::function<CVec3(double)> position,
                            std::function<CVec3(double)> velocity,
                            std::function<CVec3(double)> acceleration = {});

  /// Derivatives by central differences with the given step.
  static CurveLift from_positions(Form form, std::function<CVec3(double)> position,
                                  double step = 1e-5);

  /// Siegel lift (-|zeta|^2 + iv, sqrt 2 zeta, 1) of a chart curve.
  static CurveLift from_heisenberg(HeisenbergCurve curve);

  /// Periodic trigonometric interpolant through samples taken at t = k/N,
  /// lifted through the Heisenberg chart. Needs at least 3 finite points.
  static CurveLift from_heisenberg_samples(const std::vector<HeisenbergPoint>& samples);

  CVec3 v(double t) const { return position(t); }
  CVec3 dv(double t) const { return velocity(t); }
  CVec3 ddv(double t) const;
};

namespace builtin {

/// P^2_R intersected with the sphere; passes through infinity at t = 0.
CurveLift canonical_rcircle();
/// The chain {z2 = 0} in Siegel coordinates (a vertical line plus infinity).
CurveLift vertical_chain();
/// The standard finite R-circle through (i, 0), (0, -1), (-i, 0), (0, 1).
CurveLift finite_rcircle();
/// (e^{2 pi i t}, 0): a finite chain centred at the origin.
CurveLift horizontal_circle();
/// (cos 2 pi t, sin 2 pi t): neither a chain nor Legendrian.
CurveLift vertical_circle();

}  // namespace builtin

/// Names accepted by builtin_curve().
const std::vector<std::string_view>& builtin_curve_names();
CurveLift builtin_curve(std::string_view name);

/// The curve g o c, with lift g v(t).
CurveLift transformed(const ProjMap& g, const CurveLift& c);

/// Tangent chain at t: the polar chain to [v(t) ⊠ v'(t)], degenerate when
/// that point is null. Throws at an irregular point (vanishing product).
Chain tangent_chain(const CurveLift& c, double t, double tol = kKernelTol);

/// |<v, v'>| / |v|^2, i.e. |<v, v'>| for the unit-normalized lift.
double legendrian_defect(const CurveLift& c, double t);

struct LegendrianReport {
  double max_defect = 0.0;
  double argmax_t = 0.0;
  bool legendrian = true;
  double tol = 0.0;
};

LegendrianReport legendrian_report(const CurveLift& c, std::size_t grid, double tol);

/// Chart coordinates and their first derivatives at t.
struct HeisenbergJet {
  Complex zeta;
  Complex dzeta;
  double v = 0.0;
  double dv = 0.0;
};

/// Throws when the curve is at (or within 1e-8 of) infinity at t.
HeisenbergJet heisenberg_jet(const CurveLift& c, double t);

/// Value of the contact form dv + 2 Im(conj(zeta) dzeta) on a velocity.
double contact_form(Complex zeta, Complex dzeta, double dv);
double contact_form(const CurveLift& c, double t);

struct PlaneCurve {
  std::function<Complex(double)> zeta, dzeta, ddzeta;
  /// zeta is constant on the checked window (a vertical chain).
  bool degenerate = false;
};

/// Vertical projection (zeta, v) -> zeta of the curve on [t0, t1]. Throws
/// when any of `samples` window points is at infinity.
PlaneCurve vertical_projection(const CurveLift& c, double t0, double t1,
                               std::size_t samples = 64);

/// Classical curvature |Im(conj(z') z'')| / |z'|^3. Throws when z' = 0.
double plane_curvature(Complex dz, Complex ddz);
double plane_curvature(const PlaneCurve& curve, double t);

/// Siegel-model map sending `origin` to [0:0:1] and `infinity` to [1:0:0],
/// unitary for the Siegel form.
ProjMap heisenberg_frame(const BoundaryPoint& origin, const BoundaryPoint& infinity);

/// Fit of a point set to a horizontal line through the origin after
/// normalizing two anchor points to the origin and infinity.
struct LineFit {
  double direction = 0.0;
  double collinearity_residual = 0.0;
  double v_residual = 0.0;
  bool projection_degenerate = false;
  std::size_t anchor_origin = 0;
  std::size_t anchor_infinity = 0;
};

/// Anchors: point 0 and the point farthest from it (chordal metric).
LineFit fit_horizontal_line(std::span<const BoundaryPoint> points);

enum class CurveVerdict { Chain, RCircle, Neither };
const char* to_string(CurveVerdict verdict);

struct CurveClassification {
  CurveVerdict verdict = CurveVerdict::Neither;
  ChainFit chain_fit;
  LegendrianReport legendrian;
  double max_cartan_abs = 0.0;
  std::size_t cartan_triples = 0;
  LineFit line;
  std::size_t grid = 0;
  double tol = 0.0;
};

inline constexpr std::size_t kDefaultCurveGrid = 512;
inline constexpr double kDefaultClassifierTol = 1e-8;

/// CHAIN when one polar point fits every grid sample; RCIRCLE when the
/// curve is Legendrian, all sampled Cartan triples vanish and the
/// normalized projection is a horizontal line; otherwise NEITHER.
CurveClassification classify_curve(const CurveLift& c, std::size_t grid = kDefaultCurveGrid,
                                   double tol = kDefaultClassifierTol,
                                   std::uint64_t seed = 0x5eedULL);

}  // namespace chyp
