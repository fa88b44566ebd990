#include "chyp/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace chyp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

constexpr double kAccelerationStep = 1e-5;

// Periodic trigonometric interpolant on [0, 1).
class TrigSeries {
 public:
  explicit TrigSeries(const std::vector<Complex>& samples) {
    const int n = static_cast<int>(samples.size());
    for (int m = 0; m < n; ++m) {
      Complex c = 0.0;
      for (int k = 0; k < n; ++k) {
        c += samples[k] * std::polar(1.0, -kTwoPi * m * k / n);
      }
      c /= static_cast<double>(n);
      if (2 * m < n) {
        add(m, c);
      } else if (2 * m > n) {
        add(m - n, c);
      } else {
        // Nyquist term split symmetrically.
        add(m, 0.5 * c);
        add(-m, 0.5 * c);
      }
    }
  }

  Complex operator()(double t, int order = 0) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const double w = kTwoPi * freqs_[i];
      Complex term = coeffs_[i] * std::polar(1.0, w * t);
      for (int d = 0; d < order; ++d) term *= Complex(0.0, w);
      sum += term;
    }
    return sum;
  }

 private:
  void add(int freq, Complex c) {
    freqs_.push_back(freq);
    coeffs_.push_back(c);
  }

  std::vector<int> freqs_;
  std::vector<Complex> coeffs_;
};

CurveLift cayley_image_of_ball_circle(std::function<CVec3(double)> ball_pos,
                                      std::function<CVec3(double)> ball_vel,
                                      std::function<CVec3(double)> ball_acc) {
  const CMat3& c = cayley_matrix();
  return CurveLift::analytic(
      Form::Siegel, [c, f = std::move(ball_pos)](double t) -> CVec3 { return c * f(t); },
      [c, f = std::move(ball_vel)](double t) -> CVec3 { return c * f(t); },
      [c, f = std::move(ball_acc)](double t) -> CVec3 { return c * f(t); });
}

HeisenbergCurve constant_speed_circle(Complex zeta_amp, double v_amp_sin) {
  // zeta = amp-weighted (cos, i sin) combination; v = v_amp sin.
  HeisenbergCurve h;
  h.zeta = [zeta_amp](double t) { return zeta_amp.real() * std::cos(kTwoPi * t) +
                                         Complex(0.0, zeta_amp.imag()) * std::sin(kTwoPi * t); };
  h.dzeta = [zeta_amp](double t) {
    return kTwoPi * (-zeta_amp.real() * std::sin(kTwoPi * t) +
                     Complex(0.0, zeta_amp.imag()) * std::cos(kTwoPi * t));
  };
  h.ddzeta = [zeta_amp](double t) {
    return -kTwoPi * kTwoPi * (zeta_amp.real() * std::cos(kTwoPi * t) +
                               Complex(0.0, zeta_amp.imag()) * std::sin(kTwoPi * t));
  };
  h.v = [v_amp_sin](double t) { return v_amp_sin * std::sin(kTwoPi * t); };
  h.dv = [v_amp_sin](double t) { return kTwoPi * v_amp_sin * std::cos(kTwoPi * t); };
  h.ddv = [v_amp_sin](double t) { return -kTwoPi * kTwoPi * v_amp_sin * std::sin(kTwoPi * t); };
  return h;
}

}  // namespace

CurveLift CurveLift::analytic(Form form, std::function<CVec3(double)> position,
                              std::function<CVec3(double)> velocity,
                              std::function<CVec3(double)> acceleration) {
  CurveLift c;
  c.form = form;
  c.position = std::move(position);
  c.velocity = std::move(velocity);
  c.acceleration = std::move(acceleration);
  c.source = DerivativeSource::Analytic;
  return c;
}

CurveLift CurveLift::from_positions(Form form, std::function<CVec3(double)> position, double step) {
  CurveLift c;
  c.form = form;
  c.position = position;
  c.velocity = [position, step](double t) -> CVec3 {
    return (position(t + step) - position(t - step)) / (2.0 * step);
  };
  c.acceleration = [position, step](double t) -> CVec3 {
    return (position(t + step) - 2.0 * position(t) + position(t - step)) / (step * step);
  };
  c.source = DerivativeSource::FiniteDifference;
  return c;
}

CurveLift CurveLift::from_heisenberg(HeisenbergCurve h) {
  auto pos = [h](double t) -> CVec3 {
    const Complex z = h.zeta(t);
    return CVec3(Complex(-std::norm(z), h.v(t)), kSqrt2 * z, 1.0);
  };
  auto vel = [h](double t) -> CVec3 {
    const Complex z = h.zeta(t);
    const Complex dz = h.dzeta(t);
    return CVec3(Complex(-2.0 * (std::conj(z) * dz).real(), h.dv(t)), kSqrt2 * dz, 0.0);
  };
  auto acc = [h](double t) -> CVec3 {
    const Complex z = h.zeta(t);
    const Complex dz = h.dzeta(t);
    const Complex ddz = h.ddzeta(t);
    const double d2norm = 2.0 * (std::norm(dz) + (std::conj(z) * ddz).real());
    return CVec3(Complex(-d2norm, h.ddv(t)), kSqrt2 * ddz, 0.0);
  };
  return analytic(Form::Siegel, pos, vel, acc);
}

CurveLift CurveLift::from_heisenberg_samples(const std::vector<HeisenbergPoint>& samples) {
  if (samples.size() < 3) throw GeometryError("heisenberg samples: need at least 3 points");
  std::vector<Complex> zs;
  std::vector<Complex> vs;
  for (const auto& p : samples) {
    if (p.is_infinity()) throw GeometryError("heisenberg samples: point at infinity");
    zs.push_back(p.zeta());
    vs.push_back(p.v());
  }
  const TrigSeries z(zs);
  const TrigSeries v(vs);
  HeisenbergCurve h;
  h.zeta = [z](double t) { return z(t, 0); };
  h.dzeta = [z](double t) { return z(t, 1); };
  h.ddzeta = [z](double t) { return z(t, 2); };
  h.v = [v](double t) { return v(t, 0).real(); };
  h.dv = [v](double t) { return v(t, 1).real(); };
  h.ddv = [v](double t) { return v(t, 2).real(); };
  CurveLift c = from_heisenberg(std::move(h));
  c.source = DerivativeSource::Interpolated;
  return c;
}

CVec3 CurveLift::ddv(double t) const {
  if (acceleration) return acceleration(t);
  const double h = kAccelerationStep;
  return (velocity(t + h) - velocity(t - h)) / (2.0 * h);
}

namespace builtin {

CurveLift canonical_rcircle() {
  return cayley_image_of_ball_circle(
      [](double t) { return CVec3(std::cos(kTwoPi * t), std::sin(kTwoPi * t), 1.0); },
      [](double t) { return CVec3(-kTwoPi * std::sin(kTwoPi * t), kTwoPi * std::cos(kTwoPi * t), 0.0); },
      [](double t) {
        const double w2 = kTwoPi * kTwoPi;
        return CVec3(-w2 * std::cos(kTwoPi * t), -w2 * std::sin(kTwoPi * t), 0.0);
      });
}

CurveLift vertical_chain() {
  return cayley_image_of_ball_circle(
      [](double t) { return CVec3(std::polar(1.0, kTwoPi * t), 0.0, 1.0); },
      [](double t) { return CVec3(Complex(0.0, kTwoPi) * std::polar(1.0, kTwoPi * t), 0.0, 0.0); },
      [](double t) { return CVec3(-kTwoPi * kTwoPi * std::polar(1.0, kTwoPi * t), 0.0, 0.0); });
}

CurveLift finite_rcircle() {
  // Image of the real circle (1, sin, cos) under a complex linear map taking
  // the form -x^2 + y^2 + r^2 to the Siegel form.
  const Complex i(0.0, 1.0);
  return CurveLift::analytic(
      Form::Siegel,
      [i](double t) {
        const double s = std::sin(kTwoPi * t);
        const double c = std::cos(kTwoPi * t);
        return CVec3(-1.0 - i * s, i * kSqrt2 * c, 1.0 - i * s);
      },
      [i](double t) {
        const double s = std::sin(kTwoPi * t);
        const double c = std::cos(kTwoPi * t);
        return CVec3(-i * kTwoPi * c, -i * kSqrt2 * kTwoPi * s, -i * kTwoPi * c);
      },
      [i](double t) {
        const double s = std::sin(kTwoPi * t);
        const double c = std::cos(kTwoPi * t);
        const double w2 = kTwoPi * kTwoPi;
        return CVec3(i * w2 * s, -i * kSqrt2 * w2 * c, i * w2 * s);
      });
}

CurveLift horizontal_circle() { return CurveLift::from_heisenberg(constant_speed_circle({1.0, 1.0}, 0.0)); }

CurveLift vertical_circle() { return CurveLift::from_heisenberg(constant_speed_circle({1.0, 0.0}, 1.0)); }

}  // namespace builtin

const std::vector<std::string_view>& builtin_curve_names() {
  static const std::vector<std::string_view> names = {
      "canonical-rcircle", "vertical-chain", "finite-rcircle", "horizontal-circle", "vertical-circle"};
  return names;
}

CurveLift builtin_curve(std::string_view name) {
  if (name == "canonical-rcircle") return builtin::canonical_rcircle();
  if (name == "vertical-chain") return builtin::vertical_chain();
  if (name == "finite-rcircle") return builtin::finite_rcircle();
  if (name == "horizontal-circle") return builtin::horizontal_circle();
  if (name == "vertical-circle") return builtin::vertical_circle();
  throw GeometryError("unknown builtin curve: " + std::string(name));
}

CurveLift transformed(const ProjMap& g, const CurveLift& c) {
  CurveLift out = c;
  const CMat3 m = g.matrix();
  out.position = [m, f = c.position](double t) -> CVec3 { return m * f(t); };
  out.velocity = [m, f = c.velocity](double t) -> CVec3 { return m * f(t); };
  if (c.acceleration) {
    out.acceleration = [m, f = c.acceleration](double t) -> CVec3 { return m * f(t); };
  }
  return out;
}

Chain tangent_chain(const CurveLift& c, double t, double tol) {
  const CVec3 v = c.v(t);
  const CVec3 dv = c.dv(t);
  const CVec3 x = boxtimes(c.form, v, dv);
  if (x.norm() <= tol * v.norm() * dv.norm()) {
    throw GeometryError("tangent_chain: irregular point (v and v' are dependent)");
  }
  switch (sign_class(c.form, x, tol)) {
    case SignClass::Null:
      return Chain::degenerate(BoundaryPoint::project(x, c.form));
    case SignClass::Positive:
      return Chain::polar(ProjPoint(x), c.form, tol);
    case SignClass::Negative:
      break;
  }
  throw GeometryError("tangent_chain: lift is not null (negative cross product)");
}

double legendrian_defect(const CurveLift& c, double t) {
  const CVec3 v = c.v(t);
  return std::abs(herm_inner(c.form, v, c.dv(t))) / v.squaredNorm();
}

LegendrianReport legendrian_report(const CurveLift& c, std::size_t grid, double tol) {
  if (grid == 0) throw GeometryError("legendrian_report: empty grid");
  LegendrianReport r;
  r.tol = tol;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(grid);
    const double d = legendrian_defect(c, t);
    if (d > r.max_defect) {
      r.max_defect = d;
      r.argmax_t = t;
    }
  }
  r.legendrian = r.max_defect <= tol;
  return r;
}

HeisenbergJet heisenberg_jet(const CurveLift& c, double t) {
  const CVec3 s = change_form(c.form, Form::Siegel, c.v(t));
  const CVec3 ds = change_form(c.form, Form::Siegel, c.dv(t));
  if (std::abs(s(2)) <= 1e-8 * s.norm()) throw GeometryError("heisenberg chart: curve at infinity");
  const Complex s3sq = s(2) * s(2);
  HeisenbergJet j;
  j.zeta = s(1) / (kSqrt2 * s(2));
  j.dzeta = (ds(1) * s(2) - s(1) * ds(2)) / (kSqrt2 * s3sq);
  j.v = (s(0) / s(2)).imag();
  j.dv = ((ds(0) * s(2) - s(0) * ds(2)) / s3sq).imag();
  return j;
}

double contact_form(Complex zeta, Complex dzeta, double dv) {
  return dv + 2.0 * (std::conj(zeta) * dzeta).imag();
}

double contact_form(const CurveLift& c, double t) {
  const HeisenbergJet j = heisenberg_jet(c, t);
  return contact_form(j.zeta, j.dzeta, j.dv);
}

PlaneCurve vertical_projection(const CurveLift& c, double t0, double t1, std::size_t samples) {
  if (samples < 2) samples = 2;
  std::vector<Complex> window;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(samples - 1);
    const CVec3 s = change_form(c.form, Form::Siegel, c.v(t));
    if (std::abs(s(2)) <= 1e-8 * s.norm()) {
      throw GeometryError("vertical_projection: curve passes through infinity in the window");
    }
    window.push_back(s(1) / (kSqrt2 * s(2)));
  }

  PlaneCurve p;
  const Form form = c.form;
  p.zeta = [c, form](double t) {
    const CVec3 s = change_form(form, Form::Siegel, c.v(t));
    return s(1) / (kSqrt2 * s(2));
  };
  p.dzeta = [c, form](double t) {
    const CVec3 s = change_form(form, Form::Siegel, c.v(t));
    const CVec3 ds = change_form(form, Form::Siegel, c.dv(t));
    return (ds(1) * s(2) - s(1) * ds(2)) / (kSqrt2 * s(2) * s(2));
  };
  p.ddzeta = [c, form](double t) {
    const CVec3 s = change_form(form, Form::Siegel, c.v(t));
    const CVec3 ds = change_form(form, Form::Siegel, c.dv(t));
    const CVec3 dds = change_form(form, Form::Siegel, c.ddv(t));
    const Complex num = ds(1) * s(2) - s(1) * ds(2);
    const Complex dnum = dds(1) * s(2) - s(1) * dds(2);
    return (dnum * s(2) - 2.0 * num * ds(2)) / (kSqrt2 * s(2) * s(2) * s(2));
  };

  double spread = 0.0;
  for (const Complex& z : window) spread = std::max(spread, std::abs(z - window.front()));
  p.degenerate = spread <= 1e-10 * (1.0 + std::abs(window.front()));
  return p;
}

double plane_curvature(Complex dz, Complex ddz) {
  const double speed = std::abs(dz);
  if (!(speed > 0.0)) throw GeometryError("plane_curvature: singular point (zero velocity)");
  return std::abs((std::conj(dz) * ddz).imag()) / (speed * speed * speed);
}

double plane_curvature(const PlaneCurve& curve, double t) {
  return plane_curvature(curve.dzeta(t), curve.ddzeta(t));
}

ProjMap heisenberg_frame(const BoundaryPoint& origin, const BoundaryPoint& infinity) {
  constexpr Form kS = Form::Siegel;
  const CVec3 p = change_form(origin.form(), kS, origin.rep());
  const CVec3 q = change_form(infinity.form(), kS, infinity.rep());
  const Complex pq = herm_inner(kS, q, p);
  if (std::abs(pq) <= kKernelTol * p.norm() * q.norm()) {
    throw GeometryError("heisenberg_frame: coincident points");
  }
  CVec3 m = ProjPoint::canonical(boxtimes(kS, p, q));
  m /= std::sqrt(herm_square(kS, m));
  CMat3 k;
  k.col(0) = q / pq;
  k.col(1) = m;
  k.col(2) = p;
  return ProjMap(k.inverse());
}

LineFit fit_horizontal_line(std::span<const BoundaryPoint> points) {
  LineFit fit;
  if (points.size() < 2) throw GeometryError("fit_horizontal_line: need two points");
  double far = -1.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double d = chordal_dist(points[0], points[k]);
    if (d > far) {
      far = d;
      fit.anchor_infinity = k;
    }
  }
  const ProjMap h = heisenberg_frame(points[fit.anchor_origin], points[fit.anchor_infinity]);

  std::vector<HeisenbergPoint> chart;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k == fit.anchor_origin || k == fit.anchor_infinity) continue;
    const HeisenbergPoint x = heis_project(apply(h, points[k].in(Form::Siegel)));
    if (!x.is_infinity()) chart.push_back(x);
  }

  Complex axis = 0.0;
  double spread = 0.0;
  for (const auto& x : chart) {
    const double r = std::abs(x.zeta());
    spread = std::max(spread, r);
    if (r > 1e-12) axis += x.zeta() * x.zeta() / (r * r);
  }
  fit.projection_degenerate = spread <= 1e-10;
  fit.direction = 0.5 * std::arg(axis);
  const Complex unrotate = std::polar(1.0, -fit.direction);
  for (const auto& x : chart) {
    const double r = std::abs(x.zeta());
    fit.collinearity_residual =
        std::max(fit.collinearity_residual, std::abs((x.zeta() * unrotate).imag()) / (1.0 + r));
    fit.v_residual = std::max(fit.v_residual, std::abs(x.v()) / (1.0 + r * r));
  }
  if (fit.projection_degenerate) {
    // A vertical chain through the anchors; no horizontal direction exists.
    fit.collinearity_residual = std::max(fit.collinearity_residual, 1.0);
  }
  return fit;
}

const char* to_string(CurveVerdict verdict) {
  switch (verdict) {
    case CurveVerdict::Chain: return "CHAIN";
    case CurveVerdict::RCircle: return "RCIRCLE";
    case CurveVerdict::Neither: return "NEITHER";
  }
  return "?";
}

CurveClassification classify_curve(const CurveLift& c, std::size_t grid, double tol,
                                   std::uint64_t seed) {
  if (grid < 3) throw GeometryError("classify_curve: grid must have at least 3 samples");
  CurveClassification out;
  out.grid = grid;
  out.tol = tol;

  std::vector<CVec3> reps;
  reps.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(grid);
    const CVec3 v = c.v(t);
    const CVec3 dv = c.dv(t);
    if (boxtimes(c.form, v, dv).norm() <= kKernelTol * v.norm() * dv.norm()) {
      throw GeometryError("classify_curve: irregular curve");
    }
    reps.push_back(v);
  }

  out.chain_fit = fit_chain(reps, c.form);
  out.legendrian = legendrian_report(c, grid, tol);

  std::vector<BoundaryPoint> pts;
  pts.reserve(grid);
  for (const CVec3& v : reps) pts.push_back(BoundaryPoint::project(v, c.form));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, grid - 1);
  const std::size_t triples = 1000;
  for (std::size_t n = 0; n < triples; ++n) {
    std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    while (j == i) j = pick(rng);
    while (k == i || k == j) k = pick(rng);
    out.max_cartan_abs = std::max(out.max_cartan_abs, std::abs(cartan_invariant(pts[i], pts[j], pts[k])));
  }
  out.cartan_triples = triples;
  out.line = fit_horizontal_line(pts);

  if (out.chain_fit.residual <= tol) {
    out.verdict = CurveVerdict::Chain;
  } else if (out.legendrian.legendrian && out.max_cartan_abs <= tol &&
             out.line.collinearity_residual <= tol && out.line.v_residual <= tol) {
    out.verdict = CurveVerdict::RCircle;
  } else {
    out.verdict = CurveVerdict::Neither;
  }
  return out;
}

}  // namespace chyp
