#include "chyp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "chyp/limitset.hpp"
#include "chyp/random.hpp"

namespace chyp {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t scaled(std::size_t n, const VerifyOptions& o) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(n) * o.scale));
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void check(SuiteReport& r, double residual, double threshold) {
  r.max_residual = std::max(r.max_residual, residual);
  if (!(residual <= threshold)) r.passed = false;
}

// Projective residual between two chains' distinguished points.
double chain_residual(const Chain& a, const Chain& b) {
  if (a.is_degenerate() != b.is_degenerate()) return 1.0;
  return proj_distance(a.polar_point(), b.polar_point());
}

SuiteReport suite_cross_product(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "cross-product";
  r.threshold = 1e-9;
  Rng rng(o.seed);
  for (Form f : {Form::Ball, Form::Siegel}) {
    const std::size_t n = scaled(10000, o);
    double orth = 0.0, equi = 0.0, lagr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const CVec3 z = random_cvec(rng);
      const CVec3 w = random_cvec(rng);
      const CVec3 x = boxtimes(f, z, w);
      const double scale = x.norm();
      orth = std::max(orth, std::abs(herm_inner(f, x, z)) / (scale * z.norm()));
      orth = std::max(orth, std::abs(herm_inner(f, x, w)) / (scale * w.norm()));
      const CMat3 m = random_form_unitary(f, rng, 0.5);
      equi = std::max(equi, (m * x - boxtimes(f, m * z, m * w)).norm() / scale);
      const Complex lhs = herm_inner(f, x, x);
      const Complex rhs =
          herm_inner(f, w, z) * herm_inner(f, z, w) - herm_inner(f, w, w) * herm_inner(f, z, z);
      lagr = std::max(lagr, std::abs(lhs - rhs) / (z.squaredNorm() * w.squaredNorm()));
      ++r.cases;
    }
    check(r, orth, r.threshold);
    check(r, equi, r.threshold);
    check(r, lagr, r.threshold);
    r.details.push_back(std::string(to_string(f)) +
                        fmt(": orthogonality %.3e  equivariance %.3e  lagrange %.3e", orth, equi, lagr));
  }
  return r;
}

SuiteReport suite_cayley(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "cayley";
  r.threshold = 1e-12;
  Rng rng(o.seed);
  const std::size_t n = scaled(10000, o);
  double iso = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CVec3 z = random_cvec(rng);
    CVec3 w = random_cvec(rng);
    z /= z.norm();
    w /= w.norm();
    const CVec3 cz = cayley_apply(z, CayleyDirection::SiegelToBall);
    const CVec3 cw = cayley_apply(w, CayleyDirection::SiegelToBall);
    iso = std::max(iso, std::abs(herm_inner(Form::Ball, cz, cw) - herm_inner(Form::Siegel, z, w)));
    ++r.cases;
  }
  const double inv = (cayley_matrix() * cayley_matrix() - CMat3::Identity()).norm();
  check(r, iso, r.threshold);
  check(r, inv, 1e-15);
  r.details.push_back(fmt("isometry %.3e  |C^2 - I| %.3e", iso, inv));
  return r;
}

SuiteReport suite_tangent_chain(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "tangent-chain";
  r.threshold = 1e-9;
  Rng rng(o.seed);
  std::uniform_real_distribution<double> ut(0.05, 0.95);
  std::uniform_real_distribution<double> uc(0.5, 2.0);
  const std::size_t n = scaled(1000, o);
  double equi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double contact = (i % 2 == 0) ? 0.0 : uc(rng);
    const CurveLift c = CurveLift::from_heisenberg(random_heisenberg_curve(rng, contact));
    const ProjMap g(random_form_unitary(Form::Siegel, rng));
    const double t = ut(rng);
    const Chain mapped = apply(g, tangent_chain(c, t, 1e-8));
    const Chain direct = tangent_chain(transformed(g, c), t, 1e-8);
    equi = std::max(equi, chain_residual(mapped, direct));
    ++r.cases;
  }
  check(r, equi, r.threshold);
  r.details.push_back(fmt("equivariance max projective residual %.3e", equi));

  // Secant chains converge to the tangent chain.
  for (const char* name : {"canonical-rcircle", "finite-rcircle", "vertical-circle"}) {
    const CurveLift c = builtin_curve(name);
    const double t0 = 0.3;
    const Chain tc = tangent_chain(c, t0, 1e-8);
    std::vector<double> err;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const Chain sc = chain_through(BoundaryPoint::project(c.v(t0), c.form),
                                     BoundaryPoint::project(c.v(t0 + h), c.form));
      err.push_back(proj_distance(sc.polar_point(), tc.polar_point()));
    }
    const double order = std::min(std::log10(err[0] / err[1]), std::log10(err[1] / err[2]));
    if (!(order >= 1.0 - 1e-2)) r.passed = false;
    r.details.push_back(std::string(name) + fmt(": secant errors %.2e %.2e %.2e", err[0], err[1], err[2]) +
                        fmt("  order %.3f", order));
  }

  // The tangent chain of a chain is the chain itself.
  const CurveLift vc = builtin_curve("vertical-chain");
  double self = 0.0;
  for (int k = 0; k < 64; ++k) {
    const Chain tc = tangent_chain(vc, (k + 0.5) / 64.0);
    self = std::max(self, proj_distance(tc.polar_point().rep(), CVec3(0.0, 1.0, 0.0)));
  }
  check(r, self, 1e-10);
  r.details.push_back(fmt("vertical chain self-tangency residual %.3e", self));
  return r;
}

SuiteReport suite_legendrian(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "legendrian";
  r.threshold = 1e-8;
  Rng rng(o.seed);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  std::uniform_real_distribution<double> uc(0.5, 2.0);
  const std::size_t n = scaled(1000, o);
  std::size_t disagreements = 0;
  std::size_t unclean = 0;
  double max_leg = 0.0;
  double min_non = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const bool leg = i % 2 == 0;
    const CurveLift c = CurveLift::from_heisenberg(random_heisenberg_curve(rng, leg ? 0.0 : uc(rng)));
    const double t = ut(rng);
    const double defect = legendrian_defect(c, t);
    const bool by_defect = defect <= r.threshold;
    const bool by_contact = std::abs(contact_form(c, t)) <= r.threshold;
    const bool by_chain = tangent_chain(c, t, r.threshold).is_degenerate();
    if (by_defect != by_contact || by_defect != by_chain || by_defect != leg) ++disagreements;
    if (leg) {
      max_leg = std::max(max_leg, defect);
      if (defect > 1e-10) ++unclean;
    } else {
      min_non = std::min(min_non, defect);
      if (defect < 1e-2) ++unclean;
    }
    ++r.cases;
  }
  r.max_residual = max_leg;
  r.passed = disagreements == 0 && unclean == 0;
  r.details.push_back(fmt("disagreements %.0f  outside separation %.0f", static_cast<double>(disagreements),
                          static_cast<double>(unclean)));
  r.details.push_back(fmt("max Legendrian defect %.3e  min non-Legendrian defect %.3e", max_leg, min_non));
  return r;
}

SuiteReport suite_contraction(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "contraction";
  r.threshold = 1e-3;
  Rng rng(o.seed);
  const std::size_t n = scaled(20, o);
  std::size_t worst_steps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const ProjMap g(random_loxodromic(rng, 0.1, 0.5));
    const FixedPoints fp = fixed_boundary_points(g, Form::Siegel);
    Chain c = chain_through(heis_embed(random_heisenberg(rng)), heis_embed(random_heisenberg(rng)));
    if (chain_contains(c, fp.repelling, 1e-6)) continue;
    double prev = chain_diameter(c);
    std::size_t below = 0;
    bool monotone = true;
    for (std::size_t k = 1; k <= 100; ++k) {
      c = apply(g, c);
      const double d = chain_diameter(c);
      if (k >= 10 && d > prev * (1.0 + 1e-9)) monotone = false;
      if (below == 0 && d < r.threshold) below = k;
      prev = d;
    }
    if (below == 0 || !monotone) r.passed = false;
    worst_steps = std::max(worst_steps, below == 0 ? 101 : below);
    r.max_residual = std::max(r.max_residual, prev);
    ++r.cases;
  }
  r.details.push_back(fmt("worst iterations to diameter < 1e-3: %.0f", static_cast<double>(worst_steps)));
  return r;
}

// Legendrian chart curve whose vertical projection is the circle of
// radius `radius` through the origin.
CurveLift circle_through_origin(double radius) {
  constexpr double w = 2.0 * std::numbers::pi;
  HeisenbergCurve h;
  h.zeta = [=](double t) { return radius * (1.0 - std::polar(1.0, w * t)); };
  h.dzeta = [=](double t) { return -radius * Complex(0.0, w) * std::polar(1.0, w * t); };
  h.ddzeta = [=](double t) { return radius * w * w * std::polar(1.0, w * t); };
  // Im(conj(zeta) zeta') = r^2 w (cos wt - 1).
  h.v = [=](double t) { return -2.0 * radius * radius * (std::sin(w * t) - w * t); };
  h.dv = [=](double t) { return -2.0 * radius * radius * w * (std::cos(w * t) - 1.0); };
  h.ddv = [=](double t) { return 2.0 * radius * radius * w * w * std::sin(w * t); };
  return CurveLift::from_heisenberg(h);
}

// Siegel map with chart action (zeta, v) -> (mu zeta, |mu|^2 v).
ProjMap homothety(Complex mu) {
  CMat3 d = CMat3::Zero();
  d(0, 0) = std::conj(mu);
  d(1, 1) = 1.0;
  d(2, 2) = 1.0 / mu;
  return ProjMap(d);
}

SuiteReport suite_curvature(const VerifyOptions&) {
  SuiteReport r;
  r.name = "curvature";
  r.threshold = 1e-6;
  const double radius = 0.75;
  const double k0 = 1.0 / radius;
  const double t = 0.2;
  for (Complex mu : {Complex(0.5, 0.0), Complex(1.0 / 3.0, 0.0), std::polar(0.5, std::numbers::pi / 4)}) {
    const ProjMap g = homothety(mu);
    CurveLift c = circle_through_origin(radius);
    std::string row = fmt("|lambda| = %.4f:", std::abs(mu));
    for (int n = 1; n <= 5; ++n) {
      c = transformed(g, c);
      const double k = plane_curvature(vertical_projection(c, t - 0.05, t + 0.05), t);
      const double ratio = k / k0;
      const double want = std::pow(std::abs(mu), -n);
      check(r, std::abs(ratio - want) / want, r.threshold);
      row += fmt(" n=%.0f k/k0=%.9g", n, ratio);
      ++r.cases;
    }
    r.details.push_back(row);
  }
  // A straight segment: the canonical R-circle projects to a line.
  double line = 0.0;
  CurveLift c = builtin_curve("canonical-rcircle");
  for (int n = 0; n <= 5; ++n) {
    const PlaneCurve p = vertical_projection(c, 0.1, 0.9);
    for (int k = 1; k < 64; ++k) line = std::max(line, plane_curvature(p, 0.1 + 0.8 * k / 64.0));
    c = transformed(homothety(0.5), c);
  }
  check(r, line, 1e-10);
  r.details.push_back(fmt("segment max curvature %.3e", line));
  return r;
}

SuiteReport suite_normal_form(const VerifyOptions& o) {
  SuiteReport r;
  r.name = "normal-form";
  r.threshold = 1e-7;
  Rng rng(o.seed);
  const std::size_t n = scaled(100, o);
  for (std::size_t i = 0; i < n; ++i) {
    const ProjMap g(random_loxodromic(rng));
    const LoxodromicData d = normalize_loxodromic(g, Form::Siegel);
    std::vector<HeisenbergPoint> probes;
    for (int k = 0; k < 100; ++k) probes.push_back(random_heisenberg(rng, 1.0));
    check(r, normal_form_residual(g, Form::Siegel, d, probes), r.threshold);
    ++r.cases;
  }
  r.details.push_back(fmt("max chart residual %.3e over %.0f maps", r.max_residual, static_cast<double>(n)));

  // A loxodromic with real multiplier preserves the R-circle through its
  // fixed points; its samples classify as RCIRCLE.
  CMat3 diag = CMat3::Zero();
  diag(0, 0) = 0.4;
  diag(1, 1) = 1.0;
  diag(2, 2) = 2.5;
  const CMat3 k = random_form_unitary(Form::Siegel, rng, 0.5);
  const ProjMap g(k * diag * k.inverse());
  const LoxodromicData d = normalize_loxodromic(g, Form::Siegel);
  const ProjMap back = d.conjugator.inverse();
  std::vector<BoundaryPoint> pts;
  for (int j = 0; j < 400; ++j) {
    const double s = std::tan(std::numbers::pi * ((j + 0.5) / 400.0 - 0.5));
    pts.push_back(apply(back, heis_embed(HeisenbergPoint(s, 0.0))));
  }
  double invariance = 0.0;
  for (const auto& p : pts) {
    const HeisenbergPoint x = heis_project(apply(d.conjugator, apply(g, p)));
    const double r = std::abs(x.zeta());
    invariance = std::max(invariance, std::abs(x.zeta().imag()) / (1.0 + r) + std::abs(x.v()) / (1.0 + r * r));
  }
  const LimitClassification lc = classify_limit_sample(pts);
  const bool ok = lc.verdict == LimitVerdict::RCircle && invariance <= 1e-9;
  if (!ok) r.passed = false;
  r.details.push_back(std::string("invariant line verdict ") + to_string(lc.verdict) +
                      fmt("  invariance %.3e", invariance));
  return r;
}

using Suite = std::function<SuiteReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string_view, Suite>>& suites() {
  static const std::vector<std::pair<std::string_view, Suite>> s = {
      {"cross-product", suite_cross_product}, {"cayley", suite_cayley},
      {"tangent-chain", suite_tangent_chain}, {"legendrian", suite_legendrian},
      {"contraction", suite_contraction},     {"curvature", suite_curvature},
      {"normal-form", suite_normal_form}};
  return s;
}

SuiteReport timed(const Suite& s, const VerifyOptions& o) {
  const auto start = Clock::now();
  SuiteReport r = s(o);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string_view>& verify_suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> n;
    for (const auto& [name, suite] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyOptions& opts) {
  std::vector<SuiteReport> out;
  for (const auto& [name, s] : suites()) {
    if (suite == "all" || suite == name) out.push_back(timed(s, opts));
  }
  if (out.empty()) {
    std::string msg = "unknown suite '" + std::string(suite) + "'; valid suites:";
    for (auto n : verify_suite_names()) msg += " " + std::string(n);
    throw GeometryError(msg);
  }
  return out;
}

}  // namespace chyp
