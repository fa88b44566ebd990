#include "chyp/chains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chyp {

Chain Chain::polar(const ProjPoint& polar, Form form, double tol) {
  if (sign_class(form, polar.rep(), tol) != SignClass::Positive) {
    throw GeometryError("chain: polar point must be positive");
  }
  return Chain(polar, form, std::nullopt);
}

Chain Chain::degenerate(const BoundaryPoint& point) {
  return Chain(point.point(), point.form(), point);
}

const BoundaryPoint& Chain::boundary_point() const {
  if (!degenerate_) throw GeometryError("chain: not degenerate");
  return *degenerate_;
}

Chain chain_through(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.form() != q.form()) throw GeometryError("chain_through: mixed forms");
  if (proj_distance(p.point(), q.point()) <= kKernelTol) {
    throw GeometryError("chain_through: coincident points");
  }
  return Chain::polar(ProjPoint(boxtimes(p.form(), p.rep(), q.rep())), p.form());
}

bool chain_contains(const Chain& c, const BoundaryPoint& x, double tol) {
  if (c.form() != x.form()) throw GeometryError("chain_contains: mixed forms");
  if (c.is_degenerate()) return proj_distance(c.polar_point(), x.point()) <= tol;
  const CVec3& p = c.polar_point().rep();
  return std::abs(herm_inner(c.form(), x.rep(), p)) <= tol * x.rep().norm() * p.norm();
}

std::vector<BoundaryPoint> chain_points(const Chain& c, std::size_t count) {
  std::vector<BoundaryPoint> out;
  out.reserve(count);
  if (c.is_degenerate()) {
    out.assign(count, c.boundary_point());
    return out;
  }
  constexpr Form kBall = Form::Ball;
  CVec3 p = change_form(c.form(), kBall, c.polar_point().rep());
  p /= std::sqrt(herm_square(kBall, p));

  // Form-orthonormal basis (f, e) of the polar complement: <f,f> = -1,
  // <e,e> = 1. Null points are f + exp(i phi) e.
  const CVec3 e3(0.0, 0.0, 1.0);
  CVec3 f = e3 - herm_inner(kBall, e3, p) * p;
  f /= std::sqrt(-herm_square(kBall, f));
  CVec3 e = boxtimes(kBall, p, f);
  e /= std::sqrt(herm_square(kBall, e));

  for (std::size_t k = 0; k < count; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    const CVec3 x = f + std::polar(1.0, phi) * e;
    out.push_back(BoundaryPoint::project(change_form(kBall, c.form(), x), c.form()));
  }
  return out;
}

double chain_diameter(const Chain& c, std::size_t samples) {
  if (c.is_degenerate()) return 0.0;
  const auto pts = chain_points(c, samples);
  std::vector<Eigen::Vector2cd> w;
  w.reserve(pts.size());
  for (const auto& b : pts) w.push_back(ball_coordinates(b));
  double best = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::max(best, (w[i] - w[j]).norm());
  }
  return best;
}

Chain apply(const ProjMap& g, const Chain& c) {
  if (c.is_degenerate()) return Chain::degenerate(apply(g, c.boundary_point()));
  // Unitary maps preserve <x, p>, so the polar point moves with g. A chain
  // contracted below the resolution of the null test becomes a point.
  const CVec3 p = g(c.polar_point().rep());
  if (sign_class(c.form(), p) == SignClass::Null) {
    return Chain::degenerate(BoundaryPoint::project(p, c.form()));
  }
  return Chain::polar(ProjPoint(p), c.form());
}

bool in_finite_rcircle_domain(double theta) {
  constexpr double pi = std::numbers::pi;
  constexpr double slack = 1e-12;
  return (theta >= -pi / 4 - slack && theta <= pi / 4 + slack) ||
         (theta >= 3 * pi / 4 - slack && theta <= 5 * pi / 4 + slack);
}

namespace {

struct RCirclePointVisitor {
  double t;

  HeisenbergPoint operator()(const InfiniteRCircle& spec) const {
    if (spec.base.is_infinity()) throw GeometryError("rcircle: base must be finite");
    return heis_mul(spec.base, HeisenbergPoint(std::polar(t, spec.theta), 0.0));
  }

  HeisenbergPoint operator()(const FiniteRCircle& spec) const {
    if (!in_finite_rcircle_domain(t)) {
      throw GeometryError("rcircle: theta outside [-pi/4, pi/4] u [3pi/4, 5pi/4]");
    }
    const double c = std::max(0.0, std::cos(2.0 * t));
    const HeisenbergPoint standard(Complex(0.0, std::sqrt(c)) * std::polar(1.0, t),
                                   -std::sin(2.0 * t));
    return heis_project(apply(spec.map, heis_embed(standard)));
  }
};

}  // namespace

HeisenbergPoint rcircle_point(const RCircleSpec& spec, double t) {
  return std::visit(RCirclePointVisitor{t}, spec);
}

double cartan_invariant(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r) {
  if (p.form() != q.form() || q.form() != r.form()) {
    throw GeometryError("cartan_invariant: mixed forms");
  }
  if (proj_distance(p.point(), q.point()) <= kKernelTol ||
      proj_distance(q.point(), r.point()) <= kKernelTol ||
      proj_distance(r.point(), p.point()) <= kKernelTol) {
    throw GeometryError("cartan_invariant: coincident points");
  }
  const Form f = p.form();
  const Complex prod =
      herm_inner(f, p.rep(), q.rep()) * herm_inner(f, q.rep(), r.rep()) * herm_inner(f, r.rep(), p.rep());
  constexpr double half_pi = std::numbers::pi / 2;
  return std::clamp(std::arg(-prod), -half_pi, half_pi);
}

ChainFit fit_chain(std::span<const CVec3> points, Form form) {
  if (points.empty()) throw GeometryError("fit_chain: no points");
  const CMat3& j = gram(form);
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  for (const CVec3& x : points) {
    const CVec3 jx = j * x.normalized();
    m += jx * jx.adjoint();
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(m);
  const double trace = m.trace().real();

  ChainFit fit;
  fit.polar = ProjPoint(eig.eigenvectors().col(0));
  fit.residual = std::max(0.0, eig.eigenvalues()(0)) / trace;
  for (const CVec3& x : points) {
    fit.max_incidence =
        std::max(fit.max_incidence, std::abs(herm_inner(form, x.normalized(), fit.polar.rep())));
  }
  fit.polar_sign = sign_class(form, fit.polar.rep());
  return fit;
}

ChainFit fit_chain(std::span<const BoundaryPoint> points) {
  if (points.empty()) throw GeometryError("fit_chain: no points");
  std::vector<CVec3> reps;
  reps.reserve(points.size());
  for (const auto& b : points) {
    if (b.form() != points.front().form()) throw GeometryError("fit_chain: mixed forms");
    reps.push_back(b.rep());
  }
  return fit_chain(reps, points.front().form());
}

}  // namespace chyp
