#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "chyp/boundary.hpp"

namespace chyp {

/// A chain, stored by its polar point (positive) or, when degenerate, by
/// the single boundary point it consists of.
class Chain {
 public:
  /// Throws unless `polar` is positive under `form`.
  static Chain polar(const ProjPoint& polar, Form form, double tol = kKernelTol);
  static Chain degenerate(const BoundaryPoint& point);

  bool is_degenerate() const { return degenerate_.has_value(); }
  Form form() const { return form_; }

  /// Polar point; for a degenerate chain this is the boundary point itself.
  const ProjPoint& polar_point() const { return polar_; }
  const BoundaryPoint& boundary_point() const;

 private:
  Chain(const ProjPoint& p, Form form, std::optional<BoundaryPoint> degenerate)
      : polar_(p), form_(form), degenerate_(std::move(degenerate)) {}

  ProjPoint polar_;
  Form form_;
  std::optional<BoundaryPoint> degenerate_;
};

/// Unique chain through two distinct boundary points; its polar point is
/// the normalized cross product of the representatives.
Chain chain_through(const BoundaryPoint& p, const BoundaryPoint& q);

/// |<x, polar>| <= tol |x| |polar|; a degenerate chain contains only its
/// own point (projective distance <= tol).
bool chain_contains(const Chain& c, const BoundaryPoint& x, double tol = kKernelTol);

/// `count` points evenly spaced in phase along the chain circle, in the
/// chain's form. Degenerate chains yield `count` copies of their point.
std::vector<BoundaryPoint> chain_points(const Chain& c, std::size_t count);

/// Maximum pairwise chordal distance over `samples` chain points.
double chain_diameter(const Chain& c, std::size_t samples = 256);

/// Image of the chain under a form-unitary map in the chain's form. An image
/// whose polar point is null to kKernelTol is returned as degenerate.
Chain apply(const ProjMap& g, const Chain& c);

/// R-circle through infinity: t -> base * (t e^{i theta}, 0).
struct InfiniteRCircle {
  HeisenbergPoint base{0.0, 0.0};
  double theta = 0.0;
};

/// Image under a Siegel-model map of the standard finite R-circle
/// theta -> (i sqrt(cos 2 theta) e^{i theta}, -sin 2 theta).
struct FiniteRCircle {
  ProjMap map = ProjMap::identity();
};

using RCircleSpec = std::variant<InfiniteRCircle, FiniteRCircle>;

/// True when theta lies in [-pi/4, pi/4] or [3pi/4, 5pi/4]; the endpoints,
/// where cos 2 theta = 0, are included as limits of the closed curve.
bool in_finite_rcircle_domain(double theta);

/// Point of the R-circle at parameter t (a real line parameter for the
/// infinite case, the angle theta for the finite case). Throws when theta
/// is outside the finite domain.
HeisenbergPoint rcircle_point(const RCircleSpec& spec, double t);

/// Cartan angular invariant arg(-<p,q><q,r><r,p>) in [-pi/2, pi/2].
/// +-pi/2 exactly on chains, 0 exactly on R-circles.
double cartan_invariant(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r);

/// Least-residual chain through a set of boundary representatives.
struct ChainFit {
  ProjPoint polar{CVec3(0.0, 1.0, 0.0)};
  /// Smallest eigenvalue of sum (J x)(J x)^* divided by its trace.
  double residual = 0.0;
  /// Largest |<x_k, polar>| over the unit-normalized inputs.
  double max_incidence = 0.0;
  SignClass polar_sign = SignClass::Positive;
};

ChainFit fit_chain(std::span<const CVec3> points, Form form);
ChainFit fit_chain(std::span<const BoundaryPoint> points);

}  // namespace chyp
