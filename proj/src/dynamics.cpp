#include "chyp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "chyp/curves.hpp"

namespace chyp {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kClusterTol = 1e-5;

void require_unitary(const ProjMap& g, Form form) {
  if (!is_form_unitary(form, g.matrix(), kUnitaryTol)) {
    throw GeometryError("isometry: matrix is not form-unitary");
  }
}

struct Spectrum {
  Eigen::Vector3cd values;
  Eigen::Matrix3cd vectors;
  Eigen::Vector3d error = Eigen::Vector3d::Zero();
  int largest = 0;
  int smallest = 0;
};

Spectrum spectrum(const CMat3& m) {
  const Eigen::ComplexEigenSolver<CMat3> eig(m);
  Spectrum s{eig.eigenvalues(), eig.eigenvectors()};
  // First-order error of each eigenvalue: eps |M| times its condition number
  // |x| |y| / |y^* x|, with left eigenvectors taken from the rows of V^{-1}.
  const CMat3 left = s.vectors.inverse();
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() * m.norm();
  for (int i = 0; i < 3; ++i) {
    const double kappa = s.vectors.col(i).norm() * left.row(i).norm();
    s.error(i) = std::isfinite(kappa) ? noise * kappa : INFINITY;
  }
  for (int i = 1; i < 3; ++i) {
    if (std::abs(s.values(i)) > std::abs(s.values(s.largest))) s.largest = i;
    if (std::abs(s.values(i)) < std::abs(s.values(s.smallest))) s.smallest = i;
  }
  return s;
}

}  // namespace

const char* to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Loxodromic: return "LOXODROMIC";
    case IsometryClass::Elliptic: return "ELLIPTIC";
    case IsometryClass::Parabolic: return "PARABOLIC";
  }
  return "?";
}

IsometryClass classify_isometry(const ProjMap& g, Form form, double tol) {
  require_unitary(g, form);
  const CMat3& m = g.matrix();
  const Spectrum s = spectrum(m);
  const double gap = std::abs(s.values(s.largest)) - 1.0;
  if (gap > tol && gap > 10.0 * s.error(s.largest)) return IsometryClass::Loxodromic;

  // Cluster nearby eigenvalues, then compare the geometric multiplicity of
  // each cluster with its size.
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < 3; ++i) {
    bool placed = false;
    for (auto& c : clusters) {
      if (std::abs(s.values(i) - s.values(c.front())) <= kClusterTol) {
        c.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({i});
  }
  const double scale = m.norm();
  int geometric = 0;
  for (const auto& c : clusters) {
    Complex mu = 0.0;
    double width = 0.0;
    for (int i : c) mu += s.values(i);
    mu /= static_cast<double>(c.size());
    for (int i : c) width = std::max(width, std::abs(s.values(i) - mu));
    const Eigen::Vector3d sv = Eigen::JacobiSVD<CMat3>(m - mu * CMat3::Identity()).singularValues();
    const double cut = std::max(1e-8 * scale, 10.0 * width);
    const int nullity = static_cast<int>((sv.array() <= cut).count());
    geometric += std::min<int>(nullity, static_cast<int>(c.size()));
  }
  return geometric == 3 ? IsometryClass::Elliptic : IsometryClass::Parabolic;
}

FixedPoints fixed_boundary_points(const ProjMap& g, Form form, double tol) {
  if (classify_isometry(g, form, tol) != IsometryClass::Loxodromic) {
    throw GeometryError("fixed_boundary_points: map is not loxodromic");
  }
  const Spectrum s = spectrum(g.matrix());
  return {BoundaryPoint::project(s.vectors.col(s.largest), form),
          BoundaryPoint::project(s.vectors.col(s.smallest), form)};
}

LoxodromicData normalize_loxodromic(const ProjMap& g, Form form, double tol) {
  const FixedPoints fp = fixed_boundary_points(g, form, tol);
  const ProjMap h = heisenberg_frame(fp.attracting, fp.repelling);
  const CMat3 gs = change_form(form, Form::Siegel, g.matrix());
  const CMat3 d = h.matrix() * gs * h.inverse().matrix();
  const Complex sqrt_lambda = d(1, 1) / d(2, 2);
  return {sqrt_lambda * sqrt_lambda, sqrt_lambda, fp.attracting, fp.repelling, h};
}

HeisenbergPoint normal_form_action(const LoxodromicData& d, const HeisenbergPoint& x) {
  if (x.is_infinity()) return x;
  return {d.sqrt_lambda * x.zeta(), std::abs(d.lambda) * x.v()};
}

double normal_form_residual(const ProjMap& g, Form form, const LoxodromicData& d,
                            std::span<const HeisenbergPoint> probes) {
  const ProjMap gs(change_form(form, Form::Siegel, g.matrix()));
  const ProjMap conj = d.conjugator * gs * d.conjugator.inverse();
  double worst = 0.0;
  for (const auto& x : probes) {
    const HeisenbergPoint got = heis_project(apply(conj, heis_embed(x)));
    const HeisenbergPoint want = normal_form_action(d, x);
    if (got.is_infinity() || want.is_infinity()) {
      if (got.is_infinity() != want.is_infinity()) return INFINITY;
      continue;
    }
    const double r = std::abs(got.zeta() - want.zeta()) + std::abs(got.v() - want.v()) / (1.0 + std::abs(want.v()));
    worst = std::max(worst, r);
  }
  return worst;
}

std::vector<BoundaryPoint> iterate_on_boundary(const ProjMap& g, const BoundaryPoint& x, std::size_t n) {
  std::vector<BoundaryPoint> out;
  out.reserve(n);
  BoundaryPoint cur = x;
  for (std::size_t k = 0; k < n; ++k) {
    cur = apply(g, cur);
    out.push_back(cur);
  }
  return out;
}

}  // namespace chyp
