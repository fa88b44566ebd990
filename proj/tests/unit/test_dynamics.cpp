#include "helpers.hpp"

using namespace chyp;
using namespace test;

namespace {

CMat3 diag3(Complex a, Complex b, Complex c) {
  CMat3 d = CMat3::Zero();
  d.diagonal() << a, b, c;
  return d;
}

}  // namespace

TEST_CASE("classify_isometry examples") {
  CHECK(classify_isometry(ProjMap(diag3(0.5, 1, 2)), Form::Siegel) == IsometryClass::Loxodromic);
  CHECK(classify_isometry(ProjMap(diag3(I, 1, I)), Form::Siegel) == IsometryClass::Elliptic);
  CMat3 u = CMat3::Identity();
  u(0, 2) = I;
  // Direct expansion: <u z, u w> = <z, w> + i z3 conj(w3) - i z3 conj(w3).
  CHECK(is_form_unitary(Form::Siegel, u, 1e-14));
  CHECK(classify_isometry(ProjMap(u), Form::Siegel) == IsometryClass::Parabolic);
  CHECK(classify_isometry(ProjMap(heis_translation(Complex(0.3, -1.0), 0.2)), Form::Siegel) ==
        IsometryClass::Parabolic);
  CHECK(classify_isometry(ProjMap::identity(), Form::Ball) == IsometryClass::Elliptic);
  CHECK_THROWS_AS(classify_isometry(ProjMap(diag3(2, 1, 2)), Form::Siegel), GeometryError);

  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const CMat3 g = random_form_unitary(Form::Siegel, rng, 0.5);
    const CMat3 kk = random_form_unitary(Form::Siegel, rng, 0.3);
    CHECK(classify_isometry(ProjMap(kk * u * kk.inverse()), Form::Siegel) == IsometryClass::Parabolic);
    CHECK(classify_isometry(ProjMap(kk * diag3(I, 1, I) * kk.inverse()), Form::Siegel) == IsometryClass::Elliptic);
    CHECK(classify_isometry(ProjMap(random_loxodromic(rng)), Form::Siegel) == IsometryClass::Loxodromic);
    (void)g;
  }
}

TEST_CASE("fixed points") {
  const FixedPoints fp = fixed_boundary_points(ProjMap(diag3(0.5, 1, 2)), Form::Siegel);
  CHECK(proj_gap(fp.attracting.rep(), CVec3(0, 0, 1)) < 1e-15);
  CHECK(proj_gap(fp.repelling.rep(), CVec3(1, 0, 0)) < 1e-15);
  CHECK_THROWS_AS(fixed_boundary_points(ProjMap(diag3(I, 1, I)), Form::Siegel), GeometryError);

  // Ball-model analogue: Cayley images of the Siegel fixed points.
  const ProjMap gb(change_form(Form::Siegel, Form::Ball, diag3(0.5, 1, 2)));
  const FixedPoints fb = fixed_boundary_points(gb, Form::Ball);
  CHECK(proj_gap(fb.attracting.rep(), cayley_matrix() * CVec3(0, 0, 1)) < 1e-14);
  CHECK(proj_gap(fb.repelling.rep(), cayley_matrix() * CVec3(1, 0, 0)) < 1e-14);

  Rng rng(22);
  for (int k = 0; k < 50; ++k) {
    const CMat3 h = random_form_unitary(Form::Siegel, rng, 0.5);
    const ProjMap g(h * diag3(0.5, 1, 2) * h.inverse());
    const FixedPoints f = fixed_boundary_points(g, Form::Siegel);
    CHECK(proj_gap(f.attracting.rep(), h.col(2)) < 1e-10);
    CHECK(proj_gap(f.repelling.rep(), h.col(0)) < 1e-10);
    CHECK(proj_gap(g(f.attracting.rep()), f.attracting.rep()) < 1e-9);
    CHECK(proj_gap(g(f.repelling.rep()), f.repelling.rep()) < 1e-9);
  }
}

TEST_CASE("loxodromic normal form") {
  const LoxodromicData d = normalize_loxodromic(ProjMap(diag3(0.5, 1, 2)), Form::Siegel);
  CHECK(std::abs(d.lambda - 0.25) < 1e-15);
  CHECK((d.conjugator.matrix() - CMat3::Identity()).norm() < 1e-14);
  // Oracle: push the chart point through the diagonal matrix by hand.
  for (const HeisenbergPoint x : {HeisenbergPoint(Complex(1, 2), 3.0), HeisenbergPoint(-0.5, -1.0)}) {
    const Complex z = x.zeta();
    const CVec3 image(0.5 * Complex(-std::norm(z), x.v()), kSqrt2 * z, 2.0);
    const Complex zeta = image(1) / (kSqrt2 * image(2));
    const double v = (image(0) / image(2)).imag();
    const HeisenbergPoint nf = normal_form_action(d, x);
    CHECK(std::abs(nf.zeta() - zeta) < 1e-15);
    CHECK(std::abs(nf.v() - v) < 1e-15);
    CHECK(std::abs(zeta - z / 2.0) < 1e-15);
    CHECK(std::abs(v - x.v() / 4.0) < 1e-15);
  }
  const double s = 1.0 / 3.0;
  CHECK(std::abs(normalize_loxodromic(ProjMap(diag3(s, 1, 1 / s)), Form::Siegel).lambda - 1.0 / 9.0) < 1e-15);
  CHECK_THROWS_AS(normalize_loxodromic(ProjMap::identity(), Form::Siegel), GeometryError);

  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    const ProjMap g(random_loxodromic(rng));
    const LoxodromicData a = normalize_loxodromic(g, Form::Siegel);
    CHECK(std::abs(a.lambda) < 1.0);
    CHECK(std::abs(a.sqrt_lambda * a.sqrt_lambda - a.lambda) < 1e-15);
    CHECK(is_form_unitary(Form::Siegel, a.conjugator.matrix(), 1e-9));
    const CMat3 kk = random_form_unitary(Form::Siegel, rng, 0.5);
    const LoxodromicData b = normalize_loxodromic(ProjMap(kk * g.matrix() * kk.inverse()), Form::Siegel);
    CHECK(std::abs(a.lambda - b.lambda) < 1e-10);
    std::vector<HeisenbergPoint> probes;
    for (int j = 0; j < 50; ++j) probes.push_back(random_heisenberg(rng, 1.0));
    CHECK(normal_form_residual(g, Form::Siegel, a, probes) < 1e-7);
  }
}

TEST_CASE("iteration on the boundary") {
  const ProjMap g(diag3(0.5, 1, 2));
  const auto orbit = iterate_on_boundary(g, heis_embed({Complex(1, 1), 2.0}), 40);
  REQUIRE(orbit.size() == 40);
  const BoundaryPoint origin = heis_embed({0.0, 0.0});
  for (std::size_t k = 10; k < orbit.size(); ++k) {
    CHECK(chordal_dist(orbit[k], origin) < chordal_dist(orbit[k - 1], origin));
  }
  CHECK(chordal_dist(orbit.back(), origin) < 1e-10);

  const BoundaryPoint x = heis_embed({0.3, -0.2});
  for (const auto& y : iterate_on_boundary(ProjMap::identity(), x, 5)) CHECK(proj_distance(x.point(), y.point()) < 1e-15);
  CHECK(iterate_on_boundary(ProjMap::identity(), x, 5).size() == 5);

  const Chain vertical = Chain::polar(ProjPoint(CVec3(0, 1, 0)), Form::Siegel);
  for (const auto& y : iterate_on_boundary(ProjMap(diag3(I, 1, I)), heis_embed({0.0, 1.5}), 8)) {
    CHECK(chain_contains(vertical, y, 1e-12));
  }
}

TEST_CASE("chain contraction under a loxodromic") {
  Rng rng(24);
  const ProjMap g(random_loxodromic(rng, 0.2, 0.5));
  Chain c = chain_through(heis_embed({1.0, 0.0}), heis_embed({Complex(0, 2), 1.0}));
  double prev = chain_diameter(c);
  for (int n = 1; n <= 100; ++n) {
    c = apply(g, c);
    const double d = chain_diameter(c);
    if (n >= 10) CHECK(d <= prev * (1 + 1e-9));
    prev = d;
  }
  CHECK(prev < 1e-3);
}
