#include "helpers.hpp"

using namespace chyp;
using namespace test;

TEST_CASE("heis_embed examples") {
  CHECK(proj_gap(heis_embed({0.0, 0.0}).rep(), CVec3(0, 0, 1)) < 1e-15);
  CHECK(proj_gap(heis_embed({1.0, 0.0}).rep(), CVec3(-1, kSqrt2, 1)) < 1e-15);
  CHECK(proj_gap(heis_embed(HeisenbergPoint::infinity()).rep(), CVec3(1, 0, 0)) < 1e-15);
}

TEST_CASE("heis_project examples") {
  const HeisenbergPoint a = heis_project(BoundaryPoint(CVec3(-1, kSqrt2, 1), Form::Siegel));
  CHECK(std::abs(a.zeta() - 1.0) < 1e-15);
  CHECK(std::abs(a.v()) < 1e-15);
  CHECK(heis_project(BoundaryPoint(CVec3(1, 0, 0), Form::Siegel)).is_infinity());
  // [2i:0:1]: v = Im z1 = 2.
  const HeisenbergPoint b = heis_project(BoundaryPoint(CVec3(2.0 * I, 0, 1), Form::Siegel));
  CHECK(std::abs(b.zeta()) < 1e-15);
  CHECK(std::abs(b.v() - 2.0) < 1e-14);
  CHECK_THROWS_AS(BoundaryPoint(CVec3(1, 0, 1), Form::Siegel), GeometryError);
}

TEST_CASE("chart round trip and null condition") {
  Rng rng(8);
  for (int k = 0; k < 10000; ++k) {
    const HeisenbergPoint h = random_heisenberg(rng, 3.0);
    const Complex z = h.zeta();
    const CVec3 v(Complex(-std::norm(z), h.v()), kSqrt2 * z, 1.0);
    CHECK(std::abs(2.0 * v(0).real() + std::norm(v(1))) <= 1e-12 * (1.0 + std::norm(z)));
    const HeisenbergPoint back = heis_project(heis_embed(h));
    CHECK(std::abs(back.zeta() - z) < 1e-10);
    CHECK(std::abs(back.v() - h.v()) < 1e-10);
    const BoundaryPoint ball = heis_embed(h).in(Form::Ball);
    CHECK(std::abs(ball_form(ball.rep(), ball.rep())) < 1e-10);
  }
}

TEST_CASE("Heisenberg group law agrees with the translation matrices") {
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const HeisenbergPoint a = random_heisenberg(rng), b = random_heisenberg(rng);
    const CVec3 moved = heis_translation(a.zeta(), a.v()) * heis_embed(b).rep();
    const HeisenbergPoint ab = heis_mul(a, b);
    CHECK(proj_gap(moved, heis_embed(ab).rep()) < 1e-12);
    CHECK(is_form_unitary(Form::Siegel, heis_translation(a.zeta(), a.v()), 1e-12));
  }
  CHECK_THROWS_AS(heis_mul(HeisenbergPoint::infinity(), {0.0, 0.0}), GeometryError);
}

TEST_CASE("chordal distance") {
  const BoundaryPoint p(CVec3(1, 0, 1), Form::Ball), q(CVec3(-1, 0, 1), Form::Ball);
  CHECK(chordal_dist(p, p) == 0.0);
  CHECK(std::abs(chordal_dist(p, q) - 2.0) < 1e-15);

  Rng rng(10);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int k = 0; k < 1000; ++k) {
    const BoundaryPoint a = heis_embed(random_heisenberg(rng));
    const BoundaryPoint b = heis_embed(random_heisenberg(rng));
    const BoundaryPoint c = heis_embed(random_heisenberg(rng));
    CHECK(chordal_dist(a, c) <= chordal_dist(a, b) + chordal_dist(b, c) + 1e-15);
    CHECK(chordal_dist(a, b) == doctest::Approx(chordal_dist(b, a)).epsilon(1e-14));
    CMat3 d = CMat3::Zero();
    d.diagonal() << std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng));
    const ProjMap g(d);
    const BoundaryPoint ab = a.in(Form::Ball), bb = b.in(Form::Ball);
    CHECK(std::abs(chordal_dist(apply(g, ab), apply(g, bb)) - chordal_dist(ab, bb)) < 1e-10);
  }
}

TEST_CASE("tangent complex line") {
  CHECK(proj_gap(tangent_complex_line(BoundaryPoint(CVec3(1, 0, 0), Form::Siegel)).coeffs(), CVec3(0, 0, 1)) < 1e-15);
  CHECK(proj_gap(tangent_complex_line(BoundaryPoint(CVec3(0, 0, 1), Form::Siegel)).coeffs(), CVec3(1, 0, 0)) < 1e-15);
  CHECK(proj_gap(tangent_complex_line(BoundaryPoint(CVec3(1, 0, 1), Form::Ball)).coeffs(), CVec3(1, 0, -1)) < 1e-15);
  CHECK_THROWS_AS(BoundaryPoint(CVec3(1, 0, 0), Form::Ball), GeometryError);

  // The line touches the sphere only at p: every other line point is positive.
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const BoundaryPoint p = heis_embed(random_heisenberg(rng));
    const ProjLine l = tangent_complex_line(p);
    CHECK(l.contains(p.point()));
    const CVec3 a = l.coeffs();
    // p and a x p span the line (bilinear pairing with a vanishes on both).
    const CVec3 other = a.cross(p.rep()).conjugate();
    CHECK(std::abs(a.cwiseProduct(other).sum()) < 1e-12);
    for (int j = 1; j < 20; ++j) {
      const CVec3 x = p.rep() + std::polar(0.1 * j, 0.7 * j) * other;
      CHECK(sign_class(Form::Siegel, x) == SignClass::Positive);
    }
  }
}

TEST_CASE("radial projection lands on the sphere") {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const CVec3 v = random_cvec(rng);
    const BoundaryPoint b = BoundaryPoint::project(v, Form::Siegel);
    CHECK(std::abs(herm_square(Form::Siegel, b.rep())) < 1e-14);
    CHECK(std::abs(ball_coordinates(b).norm() - 1.0) < 1e-15);
  }
}
