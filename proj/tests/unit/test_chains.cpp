#include "helpers.hpp"

using namespace chyp;
using namespace test;

TEST_CASE("chain_through examples") {
  const Chain c = chain_through(BoundaryPoint(CVec3(0, 0, 1), Form::Siegel), BoundaryPoint(CVec3(1, 0, 0), Form::Siegel));
  CHECK_FALSE(c.is_degenerate());
  CHECK(proj_gap(c.polar_point().rep(), CVec3(0, 1, 0)) < 1e-15);
  const Chain d = chain_through(BoundaryPoint(CVec3(1, 0, 1), Form::Ball), BoundaryPoint(CVec3(-1, 0, 1), Form::Ball));
  CHECK(proj_gap(d.polar_point().rep(), CVec3(0, 1, 0)) < 1e-15);
  const BoundaryPoint p = heis_embed({0.3, 0.1});
  CHECK_THROWS_AS(chain_through(p, p), GeometryError);
  CHECK_THROWS_AS(chain_through(p, p.in(Form::Ball)), GeometryError);
  CHECK_THROWS_AS(Chain::polar(ProjPoint(CVec3(0, 0, 1)), Form::Ball), GeometryError);
}

TEST_CASE("chain_contains examples") {
  const Chain vertical = Chain::polar(ProjPoint(CVec3(0, 1, 0)), Form::Siegel);
  CHECK(chain_contains(vertical, BoundaryPoint(CVec3(I, 0, 1), Form::Siegel)));
  CHECK_FALSE(chain_contains(vertical, BoundaryPoint(CVec3(-1, kSqrt2, 1), Form::Siegel)));
  const BoundaryPoint b = heis_embed({0.5, -1.0});
  const Chain deg = Chain::degenerate(b);
  CHECK(chain_contains(deg, b));
  CHECK_FALSE(chain_contains(deg, heis_embed({0.5, -0.9})));
}

TEST_CASE("polar duality and equivariance") {
  Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    const BoundaryPoint p = heis_embed(random_heisenberg(rng)), q = heis_embed(random_heisenberg(rng));
    const Chain c = chain_through(p, q);
    CHECK(chain_contains(c, p, 1e-9));
    CHECK(chain_contains(c, q, 1e-9));
    for (const auto& x : chain_points(c, 32)) {
      CHECK(std::abs(herm_inner(Form::Siegel, x.rep(), c.polar_point().rep())) <= 1e-9);
    }
    const ProjMap g(random_form_unitary(Form::Siegel, rng, 0.5));
    const Chain mapped = apply(g, c);
    const Chain through = chain_through(apply(g, p), apply(g, q));
    CHECK(proj_distance(mapped.polar_point(), through.polar_point()) < 1e-9);
  }
}

TEST_CASE("chain diameter") {
  CHECK(chain_diameter(Chain::degenerate(heis_embed({0.0, 0.0}))) == 0.0);
  const Chain great = Chain::polar(ProjPoint(CVec3(0, 1, 0)), Form::Ball);
  CHECK(std::abs(chain_diameter(great, 256) - 2.0) < 1e-6);

  Rng rng(14);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int k = 0; k < 50; ++k) {
    const Chain c = chain_through(heis_embed(random_heisenberg(rng)), heis_embed(random_heisenberg(rng)));
    const Chain cb = Chain::polar(ProjPoint(change_form(Form::Siegel, Form::Ball, c.polar_point().rep())), Form::Ball);
    CMat3 d = CMat3::Zero();
    d.diagonal() << std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng)), 1.0;
    CHECK(std::abs(chain_diameter(apply(ProjMap(d), cb)) - chain_diameter(cb)) < 1e-9);
    CHECK(chain_diameter(c) == doctest::Approx(chain_diameter(cb)).epsilon(1e-9));
  }
}

TEST_CASE("R-circle points") {
  const HeisenbergPoint a = rcircle_point(InfiniteRCircle{{0.0, 0.0}, 0.0}, 1.0);
  CHECK(std::abs(a.zeta() - 1.0) < 1e-15);
  CHECK(std::abs(a.v()) < 1e-15);
  const HeisenbergPoint b = rcircle_point(FiniteRCircle{}, 0.0);
  CHECK(std::abs(b.zeta() - I) < 1e-12);
  CHECK(std::abs(b.v()) < 1e-12);
  const HeisenbergPoint c = rcircle_point(FiniteRCircle{}, kPi / 4);
  CHECK(std::abs(c.zeta()) < 1e-7);
  CHECK(std::abs(c.v() + 1.0) < 1e-12);
  CHECK_THROWS_AS(rcircle_point(FiniteRCircle{}, kPi / 2), GeometryError);
  CHECK_THROWS_AS(rcircle_point(InfiniteRCircle{HeisenbergPoint::infinity(), 0.0}, 1.0), GeometryError);

  // Finite circle: v' = -2 Im(conj(zeta) zeta') along the parametrization,
  // checked by central differences of the closed formula.
  for (int k = 1; k < 40; ++k) {
    const double t = -kPi / 4 + kPi / 2 * k / 40.0;
    const double h = 1e-6;
    const HeisenbergPoint m = rcircle_point(FiniteRCircle{}, t - h), p = rcircle_point(FiniteRCircle{}, t + h);
    const HeisenbergPoint x = rcircle_point(FiniteRCircle{}, t);
    const Complex dz = (p.zeta() - m.zeta()) / (2 * h);
    const double dv = (p.v() - m.v()) / (2 * h);
    CHECK(std::abs(dv + 2.0 * (std::conj(x.zeta()) * dz).imag()) < 1e-6);
    CHECK(std::abs(herm_square(Form::Siegel, heis_embed(x).rep())) < 1e-12);
  }

  // Base translation and rotation of the infinite case.
  const InfiniteRCircle shifted{{Complex(1.0, 2.0), 0.5}, 0.3};
  for (double t : {-2.0, 0.5, 3.0}) {
    const HeisenbergPoint x = rcircle_point(shifted, t);
    const HeisenbergPoint local = heis_mul({Complex(-1.0, -2.0), -0.5}, x);
    CHECK(std::abs(local.zeta() - std::polar(t, 0.3)) < 1e-12);
    CHECK(std::abs(local.v()) < 1e-12);
  }
}

TEST_CASE("Cartan invariant examples and properties") {
  const BoundaryPoint o(CVec3(0, 0, 1), Form::Siegel), inf(CVec3(1, 0, 0), Form::Siegel);
  const BoundaryPoint iv(CVec3(I, 0, 1), Form::Siegel), r(CVec3(-1, kSqrt2, 1), Form::Siegel);
  CHECK(std::abs(cartan_invariant(o, iv, inf) - kPi / 2) < 1e-15);
  CHECK(std::abs(cartan_invariant(o, r, inf)) < 1e-15);
  CHECK(cartan_invariant(iv, o, inf) == doctest::Approx(-cartan_invariant(o, iv, inf)));
  CHECK_THROWS_AS(cartan_invariant(o, o, inf), GeometryError);

  Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    const BoundaryPoint a = heis_embed(random_heisenberg(rng)), b = heis_embed(random_heisenberg(rng)),
                        c = heis_embed(random_heisenberg(rng));
    const ProjMap g(random_form_unitary(Form::Siegel, rng, 0.5));
    CHECK(std::abs(cartan_invariant(apply(g, a), apply(g, b), apply(g, c)) - cartan_invariant(a, b, c)) < 1e-9);
    const Chain ch = chain_through(a, b);
    const auto pts = chain_points(ch, 7);
    CHECK(std::abs(std::abs(cartan_invariant(pts[0], pts[2], pts[5])) - kPi / 2) < 1e-8);
  }
}

TEST_CASE("chain fit") {
  std::vector<BoundaryPoint> pts;
  for (int k = 0; k < 64; ++k) pts.push_back(heis_embed({0.0, -10.0 + 20.0 * k / 63.0}));
  const ChainFit f = fit_chain(pts);
  CHECK(f.residual < 1e-15);
  CHECK(proj_gap(f.polar.rep(), CVec3(0, 1, 0)) < 1e-12);
  CHECK(f.polar_sign == SignClass::Positive);

  std::vector<BoundaryPoint> rc;
  for (int k = 0; k < 64; ++k) rc.push_back(heis_embed({-3.0 + 6.0 * k / 63.0, 0.0}));
  CHECK(fit_chain(rc).residual > 1e-3);
  CHECK_THROWS_AS(fit_chain(std::vector<BoundaryPoint>{}), GeometryError);
}
