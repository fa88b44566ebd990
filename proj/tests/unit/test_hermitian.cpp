#include "helpers.hpp"

using namespace chyp;
using namespace test;

TEST_CASE("herm_inner examples") {
  CHECK(herm_inner(Form::Ball, CVec3(0, 0, 1), CVec3(0, 0, 1)) == Complex(-1.0));
  CHECK(herm_inner(Form::Siegel, CVec3(1, 0, 0), CVec3(1, 0, 0)) == Complex(0.0));
  // z3 conj(w1) = conj(i).
  CHECK(std::abs(herm_inner(Form::Siegel, CVec3(0, 0, 1), CVec3(I, 0, 1)) - (-I)) < 1e-15);
}

TEST_CASE("herm_inner matches direct expansion and is conjugate symmetric") {
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const CVec3 z = random_cvec(rng), w = random_cvec(rng);
    CHECK(std::abs(herm_inner(Form::Ball, z, w) - ball_form(z, w)) <= 1e-13 * z.norm() * w.norm());
    CHECK(std::abs(herm_inner(Form::Siegel, z, w) - siegel_form(z, w)) <= 1e-13 * z.norm() * w.norm());
    for (Form f : {Form::Ball, Form::Siegel}) {
      CHECK(std::abs(herm_inner(f, z, w) - std::conj(herm_inner(f, w, z))) <= 1e-14 * z.norm() * w.norm());
      const Complex a(0.3, -1.7);
      CHECK(std::abs(herm_inner(f, a * z, w) - a * herm_inner(f, z, w)) <=
            1e-12 * std::abs(a) * z.norm() * w.norm());
    }
  }
}

TEST_CASE("sign_class examples") {
  CHECK(sign_class(Form::Ball, CVec3(0, 0, 1), 1e-12) == SignClass::Negative);
  CHECK(sign_class(Form::Ball, CVec3(1, 0, 0), 1e-12) == SignClass::Positive);
  // 2 Re(z1) + |z2|^2 = -2 + 2.
  CHECK(sign_class(Form::Siegel, CVec3(-1, kSqrt2, 1), 1e-12) == SignClass::Null);
  CHECK_THROWS_AS(sign_class(Form::Ball, CVec3::Zero()), GeometryError);
  CHECK(std::string(to_string(SignClass::Null)) == "null");
  CHECK(std::string(to_string(Form::Siegel)) == "form2");
}

TEST_CASE("boxtimes examples") {
  // Ball: conj(J e1) x conj(J e2) = e1 x e2 = e3.
  const CVec3 x = boxtimes(Form::Ball, CVec3(1, 0, 0), CVec3(0, 1, 0));
  CHECK((x - CVec3(0, 0, 1)).norm() < 1e-15);
  const CVec3 z(1.0, I, 2.0);
  CHECK(boxtimes(Form::Ball, z, z).norm() == 0.0);
  // Siegel, (i,0,1) and (i,0,0): hand expansion gives (0, -i, 0) ~ (0,1,0).
  const CVec3 y = boxtimes(Form::Siegel, CVec3(I, 0, 1), CVec3(I, 0, 0));
  CHECK(y.norm() > 0.5);
  CHECK(proj_gap(y, CVec3(0, 1, 0)) < 1e-15);
}

TEST_CASE("boxtimes orthogonality, equivariance and the Lagrange identity") {
  Rng rng(2);
  for (Form f : {Form::Ball, Form::Siegel}) {
    for (int k = 0; k < 2000; ++k) {
      const CVec3 z = random_cvec(rng), w = random_cvec(rng);
      const CVec3 x = boxtimes(f, z, w);
      CHECK(std::abs(herm_inner(f, x, z)) <= 1e-10 * x.norm() * z.norm());
      CHECK(std::abs(herm_inner(f, x, w)) <= 1e-10 * x.norm() * w.norm());
      const Complex lagrange =
          herm_inner(f, w, z) * herm_inner(f, z, w) - herm_inner(f, w, w) * herm_inner(f, z, z);
      CHECK(std::abs(herm_inner(f, x, x) - lagrange) <= 1e-10 * z.squaredNorm() * w.squaredNorm());
      const CMat3 m = random_form_unitary(f, rng, 0.5);
      CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
      CHECK((m * x - boxtimes(f, m * z, m * w)).norm() <= 1e-9 * x.norm());
    }
  }
}

TEST_CASE("Cayley matrix") {
  const CVec3 c1 = cayley_apply(CVec3(1, 0, 0), CayleyDirection::SiegelToBall);
  CHECK((c1 - CVec3(1, 0, 1) / kSqrt2).norm() < 1e-15);
  CHECK(ball_form(c1, c1) == Complex(0.0));
  CHECK((cayley_matrix() * cayley_matrix() - CMat3::Identity()).norm() < 1e-15);
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const CVec3 z = random_cvec(rng).normalized(), w = random_cvec(rng).normalized();
    const CVec3 cz = cayley_apply(z, CayleyDirection::SiegelToBall);
    const CVec3 cw = cayley_apply(w, CayleyDirection::SiegelToBall);
    CHECK(std::abs(ball_form(cz, cw) - siegel_form(z, w)) <= 1e-12);
    CHECK((cayley_apply(cz, CayleyDirection::BallToSiegel) - z).norm() < 1e-15);
    CHECK((change_form(Form::Siegel, Form::Ball, z) - cz).norm() < 1e-15);
  }
}

TEST_CASE("is_form_unitary") {
  CMat3 d = CMat3::Zero();
  d.diagonal() << 0.5, 1.0, 2.0;
  CHECK(is_form_unitary(Form::Siegel, d, 1e-12));
  d(0, 0) = 2.0;
  CHECK_FALSE(is_form_unitary(Form::Siegel, d, 1e-12));
  CHECK(is_form_unitary(Form::Ball, CMat3::Identity(), 1e-12));
  CHECK_THROWS_AS(is_form_unitary(Form::Ball, CMat3::Zero()), GeometryError);

  // The diagonal oracle g1 conj(g3) = 1, |g2| = 1 agrees with the probe test.
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.2, 3.0), ang(-kPi, kPi);
  for (int k = 0; k < 200; ++k) {
    const Complex g1 = std::polar(u(rng), ang(rng));
    const Complex g2 = std::polar(k % 3 == 0 ? u(rng) : 1.0, ang(rng));
    const Complex g3 = k % 2 == 0 ? 1.0 / std::conj(g1) : std::polar(u(rng), ang(rng));
    CMat3 m = CMat3::Zero();
    m.diagonal() << g1, g2, g3;
    const bool oracle = std::abs(g1 * std::conj(g3) - 1.0) < 1e-12 && std::abs(std::abs(g2) - 1.0) < 1e-12;
    CHECK(is_form_unitary(Form::Siegel, m, 1e-10) == oracle);
  }
}

TEST_CASE("det_normalized uses a cube root of the determinant") {
  CMat3 m = CMat3::Zero();
  m.diagonal() << I, 1.0, I;
  const CMat3 n = det_normalized(m);
  CHECK(std::abs(n.determinant() - 1.0) < 1e-14);
  CHECK(proj_gap(n.col(0), m.col(0)) < 1e-15);
}
