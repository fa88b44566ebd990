#include "chyp/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace chyp {

CVec3 random_cvec(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CVec3 z;
  for (int i = 0; i < 3; ++i) z(i) = Complex(n(rng), n(rng));
  return z;
}

CMat3 random_form_unitary(Form form, Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  CMat3 a;
  for (int i = 0; i < 3; ++i) {
    a(i, i) = Complex(0.0, n(rng));
    for (int j = i + 1; j < 3; ++j) {
      a(i, j) = Complex(n(rng), n(rng));
      a(j, i) = -std::conj(a(i, j));
    }
  }
  // J^2 = I for both forms, so (J A)^* J + J (J A) = A^* + A = 0.
  const CMat3 x = gram(form) * a;
  return det_normalized(x.exp());
}

CMat3 random_loxodromic(Rng& rng, double s_min, double s_max) {
  std::uniform_real_distribution<double> s_dist(s_min, s_max);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const double s = s_dist(rng);
  const double phi = angle(rng);
  const double psi = angle(rng);
  CMat3 d = CMat3::Zero();
  d(0, 0) = std::polar(s, phi);
  d(1, 1) = std::polar(1.0, psi);
  d(2, 2) = std::polar(1.0 / s, phi);
  const CMat3 k = random_form_unitary(Form::Siegel, rng, 0.5);
  return det_normalized(k * d * k.inverse());
}

HeisenbergPoint random_heisenberg(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Complex z;
  do {
    z = Complex(u(rng), u(rng));
  } while (std::abs(z) > radius);
  return {z, u(rng)};
}

HeisenbergCurve random_heisenberg_curve(Rng& rng, double contact) {
  constexpr double w = 2.0 * std::numbers::pi;
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  struct Term {
    int k;
    Complex c;
  };
  std::vector<Term> terms = {{1, std::polar(0.5, angle(rng))}};
  for (int k : {-2, -1, 0, 2}) terms.push_back({k, Complex(u(rng), u(rng))});

  auto zeta = [terms](double t, int order) {
    Complex s = 0.0;
    for (const auto& [k, c] : terms) {
      Complex term = c * std::polar(1.0, w * k * t);
      for (int d = 0; d < order; ++d) term *= Complex(0.0, w * k);
      s += term;
    }
    return s;
  };
  // v solves v' = contact - 2 Im(conj(zeta) zeta') with v(0) = 0.
  auto v = [terms, contact](double t) {
    Complex s = 0.0;
    for (const auto& [j, cj] : terms) {
      for (const auto& [k, ck] : terms) {
        const int m = k - j;
        const Complex e = m == 0 ? Complex(t, 0.0)
                                 : (std::polar(1.0, w * m * t) - 1.0) / Complex(0.0, w * m);
        s += std::conj(cj) * ck * Complex(0.0, w * k) * e;
      }
    }
    return contact * t - 2.0 * s.imag();
  };

  HeisenbergCurve h;
  h.zeta = [zeta](double t) { return zeta(t, 0); };
  h.dzeta = [zeta](double t) { return zeta(t, 1); };
  h.ddzeta = [zeta](double t) { return zeta(t, 2); };
  h.v = v;
  h.dv = [zeta, contact](double t) { return contact - 2.0 * (std::conj(zeta(t, 0)) * zeta(t, 1)).imag(); };
  h.ddv = [zeta](double t) { return -2.0 * (std::conj(zeta(t, 0)) * zeta(t, 2)).imag(); };
  return h;
}

}  // namespace chyp
