#pragma once

#include <cstdint>
#include <random>

#include "chyp/curves.hpp"
#include "chyp/dynamics.hpp"

namespace chyp {

using Rng = std::mt19937_64;

/// Components with independent standard normal real and imaginary parts.
CVec3 random_cvec(Rng& rng);

/// exp(J A) for a random anti-Hermitian A of entry size `scale`, with
/// determinant normalized to one.
CMat3 random_form_unitary(Form form, Rng& rng, double scale = 1.0);

/// k diag(s e^{i phi}, e^{i psi}, e^{i phi}/s) k^-1 in the Siegel model with
/// s drawn from [s_min, s_max] and k random form-unitary.
CMat3 random_loxodromic(Rng& rng, double s_min = 0.1, double s_max = 0.9);

/// Uniformly random finite Heisenberg point with |zeta|, |v| <= radius.
HeisenbergPoint random_heisenberg(Rng& rng, double radius = 2.0);

/// Random closed-in-zeta chart curve: zeta a trigonometric polynomial
/// dominated by its e^{2 pi i t} term and v chosen so that the contact form
/// equals `contact` at every t. contact = 0 gives a Legendrian curve.
HeisenbergCurve random_heisenberg_curve(Rng& rng, double contact = 0.0);

}  // namespace chyp
