#pragma once

// Complex 3-dimensional linear algebra for C^{2,1}: the two Hermitian forms,
// sign classification, Hermitian cross products and the Cayley transform.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace chyp {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

/// Default relative tolerance for null / zero decisions in the kernel.
inline constexpr double kKernelTol = 1e-10;

/// Raised on violated preconditions (zero vectors, coincident points,
/// non-null boundary input, non-unitary maps, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which Hermitian form is active.
///
/// Ball:   <z,w> = z1 w1* + z2 w2* - z3 w3*
/// Siegel: <z,w> = z1 w3* + z2 w2* + z3 w1*
enum class Form { Ball, Siegel };

enum class SignClass { Negative, Null, Positive };

const char* to_string(Form form);
const char* to_string(SignClass sign);

/// Gram matrix J of the form, so that <z,w> = w^* J z.
const CMat3& gram(Form form);

/// Linear in the first argument, conjugate-linear in the second.
Complex herm_inner(Form form, const CVec3& z, const CVec3& w);

/// Real value <z,z>.
double herm_square(Form form, const CVec3& z);

/// NULL iff |<z,z>| <= tol * |z|^2. Throws on the zero vector.
SignClass sign_class(Form form, const CVec3& z, double tol = kKernelTol);

/// Hermitian cross product z ⊠ w. It is orthogonal to z and w under the
/// same form and vanishes exactly when z and w are linearly dependent.
/// For g in SU(2,1): g(z ⊠ w) = (gz) ⊠ (gw).
CVec3 boxtimes(Form form, const CVec3& z, const CVec3& w);

/// The Cayley matrix C = (1/sqrt 2)[[1,0,1],[0,sqrt 2,0],[1,0,-1]], with
/// <Cz,Cw>_ball = <z,w>_siegel and C^2 = I.
const CMat3& cayley_matrix();

enum class CayleyDirection { BallToSiegel, SiegelToBall };

CVec3 cayley_apply(const CVec3& z, CayleyDirection direction);

/// Coordinates of z (given in `from`) expressed in the `to` model.
CVec3 change_form(Form from, Form to, const CVec3& z);

/// Matrix of the same projective map expressed in the `to` model.
CMat3 change_form(Form from, Form to, const CMat3& m);

/// True iff |<Me_i, Me_j> - <e_i, e_j>| <= tol * max(1, |Me_i| |Me_j|) over
/// the standard basis. Throws on a singular matrix.
bool is_form_unitary(Form form, const CMat3& m, double tol = kKernelTol);

/// m divided by the principal cube root of det(m); the result has det 1.
CMat3 det_normalized(const CMat3& m);

}  // namespace chyp
