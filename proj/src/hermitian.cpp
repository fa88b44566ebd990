#include "chyp/hermitian.hpp"

#include <cmath>

namespace chyp {

namespace {

CMat3 make_gram(Form form) {
  CMat3 j = CMat3::Zero();
  if (form == Form::Ball) {
    j(0, 0) = 1.0;
    j(1, 1) = 1.0;
    j(2, 2) = -1.0;
  } else {
    j(0, 2) = 1.0;
    j(1, 1) = 1.0;
    j(2, 0) = 1.0;
  }
  return j;
}

CMat3 make_cayley() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat3 c;
  c << s, 0.0, s,
       0.0, 1.0, 0.0,
       s, 0.0, -s;
  return c;
}

}  // namespace

const char* to_string(Form form) {
  return form == Form::Ball ? "form1" : "form2";
}

const char* to_string(SignClass sign) {
  switch (sign) {
    case SignClass::Negative: return "negative";
    case SignClass::Null: return "null";
    case SignClass::Positive: return "positive";
  }
  return "?";
}

const CMat3& gram(Form form) {
  static const CMat3 ball = make_gram(Form::Ball);
  static const CMat3 siegel = make_gram(Form::Siegel);
  return form == Form::Ball ? ball : siegel;
}

Complex herm_inner(Form form, const CVec3& z, const CVec3& w) {
  if (form == Form::Ball) {
    return z(0) * std::conj(w(0)) + z(1) * std::conj(w(1)) - z(2) * std::conj(w(2));
  }
  return z(0) * std::conj(w(2)) + z(1) * std::conj(w(1)) + z(2) * std::conj(w(0));
}

double herm_square(Form form, const CVec3& z) {
  if (form == Form::Ball) {
    return std::norm(z(0)) + std::norm(z(1)) - std::norm(z(2));
  }
  return 2.0 * (z(0) * std::conj(z(2))).real() + std::norm(z(1));
}

SignClass sign_class(Form form, const CVec3& z, double tol) {
  const double n2 = z.squaredNorm();
  if (n2 == 0.0) throw GeometryError("sign_class: zero vector");
  const double q = herm_square(form, z);
  if (std::abs(q) <= tol * n2) return SignClass::Null;
  return q < 0.0 ? SignClass::Negative : SignClass::Positive;
}

CVec3 boxtimes(Form form, const CVec3& z, const CVec3& w) {
  // Determinant expansion with rows (conj(Jz), conj(Jw)).
  CVec3 a;
  CVec3 b;
  if (form == Form::Ball) {
    a << std::conj(z(0)), std::conj(z(1)), -std::conj(z(2));
    b << std::conj(w(0)), std::conj(w(1)), -std::conj(w(2));
  } else {
    a << std::conj(z(2)), std::conj(z(1)), std::conj(z(0));
    b << std::conj(w(2)), std::conj(w(1)), std::conj(w(0));
  }
  return CVec3(a(1) * b(2) - a(2) * b(1),
               a(2) * b(0) - a(0) * b(2),
               a(0) * b(1) - a(1) * b(0));
}

const CMat3& cayley_matrix() {
  static const CMat3 c = make_cayley();
  return c;
}

CVec3 cayley_apply(const CVec3& z, CayleyDirection) {
  // C is an involution, so both directions use the same matrix.
  return cayley_matrix() * z;
}

CVec3 change_form(Form from, Form to, const CVec3& z) {
  if (from == to) return z;
  return cayley_matrix() * z;
}

CMat3 change_form(Form from, Form to, const CMat3& m) {
  if (from == to) return m;
  const CMat3& c = cayley_matrix();
  return c * m * c;
}

bool is_form_unitary(Form form, const CMat3& m, double tol) {
  const double scale = m.norm();
  if (scale == 0.0 || std::abs(m.determinant()) <= 1e-14 * scale * scale * scale) {
    throw GeometryError("is_form_unitary: singular matrix");
  }
  const CMat3& j = gram(form);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const CVec3 a = m.col(i);
      const CVec3 b = m.col(k);
      const double bound = tol * std::max(1.0, a.norm() * b.norm());
      if (std::abs(herm_inner(form, a, b) - j(i, k)) > bound) return false;
    }
  }
  return true;
}

CMat3 det_normalized(const CMat3& m) {
  const Complex det = m.determinant();
  if (det == Complex(0.0)) throw GeometryError("det_normalized: singular matrix");
  return m / std::pow(det, 1.0 / 3.0);
}

}  // namespace chyp
