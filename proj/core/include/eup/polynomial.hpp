#ifndef EUP_POLYNOMIAL_HPP
#define EUP_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "eup/types.hpp"

namespace eup {

/// Polynomial over complex scalars, coeffs[k] = coefficient of x^k.
/// Trailing zeros are trimmed; the zero polynomial has an empty
/// coefficient sequence. This is the representation of the auxiliary
/// deformation mu(x) and of polynomial potentials.
struct ComplexPolynomial {
  std::vector<Complex> coeffs;

  static ComplexPolynomial from_coeffs(std::vector<Complex> cs);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const ComplexPolynomial&) const = default;
};

Complex eval_poly(const ComplexPolynomial& p, Complex x);

/// d/dx: output coefficient k is (k+1) * coeffs[k+1].
ComplexPolynomial derive_poly(const ComplexPolynomial& p);

/// PT action on coefficients: k -> (-1)^k conj(coeffs[k]), i.e. p*(-x).
ComplexPolynomial pt_reflect(const ComplexPolynomial& p);

/// True iff max-norm of p - pt_reflect(p) coefficients is <= tol
/// (even coefficients real, odd coefficients purely imaginary).
bool is_pt_symmetric(const ComplexPolynomial& p, double tol = 1e-12);

/// mu(x) = alpha^2 x^2 + 2i beta x, the quasi-free deformation.
ComplexPolynomial make_quasi_free_mu(const QuasiFreeParams& params);

/// Recognizes polynomials of the quasi-free form and recovers (alpha, beta).
std::optional<QuasiFreeParams> as_quasi_free(const ComplexPolynomial& p, double tol = 1e-12);

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);

/// 1 + p, the momentum deformation factor.
ComplexPolynomial one_plus(const ComplexPolynomial& p);

/// JSON array of [re, im] pairs, index = power.
std::string poly_to_json(const ComplexPolynomial& p);
ComplexPolynomial poly_from_json(const std::string& text);

}  // namespace eup

#endif
