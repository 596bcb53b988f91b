#include "eup/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace eup {

namespace {

void trim_trailing_zeros(std::vector<Complex>& cs) {
  while (!cs.empty() && cs.back() == Complex{0.0, 0.0}) cs.pop_back();
}

}  // namespace

ComplexPolynomial ComplexPolynomial::from_coeffs(std::vector<Complex> cs) {
  for (const auto& c : cs)
    if (!is_finite(c)) throw Error("polynomial coefficients must be finite");
  trim_trailing_zeros(cs);
  return ComplexPolynomial{std::move(cs)};
}

Complex eval_poly(const ComplexPolynomial& p, Complex x) {
  Complex acc{0.0, 0.0};
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPolynomial derive_poly(const ComplexPolynomial& p) {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k)
    out.push_back(static_cast<double>(k) * p.coeffs[k]);
  return ComplexPolynomial::from_coeffs(std::move(out));
}

ComplexPolynomial pt_reflect(const ComplexPolynomial& p) {
  std::vector<Complex> out(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    Complex c = std::conj(p.coeffs[k]);
    out[k] = (k % 2 == 0) ? c : -c;
  }
  return ComplexPolynomial::from_coeffs(std::move(out));
}

bool is_pt_symmetric(const ComplexPolynomial& p, double tol) {
  if (tol < 0.0) throw Error("tolerance must be nonnegative");
  const ComplexPolynomial r = pt_reflect(p);
  double worst = 0.0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    worst = std::max(worst, std::abs(p.coeffs[k] - r.coeffs[k]));
  return worst <= tol;
}

ComplexPolynomial make_quasi_free_mu(const QuasiFreeParams& params) {
  params.validate();
  return ComplexPolynomial::from_coeffs(
      {{0.0, 0.0}, {0.0, 2.0 * params.beta}, {params.alpha * params.alpha, 0.0}});
}

std::optional<QuasiFreeParams> as_quasi_free(const ComplexPolynomial& p, double tol) {
  if (p.degree() != 2) return std::nullopt;
  const Complex c0 = p.coeffs[0], c1 = p.coeffs[1], c2 = p.coeffs[2];
  const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
  if (std::abs(c0) > tol * scale) return std::nullopt;
  if (std::abs(c1.real()) > tol * scale) return std::nullopt;
  if (std::abs(c2.imag()) > tol * scale || !(c2.real() > 0.0)) return std::nullopt;
  QuasiFreeParams q;
  q.alpha = std::sqrt(c2.real());
  q.beta = c1.imag() / 2.0;
  return q;
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<Complex> out(std::max(a.coeffs.size(), b.coeffs.size()), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) out[k] += b.coeffs[k];
  return ComplexPolynomial::from_coeffs(std::move(out));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  return a + Complex{-1.0, 0.0} * b;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs.size() + b.coeffs.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  return ComplexPolynomial::from_coeffs(std::move(out));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
  std::vector<Complex> out(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) out[k] = s * p.coeffs[k];
  return ComplexPolynomial::from_coeffs(std::move(out));
}

ComplexPolynomial one_plus(const ComplexPolynomial& p) {
  return p + ComplexPolynomial::from_coeffs({{1.0, 0.0}});
}

std::string poly_to_json(const ComplexPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs) arr.push_back({c.real(), c.imag()});
  return arr.dump();
}

ComplexPolynomial poly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polynomial JSON parse error: ") + e.what());
  }
  if (!j.is_array()) throw ConfigError("polynomial JSON must be an array of [re, im] pairs");
  std::vector<Complex> cs;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw ConfigError("polynomial JSON entries must be [re, im] number pairs");
    cs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return ComplexPolynomial::from_coeffs(std::move(cs));
}

}  // namespace eup
