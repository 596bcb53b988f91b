#ifndef EUP_WAVEFUNCTION_HPP
#define EUP_WAVEFUNCTION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eup/polynomial.hpp"
#include "eup/types.hpp"

namespace eup {

/// Complex wavefunction sampled on a contour grid.
struct WavefunctionTable {
  Contour contour;
  std::vector<Complex> values;
  std::string label;

  void validate() const;
};

template <typename Fn>
WavefunctionTable sample(const Contour& contour, Fn&& fn, std::string label = {}) {
  contour.validate();
  WavefunctionTable t;
  t.contour = contour;
  t.label = std::move(label);
  t.values.reserve(contour.n_points);
  for (int j = 0; j < contour.n_points; ++j) t.values.push_back(fn(contour.point(j)));
  t.validate();
  return t;
}

/// External potential V(x): zero or a polynomial.
struct PotentialSpec {
  enum class Kind { zero, polynomial };
  Kind kind = Kind::zero;
  ComplexPolynomial poly;

  static PotentialSpec zero() { return {}; }
  static PotentialSpec polynomial(ComplexPolynomial p) {
    return {Kind::polynomial, std::move(p)};
  }
  bool is_zero() const { return kind == Kind::zero; }
  Complex value_at(Complex x) const { return is_zero() ? Complex{0.0, 0.0} : eval_poly(poly, x); }
};

/// Central finite-difference scheme for wavefunction derivatives.
/// Richardson combines the stencil at spacings h and 2h, raising the
/// effective order by two.
struct StencilScheme {
  int order = 4;
  bool richardson = false;

  void validate() const {
    if (order != 2 && order != 4) throw ConfigError("stencil order must be 2 or 4");
  }
  /// Number of untrusted points at each end of the grid.
  int margin() const { return (order / 2) * (richardson ? 2 : 1); }
};

// CSV schema: header "re_x,im_x,re_f,im_f", one row per grid point.
void write_csv(const WavefunctionTable& t, std::ostream& os);
WavefunctionTable read_wavefunction_csv(std::istream& is);

}  // namespace eup

#endif
