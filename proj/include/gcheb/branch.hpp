#pragma once

// Two-sheeted kernel: the branch of sqrt(z^2 - 1) that is positive for z > 1
// on the physical sheet, and the uniformizing map omega(z) = z - sqrt(z^2 - 1).

#include <cmath>
#include <complex>

#include "gcheb/errors.hpp"

namespace gcheb {

using cplx = std::complex<double>;

enum class Sheet { Physical, Second };

// Side of the cut [-1, 1]: Plus is lambda + i0, Minus is lambda - i0.
enum class Side { Plus, Minus };

/// sqrt(z^2 - 1) on the requested sheet.
///
/// Physical sheet: the product of principal roots sqrt(z - 1) sqrt(z + 1). It is
/// positive for z > 1, negative for z < -1 and equals +i sqrt(1 - lambda^2) for
/// real z = lambda in (-1, 1), i.e. the upper side of the cut. Use
/// boundary_sqrt for an explicit side. The second sheet is the negative.
inline cplx branch_sqrt(cplx z, Sheet sheet = Sheet::Physical) {
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);  // drop a signed zero
  cplx s = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  return sheet == Sheet::Physical ? s : -s;
}

/// Boundary value of the physical-sheet root at lambda +/- i0.
inline cplx boundary_sqrt(double lambda, Side side) {
  detail::require(std::abs(lambda) < 1.0, "boundary_sqrt: |lambda| must be < 1");
  double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  return side == Side::Plus ? cplx(0.0, r) : cplx(0.0, -r);
}

namespace detail {

// z - s computed without cancellation: whichever of z - s, 1/(z + s) is
// numerically safe. Both agree because (z - s)(z + s) = 1.
inline cplx omega_from_root(cplx z, cplx s) {
  cplx w = z + s;
  if (std::abs(w) >= 1.0) return 1.0 / w;
  return z - s;
}

}  // namespace detail

/// omega(z) = z - sqrt(z^2 - 1). |omega| <= 1 on the physical sheet, >= 1 on the
/// second, and omega(+-1) = +-1 on both.
inline cplx omega(cplx z, Sheet sheet = Sheet::Physical) {
  return detail::omega_from_root(z, branch_sqrt(z, sheet));
}

/// omega(lambda +/- i0) = lambda -/+ i sqrt(1 - lambda^2), on the unit circle.
inline cplx boundary_omega(double lambda, Side side) {
  detail::require(std::abs(lambda) < 1.0, "boundary_omega: |lambda| must be < 1");
  double r = std::sqrt((1.0 - lambda) * (1.0 + lambda));
  return side == Side::Plus ? cplx(lambda, -r) : cplx(lambda, r);
}

/// A spectral parameter with its sheet and the cached branch values.
///
/// Boundary points lambda +/- i0 are represented with a real z and the side
/// recorded through sqrt_val; every closed form in the library reads the cached
/// values, so the side is never inferred from signed zeros.
struct EnergyPoint {
  cplx z;
  Sheet sheet = Sheet::Physical;
  cplx sqrt_val;
  cplx omega_val;

  static EnergyPoint at(cplx z, Sheet sheet = Sheet::Physical) {
    cplx s = branch_sqrt(z, sheet);
    return EnergyPoint{z, sheet, s, detail::omega_from_root(z, s)};
  }

  static EnergyPoint boundary(double lambda, Side side) {
    return EnergyPoint{cplx(lambda, 0.0), Sheet::Physical, boundary_sqrt(lambda, side),
                       boundary_omega(lambda, side)};
  }

  // Same point seen from the other sheet.
  EnergyPoint other_sheet() const {
    Sheet s = sheet == Sheet::Physical ? Sheet::Second : Sheet::Physical;
    return EnergyPoint{z, s, -sqrt_val, detail::omega_from_root(z, -sqrt_val)};
  }

  bool is_edge() const { return sqrt_val == cplx(0.0, 0.0); }
};

}  // namespace gcheb
