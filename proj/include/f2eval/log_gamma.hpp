#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"
#include "types.hpp"

namespace f2eval {

// Tolerance below which a gamma argument counts as sitting on a pole.
inline constexpr double kEpsPole = 1e-10;

// True when z lies within eps of a non-positive integer.
inline bool nearGammaPole(ComplexScalar z, double eps = kEpsPole) {
  const double r = std::round(z.real());
  if (r > 0.5) return false;
  return std::hypot(z.real() - r, z.imag()) <= eps;
}

// Nearest integer to z when z is within eps of one, used to snap
// pole-adjacent arguments onto exact integers.
inline bool nearInteger(ComplexScalar z, long& n, double eps = kEpsPole) {
  const double r = std::round(z.real());
  if (std::hypot(z.real() - r, z.imag()) > eps) return false;
  n = static_cast<long>(r);
  return true;
}

namespace detail {

// exp(u) - 1 without cancellation for small u.
inline ComplexScalar expm1c(ComplexScalar u) {
  const double em = std::expm1(u.real());
  const double s2 = std::sin(0.5 * u.imag());
  return {em * std::cos(u.imag()) - 2.0 * s2 * s2,
          std::exp(u.real()) * std::sin(u.imag())};
}

// log(sin(pi z)) on the branch continuous off the real axis, written to stay
// stable for large |Im z| and near the zeros of sin.
inline ComplexScalar logSinPi(ComplexScalar z) {
  const double pi = std::numbers::pi;
  // exp(2 pi i z) = exp(2 pi i zr) with zr reduced by the nearest integer
  const ComplexScalar zr(z.real() - std::round(z.real()), z.imag());
  if (z.imag() >= 0.0)
    return ComplexScalar(0.0, 0.5 * pi) - std::numbers::ln2 +
           ComplexScalar(pi * z.imag(), -pi * z.real()) +
           std::log(-expm1c(ComplexScalar(-2.0 * pi * zr.imag(), 2.0 * pi * zr.real())));
  return ComplexScalar(0.0, -0.5 * pi) - std::numbers::ln2 +
         ComplexScalar(-pi * z.imag(), pi * z.real()) +
         std::log(-expm1c(ComplexScalar(2.0 * pi * zr.imag(), -2.0 * pi * zr.real())));
}

}  // namespace detail

// log Gamma(z) via the Lanczos approximation (g = 7, 9 coefficients), with
// the reflection formula for Re z < 0.5.  The imaginary part may differ from
// the principal value by a multiple of 2*pi on far-from-axis inputs; every
// consumer exponentiates sums of these logs, where such shifts cancel.
inline ComplexScalar logGamma(ComplexScalar z) {
  static constexpr double kLanczos[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = std::numbers::pi;

  if (nearGammaPole(z)) throw PoleError("logGamma: argument at a non-positive integer");
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi) - detail::logSinPi(z) - logGamma(1.0 - z);
  }
  const ComplexScalar zm1 = z - 1.0;
  ComplexScalar acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
  const ComplexScalar t = zm1 + 7.5;
  return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace f2eval
