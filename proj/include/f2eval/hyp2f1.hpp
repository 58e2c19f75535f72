#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "errors.hpp"
#include "gamma.hpp"
#include "log_gamma.hpp"
#include "types.hpp"

namespace f2eval {

namespace detail {

// Direct Gauss series at argument w, |w| <= 2/3 after the region mappings.
inline ComplexScalar hypSeries(ComplexScalar a, ComplexScalar b, ComplexScalar c,
                               ComplexScalar w) {
  const double eps = std::numeric_limits<double>::epsilon();
  ComplexScalar s = 1.0, t = 1.0;
  int settled = 0;
  for (int n = 0; n < 1200; ++n) {
    t *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
         ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * w;
    s += t;
    if (std::abs(t) <= eps * std::abs(s)) {
      if (++settled == 2) return s;
    } else {
      settled = 0;
    }
  }
  throw NonConvergenceError("gauss2F1: series failed to settle");
}

// Terminating case: a = -N exactly, polynomial of degree N valid for all z.
inline ComplexScalar hypPolynomial(long N, ComplexScalar b, ComplexScalar c, double z) {
  ComplexScalar s = 1.0, t = 1.0;
  const ComplexScalar a(static_cast<double>(-N), 0.0);
  for (long n = 0; n < N; ++n) {
    t *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
         ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
    s += t;
  }
  return s;
}

// log(1-z) with the cut value taken as the limit from z + i0+ (so the
// argument of 1-z approaches -pi for z > 1).
inline ComplexScalar logOneMinusZAbove(double z) {
  if (z < 1.0) return ComplexScalar(std::log(1.0 - z), 0.0);
  return ComplexScalar(std::log(z - 1.0), -std::numbers::pi);
}

// log(-z) with the same z + i0+ convention (argument -pi for z > 0).
inline ComplexScalar logNegZAbove(double z) {
  if (z < 0.0) return ComplexScalar(std::log(-z), 0.0);
  return ComplexScalar(std::log(z), -std::numbers::pi);
}

}  // namespace detail

// Gauss 2F1(a, b; c; z) for real z, using the linear transformations
// z -> 1-z, z -> 1/z, and the Pfaff map z -> z/(z-1) so the summed argument
// never exceeds 2/3 in magnitude.  Values on the cut z in (1, inf) follow the
// limit from above the real axis.
inline ComplexScalar gauss2F1(ComplexScalar a, ComplexScalar b, ComplexScalar c, double z) {
  if (b.real() < a.real() ||
      (b.real() == a.real() && b.imag() < a.imag()))
    std::swap(a, b);

  long na = 0, nb = 0;
  const bool ta = nearInteger(a, na) && na <= 0;
  const bool tb = nearInteger(b, nb) && nb <= 0;
  if (ta || tb) {
    long N = ta ? -na : -nb;
    if (ta && tb) N = std::min(-na, -nb);
    long nc;
    if (nearInteger(c, nc) && nc <= 0 && -nc < N)
      throw PoleError("gauss2F1: lower parameter pole inside terminating sum");
    const ComplexScalar other = (ta && (!tb || -na <= -nb)) ? b : a;
    return detail::hypPolynomial(N, other, c, z);
  }
  if (nearGammaPole(c)) throw PoleError("gauss2F1: c at a non-positive integer");

  if (z == 0.0) return 1.0;

  if (std::abs(z) <= 0.5) return detail::hypSeries(a, b, c, z);

  if (z <= -2.0 || z > 1.5) {
    // 2F1(a,b;c;z) = G(c)G(b-a)/(G(b)G(c-a)) (-z)^{-a} 2F1(a,a-c+1;a-b+1;1/z)
    //             + G(c)G(a-b)/(G(a)G(c-b)) (-z)^{-b} 2F1(b,b-c+1;b-a+1;1/z)
    const ComplexScalar lz = detail::logNegZAbove(z);
    const ComplexScalar w = 1.0 / z;
    const ComplexScalar k1 = gammaRatio({c, b - a}, {b, c - a});
    const ComplexScalar k2 = gammaRatio({c, a - b}, {a, c - b});
    ComplexScalar s = 0.0;
    if (k1 != 0.0)
      s += k1 * std::exp(-a * lz) * detail::hypSeries(a, a - c + 1.0, a - b + 1.0, w);
    if (k2 != 0.0)
      s += k2 * std::exp(-b * lz) * detail::hypSeries(b, b - c + 1.0, b - a + 1.0, w);
    return s;
  }

  if (z < -0.5) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    return std::pow(ComplexScalar(1.0 - z, 0.0), -a) *
           detail::hypSeries(a, c - b, c, ComplexScalar(z / (z - 1.0), 0.0));
  }

  if (z == 1.0) {
    // Gauss value at 1 requires Re(c-a-b) > 0
    if ((c - a - b).real() <= 0.0)
      throw DomainError("gauss2F1: z = 1 with Re(c-a-b) <= 0");
    return gammaRatio({c, c - a - b}, {c - a, c - b});
  }

  // 0.5 < z <= 1.5:
  // 2F1(a,b;c;z) = G(c)G(c-a-b)/(G(c-a)G(c-b)) 2F1(a,b;a+b-c+1;1-z)
  //             + G(c)G(a+b-c)/(G(a)G(b)) (1-z)^{c-a-b} 2F1(c-a,c-b;c-a-b+1;1-z)
  const ComplexScalar w = 1.0 - z;
  const ComplexScalar k1 = gammaRatio({c, c - a - b}, {c - a, c - b});
  const ComplexScalar k2 = gammaRatio({c, a + b - c}, {a, b});
  ComplexScalar s = 0.0;
  if (k1 != 0.0) s += k1 * detail::hypSeries(a, b, a + b - c + 1.0, w);
  if (k2 != 0.0)
    s += k2 * std::exp((c - a - b) * detail::logOneMinusZAbove(z)) *
         detail::hypSeries(c - a, c - b, c - a - b + 1.0, w);
  return s;
}

}  // namespace f2eval
