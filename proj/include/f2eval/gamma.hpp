#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "log_gamma.hpp"
#include "types.hpp"

namespace f2eval {

// Pochhammer symbol (z)_k for integer k of either sign.
// (z)_0 = 1; (z)_k = z (z+1) ... (z+k-1) for k > 0;
// (z)_{-j} = 1 / ((z-j)_j) for j > 0.
inline ComplexScalar pochhammer(ComplexScalar z, long k) {
  if (k >= 0) {
    ComplexScalar r = 1.0;
    for (long i = 0; i < k; ++i) r *= z + static_cast<double>(i);
    return r;
  }
  ComplexScalar d = 1.0;
  for (long i = k; i < 0; ++i) d *= z + static_cast<double>(i);
  if (d == 0.0) throw PoleError("pochhammer: negative shift hits a zero factor");
  return 1.0 / d;
}

namespace detail {

// log of (z)_k, chosen so exp(pochLog) reproduces the symbol including phase.
// Falls back to the direct factor product when a gamma argument sits on a
// pole even though the symbol itself is finite.  Returns false when the
// symbol is exactly zero (log undefined).
inline bool pochLog(ComplexScalar z, long k, ComplexScalar& out) {
  if (k == 0) {
    out = 0.0;
    return true;
  }
  if (k > 0) {
    long nz;
    // zero factor z+i = 0 for some 0 <= i < k
    if (nearInteger(z, nz) && nz <= 0 && -nz < k) return false;
    if (k <= 8 || nearGammaPole(z) || nearGammaPole(z + static_cast<double>(k))) {
      ComplexScalar s = 0.0;
      for (long i = 0; i < k; ++i) s += std::log(z + static_cast<double>(i));
      out = s;
      return true;
    }
    out = logGamma(z + static_cast<double>(k)) - logGamma(z);
    return true;
  }
  ComplexScalar denom;
  if (!pochLog(z + static_cast<double>(k), -k, denom))
    throw PoleError("pochLog: negative shift hits a zero factor");
  out = -denom;
  return true;
}

}  // namespace detail

// exp(sum log Gamma(numerators) - sum log Gamma(denominators)) with the pole
// algebra of the nonlogarithmic restriction: an unmatched denominator pole
// annihilates the ratio, an unmatched numerator pole is a degenerate case,
// and matched poles cancel in pairs with limit (-1)^(n2-n1) n2!/n1!.
inline ComplexScalar gammaRatio(const std::vector<ComplexScalar>& numerators,
                                const std::vector<ComplexScalar>& denominators) {
  std::vector<long> numPoles, denPoles;
  ComplexScalar logAcc = 0.0;
  for (ComplexScalar z : numerators) {
    long n;
    if (nearInteger(z, n) && n <= 0)
      numPoles.push_back(-n);
    else
      logAcc += logGamma(z);
  }
  for (ComplexScalar z : denominators) {
    long n;
    if (nearInteger(z, n) && n <= 0)
      denPoles.push_back(-n);
    else
      logAcc -= logGamma(z);
  }
  if (denPoles.size() > numPoles.size()) return 0.0;
  if (numPoles.size() > denPoles.size())
    throw LogarithmicCaseError("gammaRatio: gamma pole in a numerator");
  double sign = 1.0;
  for (std::size_t i = 0; i < numPoles.size(); ++i) {
    // lim Gamma(-n1+e)/Gamma(-n2+e) = (-1)^(n2-n1) n2!/n1!
    const long n1 = numPoles[i], n2 = denPoles[i];
    if ((n2 - n1) % 2 != 0) sign = -sign;
    logAcc += std::lgamma(static_cast<double>(n2) + 1.0) -
              std::lgamma(static_cast<double>(n1) + 1.0);
  }
  return sign * std::exp(logAcc);
}

}  // namespace f2eval
