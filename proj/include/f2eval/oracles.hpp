#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "evaluator.hpp"
#include "gamma.hpp"
#include "hyp2f1.hpp"
#include "quadrature.hpp"
#include "series_spec.hpp"
#include "types.hpp"

namespace f2eval {

enum class OracleMethod { bruteForce, singleSum, eulerQuad };

struct OracleResult {
  ComplexScalar value;
  OracleMethod method;
  bool domainOk = true;
  double estimatedAccuracy = 0.0;
};

namespace detail {

// Pochhammer logs for shifts 0..count-1, each taken independently from
// logGamma so the oracle shares no recurrence with the series engine.
// zero[k] marks a symbol that is exactly 0; lower symbols must not vanish.
struct PochLogTable {
  std::vector<ComplexScalar> log;
  std::vector<char> zero;
};

inline PochLogTable pochLogTable(ComplexScalar z, long count, bool lower) {
  PochLogTable t{std::vector<ComplexScalar>(count), std::vector<char>(count, 0)};
  for (long k = 0; k < count; ++k) {
    if (pochLog(z, k, t.log[k])) continue;
    if (lower) throw PoleError("oracle: lower Pochhammer symbol vanishes");
    t.zero[k] = 1;
  }
  return t;
}

}  // namespace detail

// Direct rectangular summation of the defining double series, with every term
// rebuilt from scratch in log space.
inline OracleResult bruteForceF2(const ParameterSet& params, EvalPoint point, int terms) {
  if (std::abs(point.x) + std::abs(point.y) >= 1.0)
    throw DomainError("bruteForceF2 requires |x| + |y| < 1");
  const long T = terms;
  const auto pa = detail::pochLogTable(params.a, 2 * T - 1, false);
  const auto pb1 = detail::pochLogTable(params.b1, T, false);
  const auto pb2 = detail::pochLogTable(params.b2, T, false);
  const auto pc1 = detail::pochLogTable(params.c1, T, true);
  const auto pc2 = detail::pochLogTable(params.c2, T, true);

  ComplexScalar sum = 0.0;
  double boundaryMax = 0.0;
  for (long m = 0; m < T; ++m) {
    if (pb1.zero[m]) continue;
    for (long n = 0; n < T; ++n) {
      if (pa.zero[m + n] || pb2.zero[n]) continue;
      const ComplexScalar logTerm = pa.log[m + n] + pb1.log[m] + pb2.log[n] - pc1.log[m] -
                                    pc2.log[n] - std::lgamma(m + 1.0) - std::lgamma(n + 1.0);
      const ComplexScalar term = std::exp(logTerm) *
                                 std::pow(point.x, static_cast<double>(m)) *
                                 std::pow(point.y, static_cast<double>(n));
      sum += term;
      if (m == T - 1 || n == T - 1) boundaryMax = std::max(boundaryMax, std::abs(term));
    }
  }
  return {sum, OracleMethod::bruteForce, true, boundaryMax};
}

// Single sum over m with the inner n-sum folded into gauss2F1, so large |y|
// rides on the scalar continuations instead of the double series.
inline OracleResult singleSumF2(const ParameterSet& params, EvalPoint point, int terms) {
  if (std::abs(point.x) >= std::min(1.0, std::abs(1.0 - point.y)))
    throw DomainError("singleSumF2 requires |x| < min(1, |1-y|)");
  if (point.y >= 1.0)
    throw DomainError("singleSumF2 requires y off the inner 2F1 cut [1, inf)");
  const long T = terms;
  const auto pa = detail::pochLogTable(params.a, T, false);
  const auto pb1 = detail::pochLogTable(params.b1, T, false);
  const auto pc1 = detail::pochLogTable(params.c1, T, true);

  ComplexScalar sum = 0.0;
  double lastMagnitude = 0.0;
  for (long m = 0; m < T; ++m) {
    if (pa.zero[m] || pb1.zero[m]) {
      lastMagnitude = 0.0;
      continue;
    }
    const ComplexScalar coeff =
        std::exp(pa.log[m] + pb1.log[m] - pc1.log[m] - std::lgamma(m + 1.0)) *
        std::pow(point.x, static_cast<double>(m));
    const ComplexScalar contribution =
        coeff * gauss2F1(params.a + static_cast<double>(m), params.b2, params.c2, point.y);
    sum += contribution;
    lastMagnitude = std::abs(contribution);
  }
  return {sum, OracleMethod::singleSum, true, lastMagnitude};
}

// One-dimensional Euler integral over the y variable, reduced to adaptive
// Gauss-Kronrod panels.  Endpoint power singularities v^{b2-1} and
// (1-v)^{c2-b2-1} are flattened by the substitution v = u^{1/Re(exponent)}
// on their own half of [0, 1].
inline OracleResult eulerQuadF2(const ParameterSet& params, EvalPoint point) {
  const ComplexScalar b2 = params.b2;
  const ComplexScalar c2mb2 = params.c2 - params.b2;
  if (b2.real() <= 0.0) throw DomainError("eulerQuadF2 requires Re(b2) > 0");
  if (c2mb2.real() <= 0.0) throw DomainError("eulerQuadF2 requires Re(c2 - b2) > 0");
  if (point.y >= 1.0)
    throw DomainError("eulerQuadF2: integration path meets the 1 - v y pole");
  if (std::max(point.x, point.x / (1.0 - point.y)) >= 1.0)
    throw DomainError("eulerQuadF2: inner 2F1 argument reaches the [1, inf) cut");

  const auto integrand = [&](double v, double oneMinusV) -> ComplexScalar {
    const double onePole = 1.0 - v * point.y;
    return std::exp((b2 - 1.0) * std::log(ComplexScalar(v)) +
                    (c2mb2 - 1.0) * std::log(ComplexScalar(oneMinusV)) -
                    params.a * std::log(ComplexScalar(onePole))) *
           gauss2F1(params.a, params.b1, params.c1, point.x / onePole);
  };

  // t is the distance to this half's own endpoint, kept exact so the weight
  // t^{exponent-1} never loses digits to the 1 - v round trip.
  const auto halfPiece = [&](bool leftHalf, double exponent) -> QuadratureResult {
    const auto eval = [&](double t) {
      return leftHalf ? integrand(t, 1.0 - t) : integrand(1.0 - t, t);
    };
    if (exponent >= 1.0) return integrateGaussKronrod(eval, 0.0, 0.5);
    const double power = 1.0 / exponent;
    return integrateGaussKronrod(
        [&](double u) { return eval(std::pow(u, power)) * power * std::pow(u, power - 1.0); },
        0.0, std::pow(0.5, exponent));
  };

  const QuadratureResult left = halfPiece(true, b2.real());
  const QuadratureResult right = halfPiece(false, c2mb2.real());
  const ComplexScalar norm = gammaRatio({params.c2}, {b2, c2mb2});
  return {norm * (left.value + right.value), OracleMethod::eulerQuad, true,
          std::abs(norm) * (left.errorEstimate + right.errorEstimate)};
}

// Residuals of the two second-order PDEs satisfied by the function, from
// central differences over a 3x3 stencil summed with one representation valid
// at all nine points.  Each residual is normalized by its largest addend.
inline std::pair<double, double> pdeResidual(const ParameterSet& params, EvalPoint point,
                                             double h = 1e-3) {
  ComplexScalar z[3][3];
  std::vector<std::pair<double, std::string_view>> covering;
  for (const auto& rep : catalog()) {
    bool everywhere = true;
    for (int i = -1; i <= 1 && everywhere; ++i)
      for (int j = -1; j <= 1; ++j) {
        const EvalPoint q{point.x + i * h, point.y + j * h};
        try {
          requireOffSingularCurves(q);
        } catch (const SingularCurveError&) {
          throw StencilDomainError("pdeResidual: stencil touches a singular curve");
        }
        if (!rocContains(rep.roc, q)) {
          everywhere = false;
          break;
        }
      }
    if (!everywhere) continue;
    try {
      covering.emplace_back(convergenceRate(rep, params, point), rep.id);
    } catch (const LogarithmicCaseError&) {
    }
  }
  if (covering.empty())
    throw StencilDomainError("pdeResidual: no single representation covers the stencil");
  std::stable_sort(covering.begin(), covering.end(),
                   [](const auto& u, const auto& v) { return u.first < v.first; });

  bool filled = false;
  for (const auto& [rate, id] : covering) {
    try {
      for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
          z[i + 1][j + 1] =
              evaluateWith(id, params, {point.x + i * h, point.y + j * h}, 12, 150).value;
      filled = true;
    } catch (const PoleError&) {
    } catch (const LogarithmicCaseError&) {
    } catch (const OverflowError&) {
    }
    if (filled) break;
  }
  if (!filled)
    throw StencilDomainError(
        "pdeResidual: every covering representation is degenerate at the parameters");

  const ComplexScalar z0 = z[1][1];
  const ComplexScalar p = (z[2][1] - z[0][1]) / (2.0 * h);
  const ComplexScalar q = (z[1][2] - z[1][0]) / (2.0 * h);
  const ComplexScalar r = (z[2][1] - 2.0 * z0 + z[0][1]) / (h * h);
  const ComplexScalar t = (z[1][2] - 2.0 * z0 + z[1][0]) / (h * h);
  const ComplexScalar s = (z[2][2] - z[2][0] - z[0][2] + z[0][0]) / (4.0 * h * h);

  const double x = point.x, y = point.y;
  const auto normalizedResidual = [](const ComplexScalar (&addends)[5]) {
    ComplexScalar total = 0.0;
    double largest = 0.0;
    for (const ComplexScalar& term : addends) {
      total += term;
      largest = std::max(largest, std::abs(term));
    }
    return largest == 0.0 ? 0.0 : std::abs(total) / largest;
  };
  const ComplexScalar first[5] = {x * (1.0 - x) * r, -x * y * s,
                                  (params.c1 - (params.a + params.b1 + 1.0) * x) * p,
                                  -params.b1 * y * q, -params.a * params.b1 * z0};
  const ComplexScalar second[5] = {y * (1.0 - y) * t, -x * y * s,
                                   (params.c2 - (params.a + params.b2 + 1.0) * y) * q,
                                   -params.b2 * x * p, -params.a * params.b2 * z0};
  return {normalizedResidual(first), normalizedResidual(second)};
}

}  // namespace f2eval
