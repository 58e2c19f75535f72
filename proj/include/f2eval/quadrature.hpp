#pragma once

#include <cmath>
#include <complex>

#include "types.hpp"

namespace f2eval {

struct QuadratureResult {
  ComplexScalar value;
  double errorEstimate;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae on (0, 1), Kronrod weights, and the embedded
// 7-point Gauss weights on the odd positions.
inline constexpr double kGk15Nodes[15] = {
    0.004272314439593680396572651236835742, 0.02544604382862073773690515797607437,
    0.0675677883201154636051436056795369,   0.1292344072003027800680676133596058,
    0.2069563822661544348529275808706352,   0.2970774243113014165466967939615193,
    0.3961075224960507661996552981133775,   0.5,
    0.6038924775039492338003447018866225,   0.7029225756886985834533032060384807,
    0.7930436177338455651470724191293648,   0.8707655927996972199319323866403942,
    0.9324322116798845363948563943204631,   0.9745539561713792622630948420239256,
    0.9957276855604063196034273487631643};

inline constexpr double kGk15Weights[15] = {
    0.0114676610052646124818660040294848,  0.03154604631498927664535033159460214,
    0.05239500516112509191993816127075901, 0.07032662985776295937259479525511896,
    0.08450236331963395141329171329927514, 0.09517528903239270495662820121050684,
    0.1022164700376494462070809996173245,  0.1047410705423639140064995874458571,
    0.1022164700376494462070809996173245,  0.09517528903239270495662820121050684,
    0.08450236331963395141329171329927514, 0.07032662985776295937259479525511896,
    0.05239500516112509191993816127075901, 0.03154604631498927664535033159460214,
    0.0114676610052646124818660040294848};

inline constexpr double kGauss7Weights[15] = {
    0.0, 0.06474248308443484663530571633954101, 0.0, 0.1398526957446383339507338857118898,
    0.0, 0.1909150252525594724751848877444876,  0.0, 0.2089795918367346938775510204081633,
    0.0, 0.1909150252525594724751848877444876,  0.0, 0.1398526957446383339507338857118898,
    0.0, 0.06474248308443484663530571633954101, 0.0};

template <typename F>
QuadratureResult gaussKronrodPanel(const F& f, double a, double b) {
  const double width = b - a;
  ComplexScalar kronrod = 0.0, gauss = 0.0;
  for (int j = 0; j < 15; ++j) {
    const ComplexScalar y = f(a + width * kGk15Nodes[j]);
    kronrod += kGk15Weights[j] * y;
    if (j % 2 == 1) gauss += kGauss7Weights[j] * y;
  }
  return {width * kronrod, std::abs(width * (kronrod - gauss))};
}

template <typename F>
QuadratureResult integrateAdaptively(const F& f, double a, double b, double absTol, int depth) {
  const QuadratureResult panel = gaussKronrodPanel(f, a, b);
  if (panel.errorEstimate <= absTol || panel.errorEstimate <= 1e-12 * std::abs(panel.value) ||
      depth <= 0)
    return panel;
  const double mid = 0.5 * (a + b);
  const QuadratureResult left = integrateAdaptively(f, a, mid, 0.5 * absTol, depth - 1);
  const QuadratureResult right = integrateAdaptively(f, mid, b, 0.5 * absTol, depth - 1);
  return {left.value + right.value, left.errorEstimate + right.errorEstimate};
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7/15 integration of a complex-valued integrand over
// [a, b].  Panels are bisected until the local Kronrod-Gauss difference falls
// under its share of absTol or under the panel's own roundoff scale;
// endpoints are never sampled.
template <typename F>
QuadratureResult integrateGaussKronrod(const F& f, double a, double b, double absTol = 1e-9,
                                       int maxDepth = 32) {
  return detail::integrateAdaptively(f, a, b, absTol, maxDepth);
}

}  // namespace f2eval
