#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "series_spec.hpp"
#include "types.hpp"

namespace f2eval {

inline constexpr double kEpsSingular = 1e-10;

struct CandidateRate {
  std::string_view id;
  double rate;
};

struct EvaluationReport {
  ComplexScalar value;
  std::string_view chosen;
  std::vector<CandidateRate> candidates;
  int termsUsed = 0;
  double errorEstimate = 0.0;
  int significantDigits = 0;
};

namespace detail {

struct NamedPoint {
  double x, y;
  const char* name;
};

// Points on the singular curves where no encoded representation converges.
inline constexpr NamedPoint kExceptionalPoints[] = {
    {1.0, 0.0, "(1, 0)"},  {0.0, 1.0, "(0, 1)"},  {1.0, 1.0, "(1, 1)"},
    {-1.0, 1.0, "(-1, 1)"}, {1.0, -1.0, "(1, -1)"}, {0.5, 0.5, "(1/2, 1/2)"},
};

}  // namespace detail

// The series and their prefactors are singular along x=0, y=0, x=1, y=1 and
// x+y=1; points within eps of a curve are rejected before selection.
inline void requireOffSingularCurves(EvalPoint point, double eps = kEpsSingular) {
  static constexpr const char* kCurves[5] = {"x = 0", "y = 0", "x = 1", "y = 1", "x + y = 1"};
  const double dist[5] = {std::abs(point.x), std::abs(point.y), std::abs(point.x - 1.0),
                          std::abs(point.y - 1.0), std::abs(point.x + point.y - 1.0)};
  for (int i = 0; i < 5; ++i) {
    if (!(dist[i] < eps)) continue;
    for (const auto& p : detail::kExceptionalPoints)
      if (std::abs(point.x - p.x) < eps && std::abs(point.y - p.y) < eps)
        throw SingularCurveError(std::string("evaluation point is the exceptional point ") +
                                 p.name + ", which every encoded region excludes");
    throw SingularCurveError(std::string("evaluation point lies on the singular curve ") +
                             kCurves[i]);
  }
}

// Ids of all representations whose region of convergence contains the point,
// in catalog order.
inline std::vector<std::string_view> findAll(EvalPoint point, double eps = kEpsSingular) {
  requireOffSingularCurves(point, eps);
  std::vector<std::string_view> out;
  for (const auto& rep : catalog())
    if (rocContains(rep, point)) out.push_back(rep.id);
  return out;
}

// Max over components of sqrt(s^2 + t^2) from the term-ratio probe; smaller
// is better, values below 1 indicate geometric tail decay.
inline double convergenceRate(const SeriesRepresentation& rep, const ParameterSet& params,
                              EvalPoint point) {
  double rate = 0.0;
  for (const auto& comp : rep.components) {
    const CompiledSeries cs = compileSeries(comp.series, params);
    const auto [s, t] = rateProbe(cs, evalArg(comp.argX, point.x, point.y),
                                  evalArg(comp.argY, point.x, point.y));
    const double r = std::hypot(s, t);
    if (!std::isfinite(r))
      throw LogarithmicCaseError("convergenceRate: degenerate term ratio at the probe index");
    rate = std::max(rate, r);
  }
  return rate;
}

inline double convergenceRate(std::string_view id, const ParameterSet& params, EvalPoint point) {
  return convergenceRate(representation(id), params, point);
}

namespace detail {

inline void validateCall(const ParameterSet& params, int precision, int terms) {
  long n;
  if (nearInteger(params.c1, n) && n <= 0)
    throw PoleError("parameter c1 is a non-positive integer");
  if (nearInteger(params.c2, n) && n <= 0)
    throw PoleError("parameter c2 is a non-positive integer");
  if (precision < 1 || precision > 15)
    throw DomainError("precision must be between 1 and 15 digits");
  if (terms < 1) throw DomainError("terms must be at least 1");
}

struct RepSum {
  ComplexScalar value;
  double errorEstimate = 0.0;
  double tailEstimate = 0.0;
};

inline RepSum sumComponents(const SeriesRepresentation& rep, const ParameterSet& params,
                            EvalPoint point, int terms) {
  ComplexScalar total = 0.0;
  double err = 0.0;
  double tail = 0.0;
  for (const auto& inst : instantiate(rep, params, point)) {
    if (inst.coefficient == 0.0) continue;
    const PartialSumResult r = sumDoubleSeries(inst.series, inst.X, inst.Y, terms);
    total += inst.coefficient * r.value;
    // Outer-ring tail proxy plus the accumulation roundoff floor: a sum whose
    // terms reached maxTermMagnitude cannot resolve the total any finer.
    const double roundoff = (r.maxTermMagnitude + std::abs(r.value)) *
                            std::numeric_limits<double>::epsilon() *
                            std::sqrt(static_cast<double>(terms));
    tail += std::abs(inst.coefficient) * r.errorEstimate;
    err += std::abs(inst.coefficient) * (r.errorEstimate + roundoff);
  }
  return {total, err, tail};
}

}  // namespace detail

inline int significantDigits(ComplexScalar value, double errorEstimate, int precision) {
  if (errorEstimate <= 0.0) return precision;
  const double mag = std::abs(value);
  if (mag <= errorEstimate) return 0;
  const int d = static_cast<int>(std::floor(std::log10(mag / errorEstimate)));
  return std::clamp(d, 0, precision);
}

// Selects the valid representation with the smallest convergence rate (ties
// broken by catalog order), sums it to terms x terms, and reports the value
// with all scored candidates.  Representations whose coefficients or sums
// degenerate are skipped in favor of the next candidate.
inline EvaluationReport evaluate(const ParameterSet& params, EvalPoint point, int precision = 6,
                                 int terms = 100, double eps = kEpsSingular) {
  detail::validateCall(params, precision, terms);
  requireOffSingularCurves(point, eps);

  struct Scored {
    double rate;
    std::size_t index;
    const SeriesRepresentation* rep;
  };
  std::vector<Scored> scored;
  std::exception_ptr rateFailure;
  {
    std::size_t index = 0;
    for (const auto& rep : catalog()) {
      if (!rocContains(rep, point)) continue;
      ++index;
      try {
        scored.push_back({convergenceRate(rep, params, point), index, &rep});
      } catch (const LogarithmicCaseError&) {
        if (!rateFailure) rateFailure = std::current_exception();
      }
    }
    if (index == 0) throw NoValidSeriesError("no representation converges at the requested point");
  }
  if (scored.empty()) std::rethrow_exception(rateFailure);
  std::sort(scored.begin(), scored.end(), [](const Scored& lhs, const Scored& rhs) {
    return lhs.rate != rhs.rate ? lhs.rate < rhs.rate : lhs.index < rhs.index;
  });

  EvaluationReport report;
  report.termsUsed = terms;
  report.candidates.reserve(scored.size());
  for (const auto& s : scored) report.candidates.push_back({s.rep->id, s.rate});

  std::exception_ptr sumFailure;
  for (const auto& s : scored) {
    detail::RepSum sum;
    try {
      sum = detail::sumComponents(*s.rep, params, point, terms);
    } catch (const LogarithmicCaseError&) {
      sumFailure = std::current_exception();
      continue;
    } catch (const OverflowError&) {
      sumFailure = std::current_exception();
      continue;
    }
    if (s.rate >= 1.0 &&
        sum.tailEstimate > 0.5 * std::pow(10.0, 1 - precision) * std::abs(sum.value))
      throw NonConvergenceError("partial sums do not reach the requested precision");
    report.value = sum.value;
    report.chosen = s.rep->id;
    report.errorEstimate = sum.errorEstimate;
    report.significantDigits = significantDigits(sum.value, sum.errorEstimate, precision);
    return report;
  }
  std::rethrow_exception(sumFailure);
}

// Forces one representation instead of selecting; the report's candidate list
// carries just that id with its rate.
inline EvaluationReport evaluateWith(std::string_view id, const ParameterSet& params,
                                     EvalPoint point, int precision = 6, int terms = 100) {
  detail::validateCall(params, precision, terms);
  const SeriesRepresentation& rep = representation(id);
  if (!rocContains(rep, point))
    throw OutOfROCError("representation " + std::string(id) +
                        " does not converge at the requested point");
  const double rate = convergenceRate(rep, params, point);
  const detail::RepSum sum = detail::sumComponents(rep, params, point, terms);
  EvaluationReport report;
  report.value = sum.value;
  report.chosen = rep.id;
  report.candidates = {{rep.id, rate}};
  report.termsUsed = terms;
  report.errorEstimate = sum.errorEstimate;
  report.significantDigits = significantDigits(sum.value, sum.errorEstimate, precision);
  return report;
}

}  // namespace f2eval
