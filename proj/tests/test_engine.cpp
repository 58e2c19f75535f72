#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "engine_goldens.hpp"
#include "f2eval/hyp2f1.hpp"
#include "f2eval/series_spec.hpp"

namespace f2eval::testing {
namespace {

double relErr(ComplexScalar got, ComplexScalar want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

DoubleSeriesSpec gaussLikeSpec() {
  DoubleSeriesSpec spec;
  spec.upperPlus = {combo::a};
  spec.upperM = {combo::b1};
  spec.upperN = {combo::b2};
  spec.lowerM = {combo::c1};
  spec.lowerN = {combo::c2};
  return spec;
}

TEST(EngineSum, MatchesReferenceValues) {
  for (const auto& g : engineSumGoldens()) {
    const PartialSumResult r = sumDoubleSeries(g.series, g.X, g.Y, g.terms);
    EXPECT_LT(relErr(r.value, g.value), 5e-12);
    EXPECT_LT(std::abs(r.errorEstimate - g.errorEstimate), 1e-9 * g.errorEstimate);
    EXPECT_EQ(r.termsPerIndex, g.terms);
    EXPECT_GE(r.maxTermMagnitude, r.errorEstimate);
  }
}

TEST(EngineSum, UnitAtZeroArguments) {
  const ParameterSet params{{1.4, 0.2}, {0.8, 0.0}, {0.6, -0.1}, {2.2, 0.0}, {1.9, 0.3}};
  const PartialSumResult r = sumDoubleSeries(gaussLikeSpec(), params, 0.0, 0.0, 17);
  EXPECT_EQ(r.value, ComplexScalar(1.0));
  EXPECT_EQ(r.errorEstimate, 0.0);
  EXPECT_EQ(r.maxTermMagnitude, 1.0);
}

TEST(EngineSum, RowSliceIsGaussSeries) {
  const ComplexScalar a{1.1, -0.3}, b{0.7, 0.0}, c{1.9, 0.2};
  const ParameterSet params{a, b, {0.5, 0.0}, c, {1.5, 0.0}};
  const PartialSumResult r = sumDoubleSeries(gaussLikeSpec(), params, 0.3, 0.0, 80);
  EXPECT_LT(relErr(r.value, gauss2F1(a, b, c, 0.3)), 1e-12);
}

TEST(EngineSum, BinomialDoubleSeries) {
  const ParameterSet params{1.0, 1.0, 1.0, 1.0, 1.0};
  const PartialSumResult r = sumDoubleSeries(gaussLikeSpec(), params, 0.2, 0.3, 160);
  EXPECT_LT(relErr(r.value, 2.0), 1e-12);
}

TEST(EngineSum, PrefixSumsAreBitwiseStable) {
  const std::vector<int> caseIdx = {0, 4, 6};
  for (int ci : caseIdx) {
    const auto& g = engineSumGoldens()[static_cast<std::size_t>(ci)];
    std::vector<ComplexScalar> partials;
    sumDoubleSeries(g.series, g.X, g.Y, g.terms,
                    [&](int, ComplexScalar s) { partials.push_back(s); });
    ASSERT_EQ(partials.size(), static_cast<std::size_t>(g.terms));
    for (int t : {1, 7, g.terms / 2, g.terms}) {
      const PartialSumResult r = sumDoubleSeries(g.series, g.X, g.Y, t);
      const ComplexScalar expected = partials[static_cast<std::size_t>(t - 1)];
      EXPECT_EQ(r.value.real(), expected.real());
      EXPECT_EQ(r.value.imag(), expected.imag());
    }
  }
}

TEST(EngineSum, IdenticalUpperLowerFactorsCancel) {
  DoubleSeriesSpec padded = gaussLikeSpec();
  padded.upperM.push_back(combo::c2);
  padded.lowerM.push_back(combo::c2);
  const ParameterSet params{{1.2, 0.3}, {0.9, 0.0}, {0.4, -0.2}, {2.0, 0.1}, {1.6, 0.0}};
  const PartialSumResult plain = sumDoubleSeries(gaussLikeSpec(), params, 0.25, -0.3, 40);
  const PartialSumResult extra = sumDoubleSeries(padded, params, 0.25, -0.3, 40);
  EXPECT_LT(relErr(extra.value, plain.value), 1e-13);
}

TEST(EngineSum, LowerPochhammerPoleThrows) {
  const DoubleSeriesSpec spec = gaussLikeSpec();
  ParameterSet params{1.0, 1.0, 1.0, -3.0, 1.5};
  EXPECT_THROW(sumDoubleSeries(spec, params, 0.1, 0.1, 10), LogarithmicCaseError);
  params.c1 = -20.0;
  EXPECT_NO_THROW(sumDoubleSeries(spec, params, 0.1, 0.1, 10));

  DoubleSeriesSpec plusSpec;
  plusSpec.upperM = {combo::b1};
  plusSpec.lowerPlus = {combo::c1};
  params = ParameterSet{1.0, 0.5, 1.0, -4.0, 1.5};
  EXPECT_THROW(sumDoubleSeries(plusSpec, params, 0.1, 0.1, 10), LogarithmicCaseError);

  DoubleSeriesSpec mirrorSpec;
  mirrorSpec.upperMinus = {combo::a};
  mirrorSpec.upperN = {combo::b2};
  mirrorSpec.lowerN = {combo::c2};
  params = ParameterSet{5.0, 1.0, 0.7, 1.0, 1.8};
  EXPECT_THROW(sumDoubleSeries(mirrorSpec, params, 0.1, 0.1, 10), LogarithmicCaseError);
  params.a = 12.0;
  EXPECT_NO_THROW(sumDoubleSeries(mirrorSpec, params, 0.1, 0.1, 10));
  EXPECT_THROW(sumDoubleSeries(mirrorSpec, params, 0.1, 0.1, 14), LogarithmicCaseError);
}

TEST(EngineSum, OverflowThrows) {
  const ParameterSet params{1.0, 1.0, 1.0, 1.0, 1.0};
  EXPECT_THROW(sumDoubleSeries(gaussLikeSpec(), params, 1e50, 0.0, 20), OverflowError);
}

TEST(TermRatio, PinnedUnitCubeValues) {
  const DoubleSeriesSpec spec = gaussLikeSpec();
  const ParameterSet params{1.0, 1.0, 1.0, 1.0, 1.0};
  EXPECT_EQ(termRatioM(spec, params, 1.0, 0, 0), ComplexScalar(1.0));
  EXPECT_EQ(termRatioM(spec, params, 1.0, 0, 1), ComplexScalar(2.0));
  EXPECT_EQ(termRatioN(spec, params, 1.0, 0, 0), ComplexScalar(1.0));
}

TEST(TermRatio, MatchesTermQuotients) {
  DoubleSeriesSpec mirror;
  mirror.upperMinus = {combo::a - combo::b2};
  mirror.upperM = {combo::b1};
  mirror.upperN = {combo::b2};
  mirror.lowerMinus = {combo::c1 - combo::b1};
  mirror.lowerN = {combo::c2};
  const ParameterSet params{{1.7, 0.4}, {0.8, -0.3}, {0.45, 0.1}, {2.3, 0.2}, {1.6, -0.5}};
  const ComplexScalar X{0.4, 0.1}, Y{0.35, -0.2};
  for (const auto& spec : {gaussLikeSpec(), mirror}) {
    for (auto [m, n] : {std::pair<long, long>{0, 0}, {2, 5}, {7, 3}, {12, 12}}) {
      const ComplexScalar t00 = termAt(spec, params, X, Y, m, n);
      const ComplexScalar tm = termAt(spec, params, X, Y, m + 1, n);
      const ComplexScalar tn = termAt(spec, params, X, Y, m, n + 1);
      EXPECT_LT(relErr(termRatioM(spec, params, X, m, n), tm / t00), 1e-11);
      EXPECT_LT(relErr(termRatioN(spec, params, Y, m, n), tn / t00), 1e-11);
    }
  }
}

TEST(TermRatio, ZeroTermThrows) {
  const DoubleSeriesSpec spec = gaussLikeSpec();
  const ParameterSet params{1.3, -2.0, 0.9, 1.7, 1.4};
  EXPECT_THROW(termRatioM(spec, params, 0.5, 3, 0), ZeroTermError);
  EXPECT_THROW(termRatioN(spec, params, 0.5, 3, 1), ZeroTermError);
  EXPECT_NO_THROW(termRatioM(spec, params, 0.5, 1, 0));
}

TEST(RateProbe, MatchesHandComputedMagnitudes) {
  const ComplexScalar a{1.4, 0.2}, b1{0.8, -0.1}, b2{0.6, 0.3}, c1{2.2, 0.0}, c2{1.9, -0.4};
  const ParameterSet params{a, b1, b2, c1, c2};
  const double X = -0.6, Y = 0.45;
  const auto [s, t] = rateProbe(gaussLikeSpec(), params, X, Y);
  const double sWant = std::abs(X) * std::abs(a + 200.0) * std::abs(b1 + 100.0) /
                       (std::abs(c1 + 100.0) * 101.0);
  const double tWant = std::abs(Y) * std::abs(a + 200.0) * std::abs(b2 + 100.0) /
                       (std::abs(c2 + 100.0) * 101.0);
  EXPECT_NEAR(s / sWant, 1.0, 1e-13);
  EXPECT_NEAR(t / tWant, 1.0, 1e-13);
}

TEST(RateProbe, MinusClassFactorsEnterAtTailLimit) {
  DoubleSeriesSpec mirror;
  mirror.upperMinus = {combo::a - combo::b2};
  mirror.upperM = {combo::b1};
  mirror.upperN = {combo::b2};
  mirror.lowerMinus = {combo::c1 - combo::b1};
  mirror.lowerM = {combo::c1};
  mirror.lowerN = {combo::c2};
  const ComplexScalar b1{0.9, 0.2}, b2{0.5, -0.3}, c1{2.1, 0.1}, c2{1.7, 0.0};
  const ParameterSet params{{1.3, -0.2}, b1, b2, c1, c2};
  const double X = 0.7, Y = -0.5;
  const auto [s, t] = rateProbe(mirror, params, X, Y);
  const double sWant =
      std::abs(X) * std::abs(b1 + 100.0) / (std::abs(c1 + 100.0) * 101.0);
  const double tWant =
      std::abs(Y) * std::abs(b2 + 100.0) / (std::abs(c2 + 100.0) * 101.0);
  EXPECT_NEAR(s / sWant, 1.0, 1e-13);
  EXPECT_NEAR(t / tWant, 1.0, 1e-13);
}

TEST(RateProbe, TerminatingAndZeroArgumentCases) {
  const DoubleSeriesSpec spec = gaussLikeSpec();
  const ParameterSet terminating{1.2, -3.0, 0.7, 2.0, 1.5};
  const auto [s0, t0] = rateProbe(spec, terminating, 0.5, 0.5);
  EXPECT_EQ(s0, 0.0);
  EXPECT_EQ(t0, 0.0);

  const ParameterSet generic{1.2, 0.9, 0.7, 2.0, 1.5};
  const auto [s1, t1] = rateProbe(spec, generic, 0.0, 0.5);
  EXPECT_EQ(s1, 0.0);
  EXPECT_GT(t1, 0.0);
}

}  // namespace
}  // namespace f2eval::testing
