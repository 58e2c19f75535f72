#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include "f2eval/oracles.hpp"

namespace {

using f2eval::ComplexScalar;
using f2eval::EvalPoint;
using f2eval::OracleMethod;
using f2eval::ParameterSet;

double relErr(ComplexScalar got, ComplexScalar want) {
  return std::abs(got - want) / std::abs(want);
}

const ParameterSet kGenericParams{{1.31, 0.41}, {0.77, -0.23}, {1.11, 0.09},
                                  {2.05, 0.33}, {1.67, -0.19}};
const ParameterSet kDemoParams{{2.2345, 0.0}, {3.363, 0.0}, {0.242, 0.0},
                               {8.3452, 0.0}, {0.657, 0.0}};
const EvalPoint kDemoPoint{-2.311, 5.322};

ParameterSet swapFirstFamily(const ParameterSet& p) { return {p.a, p.b2, p.b1, p.c2, p.c1}; }

TEST(Quadrature, IntegratesSmoothIntegrandsToTolerance) {
  const auto square = f2eval::integrateGaussKronrod(
      [](double t) { return ComplexScalar(t * t); }, 0.0, 1.0);
  EXPECT_NEAR(square.value.real(), 1.0 / 3.0, 1e-14);
  EXPECT_LT(square.errorEstimate, 1e-9);

  const auto bump = f2eval::integrateGaussKronrod(
      [](double t) { return ComplexScalar(std::exp(-50.0 * (t - 0.3) * (t - 0.3))); }, 0.0, 1.0);
  const double bumpWant = std::sqrt(M_PI / 50.0) / 2.0 *
                          (std::erf(std::sqrt(50.0) * 0.7) + std::erf(std::sqrt(50.0) * 0.3));
  EXPECT_NEAR(bump.value.real(), bumpWant, 1e-12);
  EXPECT_LT(bump.errorEstimate, 1e-8);

  const auto phase = f2eval::integrateGaussKronrod(
      [](double t) { return std::exp(ComplexScalar(0.0, M_PI * t)); }, 0.0, 1.0);
  EXPECT_NEAR(phase.value.real(), 0.0, 1e-13);
  EXPECT_NEAR(phase.value.imag(), 2.0 / M_PI, 1e-13);
}

TEST(Quadrature, StopsAtTheRoundoffFloorForLargeMagnitudes) {
  const auto big = f2eval::integrateGaussKronrod(
      [](double t) { return ComplexScalar(1e12 * t * t); }, 0.0, 1.0);
  EXPECT_LT(relErr(big.value, ComplexScalar(1e12 / 3.0)), 1e-11);
  EXPECT_LT(big.errorEstimate, 1e-6 * std::abs(big.value));
}

TEST(BruteForce, MatchesClosedFormsOnTheDiamond) {
  const auto origin = f2eval::bruteForceF2(kGenericParams, {0.0, 0.0}, 40);
  EXPECT_EQ(origin.value.real(), 1.0);
  EXPECT_EQ(origin.value.imag(), 0.0);
  EXPECT_EQ(origin.estimatedAccuracy, 0.0);
  EXPECT_EQ(origin.method, OracleMethod::bruteForce);
  EXPECT_TRUE(origin.domainOk);

  const ParameterSet ones{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}};
  const auto geometric = f2eval::bruteForceF2(ones, {0.2, 0.3}, 200);
  EXPECT_LT(relErr(geometric.value, ComplexScalar(2.0)), 1e-12);
  EXPECT_LT(geometric.estimatedAccuracy, 1e-12);

  ParameterSet linear = kGenericParams;
  linear.a = {-1.0, 0.0};
  const ComplexScalar linearWant =
      1.0 - linear.b1 / linear.c1 * 0.2 - linear.b2 / linear.c2 * 0.3;
  EXPECT_LT(relErr(f2eval::bruteForceF2(linear, {0.2, 0.3}, 50).value, linearWant), 1e-14);
}

TEST(BruteForce, CollapsesToGaussWhenLowerEqualsUpper) {
  ParameterSet collapsed = kGenericParams;
  collapsed.c2 = collapsed.b2;
  const ComplexScalar want =
      std::exp(-kGenericParams.a * std::log(ComplexScalar(0.7))) *
      f2eval::gauss2F1(kGenericParams.a, kGenericParams.b1, kGenericParams.c1, 0.2 / 0.7);
  EXPECT_LT(relErr(f2eval::bruteForceF2(collapsed, {0.2, 0.3}, 160).value, want), 1e-13);
}

TEST(BruteForce, TruncatesAtNegativeIntegerUpperParameters) {
  ParameterSet poly = kGenericParams;
  poly.a = {-3.0, 0.0};
  const auto small = f2eval::bruteForceF2(poly, {0.2, 0.3}, 10);
  const auto large = f2eval::bruteForceF2(poly, {0.2, 0.3}, 60);
  EXPECT_EQ(small.value.real(), large.value.real());
  EXPECT_EQ(small.value.imag(), large.value.imag());
  EXPECT_EQ(small.estimatedAccuracy, 0.0);
}

TEST(BruteForce, GuardsDomainAndLowerPoles) {
  try {
    f2eval::bruteForceF2(kGenericParams, {0.7, 0.3}, 50);
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("|x| + |y| < 1"), std::string::npos);
  }
  EXPECT_THROW(f2eval::bruteForceF2(kGenericParams, {0.5, 0.5}, 50), f2eval::DomainError);
  EXPECT_THROW(f2eval::bruteForceF2(kGenericParams, {-0.6, -0.45}, 50), f2eval::DomainError);

  ParameterSet pole = kGenericParams;
  pole.c1 = {-2.0, 0.0};
  EXPECT_THROW(f2eval::bruteForceF2(pole, {0.1, 0.1}, 50), f2eval::PoleError);
  pole = kGenericParams;
  pole.c2 = {0.0, 0.0};
  EXPECT_THROW(f2eval::bruteForceF2(pole, {0.1, 0.1}, 50), f2eval::PoleError);
}

TEST(SingleSum, ReducesToGaussOnTheXAxis) {
  const auto axis = f2eval::singleSumF2(kGenericParams, {0.3, 0.0}, 150);
  const ComplexScalar want =
      f2eval::gauss2F1(kGenericParams.a, kGenericParams.b1, kGenericParams.c1, 0.3);
  EXPECT_LT(relErr(axis.value, want), 1e-14);
  EXPECT_EQ(axis.method, OracleMethod::singleSum);
  EXPECT_LT(axis.estimatedAccuracy, 1e-12);
}

TEST(SingleSum, AgreesWithBruteForceInsideTheDiamond) {
  const auto single = f2eval::singleSumF2(kGenericParams, {0.25, 0.4}, 150);
  const auto brute = f2eval::bruteForceF2(kGenericParams, {0.25, 0.4}, 200);
  EXPECT_LT(relErr(single.value, brute.value), 1e-12);
}

TEST(SingleSum, ContinuesToLargeNegativeY) {
  const EvalPoint point{-0.4, -2.5};
  const auto single = f2eval::singleSumF2(kDemoParams, point, 260);
  const auto report = f2eval::evaluate(kDemoParams, point, 12, 250);
  EXPECT_LT(relErr(single.value, report.value), 1e-12);
}

TEST(SingleSum, GuardsOuterConvergenceAndTheInnerCut) {
  try {
    f2eval::singleSumF2(kGenericParams, {0.95, 0.5}, 100);
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("min(1, |1-y|)"), std::string::npos);
  }
  EXPECT_THROW(f2eval::singleSumF2(kDemoParams, kDemoPoint, 100), f2eval::DomainError);
  EXPECT_THROW(f2eval::singleSumF2(kGenericParams, {-0.4, 1.0}, 100), f2eval::DomainError);
  try {
    f2eval::singleSumF2(kGenericParams, {-0.4, 1.5}, 100);
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("cut"), std::string::npos);
  }
}

TEST(EulerQuad, MatchesBruteForceOnTheUnitSquare) {
  const ParameterSet plain{{1, 0}, {1, 0}, {1, 0}, {3, 0}, {3, 0}};
  const auto quad = f2eval::eulerQuadF2(plain, {0.2, 0.3});
  EXPECT_LT(relErr(quad.value, f2eval::bruteForceF2(plain, {0.2, 0.3}, 200).value), 1e-12);
  EXPECT_EQ(quad.method, OracleMethod::eulerQuad);
  EXPECT_GT(quad.estimatedAccuracy, 0.0);

  EXPECT_LT(relErr(f2eval::eulerQuadF2(kGenericParams, {0.25, 0.35}).value,
                   f2eval::bruteForceF2(kGenericParams, {0.25, 0.35}, 200).value),
            1e-11);

  const ParameterSet steep{{0.9, 0}, {1.1, 0}, {0.4, 0}, {2.3, 0}, {0.83, 0}};
  EXPECT_LT(relErr(f2eval::eulerQuadF2(steep, {0.2, 0.25}).value,
                   f2eval::bruteForceF2(steep, {0.2, 0.25}, 200).value),
            1e-12);
}

TEST(EulerQuad, ReachesFarOutsideTheDiamond) {
  const ParameterSet params{{-5.87056003391116, 0},
                            {4.33993527730256, 0},
                            {1.44218908732163, 0},
                            {3.12652020729955, 0},
                            {1.52984418542146, 0}};
  const EvalPoint point{-6.55177221618387, -6.79935054310963};
  const auto quad = f2eval::eulerQuadF2(params, point);
  EXPECT_LT(std::abs(quad.value.real() / 1.171e7 - 1.0), 5e-3);
  EXPECT_LT(std::abs(quad.value.imag()), 1e-6 * std::abs(quad.value.real()));
  const auto report = f2eval::evaluate(params, point, 15, 300);
  EXPECT_LT(relErr(quad.value, report.value), 1e-9);
}

TEST(EulerQuad, GuardsExponentsAndThePath) {
  ParameterSet bad = kGenericParams;
  bad.b2 = {-0.5, 0.0};
  try {
    f2eval::eulerQuadF2(bad, {0.2, 0.3});
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("Re(b2)"), std::string::npos);
  }

  bad = kGenericParams;
  bad.c2 = bad.b2 - ComplexScalar(0.2, 0.0);
  try {
    f2eval::eulerQuadF2(bad, {0.2, 0.3});
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("Re(c2 - b2)"), std::string::npos);
  }

  const ParameterSet plain{{1, 0}, {1, 0}, {1, 0}, {3, 0}, {3, 0}};
  try {
    f2eval::eulerQuadF2(plain, {0.2, 1.2});
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("pole"), std::string::npos);
  }
  try {
    f2eval::eulerQuadF2(plain, {0.5, 0.9});
    FAIL() << "expected DomainError";
  } catch (const f2eval::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("[1, inf)"), std::string::npos);
  }
  EXPECT_THROW(f2eval::eulerQuadF2(plain, {1.0, 0.0}), f2eval::DomainError);
}

TEST(PdeResidual, VanishesAtInteriorPoints) {
  const ParameterSet real{{1.3, 0}, {0.9, 0}, {1.1, 0}, {2.6, 0}, {2.2, 0}};
  const auto inner = f2eval::pdeResidual(real, {0.2, 0.3});
  EXPECT_LT(inner.first, 1e-4);
  EXPECT_LT(inner.second, 1e-4);
  const auto outer = f2eval::pdeResidual(real, {-2.0, -3.0});
  EXPECT_LT(outer.first, 1e-4);
  EXPECT_LT(outer.second, 1e-4);
}

TEST(PdeResidual, IsExactlyZeroForConstantSolutions) {
  const ParameterSet constant{{0, 0}, {0.9, 0}, {1.1, 0}, {2.6, 0}, {2.2, 0}};
  const auto residuals = f2eval::pdeResidual(constant, {0.2, 0.3});
  EXPECT_EQ(residuals.first, 0.0);
  EXPECT_EQ(residuals.second, 0.0);
}

TEST(PdeResidual, RejectsUncoverableOrSingularStencils) {
  const ParameterSet real{{1.3, 0}, {0.9, 0}, {1.1, 0}, {2.6, 0}, {2.2, 0}};
  try {
    f2eval::pdeResidual(real, {0.4998, 0.5001});
    FAIL() << "expected StencilDomainError";
  } catch (const f2eval::StencilDomainError& e) {
    EXPECT_NE(std::string(e.what()).find("no single representation"), std::string::npos);
  }
  try {
    f2eval::pdeResidual(real, {0.3, 0.7});
    FAIL() << "expected StencilDomainError";
  } catch (const f2eval::StencilDomainError& e) {
    EXPECT_NE(std::string(e.what()).find("singular curve"), std::string::npos);
  }
}

TEST(Oracles, AgreePairwiseOnSeededRandomDraws) {
  std::mt19937 rng(618033988u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int draw = 0; draw < 100; ++draw) {
    const ParameterSet params{{-2.0 + 4.0 * unit(rng), 0.0},
                              {0.3 + 1.7 * unit(rng), 0.0},
                              {0.3 + 1.5 * unit(rng), 0.0},
                              {2.0 + unit(rng), 0.0},
                              {0.0, 0.0}};
    ParameterSet full = params;
    full.c2 = full.b2 + ComplexScalar(0.3 + 0.9 * unit(rng), 0.0);
    const EvalPoint point{-0.4 + 0.8 * unit(rng), -0.4 + 0.8 * unit(rng)};

    const auto brute = f2eval::bruteForceF2(full, point, 200);
    if (std::abs(brute.value) < 1e-3) continue;
    ++checked;
    const auto single = f2eval::singleSumF2(full, point, 200);
    const auto quad = f2eval::eulerQuadF2(full, point);
    EXPECT_LT(relErr(single.value, brute.value), 1e-7) << "draw " << draw;
    EXPECT_LT(relErr(quad.value, brute.value), 1e-7) << "draw " << draw;
    EXPECT_LT(relErr(quad.value, single.value), 1e-7) << "draw " << draw;
  }
  EXPECT_GE(checked, 90);
}

TEST(Oracles, EveryRepresentationHasAnAgreeingWitness) {
  enum class Kind { brute, euler, eulerSwapped, single, singleSwapped };
  struct Witness {
    std::string_view id;
    EvalPoint point;
    Kind kind;
  };
  const Witness table[] = {
      {"S1", {0.12, 0.12}, Kind::brute},
      {"S2", {0.12, -0.17}, Kind::brute},
      {"S3", {-0.17, -0.17}, Kind::brute},
      {"S4", {-7.3, 0.12}, Kind::euler},
      {"S5", {0.55, 0.12}, Kind::brute},
      {"S6", {-0.6, 0.68}, Kind::euler},
      {"S7", {0.23, 0.68}, Kind::euler},
      {"S8", {0.68, -7.3}, Kind::euler},
      {"S9", {0.68, -0.6}, Kind::euler},
      {"S10", {0.82, 0.17}, Kind::eulerSwapped},
      {"S11", {-7.3, 0.68}, Kind::euler},
      {"S12", {-7.3, 0.68}, Kind::euler},
      {"S13", {0.95, 0.04}, Kind::eulerSwapped},
      {"S14", {0.68, -7.3}, Kind::euler},
      {"S15", {0.04, 0.95}, Kind::euler},
      {"S16", {-0.22, 0.95}, Kind::euler},
      {"S17", {0.12, -7.3}, Kind::euler},
      {"S18", {-7.3, 0.12}, Kind::euler},
  };
  for (const Witness& w : table) {
    ASSERT_TRUE(f2eval::rocContains(w.id, w.point)) << w.id;
    ComplexScalar want;
    switch (w.kind) {
      case Kind::brute:
        want = f2eval::bruteForceF2(kGenericParams, w.point, 200).value;
        break;
      case Kind::euler:
        want = f2eval::eulerQuadF2(kGenericParams, w.point).value;
        break;
      case Kind::eulerSwapped:
        want = f2eval::eulerQuadF2(swapFirstFamily(kGenericParams), {w.point.y, w.point.x}).value;
        break;
      case Kind::single:
        want = f2eval::singleSumF2(kGenericParams, w.point, 300).value;
        break;
      case Kind::singleSwapped:
        want = f2eval::singleSumF2(swapFirstFamily(kGenericParams), {w.point.y, w.point.x}, 300)
                   .value;
        break;
    }
    const auto report = f2eval::evaluateWith(w.id, kGenericParams, w.point, 10, 250);
    EXPECT_LT(relErr(report.value, want), 1e-7) << w.id;
  }
}

}  // namespace
