#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "arg_expr.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "series_spec.hpp"
#include "types.hpp"

namespace f2eval {

// One multiplicative factor of a component.  The rule says when the direct
// form base^exponent applies; when it fails the factor is evaluated as
// (1/base)^(-exponent) instead, keeping the principal branch continuous.
struct Prefactor {
  ArgExpr base;
  LinearParamCombo exponent;
  RewriteRule rule = RewriteRule::keep;
};

// One additive component of a representation: a ratio of Gamma values, a
// product of prefactors, and a double series evaluated at rational arguments
// of the point.
struct SeriesComponent {
  std::vector<LinearParamCombo> gammaNumerators;
  std::vector<LinearParamCombo> gammaDenominators;
  std::vector<Prefactor> prefactors;
  DoubleSeriesSpec series;
  ArgExpr argX;
  ArgExpr argY;
};

enum class RocShape { sumLessThanOne, bothLessThanOne, hornPair };

struct RocPredicate {
  RocShape shape;
  ArgExpr first;
  ArgExpr second;
};

struct SeriesRepresentation {
  std::string_view id;
  int packageNumber;
  RocPredicate roc;
  std::vector<SeriesComponent> components;
};

// The encoded representations S1-S18.  S1 is the defining series, S2/S3 its
// Euler transforms, S4-S16 continuations convergent past the unit bidisc, and
// S17/S18 Horn-type expansions for large |y| and |x|.  packageNumber is the
// series index used by the findall/evaluate command pair.
inline const std::vector<SeriesRepresentation>& catalog() {
  static const std::vector<SeriesRepresentation> reps = [] {
    using namespace combo;
    using enum ArgExpr;
    using enum RewriteRule;
    using enum RocShape;
    std::vector<SeriesRepresentation> v;
    v.reserve(18);

    v.push_back(
        {"S1", 1, {sumLessThanOne, x, y},
         {
         {.series = {.upperPlus = {a}, .upperM = {b1}, .upperN = {b2}, .lowerM = {c1},
                     .lowerN = {c2}},
          .argX = x, .argY = y},
         }});
    v.push_back(
        {"S2", 23, {sumLessThanOne, xOverOneMinusY, yOverYMinus1},
         {
         {.prefactors = {{oneMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {b1}, .upperN = {-b2 + c2}, .lowerM = {c1},
                     .lowerN = {c2}},
          .argX = xOverOneMinusY, .argY = yOverYMinus1},
         }});
    v.push_back(
        {"S3", 34, {sumLessThanOne, xOverS, yOverS},
         {
         {.prefactors = {{oneMinusXMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {-b1 + c1}, .upperN = {-b2 + c2}, .lowerM = {c1},
                     .lowerN = {c2}},
          .argX = xOverS, .argY = yOverS},
         }});
    v.push_back(
        {"S4", 14, {bothLessThanOne, invOneMinusX, y},
         {
         {.gammaNumerators = {c1, a - b1},
          .gammaDenominators = {a, -b1 + c1},
          .prefactors = {{oneMinusX, -a}, {invOneMinusX, -a + b1, invert}},
          .series = {.upperMinus = {-a + c1}, .upperM = {b1}, .upperN = {b2, a - c1 + k(1)},
                     .lowerMinus = {-a + b1 + k(1)}, .lowerN = {c2}},
          .argX = invOneMinusX, .argY = y},
         {.gammaNumerators = {c1, -a + b1},
          .gammaDenominators = {b1, -a + c1},
          .prefactors = {{oneMinusX, -a}},
          .series = {.upperPlus = {a}, .upperM = {-b1 + c1}, .upperN = {b2, a - c1 + k(1)},
                     .lowerPlus = {a - b1 + k(1)}, .lowerN = {c2}},
          .argX = invOneMinusX, .argY = yOverOneMinusX},
         }});
    v.push_back(
        {"S5", 25, {bothLessThanOne, yOverS, sOverYMinus1},
         {
         {.gammaNumerators = {c1, -a - b1 + c1},
          .gammaDenominators = {-a + c1, -b1 + c1},
          .prefactors = {{oneMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {b1}, .upperN = {-b2 + c2, a - c1 + k(1)},
                     .lowerPlus = {a + b1 - c1 + k(1)}, .lowerN = {c2}},
          .argX = sOverYMinus1, .argY = yOverYMinus1},
         {.gammaNumerators = {c1, a + b1 - c1},
          .gammaDenominators = {a, b1},
          .prefactors = {{oneMinusY, -a}, {sOverYMinus1, -a - b1 + c1, keepIfXMinusYPlus1Positive}},
          .series = {.upperMinus = {-a + c1}, .upperM = {-b1 + c1},
                     .upperN = {-b2 + c2, a - c1 + k(1)}, .lowerMinus = {-a - b1 + c1 + k(1)},
                     .lowerN = {c2}},
          .argX = sOverYMinus1, .argY = yOverS},
         }});
    v.push_back(
        {"S6", 4, {bothLessThanOne, oneMinusYOverX, x},
         {
         {.gammaNumerators = {c2, -a - b2 + c2},
          .gammaDenominators = {-a + c2, -b2 + c2},
          .series = {.upperPlus = {a}, .upperM = {a - c2 + k(1), b1}, .upperN = {b2},
                     .lowerPlus = {a + b2 - c2 + k(1)}, .lowerM = {c1}},
          .argX = x, .argY = oneMinusY},
         {.gammaNumerators = {c1, c2, a + b2 - c2, -a + b1 - b2 + c2},
          .gammaDenominators = {a, b1, b2, -a - b2 + c1 + c2},
          .prefactors = {{oneMinusY, -a - b2 + c2},
                         {xOverYMinus1, -a - b2 + c2, keepIfXMinusYPlus1Positive}},
          .series = {.upperMinus = {a + b2 - c2, a + b2 - c1 - c2 + k(1)}, .upperM = {b2},
                     .upperN = {-b2 + c2}, .lowerMinus = {b2, a - b1 + b2 - c2 + k(1)}},
          .argX = oneMinusYOverX, .argY = x},
         {.gammaNumerators = {c1, c2, a - b1 + b2 - c2},
          .gammaDenominators = {a, b2, -b1 + c1},
          .prefactors = {{xOverYMinus1, -b1, keepIfXMinusYPlus1Positive}, {oneMinusY, -a - b2 + c2}},
          .series = {.upperPlus = {-a + b1 + c2}, .upperM = {b1, b1 - c1 + k(1)},
                     .upperN = {-b2 + c2}, .lowerPlus = {-a + b1 - b2 + c2 + k(1)},
                     .lowerM = {-a + b1 + c2}},
          .argX = oneMinusYOverX, .argY = oneMinusY},
         }});
    v.push_back(
        {"S7", 15, {bothLessThanOne, sOverX, xOverXMinus1},
         {
         {.gammaNumerators = {c2, -a - b2 + c2},
          .gammaDenominators = {-a + c2, -b2 + c2},
          .prefactors = {{oneMinusX, -a}},
          .series = {.upperPlus = {a}, .upperM = {a - c2 + k(1), -b1 + c1}, .upperN = {b2},
                     .lowerPlus = {a + b2 - c2 + k(1)}, .lowerM = {c1}},
          .argX = xOverXMinus1, .argY = sOverXMinus1},
         {.gammaNumerators = {c1, c2, a + b2 - c2, -a - b1 - b2 + c1 + c2},
          .gammaDenominators = {a, b2, -b1 + c1, -a - b2 + c1 + c2},
          .prefactors = {{oneMinusX, -a}, {negXOverS, -a - b2 + c2, keepIfYMinusXMinus1Positive},
                         {sOverXMinus1, -a - b2 + c2, keepIfYMinusXPlus1Positive}},
          .series = {.upperMinus = {a + b2 - c2, a + b2 - c1 - c2 + k(1)}, .upperM = {b2},
                     .upperN = {-b2 + c2}, .lowerMinus = {a + b1 + b2 - c1 - c2 + k(1), b2}},
          .argX = sOverX, .argY = xOverXMinus1},
         {.gammaNumerators = {c1, c2, a + b1 + b2 - c1 - c2},
          .gammaDenominators = {a, b1, b2},
          .prefactors = {{oneMinusX, -a}, {sOverXMinus1, -a - b2 + c2, keepIfYMinusXPlus1Positive},
                         {negXOverS, b1 - c1, keepIfYMinusXMinus1Positive}},
          .series = {.upperPlus = {-a - b1 + c1 + c2}, .upperM = {-b1 + k(1), -b1 + c1},
                     .upperN = {-b2 + c2}, .lowerPlus = {-a - b1 - b2 + c1 + c2 + k(1)},
                     .lowerM = {-a - b1 + c1 + c2}},
          .argX = sOverX, .argY = sOverXMinus1},
         }});
    v.push_back(
        {"S8", 37, {bothLessThanOne, xMinus1OverX, xOverS},
         {
         {.gammaNumerators = {c1, c2, a - b2, -a - b1 + b2 + c1},
          .gammaDenominators = {a, -b1 + c1, -b2 + c2, -a + b2 + c1},
          .prefactors = {{oneMinusXMinusY, -a}, {negXOverXMinus1, -a + b2, invert},
                         {xMinus1OverS, -a + b2, keepIfXMinusYMinus1Positive}},
          .series = {.upperMinus = {a - b2, a - b2 - c1 + k(1)}, .upperM = {-b2 + c2},
                     .upperN = {b2}, .lowerMinus = {-b2 + c2, a + b1 - b2 - c1 + k(1)}},
          .argX = xMinus1OverX, .argY = xOverS},
         {.gammaNumerators = {c2, -a + b2},
          .gammaDenominators = {b2, -a + c2},
          .prefactors = {{oneMinusXMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {a - c2 + k(1), -b1 + c1}, .upperN = {-b2 + c2},
                     .lowerPlus = {a - b2 + k(1)}, .lowerM = {c1}},
          .argX = xOverS, .argY = xMinus1OverS},
         {.gammaNumerators = {c1, c2, a + b1 - b2 - c1},
          .gammaDenominators = {a, b1, -b2 + c2},
          .prefactors = {{oneMinusXMinusY, -a}, {negXOverXMinus1, b1 - c1, invert},
                         {xMinus1OverS, -a + b2, keepIfXMinusYMinus1Positive}},
          .series = {.upperPlus = {-a - b1 + c1 + c2}, .upperM = {-b1 + k(1), -b1 + c1},
                     .upperN = {b2}, .lowerPlus = {-a - b1 + b2 + c1 + k(1)},
                     .lowerM = {-a - b1 + c1 + c2}},
          .argX = xMinus1OverX, .argY = xMinus1OverS},
         }});
    v.push_back(
        {"S9", 5, {bothLessThanOne, oneMinusXOverY, y},
         {
         {.gammaNumerators = {c1, c2, a + b1 - b2 - c1},
          .gammaDenominators = {a, b1, -b2 + c2},
          .prefactors = {{oneMinusX, -a - b1 + c1}, {yOverXMinus1, -b2, keepIfYMinusXPlus1Positive}},
          .series = {.upperPlus = {-a + b2 + c1}, .upperM = {-b1 + c1},
                     .upperN = {b2, b2 - c2 + k(1)}, .lowerPlus = {-a - b1 + b2 + c1 + k(1)},
                     .lowerN = {-a + b2 + c1}},
          .argX = oneMinusX, .argY = oneMinusXOverY},
         {.gammaNumerators = {c1, c2, a + b1 - c1, -a - b1 + b2 + c1},
          .gammaDenominators = {a, b1, b2, -a - b1 + c1 + c2},
          .prefactors = {{oneMinusX, -a - b1 + c1},
                         {yOverXMinus1, -a - b1 + c1, keepIfYMinusXPlus1Positive}},
          .series = {.upperMinus = {-b1 + k(1), -a - b1 + b2 + c1}, .upperM = {-b1 + c1},
                     .upperN = {b1}, .lowerMinus = {-a - b1 + c1 + k(1), -a - b1 + c1 + c2}},
          .argX = y, .argY = oneMinusXOverY},
         {.gammaNumerators = {c1, -a - b1 + c1},
          .gammaDenominators = {-a + c1, -b1 + c1},
          .series = {.upperPlus = {a}, .upperM = {b1}, .upperN = {b2, a - c1 + k(1)},
                     .lowerPlus = {a + b1 - c1 + k(1)}, .lowerN = {c2}},
          .argX = oneMinusX, .argY = y},
         }});
    v.push_back(
        {"S10", 27, {bothLessThanOne, sOverY, yOverYMinus1},
         {
         {.gammaNumerators = {c1, c2, a + b1 - c1, -a - b1 - b2 + c1 + c2},
          .gammaDenominators = {a, b1, -b2 + c2, -a - b1 + c1 + c2},
          .prefactors = {{oneMinusY, -a}, {negYOverS, -a - b1 + c1, keepIfXMinusYMinus1Positive},
                         {sOverYMinus1, -a - b1 + c1, keepIfXMinusYPlus1Positive}},
          .series = {.upperMinus = {-b1 + k(1), -a - b1 - b2 + c1 + c2}, .upperM = {-b1 + c1},
                     .upperN = {b1}, .lowerMinus = {-a - b1 + c1 + k(1), -a - b1 + c1 + c2}},
          .argX = yOverYMinus1, .argY = sOverY},
         {.gammaNumerators = {c1, -a - b1 + c1},
          .gammaDenominators = {-a + c1, -b1 + c1},
          .prefactors = {{oneMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {b1}, .upperN = {a - c1 + k(1), -b2 + c2},
                     .lowerPlus = {a + b1 - c1 + k(1)}, .lowerN = {c2}},
          .argX = sOverYMinus1, .argY = yOverYMinus1},
         {.gammaNumerators = {c1, c2, a + b1 + b2 - c1 - c2},
          .gammaDenominators = {a, b1, b2},
          .prefactors = {{oneMinusY, -a}, {sOverYMinus1, -a - b1 + c1, keepIfXMinusYPlus1Positive},
                         {negYOverS, b2 - c2, keepIfXMinusYMinus1Positive}},
          .series = {.upperPlus = {-a - b2 + c1 + c2}, .upperM = {-b1 + c1},
                     .upperN = {-b2 + k(1), -b2 + c2}, .lowerPlus = {-a - b1 - b2 + c1 + c2 + k(1)},
                     .lowerN = {-a - b2 + c1 + c2}},
          .argX = sOverYMinus1, .argY = sOverY},
         }});
    v.push_back(
        {"S11", 38, {bothLessThanOne, yMinus1OverY, yOverS},
         {
         {.gammaNumerators = {c1, c2, a - b1, -a + b1 - b2 + c2},
          .gammaDenominators = {a, -b1 + c1, -b2 + c2, -a + b1 + c2},
          .prefactors = {{oneMinusXMinusY, -a}, {negYOverYMinus1, -a + b1, invert},
                         {yMinus1OverS, -a + b1, keepIfYMinusXMinus1Positive}},
          .series = {.upperMinus = {b1 - c1 + k(1), -a + b1 - b2 + c2}, .upperM = {b1},
                     .upperN = {-b1 + c1}, .lowerMinus = {-a + b1 + k(1), -a + b1 + c2}},
          .argX = yOverS, .argY = yMinus1OverY},
         {.gammaNumerators = {c1, -a + b1},
          .gammaDenominators = {b1, -a + c1},
          .prefactors = {{oneMinusXMinusY, -a}},
          .series = {.upperPlus = {a}, .upperM = {-b1 + c1}, .upperN = {a - c1 + k(1), -b2 + c2},
                     .lowerPlus = {a - b1 + k(1)}, .lowerN = {c2}},
          .argX = yMinus1OverS, .argY = yOverS},
         {.gammaNumerators = {c1, c2, a - b1 + b2 - c2},
          .gammaDenominators = {a, b2, -b1 + c1},
          .prefactors = {{oneMinusXMinusY, -a}, {negYOverYMinus1, b2 - c2, invert},
                         {yMinus1OverS, -a + b1, keepIfYMinusXMinus1Positive}},
          .series = {.upperPlus = {-a - b2 + c1 + c2}, .upperM = {b1},
                     .upperN = {-b2 + k(1), -b2 + c2}, .lowerPlus = {-a + b1 - b2 + c2 + k(1)},
                     .lowerN = {-a - b2 + c1 + c2}},
          .argX = yMinus1OverS, .argY = yMinus1OverY},
         }});
    v.push_back(
        {"S12", 6, {bothLessThanOne, invX, oneMinusY},
         {
         {.gammaNumerators = {c1, -a + b1},
          .gammaDenominators = {b1, -a + c1},
          .prefactors = {{negX, -a}},
          .series = {.upperPlus = {a, a - c1 + k(1)}, .upperM = {-b2 + c2}, .upperN = {b2},
                     .lowerPlus = {c2, a - b1 + k(1)}},
          .argX = invX, .argY = oneMinusYOverX},
         {.gammaNumerators = {c1, c2, a - b1, -a + b1 - b2 + c2},
          .gammaDenominators = {a, -b1 + c1, -b2 + c2, -a + b1 + c2},
          .prefactors = {{negX, -b1}},
          .series = {.upperMinus = {-a + b1 - b2 + c2}, .upperM = {b1, b1 - c1 + k(1)},
                     .upperN = {b2}, .lowerMinus = {-a + b1 + k(1)}, .lowerM = {-a + b1 + c2}},
          .argX = invX, .argY = oneMinusY},
         {.gammaNumerators = {c1, c2, a - b1 + b2 - c2},
          .gammaDenominators = {a, b2, -b1 + c1},
          .prefactors = {{negX, -b1}, {oneMinusY, -a + b1 - b2 + c2}},
          .series = {.upperPlus = {-a + b1 + c2}, .upperM = {b1, b1 - c1 + k(1)},
                     .upperN = {-b2 + c2}, .lowerPlus = {-a + b1 - b2 + c2 + k(1)},
                     .lowerM = {-a + b1 + c2}},
          .argX = oneMinusYOverX, .argY = oneMinusY},
         }});
    v.push_back(
        {"S13", 17, {bothLessThanOne, xMinus1OverX, sOverXMinus1},
         {
         {.gammaNumerators = {c1, -a - b1 + c1},
          .gammaDenominators = {-a + c1, -b1 + c1},
          .prefactors = {{oneMinusX, -a}, {negXOverXMinus1, -a, invert}},
          .series = {.upperPlus = {a, a - c1 + k(1)}, .upperM = {-b2 + c2}, .upperN = {b2},
                     .lowerPlus = {c2, a + b1 - c1 + k(1)}},
          .argX = xMinus1OverX, .argY = sOverX},
         {.gammaNumerators = {c1, c2, a + b1 - c1, -a - b1 - b2 + c1 + c2},
          .gammaDenominators = {a, b1, -b2 + c2, -a - b1 + c1 + c2},
          .prefactors = {{oneMinusX, -a}, {negXOverXMinus1, b1 - c1, invert}},
          .series = {.upperMinus = {-a - b1 - b2 + c1 + c2}, .upperM = {-b1 + k(1), -b1 + c1},
                     .upperN = {b2}, .lowerMinus = {-a - b1 + c1 + k(1)},
                     .lowerM = {-a - b1 + c1 + c2}},
          .argX = xMinus1OverX, .argY = sOverXMinus1},
         {.gammaNumerators = {c1, c2, a + b1 + b2 - c1 - c2},
          .gammaDenominators = {a, b1, b2},
          .prefactors = {{oneMinusX, -a}, {negXOverXMinus1, b1 - c1, invert},
                         {sOverXMinus1, -a - b1 - b2 + c1 + c2, keepIfYMinusXPlus1Positive}},
          .series = {.upperPlus = {-a - b1 + c1 + c2}, .upperM = {-b1 + k(1), -b1 + c1},
                     .upperN = {-b2 + c2}, .lowerPlus = {-a - b1 - b2 + c1 + c2 + k(1)},
                     .lowerM = {-a - b1 + c1 + c2}},
          .argX = sOverX, .argY = sOverXMinus1},
         }});
    v.push_back(
        {"S14", 7, {bothLessThanOne, oneMinusX, invY},
         {
         {.gammaNumerators = {c2, -a + b2},
          .gammaDenominators = {b2, -a + c2},
          .prefactors = {{negY, -a}},
          .series = {.upperPlus = {a, a - c2 + k(1)}, .upperM = {b1}, .upperN = {-b1 + c1},
                     .lowerPlus = {c1, a - b2 + k(1)}},
          .argX = oneMinusXOverY, .argY = invY},
         {.gammaNumerators = {c1, c2, a - b2, -a - b1 + b2 + c1},
          .gammaDenominators = {a, -b1 + c1, -b2 + c2, -a + b2 + c1},
          .prefactors = {{negY, -b2}},
          .series = {.upperMinus = {a - b2}, .upperM = {b1}, .upperN = {b2, b2 - c2 + k(1)},
                     .lowerMinus = {a + b1 - b2 - c1 + k(1)}, .lowerN = {-a + b2 + c1}},
          .argX = oneMinusX, .argY = invY},
         {.gammaNumerators = {c1, c2, a + b1 - b2 - c1},
          .gammaDenominators = {a, b1, -b2 + c2},
          .prefactors = {{negY, -b2}, {oneMinusX, -a - b1 + b2 + c1}},
          .series = {.upperPlus = {-a + b2 + c1}, .upperM = {-b1 + c1},
                     .upperN = {b2, b2 - c2 + k(1)}, .lowerPlus = {-a - b1 + b2 + c1 + k(1)},
                     .lowerN = {-a + b2 + c1}},
          .argX = oneMinusX, .argY = oneMinusXOverY},
         }});
    v.push_back(
        {"S15", 29, {bothLessThanOne, yMinus1OverY, sOverYMinus1},
         {
         {.gammaNumerators = {c2, -a - b2 + c2},
          .gammaDenominators = {-a + c2, -b2 + c2},
          .prefactors = {{oneMinusY, -a}, {negYOverYMinus1, -a, invert}},
          .series = {.upperPlus = {a, a - c2 + k(1)}, .upperM = {b1}, .upperN = {-b1 + c1},
                     .lowerPlus = {c1, a + b2 - c2 + k(1)}},
          .argX = sOverY, .argY = yMinus1OverY},
         {.gammaNumerators = {c1, c2, a + b2 - c2, -a - b1 - b2 + c1 + c2},
          .gammaDenominators = {a, b2, -b1 + c1, -a - b2 + c1 + c2},
          .prefactors = {{oneMinusY, -a}, {negYOverYMinus1, b2 - c2, invert}},
          .series = {.upperMinus = {a + b2 - c2}, .upperM = {b1}, .upperN = {-b2 + k(1), -b2 + c2},
                     .lowerMinus = {a + b1 + b2 - c1 - c2 + k(1)}, .lowerN = {-a - b2 + c1 + c2}},
          .argX = sOverYMinus1, .argY = yMinus1OverY},
         {.gammaNumerators = {c1, c2, a + b1 + b2 - c1 - c2},
          .gammaDenominators = {a, b1, b2},
          .prefactors = {{oneMinusY, -a}, {negYOverYMinus1, b2 - c2, invert},
                         {yMinus1OverS, a + b1 + b2 - c1 - c2, keepIfYMinusXMinus1Positive}},
          .series = {.upperPlus = {-a - b2 + c1 + c2}, .upperM = {-b1 + c1},
                     .upperN = {-b2 + k(1), -b2 + c2}, .lowerPlus = {-a - b1 - b2 + c1 + c2 + k(1)},
                     .lowerN = {-a - b2 + c1 + c2}},
          .argX = sOverYMinus1, .argY = sOverY},
         }});
    v.push_back(
        {"S16", 40, {bothLessThanOne, sOverY, yMinus1OverS},
         {
         {.gammaNumerators = {c2, -a - b2 + c2},
          .gammaDenominators = {-a + c2, -b2 + c2},
          .prefactors = {{oneMinusXMinusY, -a}, {negYOverS, -a, keepIfXMinusYMinus1Positive}},
          .series = {.upperPlus = {a, a - c2 + k(1)}, .upperM = {-b1 + c1}, .upperN = {b1},
                     .lowerPlus = {c1, a + b2 - c2 + k(1)}},
          .argX = yMinus1OverY, .argY = sOverY},
         {.gammaNumerators = {c1, c2, a + b2 - c2, -a + b1 - b2 + c2},
          .gammaDenominators = {a, b1, b2, -a - b2 + c1 + c2},
          .prefactors = {{oneMinusXMinusY, -a}, {negYOverS, b2 - c2, keepIfXMinusYMinus1Positive}},
          .series = {.upperMinus = {a + b2 - c2}, .upperM = {-b1 + c1},
                     .upperN = {-b2 + k(1), -b2 + c2}, .lowerMinus = {a - b1 + b2 - c2 + k(1)},
                     .lowerN = {-a - b2 + c1 + c2}},
          .argX = yMinus1OverS, .argY = sOverY},
         {.gammaNumerators = {c1, c2, a - b1 + b2 - c2},
          .gammaDenominators = {a, b2, -b1 + c1},
          .prefactors = {{oneMinusXMinusY, -a}, {negYOverS, b2 - c2, keepIfXMinusYMinus1Positive},
                         {yMinus1OverS, -a + b1 - b2 + c2, keepIfYMinusXMinus1Positive}},
          .series = {.upperPlus = {-a - b2 + c1 + c2}, .upperM = {b1},
                     .upperN = {-b2 + k(1), -b2 + c2}, .lowerPlus = {-a + b1 - b2 + c2 + k(1)},
                     .lowerN = {-a - b2 + c1 + c2}},
          .argX = yMinus1OverS, .argY = yMinus1OverY},
         }});
    v.push_back(
        {"S17", 8, {hornPair, x, negInvY},
         {
         {.gammaNumerators = {c2, -a + b2},
          .gammaDenominators = {b2, -a + c2},
          .prefactors = {{negY, -a}},
          .series = {.upperPlus = {a, a - c2 + k(1)}, .upperM = {b1}, .lowerPlus = {a - b2 + k(1)},
                     .lowerM = {c1}},
          .argX = negXOverY, .argY = invY},
         {.gammaNumerators = {c2, a - b2},
          .gammaDenominators = {a, -b2 + c2},
          .prefactors = {{negY, -b2}},
          .series = {.upperMinus = {a - b2}, .upperM = {b1}, .upperN = {b2, b2 - c2 + k(1)},
                     .lowerM = {c1}},
          .argX = x, .argY = negInvY},
         }});
    v.push_back(
        {"S18", 9, {hornPair, y, negInvX},
         {
         {.gammaNumerators = {c1, -a + b1},
          .gammaDenominators = {b1, -a + c1},
          .prefactors = {{negX, -a}},
          .series = {.upperPlus = {a, a - c1 + k(1)}, .upperM = {b2}, .lowerPlus = {a - b1 + k(1)},
                     .lowerM = {c2}},
          .argX = negYOverX, .argY = invX},
         {.gammaNumerators = {c1, a - b1},
          .gammaDenominators = {a, -b1 + c1},
          .prefactors = {{negX, -b1}},
          .series = {.upperMinus = {a - b1}, .upperM = {b2}, .upperN = {b1, b1 - c1 + k(1)},
                     .lowerM = {c2}},
          .argX = y, .argY = negInvX},
         }});
    return v;
  }();
  return reps;
}

inline const SeriesRepresentation& representation(std::string_view id) {
  for (const auto& rep : catalog())
    if (rep.id == id) return rep;
  throw UnknownIdError("unknown representation id: " + std::string(id));
}

inline bool rocContains(const RocPredicate& roc, EvalPoint point) {
  const double va = std::abs(evalArg(roc.first, point.x, point.y));
  const double vb = std::abs(evalArg(roc.second, point.x, point.y));
  switch (roc.shape) {
    case RocShape::sumLessThanOne:
      return va + vb < 1.0;
    case RocShape::bothLessThanOne:
      return va < 1.0 && vb < 1.0;
    case RocShape::hornPair:
      return va < 1.0 && vb < 1.0 && (1.0 + va) * vb < 1.0;
  }
  return false;
}

inline bool rocContains(const SeriesRepresentation& rep, EvalPoint point) {
  return rocContains(rep.roc, point);
}

inline bool rocContains(std::string_view id, EvalPoint point) {
  return rocContains(representation(id), point);
}

inline ComplexScalar evaluatePrefactor(const Prefactor& p, const ParameterSet& params,
                                       EvalPoint point) {
  const double f = evalArg(p.base, point.x, point.y);
  const ComplexScalar e = p.exponent.valueIn(params);
  if (f == 0.0) {
    if (e == 0.0) return 1.0;
    if (e.real() > 0.0) return 0.0;
    throw DomainError("evaluatePrefactor: zero base needs a positive exponent");
  }
  if (keepsDirectForm(p.rule, point.x, point.y))
    return std::exp(e * std::log(ComplexScalar(f)));
  return std::exp(-e * std::log(ComplexScalar(1.0 / f)));
}

// A component made numeric at one (params, point): scalar coefficient, series
// bases, and series arguments.  A zero coefficient marks a component
// annihilated by its Gamma ratio; its series is not meant to be summed.
struct ComponentInstance {
  ComplexScalar coefficient;
  CompiledSeries series;
  ComplexScalar X, Y;
};

inline std::vector<ComponentInstance> instantiate(const SeriesRepresentation& rep,
                                                  const ParameterSet& params, EvalPoint point) {
  std::vector<ComponentInstance> out;
  out.reserve(rep.components.size());
  for (const auto& comp : rep.components) {
    std::vector<ComplexScalar> nums, dens;
    nums.reserve(comp.gammaNumerators.size());
    dens.reserve(comp.gammaDenominators.size());
    for (const auto& c : comp.gammaNumerators) nums.push_back(c.valueIn(params));
    for (const auto& c : comp.gammaDenominators) dens.push_back(c.valueIn(params));
    ComplexScalar coeff = gammaRatio(nums, dens);
    if (coeff != 0.0)
      for (const auto& p : comp.prefactors) coeff *= evaluatePrefactor(p, params, point);
    out.push_back({coeff, compileSeries(comp.series, params),
                   evalArg(comp.argX, point.x, point.y),
                   evalArg(comp.argY, point.x, point.y)});
  }
  return out;
}

inline std::vector<ComponentInstance> instantiate(std::string_view id, const ParameterSet& params,
                                                  EvalPoint point) {
  return instantiate(representation(id), params, point);
}

inline std::string comboText(const LinearParamCombo& c) {
  static constexpr std::string_view names[5] = {"a", "b1", "b2", "c1", "c2"};
  const int coeffs[5] = {c.ca, c.cb1, c.cb2, c.cc1, c.cc2};
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] > 0 && !out.empty()) out += "+";
    if (coeffs[i] < 0) out += "-";
    if (std::abs(coeffs[i]) != 1) out += std::to_string(std::abs(coeffs[i]));
    out += names[i];
  }
  if (c.k0 != 0) {
    if (c.k0 > 0 && !out.empty()) out += "+";
    out += std::to_string(c.k0);
  }
  if (out.empty()) out = "0";
  return out;
}

inline std::string rocText(const RocPredicate& roc) {
  const std::string a(argText(roc.first)), b(argText(roc.second));
  switch (roc.shape) {
    case RocShape::sumLessThanOne:
      return "Abs[" + a + "]+Abs[" + b + "]<1";
    case RocShape::bothLessThanOne:
      return "Abs[" + a + "]<1 && Abs[" + b + "]<1";
    case RocShape::hornPair:
      return "Abs[" + a + "]<1 && Abs[" + b + "]<1 && (1+Abs[" + a + "])*Abs[" + b + "]<1";
  }
  throw DomainError("rocText: unknown region shape");
}

// Kampe de Feriet style series are labeled F, their (m-n)-weighted mirror
// variants Ftilde, and the pure Horn shape H2.
inline std::string_view seriesKindLabel(const DoubleSeriesSpec& s) {
  if (s.upperMinus.empty() && s.lowerMinus.empty()) return "F";
  if (s.lowerMinus.empty() && s.lowerPlus.empty()) return "H2";
  return "Ftilde";
}

namespace detail {

inline std::string prefactorText(const Prefactor& p) {
  const std::string core =
      "(" + std::string(argText(p.base)) + ")^(" + comboText(p.exponent) + ")";
  switch (p.rule) {
    case RewriteRule::keep:
      return core;
    case RewriteRule::invert:
      return "<" + core + ", False>";
    case RewriteRule::keepIfXMinusYPlus1Positive:
      return "<" + core + ", x-y+1>0>";
    case RewriteRule::keepIfXMinusYMinus1Positive:
      return "<" + core + ", x-y-1>0>";
    case RewriteRule::keepIfYMinusXPlus1Positive:
      return "<" + core + ", -x+y+1>0>";
    case RewriteRule::keepIfYMinusXMinus1Positive:
      return "<" + core + ", -x+y-1>0>";
  }
  throw DomainError("prefactorText: unknown rewrite rule");
}

inline std::string kernelText(const SeriesComponent& comp) {
  auto side = [](const DoubleSeriesSpec& s, bool upper) {
    static constexpr std::string_view suffix[4] = {"_{m+n}", "_{m-n}", "_m", "_n"};
    const std::vector<LinearParamCombo>* lists[4] = {
        upper ? &s.upperPlus : &s.lowerPlus, upper ? &s.upperMinus : &s.lowerMinus,
        upper ? &s.upperM : &s.lowerM, upper ? &s.upperN : &s.lowerN};
    std::string out;
    for (int w = 0; w < 4; ++w)
      for (const auto& c : *lists[w]) {
        if (!out.empty()) out += " ";
        out += "(" + comboText(c) + ")" + std::string(suffix[w]);
      }
    return out;
  };
  std::string out(seriesKindLabel(comp.series));
  const std::string lower = side(comp.series, false);
  out += "[" + side(comp.series, true) + " / " + (lower.empty() ? "1" : lower) + "](";
  out += std::string(argText(comp.argX)) + ", " + std::string(argText(comp.argY)) + ")";
  return out;
}

}  // namespace detail

// Human-readable dump of one representation: ROC line, then one line per
// component.
inline std::string expose(std::string_view id) {
  const SeriesRepresentation& rep = representation(id);
  std::string out(rep.id);
  out += " #" + std::to_string(rep.packageNumber) + ": " + rocText(rep.roc) + "\n";
  for (const auto& comp : rep.components) {
    std::string line = "  ";
    if (!comp.gammaNumerators.empty()) {
      std::string nums, dens;
      for (const auto& c : comp.gammaNumerators) {
        if (!nums.empty()) nums += " ";
        nums += "Gamma[" + comboText(c) + "]";
      }
      for (const auto& c : comp.gammaDenominators) {
        if (!dens.empty()) dens += " ";
        dens += "Gamma[" + comboText(c) + "]";
      }
      line += nums + " / (" + dens + ") * ";
    }
    for (const auto& p : comp.prefactors) line += detail::prefactorText(p) + " * ";
    line += detail::kernelText(comp);
    out += line + "\n";
  }
  return out;
}

}  // namespace f2eval
