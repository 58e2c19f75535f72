#pragma once

#include <string_view>

#include "errors.hpp"
#include "types.hpp"

namespace f2eval {

// Rational functions of the evaluation point used as series arguments,
// prefactor bases and convergence-region bounds.  Enumerator names spell the
// expression out; s abbreviates x + y - 1.
enum class ArgExpr {
  x,
  y,
  negX,
  negY,
  oneMinusX,
  oneMinusY,
  oneMinusXMinusY,
  invX,
  invY,
  negInvX,
  negInvY,
  invOneMinusX,
  invOneMinusY,
  negXOverY,
  negYOverX,
  xOverOneMinusY,
  yOverOneMinusX,
  xOverYMinus1,
  yOverXMinus1,
  xOverXMinus1,
  yOverYMinus1,
  negXOverXMinus1,
  negYOverYMinus1,
  xMinus1OverX,
  yMinus1OverY,
  oneMinusXOverY,
  oneMinusYOverX,
  xOverS,
  yOverS,
  negXOverS,
  negYOverS,
  sOverX,
  sOverY,
  xMinus1OverS,
  yMinus1OverS,
  sOverXMinus1,
  sOverYMinus1,
};

inline double evalArg(ArgExpr e, double x, double y) {
  const double s = x + y - 1.0;
  switch (e) {
    case ArgExpr::x: return x;
    case ArgExpr::y: return y;
    case ArgExpr::negX: return -x;
    case ArgExpr::negY: return -y;
    case ArgExpr::oneMinusX: return 1.0 - x;
    case ArgExpr::oneMinusY: return 1.0 - y;
    case ArgExpr::oneMinusXMinusY: return 1.0 - x - y;
    case ArgExpr::invX: return 1.0 / x;
    case ArgExpr::invY: return 1.0 / y;
    case ArgExpr::negInvX: return -1.0 / x;
    case ArgExpr::negInvY: return -1.0 / y;
    case ArgExpr::invOneMinusX: return 1.0 / (1.0 - x);
    case ArgExpr::invOneMinusY: return 1.0 / (1.0 - y);
    case ArgExpr::negXOverY: return -x / y;
    case ArgExpr::negYOverX: return -y / x;
    case ArgExpr::xOverOneMinusY: return x / (1.0 - y);
    case ArgExpr::yOverOneMinusX: return y / (1.0 - x);
    case ArgExpr::xOverYMinus1: return x / (y - 1.0);
    case ArgExpr::yOverXMinus1: return y / (x - 1.0);
    case ArgExpr::xOverXMinus1: return x / (x - 1.0);
    case ArgExpr::yOverYMinus1: return y / (y - 1.0);
    case ArgExpr::negXOverXMinus1: return -x / (x - 1.0);
    case ArgExpr::negYOverYMinus1: return -y / (y - 1.0);
    case ArgExpr::xMinus1OverX: return (x - 1.0) / x;
    case ArgExpr::yMinus1OverY: return (y - 1.0) / y;
    case ArgExpr::oneMinusXOverY: return (1.0 - x) / y;
    case ArgExpr::oneMinusYOverX: return (1.0 - y) / x;
    case ArgExpr::xOverS: return x / s;
    case ArgExpr::yOverS: return y / s;
    case ArgExpr::negXOverS: return -x / s;
    case ArgExpr::negYOverS: return -y / s;
    case ArgExpr::sOverX: return s / x;
    case ArgExpr::sOverY: return s / y;
    case ArgExpr::xMinus1OverS: return (x - 1.0) / s;
    case ArgExpr::yMinus1OverS: return (y - 1.0) / s;
    case ArgExpr::sOverXMinus1: return s / (x - 1.0);
    case ArgExpr::sOverYMinus1: return s / (y - 1.0);
  }
  throw DomainError("evalArg: unknown expression tag");
}

inline std::string_view argText(ArgExpr e) {
  switch (e) {
    case ArgExpr::x: return "x";
    case ArgExpr::y: return "y";
    case ArgExpr::negX: return "-x";
    case ArgExpr::negY: return "-y";
    case ArgExpr::oneMinusX: return "1-x";
    case ArgExpr::oneMinusY: return "1-y";
    case ArgExpr::oneMinusXMinusY: return "1-x-y";
    case ArgExpr::invX: return "1/x";
    case ArgExpr::invY: return "1/y";
    case ArgExpr::negInvX: return "-1/x";
    case ArgExpr::negInvY: return "-1/y";
    case ArgExpr::invOneMinusX: return "1/(1-x)";
    case ArgExpr::invOneMinusY: return "1/(1-y)";
    case ArgExpr::negXOverY: return "-x/y";
    case ArgExpr::negYOverX: return "-y/x";
    case ArgExpr::xOverOneMinusY: return "x/(1-y)";
    case ArgExpr::yOverOneMinusX: return "y/(1-x)";
    case ArgExpr::xOverYMinus1: return "x/(y-1)";
    case ArgExpr::yOverXMinus1: return "y/(x-1)";
    case ArgExpr::xOverXMinus1: return "x/(x-1)";
    case ArgExpr::yOverYMinus1: return "y/(y-1)";
    case ArgExpr::negXOverXMinus1: return "-x/(x-1)";
    case ArgExpr::negYOverYMinus1: return "-y/(y-1)";
    case ArgExpr::xMinus1OverX: return "(x-1)/x";
    case ArgExpr::yMinus1OverY: return "(y-1)/y";
    case ArgExpr::oneMinusXOverY: return "(1-x)/y";
    case ArgExpr::oneMinusYOverX: return "(1-y)/x";
    case ArgExpr::xOverS: return "x/(x+y-1)";
    case ArgExpr::yOverS: return "y/(x+y-1)";
    case ArgExpr::negXOverS: return "-x/(x+y-1)";
    case ArgExpr::negYOverS: return "-y/(x+y-1)";
    case ArgExpr::sOverX: return "(x+y-1)/x";
    case ArgExpr::sOverY: return "(x+y-1)/y";
    case ArgExpr::xMinus1OverS: return "(x-1)/(x+y-1)";
    case ArgExpr::yMinus1OverS: return "(y-1)/(x+y-1)";
    case ArgExpr::sOverXMinus1: return "(x+y-1)/(x-1)";
    case ArgExpr::sOverYMinus1: return "(x+y-1)/(y-1)";
  }
  throw DomainError("argText: unknown expression tag");
}

// Condition under which a bracketed prefactor keeps its direct form base^e;
// when it fails, the factor is evaluated as (1/base)^(-e) instead so the
// principal branch stays continuous across the relevant half plane.
enum class RewriteRule {
  keep,
  invert,
  keepIfXMinusYPlus1Positive,
  keepIfXMinusYMinus1Positive,
  keepIfYMinusXPlus1Positive,
  keepIfYMinusXMinus1Positive,
};

inline bool keepsDirectForm(RewriteRule r, double x, double y) {
  switch (r) {
    case RewriteRule::keep: return true;
    case RewriteRule::invert: return false;
    case RewriteRule::keepIfXMinusYPlus1Positive: return x - y + 1.0 > 0.0;
    case RewriteRule::keepIfXMinusYMinus1Positive: return x - y - 1.0 > 0.0;
    case RewriteRule::keepIfYMinusXPlus1Positive: return y - x + 1.0 > 0.0;
    case RewriteRule::keepIfYMinusXMinus1Positive: return y - x - 1.0 > 0.0;
  }
  throw DomainError("keepsDirectForm: unknown rewrite rule");
}

}  // namespace f2eval
