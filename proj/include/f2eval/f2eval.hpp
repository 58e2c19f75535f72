#pragma once

#include "arg_expr.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "evaluator.hpp"
#include "gamma.hpp"
#include "hyp2f1.hpp"
#include "log_gamma.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"
#include "series_spec.hpp"
#include "types.hpp"
