#pragma once

// Reference rectangle sums computed with mpmath 1.3.0 at 40 significant digits.
#include <vector>

#include "f2eval/series_spec.hpp"

namespace f2eval::testing {

struct EngineSumGolden {
  CompiledSeries series;
  ComplexScalar X, Y;
  int terms;
  ComplexScalar value;
  double errorEstimate;
};

inline const std::vector<EngineSumGolden>& engineSumGoldens() {
  static const std::vector<EngineSumGolden> rows = {
      {{{{1.3000000000000000, 0.40000000000000000}}, {}, {{0.80000000000000000, -0.20000000000000000}}, {{0.55000000000000000, 0.0}}, {}, {}, {{2.1000000000000000, -0.30000000000000000}}, {{1.7000000000000000, 0.10000000000000000}}},
       {0.31000000000000000, 0.0}, {-0.22000000000000000, 0.0}, 8, {1.0904303569109025, 0.020012628095195857}, 3.7835903006768952e-5},
      {{{{1.3000000000000000, 0.40000000000000000}}, {}, {{0.80000000000000000, -0.20000000000000000}}, {{0.55000000000000000, 0.0}}, {}, {}, {{2.1000000000000000, -0.30000000000000000}}, {{1.7000000000000000, 0.10000000000000000}}},
       {0.31000000000000000, 0.0}, {-0.22000000000000000, 0.0}, 25, {1.0904378307579535, 0.020020960271679716}, 1.3709583540485661e-13},
      {{{{1.3000000000000000, 0.40000000000000000}}, {}, {{0.80000000000000000, -0.20000000000000000}}, {{0.55000000000000000, 0.0}}, {}, {}, {{2.1000000000000000, -0.30000000000000000}}, {{1.7000000000000000, 0.10000000000000000}}},
       {0.31000000000000000, 0.0}, {-0.22000000000000000, 0.0}, 60, {1.0904378307579538, 0.020020960271683202}, 1.1493343308819273e-28},
      {{{{0.90000000000000000, 0.10000000000000000}}, {}, {{1.4500000000000000, 0.25000000000000000}}, {{0.75000000000000000, -0.35000000000000000}, {-0.60000000000000000, 0.40000000000000000}}, {{1.1500000000000000, -0.15000000000000000}}, {}, {}, {{2.4000000000000000, 0.0}}},
       {-0.40000000000000000, 0.0}, {0.35000000000000000, 0.0}, 40, {0.66626842712684240, -0.070459518206795207}, 6.3828890333326247e-16},
      {{{}, {{0.70000000000000000, 0.30000000000000000}, {-1.4000000000000000, 0.60000000000000000}}, {{1.2000000000000000, -0.50000000000000000}}, {{0.95000000000000000, 0.0}}, {}, {{2.3000000000000000, -0.70000000000000000}, {1.6000000000000000, 0.20000000000000000}}, {}, {}},
       {0.45000000000000000, 0.0}, {0.30000000000000000, 0.0}, 20, {1.1930434787456723, 0.17276978375161314}, 7.1829092566199647e-13},
      {{{}, {{0.70000000000000000, 0.30000000000000000}, {-1.4000000000000000, 0.60000000000000000}}, {{1.2000000000000000, -0.50000000000000000}}, {{0.95000000000000000, 0.0}}, {}, {{2.3000000000000000, -0.70000000000000000}, {1.6000000000000000, 0.20000000000000000}}, {}, {}},
       {0.45000000000000000, 0.0}, {0.30000000000000000, 0.0}, 45, {1.1930434787455485, 0.17276978375223910}, 3.8484713250567544e-23},
      {{{}, {{-2.0000000000000000, 0.0}}, {{0.90000000000000000, 0.20000000000000000}}, {{1.1000000000000000, 0.0}}, {}, {{1.8000000000000000, -0.40000000000000000}}, {}, {{1.5000000000000000, 0.0}}},
       {0.50000000000000000, 0.0}, {0.40000000000000000, 0.0}, 30, {0.61331944132489693, -0.11633799010238504}, 2.0159687685679564e-49},
      {{{{1.0500000000000000, -0.20000000000000000}}, {}, {{0.65000000000000000, 0.0}}, {{-4.0000000000000000, 0.0}}, {}, {}, {{1.9000000000000000, 0.35000000000000000}}, {{1.2500000000000000, -0.10000000000000000}}},
       {0.55000000000000000, 0.0}, {1.7000000000000000, 0.0}, 25, {3.3941851661218942, -4.2609169760615858}, 0.00093282707229550769},
      {{{{0.85000000000000000, 0.15000000000000000}}, {}, {{1.3000000000000000, 0.0}}, {{0.60000000000000000, -0.45000000000000000}}, {}, {}, {{1.7500000000000000, 0.20000000000000000}}, {{2.0500000000000000, 0.0}}},
       {0.20000000000000000, 0.30000000000000000}, {-0.25000000000000000, 0.15000000000000000}, 35, {0.97432148121898207, 0.29661254014484442}, 3.0944306435786098e-14},
  };
  return rows;
}

}  // namespace f2eval::testing
