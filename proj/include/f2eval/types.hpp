#pragma once

#include <complex>

namespace f2eval {

using ComplexScalar = std::complex<double>;

// The five Pochhammer parameters of F2(a, b1, b2; c1, c2; x, y).
struct ParameterSet {
  ComplexScalar a, b1, b2, c1, c2;
};

// Real evaluation point.
struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
};

// Integer linear combination of the five parameters plus an integer constant:
// ca*a + cb1*b1 + cb2*b2 + cc1*c1 + cc2*c2 + k0.  Every gamma argument,
// Pochhammer base, and prefactor exponent in the series catalog has this form.
struct LinearParamCombo {
  int ca = 0, cb1 = 0, cb2 = 0, cc1 = 0, cc2 = 0, k0 = 0;

  ComplexScalar valueIn(const ParameterSet& p) const {
    ComplexScalar v(static_cast<double>(k0), 0.0);
    if (ca) v += static_cast<double>(ca) * p.a;
    if (cb1) v += static_cast<double>(cb1) * p.b1;
    if (cb2) v += static_cast<double>(cb2) * p.b2;
    if (cc1) v += static_cast<double>(cc1) * p.c1;
    if (cc2) v += static_cast<double>(cc2) * p.c2;
    return v;
  }

  friend constexpr LinearParamCombo operator+(LinearParamCombo u, LinearParamCombo v) {
    return {u.ca + v.ca, u.cb1 + v.cb1, u.cb2 + v.cb2,
            u.cc1 + v.cc1, u.cc2 + v.cc2, u.k0 + v.k0};
  }
  friend constexpr LinearParamCombo operator-(LinearParamCombo u, LinearParamCombo v) {
    return {u.ca - v.ca, u.cb1 - v.cb1, u.cb2 - v.cb2,
            u.cc1 - v.cc1, u.cc2 - v.cc2, u.k0 - v.k0};
  }
  friend constexpr LinearParamCombo operator-(LinearParamCombo u) {
    return {-u.ca, -u.cb1, -u.cb2, -u.cc1, -u.cc2, -u.k0};
  }
  friend constexpr bool operator==(LinearParamCombo u, LinearParamCombo v) = default;
};

// Symbol shorthands for building catalog combinations.
namespace combo {
inline constexpr LinearParamCombo a{1, 0, 0, 0, 0, 0};
inline constexpr LinearParamCombo b1{0, 1, 0, 0, 0, 0};
inline constexpr LinearParamCombo b2{0, 0, 1, 0, 0, 0};
inline constexpr LinearParamCombo c1{0, 0, 0, 1, 0, 0};
inline constexpr LinearParamCombo c2{0, 0, 0, 0, 1, 0};
inline constexpr LinearParamCombo k(int n) { return {0, 0, 0, 0, 0, n}; }
}  // namespace combo

}  // namespace f2eval
