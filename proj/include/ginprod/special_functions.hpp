#pragma once

#include <complex>

namespace ginprod {

using cplx = std::complex<double>;

// Series / algorithm switch points. Fixed at compile time so results are
// reproducible across platforms.
//
//   function        switch variable     value    below            above
//   -------------------------------------------------------------------------
//   erfc            |x|                 1.5      Maclaurin erf    Lentz CF
//   bessel_K0       x                   2.0      A&S 9.6.13       scaled cosh
//                                                series           quadrature
//   bessel_I0       x                   50.0     power series     scaled
//                                                                 asymptotic
//   hyper_0f_q      |x|                 30.0     guaranteed       best-effort
//                                                1e-11 zone       (same series)
inline constexpr double kErfcSeriesCutoff = 1.5;
inline constexpr double kBesselK0SeriesCutoff = 2.0;
inline constexpr double kBesselI0SeriesCutoff = 50.0;
inline constexpr double kHyperGuaranteedRadius = 30.0;

/// Principal-branch log Gamma, valid for re(s) > 0 (Lanczos, g = 7).
cplx log_gamma(cplx s);

/// Complementary error function. Total on finite input; the x > 26.6 tail
/// underflows monotonically to zero instead of failing.
double erfc(double x);

/// Modified Bessel function K0, x > 0. The linear form underflows past
/// x ~ 708; log_bessel_K0 stays representable for any positive x.
double bessel_K0(double x);
double log_bessel_K0(double x);

/// Modified Bessel function I0, x >= 0, and its overflow-safe log form.
double bessel_I0(double x);
double log_bessel_I0(double x);

/// 0F_q(-; 1,...,1; x) = sum_k x^k / (k!)^{q+1}. q = 0 is exp(x).
/// Guaranteed 1e-11 relative accuracy for |x| <= kHyperGuaranteedRadius;
/// throws ConvergenceError if the term cap is hit before the tolerance.
cplx hyper_0f_q(int q, cplx x);

}  // namespace ginprod
