#pragma once

// Reference values frozen from an independent high-precision recomputation
// (mpmath at 50 significant digits) of the closed-form quantities for the
// two-regime demo parameters: gamma(v) = 0.1 + 10 e^{-v}, F(w) = w^2/(1+w^2),
// alpha = 1, theta = 0, l = 20, evaluated at u* = 4. The library must match
// these to the stated tolerances; none of them were produced by the library
// under test.

namespace oracle {

// Motility and response point values at the merged-mass level u* = 4.
inline constexpr double kGammaAt4 = 0.2831563888873418;
inline constexpr double kGammaDerivAt4 = -0.1831563888873418;
inline constexpr double kResponseAt4 = 0.94117647058823529; // 16/17

// S = gamma(u*) + u* gamma'(u*), the sign that decides instability.
inline constexpr double kSValue = -0.44946916666202541;

// Band edge k_bar^2 = -S / (dcoef * gamma(u*)).
inline constexpr double kBandD01 = 15.873530822603256;   // dcoef = 0.1
inline constexpr double kBandD001 = 158.73530822603256;  // dcoef = 0.01
inline constexpr double kBandD100 = 0.015873530822603256; // dcoef = 100

// Quadratic coefficients and roots of rho^2 + a1 rho + a0 at k^2 = 5,
// dcoef = 0.1.
inline constexpr double kA1AtK5 = 2.915781944436709;
inline constexpr double kA0AtK5 = -1.5394548610917725;
inline constexpr double kRhoPlusAtK5 = 0.45650212951586127;
inline constexpr double kRhoMinusAtK5 = -3.3722840739525703;

// Cosine-mode bookkeeping on l = 20: mode n has k^2 = (n pi / 20)^2.
inline constexpr double kKsqMode1 = 0.024674011002723397;
inline constexpr double kKsqMode25 = 15.421256876702123; // inside the D=0.1 band
inline constexpr double kKsqMode26 = 16.679631437841016; // outside the D=0.1 band
inline constexpr int kAdmissibleD01 = 25;

// Fastest modes and their growth rates.
inline constexpr int kFastestModeD01 = 14;
inline constexpr double kFastestGrowthD01 = 0.4566743791204942;
inline constexpr int kFastestModeD001 = 33;
inline constexpr double kFastestGrowthD001 = 1.014299706113693;

// Closed-form pattern conditions at u* = 4, l = 20:
// con1 left side (gamma1/gamma0) e^{lambda u*} and the dcoef bound for mode 1.
inline constexpr double kCon1Lhs = 0.54598150033144239;
inline constexpr double kCon1Rhs = 3.0; // lambda u* - 1
inline constexpr double kCon2BoundMode1 = 64.332997261171737;

// Explicit stability limit for the demo grid (l = 20, n = 512) evaluated on
// v = 0 fields (gamma_max = 10.1) with safety 0.9:
// 0.9 * dx^2 / (2 * 10.1).
inline constexpr double kStableDtFig1GridVZero = 6.7984703743811881e-5;

// sqrt(80): L2 norm of the constant field 2 on a length-20 interval.
inline constexpr double kSqrt80 = 8.9442719099991588;

} // namespace oracle
