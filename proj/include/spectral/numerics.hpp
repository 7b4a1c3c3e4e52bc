// Quad-precision numeric layer: dilogarithms, contour integrals of the
// logarithmic 1-form phi = v du on an A-spectral curve, period residuals,
// radical evaluation, and the figure-eight state sum.
//
// Everything here runs in __float128 / __complex128. The exact layers never
// depend on this one; it exists to certify closed forms and asymptotic
// statements against independent numerics.

#pragma once

#include <quadmath.h>

#include <vector>

#include "spectral/curve.hpp"
#include "spectral/errors.hpp"
#include "spectral/modular.hpp"
#include "spectral/presets.hpp"

namespace spectral {

using Quad = __float128;
using QComplex = __complex128;

struct NumericConfig {
  int digits = 30;          // requested decimal accuracy of the layer
  Quad tolerance = 1e-12;   // certification target for residuals
  int trace_steps = 2048;   // dense branch-tracking samples per segment
  int max_depth = 40;       // adaptive quadrature bisection limit
};

// Throws NumericFailure when the configuration cannot be honored in quad
// precision: digits beyond 33, tolerance below 10^(4 - digits), or budget
// fields too small to track a branch.
void validate(const NumericConfig& cfg);

// ---- dilogarithms ----

// Principal dilogarithm, by series after inversion / reflection / Landen
// reduction with a duplication escape near the hexagonal points.
QComplex dilogarithm(QComplex z);

// Bloch-Wigner function D(z) = Im Li2(z) + arg(1 - z) ln|z|. Continuous on
// the complex plane; zero on the real axis.
Quad bloch_wigner(QComplex z);

// Lobachevsky function Lambda(x) = D(e^{2ix}) / 2, odd and pi-periodic.
Quad lobachevsky(Quad x);

// ---- contour integrals of phi = v du ----

// Paths are straight segments between waypoints, either in the u-plane
// (X = e^{2u}) or in the X-plane (du = dX / 2X).
enum class PathPlane { U, X };

struct PathResult {
  QComplex integral;
  QComplex l_start, l_end;
  QComplex v_start, v_end;
  Quad error;  // quadrature error estimate
};

// Integrates v du along the path. v = ln l is continued from the first
// waypoint; sheet = +-1 picks the branch of sqrt(S) there (principal root
// times sheet, applied at the first point where S != 0). The first
// waypoint may be a ramification point; any interior one may not.
PathResult integrate_phi(const ASpectralCurve& curve, PathPlane plane,
                         const std::vector<QComplex>& waypoints, int sheet,
                         const NumericConfig& cfg = {});

// Value of the leading asymptotic primitive int v du from the first
// waypoint to the last, on the determination with positive imaginary part
// (the one carrying the hyperbolic volume: Im = Vol/2 at u = i pi).
QComplex leading_asymptotic(const ASpectralCurve& curve,
                            const std::vector<QComplex>& u_waypoints,
                            const NumericConfig& cfg = {});

struct PeriodReport {
  // |Im oint phi - 2 pi k Re u0|: the loop integral with its base-point
  // term removed, i.e. rebased to a point with |m| = 1.
  Quad boutroux_residual = 0;
  // k: drift of ln l across the loop in units of 2 pi i.
  long l_winding = 0;
  // The lattice statement needs a base point with ln m in {0, i pi}; it
  // has a witness on the loop iff k is even (the rebasing ambiguity is
  // then a lattice element) or the loop crosses the positive real X-axis.
  bool quantization_applies = false;
  Quad quantization_residual = 0;
  long quantization_multiple = 0;
  Quad closure_error = 0;  // |l_end - l_start| after the loop
};

// Closed polygon loop in the X-plane (the closing edge back to the first
// waypoint is implicit). The loop must avoid ramification points, X = 0,
// and the singular fibre X = +-1.
PeriodReport period_checks(const ASpectralCurve& curve,
                           const std::vector<QComplex>& x_loop,
                           const NumericConfig& cfg = {});

// Inscribed polygon of an axis-aligned ellipse.
std::vector<QComplex> ellipse_loop(double cx, double cy, double rx,
                                   double ry, int vertices);

// Validation loops for a built-in component, one per conjugate pair of
// ramification points.
std::vector<std::vector<QComplex>> preset_period_loops(
    const ASpectralCurve& curve);

// u-plane waypoints from a ramification point on |X| = 1 to the complete
// point u = i pi, routed away from the other ramification points.
std::vector<QComplex> preset_volume_path(const ASpectralCurve& curve);

// ---- radical evaluation ----

Quad quadvalue_to_quad(const QuadValue& v);  // requires disc >= 0
Quad cardano_value(const CardanoRealRoot& root);
// The surd is purely imaginary; this returns its imaginary part.
Quad surd_imag_value(const ImaginaryCubicSurd& s);

// ---- state sum ----

// ln of the N-th figure-eight state sum: sum_{k=0}^{N-1} of the partial
// products prod_{j=1}^{k} 4 sin^2(pi j / N).
Quad fig8_state_sum_log(long N);

}  // namespace spectral
