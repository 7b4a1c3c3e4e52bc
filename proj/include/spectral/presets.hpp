// Built-in registry.
//
// Two A-polynomial components ship in full and drive the whole pipeline:
// the figure-eight knot and the once-punctured torus bundle L^2R. Five
// Jacobians are carried by their reported minimal-model invariants in the
// curve-table normalization (standard elliptic-curve labels). The three
// whose 2-torsion field is a cubic extension also carry the closed form
// reported for the imaginary theta quartic; the numeric layer evaluates
// that form against the exact solution of the squared-difference
// resolvent.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral/curve.hpp"
#include "spectral/rational.hpp"

namespace spectral {

// Purely imaginary value i (num / sqrt(rad)) (A^(1/2) + tail A^(-1/2))
// with A = ((cube_a + cube_b sqrt(cube_d)) / cube_den)^(1/3), all cube
// roots and square roots taken positive real.
struct ImaginaryCubicSurd {
  long num = 1;
  long rad = 1;
  long tail = 1;
  long cube_a = 0;
  long cube_b = 0;
  long cube_d = 1;
  long cube_den = 1;
};

struct JacobianPreset {
  std::string label;     // curve-table label, lower case
  std::string manifold;  // knot or bundle whose component has this Jacobian
  Rational g2;
  Rational g3;
  // Reported closed form for t_{i0}; absent when the quadratic-extension
  // representation of the modular layer already covers the curve.
  std::optional<ImaginaryCubicSurd> reported_t;
};

// Component references accepted: "4_1" (also "41", "fig8", "15a8") and
// "l2r" (also "14a4"), case insensitive.
const std::vector<std::string>& component_preset_names();
bool has_component_preset(const std::string& ref);
APolyComponent component_preset(const std::string& ref);

const std::vector<JacobianPreset>& jacobian_presets();
// Null when the label is not in the registry; matching is case insensitive.
const JacobianPreset* find_jacobian_preset(const std::string& label);

}  // namespace spectral
