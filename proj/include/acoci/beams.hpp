#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "acoci/types.hpp"

namespace acoci::beams {

// The two constrained design problems: a five-segment stepped cantilever
// (weight minimization, one deflection-derived constraint) and an I-section
// beam (vertical-deflection minimization, cross-section-area and bending
// stress constraints).

/// Stepped cantilever constants: weight per unit height sum and the
/// per-segment constraint numerators.
inline constexpr double kCantileverWeightCoeff = 0.0624;
inline constexpr std::array<double, 5> kCantileverNumerators{61.0, 37.0, 19.0, 7.0, 1.0};

inline double cantilever_weight(const std::vector<double>& x) {
  return kCantileverWeightCoeff * (x[0] + x[1] + x[2] + x[3] + x[4]);
}

/// g(x) = 61/x1^3 + 37/x2^3 + 19/x3^3 + 7/x4^3 + 1/x5^3 - 1 <= 0
inline double cantilever_constraint(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) s += kCantileverNumerators[i] / std::pow(x[i], 3);
  return s - 1.0;
}

/// Five-variable stepped cantilever weight minimization over [0.01, 100]^5.
inline Problem cantilever_problem() {
  return Problem("cantilever", cantilever_weight, {cantilever_constraint},
                 Bounds(5, 0.01, 100.0), 1.3400);
}

/// I-beam physical parameters. Lengths in cm, loads in kN, modulus in
/// kN/cm^2. The lateral load and elastic modulus default to the classic
/// calibration for this problem family.
struct IBeamSpec {
  double length;                     // L
  double load;                       // vertical P
  double lateral_load = 50.0;        // Q
  double elastic_modulus = 20000.0;  // E

  void validate() const {
    if (!(length > 0.0 && load > 0.0 && lateral_load > 0.0 && elastic_modulus > 0.0))
      throw ValidationError("IBeamSpec: all physical parameters must be positive");
  }
};

/// Large finite value standing in for degenerate geometry (h <= 2*t_f), so
/// the penalized landscape stays total over the box.
inline constexpr double kDegenerateValue = 1e9;

namespace detail {
inline bool degenerate(const std::vector<double>& x) {
  return x[0] - 2.0 * x[3] <= 1e-9;  // web height collapses
}
}  // namespace detail

/// Second moment of area of the I-section, x = (h, b, t_w, t_f).
inline double ibeam_inertia(const std::vector<double>& x) {
  const double h = x[0], b = x[1], tw = x[2], tf = x[3];
  const double web = h - 2.0 * tf;
  return tw * web * web * web / 12.0 + b * tf * tf * tf / 6.0 +
         2.0 * b * tf * ((h - tf) / 2.0) * ((h - tf) / 2.0);
}

/// Midspan deflection P*L^3 / (48*E*I).
inline double ibeam_deflection(const IBeamSpec& spec, const std::vector<double>& x) {
  if (detail::degenerate(x)) return kDegenerateValue;
  return spec.load * spec.length * spec.length * spec.length /
         (48.0 * spec.elastic_modulus * ibeam_inertia(x));
}

/// Cross-section area, limited to 300 cm^2.
inline double ibeam_area(const std::vector<double>& x) {
  const double h = x[0], b = x[1], tw = x[2], tf = x[3];
  return 2.0 * b * tf + tw * (h - 2.0 * tf);
}

/// Bending stress under the vertical and lateral loads, limited to 6 kN/cm^2.
inline double ibeam_stress(const IBeamSpec& spec, const std::vector<double>& x) {
  if (detail::degenerate(x)) return kDegenerateValue;
  const double h = x[0], b = x[1], tw = x[2], tf = x[3];
  const double web = h - 2.0 * tf;
  const double d1 = tw * web * web * web + 2.0 * b * tw * (4.0 * tf * tf + 3.0 * h * web);
  const double d2 = tw * tw * tw * web + 2.0 * tw * b * b * b;
  return 1.5 * spec.load * spec.length * h / d1 +
         1.5 * spec.lateral_load * spec.length * b / d2;
}

/// Four-variable I-beam deflection minimization,
/// h in [10,100], b in [10,60], t_w in [0.9,6], t_f in [0.9,6].
inline Problem ibeam_problem(double length, double load, double lateral_load = 50.0,
                             double elastic_modulus = 20000.0) {
  IBeamSpec spec{length, load, lateral_load, elastic_modulus};
  spec.validate();
  auto objective = [spec](const std::vector<double>& x) { return ibeam_deflection(spec, x); };
  auto area_limit = [](const std::vector<double>& x) {
    return (detail::degenerate(x) ? kDegenerateValue : ibeam_area(x)) - 300.0;
  };
  auto stress_limit = [spec](const std::vector<double>& x) {
    return ibeam_stress(spec, x) - 6.0;
  };
  return Problem("ibeam", objective, {area_limit, stress_limit},
                 Bounds({10.0, 10.0, 0.9, 0.9}, {100.0, 60.0, 6.0, 6.0}));
}

/// One published (L, P) load case and its reference best deflection.
struct IBeamCase {
  int id;
  double length;
  double load;
  double target_deflection;
};

/// The ten reference load cases.
inline const std::vector<IBeamCase>& ibeam_cases() {
  static const std::vector<IBeamCase> cases{
      {1, 120.0, 652.0, 0.002018}, {2, 350.0, 520.0, 0.049381},
      {3, 285.0, 743.0, 0.038774}, {4, 150.0, 200.0, 0.001209},
      {5, 345.0, 264.0, 0.020572}, {6, 100.0, 690.0, 0.001235},
      {7, 250.0, 442.0, 0.012915}, {8, 310.0, 675.0, 0.045771},
      {9, 270.0, 482.0, 0.018464}, {10, 220.0, 355.0, 0.006771}};
  return cases;
}

inline const IBeamCase& ibeam_case(int id) {
  for (const auto& c : ibeam_cases())
    if (c.id == id) return c;
  throw ValidationError("ibeam_case: case id must be in [1, 10]");
}

}  // namespace acoci::beams
