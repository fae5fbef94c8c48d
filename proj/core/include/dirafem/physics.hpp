#ifndef DIRAFEM_PHYSICS_HPP
#define DIRAFEM_PHYSICS_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace dirafem {

/// Default speed of light in atomic units (CODATA 1986 inverse fine-structure
/// constant). calibrate_speed_of_light() refines this against the reference
/// levels when 13-digit reproduction is required.
inline constexpr double kDefaultSpeedOfLight = 137.0359895;

/// Bohr radius in meters, used to convert nuclear radii given in femtometers.
inline constexpr double kBohrRadiusMeters = 5.29177210903e-11;

/// Nuclear radius R = 1.2 A^(1/3) fm expressed in atomic units.
double nuclear_radius_au(double mass_number);

struct PhysicalParams {
  double m = 1.0;                    // electron rest mass
  double c = kDefaultSpeedOfLight;   // speed of light
  int z = 1;                         // charge number, 1..137
  int kappa = -1;                    // spin-orbit parameter, nonzero

  /// Throws std::domain_error if any invariant is violated
  /// (including kappa^2 - (z/c)^2 <= 0, which would make the
  /// relativistic level formula complex).
  void validate() const;

  double rest_energy() const { return m * c * c; }
};

enum class NucleusKind { PointNucleus, ExtendedUniform };

struct PotentialModel {
  NucleusKind kind = NucleusKind::PointNucleus;
  double R = 0.0;  // nucleus radius, required for ExtendedUniform

  static PotentialModel point() { return {NucleusKind::PointNucleus, 0.0}; }
  static PotentialModel extended_uniform(double radius);
};

/// Radial potential in atomic units. Point nucleus: -z/r (r > 0 required).
/// Extended uniform sphere: -z(3 - r^2/R^2)/(2R) inside, -z/r outside.
double potential(const PotentialModel& model, int z, double r);

/// Shifted bound-state energy lambda_{n_r,kappa} - mc^2 for level n_r >= 1.
/// For kappa > 0 the n_r = 1 state does not exist; requesting it throws.
double exact_eigenvalue(const PhysicalParams& params, int n_r);

/// The `count` lowest shifted energies, starting from n_r = 1 for kappa < 0
/// and n_r = 2 for kappa > 0. Strictly increasing.
std::vector<double> exact_spectrum(const PhysicalParams& params, int count);

struct CalibrationResult {
  double c;              // minimizing speed of light
  double max_rel_error;  // minimax objective at c
};

/// One-dimensional golden-section search for the speed of light minimizing
/// the maximum relative mismatch between exact_eigenvalue and the given
/// reference levels (level i is n_r = first_level + i). The objective is a
/// max of V-shaped functions, so a derivative-free bracketed search is used.
CalibrationResult calibrate_speed_of_light(const PhysicalParams& params,
                                           std::span<const double> reference,
                                           int first_level,
                                           double c_lo = 137.0359,
                                           double c_hi = 137.0361);

/// Published reference energies (a.u., shifted by -mc^2) for the
/// hydrogen-like z=118 ion: the calibration anchor for the speed of light.
namespace reference {
/// kappa = -2, levels 1..15.
std::span<const double> ununoctium_kappa_m2();
/// kappa = +2, levels 2..15 (14 values; the n_r=1 slot is absent).
std::span<const double> ununoctium_kappa_p2();
}  // namespace reference

}  // namespace dirafem

#endif
