#include "dirafem/physics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dirafem {

double nuclear_radius_au(double mass_number) {
  if (mass_number <= 0.0) throw std::domain_error("mass number must be positive");
  const double r_fm = 1.2 * std::cbrt(mass_number);
  return r_fm * 1.0e-15 / kBohrRadiusMeters;
}

void PhysicalParams::validate() const {
  if (m <= 0.0) throw std::domain_error("electron mass must be positive");
  if (c <= 0.0) throw std::domain_error("speed of light must be positive");
  if (z < 1 || z > 137) throw std::domain_error("charge number must be in 1..137");
  if (kappa == 0) throw std::domain_error("spin-orbit parameter kappa must be nonzero");
  const double zg = static_cast<double>(z) / c;
  if (static_cast<double>(kappa) * kappa - zg * zg <= 0.0)
    throw std::domain_error("kappa^2 - (z/c)^2 must be positive");
}

PotentialModel PotentialModel::extended_uniform(double radius) {
  if (radius <= 0.0) throw std::domain_error("nucleus radius must be positive");
  return {NucleusKind::ExtendedUniform, radius};
}

double potential(const PotentialModel& model, int z, double r) {
  switch (model.kind) {
    case NucleusKind::PointNucleus:
      if (r <= 0.0) throw std::domain_error("point-nucleus potential requires r > 0");
      return -static_cast<double>(z) / r;
    case NucleusKind::ExtendedUniform:
      if (r < 0.0) throw std::domain_error("radius must be nonnegative");
      if (r <= model.R)
        return -z * (3.0 - r * r / (model.R * model.R)) / (2.0 * model.R);
      return -static_cast<double>(z) / r;
  }
  throw std::logic_error("unreachable");
}

double exact_eigenvalue(const PhysicalParams& params, int n_r) {
  params.validate();
  if (n_r < 1) throw std::domain_error("level index must be >= 1");
  if (params.kappa > 0 && n_r == 1)
    throw std::domain_error("the n_r = 1 state does not exist for positive kappa");
  const double gamma = 1.0 / params.c;
  const double zg = params.z * gamma;
  const double s = std::sqrt(static_cast<double>(params.kappa) * params.kappa - zg * zg);
  const double denom = n_r - 1 + s;
  const double mc2 = params.rest_energy();
  return mc2 / std::sqrt(1.0 + zg * zg / (denom * denom)) - mc2;
}

std::vector<double> exact_spectrum(const PhysicalParams& params, int count) {
  if (count < 1) throw std::domain_error("count must be >= 1");
  std::vector<double> out;
  out.reserve(count);
  const int first = params.kappa > 0 ? 2 : 1;
  for (int k = 0; k < count; ++k) out.push_back(exact_eigenvalue(params, first + k));
  return out;
}

CalibrationResult calibrate_speed_of_light(const PhysicalParams& params,
                                           std::span<const double> reference,
                                           int first_level, double c_lo, double c_hi) {
  if (reference.empty()) throw std::domain_error("calibration needs reference values");
  auto objective = [&](double c) {
    PhysicalParams p = params;
    p.c = c;
    double worst = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
      const double model = exact_eigenvalue(p, first_level + static_cast<int>(i));
      worst = std::max(worst, std::abs(model - reference[i]) / std::abs(reference[i]));
    }
    return worst;
  };
  // Golden-section: the objective is a max of V-shaped branches, so smooth
  // minimizers can stall on the kinks.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = c_lo, b = c_hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = objective(x2);
    }
  }
  const double c = 0.5 * (a + b);
  return {c, objective(c)};
}

namespace reference {

namespace {
constexpr std::array<double, 15> kUuoKappaM2 = {
    -1829.630750908, -826.7683539069, -463.1183252634, -294.4509801141,
    -203.2419549027, -148.5534402360, -113.2479180697, -89.15794547564,
    -71.99846504808, -59.34862423729,  -49.75800915710, -42.31511730902,
    -36.42398370073, -31.68173025393,  -27.80813459180};

constexpr std::array<double, 14> kUuoKappaP2 = {
    -826.7683539068, -463.1183252633, -294.4509801141, -203.2419549026,
    -148.5534402360, -113.2479180697, -89.15794547563, -71.99846504808,
    -59.34862423728, -49.75800915710, -42.31511730902, -36.42398370072,
    -31.68173025392, -27.80813459179};
}  // namespace

std::span<const double> ununoctium_kappa_m2() { return kUuoKappaM2; }
std::span<const double> ununoctium_kappa_p2() { return kUuoKappaP2; }

}  // namespace reference

}  // namespace dirafem
