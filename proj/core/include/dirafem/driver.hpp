#ifndef DIRAFEM_DRIVER_HPP
#define DIRAFEM_DRIVER_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dirafem/analysis.hpp"
#include "dirafem/assembly.hpp"
#include "dirafem/mesh.hpp"
#include "dirafem/physics.hpp"

namespace dirafem {

enum class MethodChoice { Galerkin, Supg, Both };
enum class OutputFormat { Csv, Json, TsvPlot };

struct RunConfig {
  int z = 118;
  int kappa = -2;
  double m = 1.0;
  double c = kDefaultSpeedOfLight;
  bool calibrate = false;  // replace c by the calibrated value before running

  NucleusKind nucleus = NucleusKind::PointNucleus;
  double R = 0.0;  // nucleus radius; 0 means "derive from mass number 294"

  std::optional<double> a;  // mesh start; defaults depend on the nucleus model
  double b = 10.0;
  int n = 600;
  double epsilon = 1e-4;
  // Extended-nucleus node split across [0,R] / [R,b].
  int n_inner = 40;
  int n_outer = 560;

  MethodChoice method = MethodChoice::Both;
  int levels = 15;
  OutputFormat format = OutputFormat::Csv;
  bool deterministic = true;  // pin BLAS threading for byte-stable output

  double nucleus_radius() const;
  /// Effective mesh start: explicit `a`, else R/2 for the point nucleus
  /// (see README on the cutoff choice) and 0 for the extended one.
  double mesh_start() const;
  PhysicalParams physical_params() const;
  PotentialModel potential_model() const;
  Mesh build_mesh() const;
  /// Resolved speed of light (calibrated when requested).
  double resolved_c() const;
};

struct MethodRun {
  Method method;
  SpectrumReport report;
  BoundSpectrum bound;
  double solve_max_residual = 0.0;
};

struct SpectrumRun {
  RunConfig config;
  double c_used = 0.0;
  std::vector<double> exact;
  std::vector<MethodRun> runs;  // one per requested method
};

/// Assembles, solves, and classifies for every requested method. Galerkin
/// runs request extra states beyond `levels` so interleaved spurious values
/// are visible (levels + 4 + |coincidence slot|).
SpectrumRun run_spectrum(const RunConfig& config);

/// SUPG-only sweep over node counts; per-level relative errors and fitted
/// log-log rates. `match_tol` is the classification tolerance (coarse meshes
/// need a loose one; the stabilized spectra carry no spurious values).
ConvergenceStudy run_convergence(const RunConfig& config,
                                 const std::vector<int>& node_counts,
                                 double match_tol = 5e-2);

struct ExtendedColumn {
  int kappa;
  std::vector<double> energies;  // SUPG bound states, ascending
  int spurious_count = 0;
};

struct ExtendedReport {
  std::vector<ExtendedColumn> columns;  // kappa in {-2,2,-3,3,-4,4,-5,5}
  double c_used = 0.0;
};

/// Extended-nucleus multi-kappa report on the two-segment mesh.
ExtendedReport run_extended(const RunConfig& config);

// ---- report emission ----------------------------------------------------

/// Writes atomically (temp file + rename). All numbers carry 15 significant
/// digits so external diffs against published tables stay meaningful.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_spectrum_csv(const SpectrumRun& run);
std::string format_spectrum_json(const SpectrumRun& run);
std::string format_pollution_csv(const SpectrumRun& run);
std::string format_convergence_csv(const ConvergenceStudy& study,
                                   const std::vector<double>& exact);
std::string format_convergence_tsv(const ConvergenceStudy& study);
std::string format_convergence_json(const ConvergenceStudy& study);
std::string format_extended_csv(const ExtendedReport& report);

}  // namespace dirafem

#endif
