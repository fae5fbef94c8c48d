#ifndef DIRAFEM_ANALYSIS_HPP
#define DIRAFEM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dirafem/solver.hpp"

namespace dirafem {

enum class Label { Genuine, InstilledSpurious, CoincidenceSpurious };

std::string to_string(Label label);

struct SpectrumEntry {
  double energy = 0.0;
  Label label = Label::Genuine;
  int level = 0;  // 1-based genuine level; 0 for spurious entries
  std::optional<double> exact;
  std::optional<double> rel_error;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  Method method = Method::Galerkin;
  PhysicalParams params;
  int genuine_count = 0;
  int instilled_count = 0;
  int coincidence_count = 0;
  /// Times two adjacent computed values both fell within tol_rel of one
  /// exact level. Resolved in favor of the closer one; the count is kept so
  /// callers can surface the ambiguity instead of trusting it silently.
  int matching_conflicts = 0;
};

struct ClassifyOptions {
  double tol_rel = 1e-3;   // matching tolerance against the exact spectrum
  double tol_coin = 1e-5;  // coincidence tolerance against mirrored levels
};

/// Greedy monotone matching of the computed spectrum against the exact one.
/// Matched entries become genuine levels; unmatched ones are spurious, and
/// coincidence-spurious when they replicate a mirrored-kappa level that the
/// own-kappa exact spectrum lacks. Throws std::runtime_error if two computed
/// values claim the same exact level within tolerance.
SpectrumReport classify(const BoundSpectrum& computed,
                        const std::vector<double>& exact,
                        const PhysicalParams& params,
                        const ClassifyOptions& options = {});

/// Per-genuine-level |computed - exact| / |exact|, in level order.
std::vector<double> relative_errors(const SpectrumReport& report);

struct ConvergenceStudy {
  std::vector<int> node_counts;
  // errors[level-1][k] is the relative error of `level` at node_counts[k]
  std::vector<std::vector<double>> errors;
  std::vector<double> rates;  // least-squares slope of log err vs log n
  bool low_confidence = false;  // fewer than 3 node counts
};

/// Fits per-level convergence rates from per-node-count relative errors.
ConvergenceStudy fit_convergence(const std::vector<int>& node_counts,
                                 const std::vector<std::vector<double>>& per_run_errors);

}  // namespace dirafem

#endif
