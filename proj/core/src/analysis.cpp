#include "dirafem/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "dirafem/physics.hpp"

namespace dirafem {

std::string to_string(Label label) {
  switch (label) {
    case Label::Genuine: return "genuine";
    case Label::InstilledSpurious: return "spurious:instilled";
    case Label::CoincidenceSpurious: return "spurious:coincidence";
  }
  return "?";
}

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Mirrored-kappa exact levels that the own-kappa exact spectrum lacks.
/// By the kappa^2 structure of the level formula this is the lowest state
/// of the negative-kappa sector, visible only from the positive side.
std::vector<double> mirror_only_levels(const PhysicalParams& params,
                                       std::size_t own_size) {
  PhysicalParams mirrored = params;
  mirrored.kappa = -params.kappa;
  const std::vector<double> mirror =
      exact_spectrum(mirrored, static_cast<int>(own_size) + 1);
  const std::vector<double> own =
      exact_spectrum(params, static_cast<int>(own_size) + 1);
  std::vector<double> only;
  for (double mv : mirror) {
    bool present = false;
    for (double ov : own)
      if (rel_diff(mv, ov) < 1e-9) {
        present = true;
        break;
      }
    if (!present) only.push_back(mv);
  }
  return only;
}

}  // namespace

SpectrumReport classify(const BoundSpectrum& computed,
                        const std::vector<double>& exact,
                        const PhysicalParams& params,
                        const ClassifyOptions& options) {
  if (exact.size() < computed.energies.size() + 1)
    throw std::invalid_argument("exact list must be longer than the computed one");

  const std::vector<double> mirror_only =
      mirror_only_levels(params, exact.size());

  SpectrumReport report;
  report.params = params;

  std::size_t next_exact = 0;
  for (std::size_t k = 0; k < computed.energies.size(); ++k) {
    const double value = computed.energies[k];
    SpectrumEntry entry;
    entry.energy = value;

    // Walk forward over exact levels this value may claim.
    std::size_t match = next_exact;
    while (match < exact.size() && exact[match] < value &&
           rel_diff(value, exact[match]) > options.tol_rel)
      ++match;

    bool matched = match < exact.size() &&
                   rel_diff(value, exact[match]) <= options.tol_rel;
    if (matched && k + 1 < computed.energies.size() &&
        rel_diff(computed.energies[k + 1], exact[match]) <= options.tol_rel) {
      // Two computed values claim one exact level; keep the closer one and
      // push the other out as spurious.
      ++report.matching_conflicts;
      if (rel_diff(computed.energies[k + 1], exact[match]) <
          rel_diff(value, exact[match]))
        matched = false;
    }
    if (matched) {
      entry.label = Label::Genuine;
      entry.level = static_cast<int>(match) + 1;
      entry.exact = exact[match];
      entry.rel_error = rel_diff(value, exact[match]);
      next_exact = match + 1;
      ++report.genuine_count;
    } else {
      entry.label = Label::InstilledSpurious;
      for (double mv : mirror_only)
        if (rel_diff(value, mv) <= options.tol_coin) {
          entry.label = Label::CoincidenceSpurious;
          break;
        }
      if (entry.label == Label::CoincidenceSpurious)
        ++report.coincidence_count;
      else
        ++report.instilled_count;
    }
    report.entries.push_back(entry);
  }
  return report;
}

std::vector<double> relative_errors(const SpectrumReport& report) {
  std::vector<double> errors;
  for (const SpectrumEntry& e : report.entries)
    if (e.label == Label::Genuine) errors.push_back(*e.rel_error);
  return errors;
}

ConvergenceStudy fit_convergence(const std::vector<int>& node_counts,
                                 const std::vector<std::vector<double>>& per_run_errors) {
  if (node_counts.size() != per_run_errors.size() || node_counts.empty())
    throw std::invalid_argument("one error list per node count required");
  for (std::size_t k = 1; k < node_counts.size(); ++k)
    if (node_counts[k] <= node_counts[k - 1])
      throw std::invalid_argument("node counts must be strictly increasing");

  ConvergenceStudy study;
  study.node_counts = node_counts;
  study.low_confidence = node_counts.size() < 3;

  const std::size_t levels = per_run_errors.front().size();
  study.errors.assign(levels, std::vector<double>(node_counts.size()));
  for (std::size_t k = 0; k < node_counts.size(); ++k) {
    if (per_run_errors[k].size() != levels)
      throw std::invalid_argument("inconsistent level counts across runs");
    for (std::size_t lv = 0; lv < levels; ++lv)
      study.errors[lv][k] = per_run_errors[k][lv];
  }

  for (std::size_t lv = 0; lv < levels; ++lv) {
    // least-squares slope of log err vs log n; zero-error samples are floored
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(node_counts.size());
    for (std::size_t k = 0; k < node_counts.size(); ++k) {
      const double x = std::log(static_cast<double>(node_counts[k]));
      const double y = std::log(std::max(study.errors[lv][k], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    study.rates.push_back(denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom);
  }
  return study;
}

}  // namespace dirafem
