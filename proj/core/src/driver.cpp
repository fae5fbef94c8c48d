#include "dirafem/driver.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dirafem/solver.hpp"
#include "json.hpp"

namespace dirafem {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

double RunConfig::nucleus_radius() const {
  return R > 0.0 ? R : nuclear_radius_au(294.0);
}

double RunConfig::mesh_start() const {
  if (a) return *a;
  return nucleus == NucleusKind::PointNucleus ? 0.5 * nucleus_radius() : 0.0;
}

double RunConfig::resolved_c() const {
  if (!calibrate) return c;
  // The anchor table is the kappa = -2 spectrum; only c is being refined.
  PhysicalParams p{m, c, 118, -2};
  return calibrate_speed_of_light(p, reference::ununoctium_kappa_m2(), 1).c;
}

PhysicalParams RunConfig::physical_params() const {
  return {m, resolved_c(), z, kappa};
}

PotentialModel RunConfig::potential_model() const {
  if (nucleus == NucleusKind::PointNucleus) return PotentialModel::point();
  return PotentialModel::extended_uniform(nucleus_radius());
}

Mesh RunConfig::build_mesh() const {
  if (nucleus == NucleusKind::ExtendedUniform)
    return generate_two_segment(nucleus_radius(), b, n_inner, n_outer, epsilon);
  return generate_exponential({mesh_start(), b, n, epsilon});
}

namespace {

MethodRun solve_and_classify(const Mesh& mesh, const PhysicalParams& params,
                             const PotentialModel& model, Method method,
                             const std::vector<double>& exact, int count,
                             const ClassifyOptions& options = {}) {
  const Pencil pencil = method == Method::Galerkin
                            ? assemble_galerkin(mesh, params, model)
                            : assemble_supg(mesh, params, model);
  const RawSpectrum raw = solve_pencil(pencil);
  MethodRun run;
  run.method = method;
  run.bound = select_bound_states(raw, params, count);
  run.solve_max_residual = raw.max_residual;
  run.report = classify(run.bound, exact, params, options);
  run.report.method = method;
  return run;
}

}  // namespace

SpectrumRun run_spectrum(const RunConfig& config) {
  const PhysicalParams params = config.physical_params();
  params.validate();
  const PotentialModel model = config.potential_model();
  const Mesh mesh = config.build_mesh();

  SpectrumRun out;
  out.config = config;
  out.c_used = params.c;
  // Galerkin interleaves up to 4 instilled values among the first 15 genuine
  // levels, plus one coincidence slot for kappa > 0.
  const int galerkin_count = config.levels + 4 + (config.kappa > 0 ? 1 : 0);
  const int exact_count = galerkin_count + 2;
  out.exact = exact_spectrum(params, exact_count);

  if (config.method != MethodChoice::Supg)
    out.runs.push_back(solve_and_classify(mesh, params, model, Method::Galerkin,
                                          out.exact, galerkin_count));
  if (config.method != MethodChoice::Galerkin)
    out.runs.push_back(solve_and_classify(mesh, params, model, Method::Supg,
                                          out.exact, config.levels));
  return out;
}

ConvergenceStudy run_convergence(const RunConfig& config,
                                 const std::vector<int>& node_counts,
                                 double match_tol) {
  if (node_counts.size() < 2)
    throw std::invalid_argument("convergence study needs at least 2 node counts");
  const PhysicalParams params = config.physical_params();
  params.validate();
  const PotentialModel model = config.potential_model();
  const std::vector<double> exact = exact_spectrum(params, config.levels + 2);

  std::vector<std::vector<double>> per_run;
  for (int n : node_counts) {
    RunConfig cfg = config;
    cfg.n = n;
    const Mesh mesh = cfg.build_mesh();
    ClassifyOptions options;
    options.tol_rel = match_tol;
    const MethodRun run = solve_and_classify(mesh, params, model, Method::Supg,
                                             exact, config.levels, options);
    std::vector<double> errors = relative_errors(run.report);
    if (static_cast<int>(errors.size()) != config.levels)
      throw SolverError("convergence run at n=" + std::to_string(n) +
                        " did not resolve all requested levels");
    per_run.push_back(std::move(errors));
  }
  return fit_convergence(node_counts, per_run);
}

ExtendedReport run_extended(const RunConfig& config) {
  RunConfig cfg = config;
  cfg.nucleus = NucleusKind::ExtendedUniform;
  const PotentialModel model = cfg.potential_model();
  const Mesh mesh = cfg.build_mesh();

  ExtendedReport report;
  report.c_used = cfg.resolved_c();
  for (int kappa : {-2, 2, -3, 3, -4, 4, -5, 5}) {
    PhysicalParams params{cfg.m, report.c_used, cfg.z, kappa};
    params.validate();
    const std::vector<double> exact = exact_spectrum(params, cfg.levels + 2);
    const MethodRun run = solve_and_classify(mesh, params, model, Method::Supg,
                                             exact, cfg.levels);
    ExtendedColumn col;
    col.kappa = kappa;
    col.energies = run.bound.energies;
    col.spurious_count =
        run.report.instilled_count + run.report.coincidence_count;
    report.columns.push_back(std::move(col));
  }
  return report;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

namespace {

const MethodRun* find_run(const SpectrumRun& run, Method method) {
  for (const MethodRun& r : run.runs)
    if (r.method == method) return &r;
  return nullptr;
}

}  // namespace

std::string format_spectrum_csv(const SpectrumRun& run) {
  std::ostringstream os;
  os << "method,level,energy,label,exact,rel_error\n";
  for (const MethodRun& r : run.runs) {
    const char* name = r.method == Method::Galerkin ? "galerkin" : "supg";
    for (const SpectrumEntry& e : r.report.entries) {
      os << name << ',';
      if (e.level > 0) os << e.level;
      os << ',' << fmt(e.energy) << ',' << to_string(e.label) << ',';
      if (e.exact) os << fmt(*e.exact);
      os << ',';
      if (e.rel_error) os << fmt(*e.rel_error);
      os << '\n';
    }
  }
  return os.str();
}

std::string format_pollution_csv(const SpectrumRun& run) {
  const MethodRun* galerkin = find_run(run, Method::Galerkin);
  const MethodRun* supg = find_run(run, Method::Supg);
  if (galerkin == nullptr || supg == nullptr)
    throw std::invalid_argument("pollution report needs both methods");

  std::ostringstream os;
  os << "level,usual_fem,stabilized_fem,exact,label_usual,label_stab,rel_err_stab\n";
  for (const SpectrumEntry& e : galerkin->report.entries) {
    if (e.label == Label::Genuine) {
      os << e.level << ',' << fmt(e.energy) << ',';
      const SpectrumEntry* stab = nullptr;
      for (const SpectrumEntry& s : supg->report.entries)
        if (s.label == Label::Genuine && s.level == e.level) stab = &s;
      if (stab) os << fmt(stab->energy);
      os << ',' << fmt(*e.exact) << ",genuine,";
      if (stab) os << "genuine";
      os << ',';
      if (stab) os << fmt(*stab->rel_error);
      os << '\n';
    } else {
      os << ',' << fmt(e.energy) << ",,," << to_string(e.label) << ",,\n";
    }
  }
  return os.str();
}

std::string format_spectrum_json(const SpectrumRun& run) {
  nlohmann::ordered_json j;
  j["config"] = {{"z", run.config.z},
                 {"kappa", run.config.kappa},
                 {"m", run.config.m},
                 {"c", run.c_used},
                 {"nucleus", run.config.nucleus == NucleusKind::PointNucleus
                                 ? "point"
                                 : "extended"},
                 {"a", run.config.mesh_start()},
                 {"b", run.config.b},
                 {"n", run.config.n},
                 {"epsilon", run.config.epsilon},
                 {"levels", run.config.levels}};
  j["exact"] = run.exact;
  j["runs"] = nlohmann::ordered_json::array();
  for (const MethodRun& r : run.runs) {
    nlohmann::ordered_json jr;
    jr["method"] = r.method == Method::Galerkin ? "galerkin" : "supg";
    jr["entries"] = nlohmann::ordered_json::array();
    for (const SpectrumEntry& e : r.report.entries) {
      nlohmann::ordered_json je;
      je["energy"] = e.energy;
      je["label"] = to_string(e.label);
      if (e.level > 0) je["level"] = e.level;
      if (e.exact) je["exact"] = *e.exact;
      if (e.rel_error) je["rel_error"] = *e.rel_error;
      jr["entries"].push_back(je);
    }
    jr["diagnostics"] = {
        {"genuine", r.report.genuine_count},
        {"instilled_spurious", r.report.instilled_count},
        {"coincidence_spurious", r.report.coincidence_count},
        {"matching_conflicts", r.report.matching_conflicts},
        {"max_residual", r.solve_max_residual},
        {"discarded_complex", r.bound.discarded_complex},
        {"discarded_positive_continuum", r.bound.discarded_positive_continuum},
        {"discarded_negative_continuum", r.bound.discarded_negative_continuum}};
    j["runs"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

std::string format_convergence_csv(const ConvergenceStudy& study,
                                   const std::vector<double>& exact) {
  std::ostringstream os;
  os << "level";
  for (int n : study.node_counts) os << ",n=" << n;
  os << ",exact,rate";
  if (study.low_confidence) os << " (low-confidence)";
  os << '\n';
  for (std::size_t lv = 0; lv < study.errors.size(); ++lv) {
    os << (lv + 1);
    for (std::size_t k = 0; k < study.node_counts.size(); ++k)
      os << ',' << fmt(study.errors[lv][k]);
    os << ',' << (lv < exact.size() ? fmt(exact[lv]) : "") << ','
       << fmt(study.rates[lv]) << '\n';
  }
  return os.str();
}

std::string format_convergence_tsv(const ConvergenceStudy& study) {
  std::ostringstream os;
  os << "n\tlevel\trel_error\n";
  for (std::size_t k = 0; k < study.node_counts.size(); ++k)
    for (std::size_t lv = 0; lv < study.errors.size(); ++lv)
      os << study.node_counts[k] << '\t' << (lv + 1) << '\t'
         << fmt(study.errors[lv][k]) << '\n';
  return os.str();
}

std::string format_convergence_json(const ConvergenceStudy& study) {
  nlohmann::ordered_json j;
  j["node_counts"] = study.node_counts;
  j["rates"] = study.rates;
  j["low_confidence"] = study.low_confidence;
  j["errors"] = study.errors;
  return j.dump(2) + "\n";
}

std::string format_extended_csv(const ExtendedReport& report) {
  std::ostringstream os;
  os << "level";
  for (const ExtendedColumn& col : report.columns)
    os << ",kappa=" << col.kappa;
  os << '\n';
  std::size_t rows = 0;
  for (std::size_t k = 0; k < report.columns.size(); ++k)
    rows = std::max(rows, report.columns[k].energies.size() + k);
  for (std::size_t row = 0; row < rows; ++row) {
    os << (row + 1);
    for (std::size_t k = 0; k < report.columns.size(); ++k) {
      os << ',';
      // column k starts at row k, mirroring the staircase of first levels
      if (row >= k && row - k < report.columns[k].energies.size())
        os << fmt(report.columns[k].energies[row - k]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dirafem
