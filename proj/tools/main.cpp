// dirafem: relativistic bound states of hydrogen-like ions via stabilized
// finite elements. Subcommands: spectrum, convergence, pollution-report,
// extended, calibrate-c.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dirafem/driver.hpp"
#include "dirafem/solver.hpp"
#include "json.hpp"

namespace {

using dirafem::RunConfig;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void apply_json_config(const std::string& path, RunConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw CLI::FileError("cannot open config file: " + path);
  nlohmann::json j;
  is >> j;
  if (j.contains("z")) cfg.z = j["z"];
  if (j.contains("kappa")) cfg.kappa = j["kappa"];
  if (j.contains("m")) cfg.m = j["m"];
  if (j.contains("c")) {
    if (j["c"].is_string() && j["c"] == "calibrate")
      cfg.calibrate = true;
    else
      cfg.c = j["c"];
  }
  if (j.contains("nucleus")) {
    const std::string kind = j["nucleus"].value("kind", "point");
    cfg.nucleus = kind == "extended" ? dirafem::NucleusKind::ExtendedUniform
                                     : dirafem::NucleusKind::PointNucleus;
    if (j["nucleus"].contains("R")) cfg.R = j["nucleus"]["R"];
  }
  if (j.contains("mesh")) {
    const auto& m = j["mesh"];
    if (m.contains("a")) cfg.a = m["a"].get<double>();
    if (m.contains("b")) cfg.b = m["b"];
    if (m.contains("n")) cfg.n = m["n"];
    if (m.contains("epsilon")) cfg.epsilon = m["epsilon"];
    if (m.contains("n_inner")) cfg.n_inner = m["n_inner"];
    if (m.contains("n_outer")) cfg.n_outer = m["n_outer"];
  }
  if (j.contains("method")) {
    const std::string method = j["method"];
    cfg.method = method == "galerkin" ? dirafem::MethodChoice::Galerkin
                 : method == "supg"   ? dirafem::MethodChoice::Supg
                                      : dirafem::MethodChoice::Both;
  }
  if (j.contains("levels")) cfg.levels = j["levels"];
}

struct CommonFlags {
  std::string c_spec;
  std::string nucleus = "point";
  std::string method = "both";
  std::string format = "csv";
  double mesh_a = -1.0;
  std::string output;
};

void add_common(CLI::App* cmd, RunConfig& cfg, CommonFlags& flags) {
  cmd->add_option("--z", cfg.z, "charge number (1..137)");
  cmd->add_option("--kappa", cfg.kappa, "spin-orbit parameter (nonzero)");
  cmd->add_option("--mass", cfg.m, "electron mass (atomic units)");
  cmd->add_option("--c", flags.c_spec, "speed of light, or 'calibrate'");
  cmd->add_option("--nucleus", flags.nucleus, "point | extended")
      ->check(CLI::IsMember({"point", "extended"}));
  cmd->add_option("--R", cfg.R, "nucleus radius (a.u.); default from A=294");
  cmd->add_option("--a", flags.mesh_a, "mesh start (default: R/2 point, 0 extended)");
  cmd->add_option("--b", cfg.b, "mesh end (a.u.)");
  cmd->add_option("--n", cfg.n, "interior node count");
  cmd->add_option("--epsilon", cfg.epsilon, "nodes intensity parameter");
  cmd->add_option("--method", flags.method, "galerkin | supg | both")
      ->check(CLI::IsMember({"galerkin", "supg", "both"}));
  cmd->add_option("--levels", cfg.levels, "bound-state levels to report");
  cmd->add_option("--format", flags.format, "csv | json | tsv-plot")
      ->check(CLI::IsMember({"csv", "json", "tsv-plot"}));
  cmd->add_option("-o,--output", flags.output, "output file (default: stdout)");
  cmd->add_flag("!--no-deterministic", cfg.deterministic,
                "allow nondeterministic BLAS threading");
}

void finalize(RunConfig& cfg, const CommonFlags& flags) {
  if (!flags.c_spec.empty()) {
    if (flags.c_spec == "calibrate")
      cfg.calibrate = true;
    else
      cfg.c = std::stod(flags.c_spec);
  }
  cfg.nucleus = flags.nucleus == "extended" ? dirafem::NucleusKind::ExtendedUniform
                                            : dirafem::NucleusKind::PointNucleus;
  if (flags.mesh_a >= 0.0) cfg.a = flags.mesh_a;
  cfg.method = flags.method == "galerkin" ? dirafem::MethodChoice::Galerkin
               : flags.method == "supg"   ? dirafem::MethodChoice::Supg
                                          : dirafem::MethodChoice::Both;
  cfg.format = flags.format == "json"       ? dirafem::OutputFormat::Json
               : flags.format == "tsv-plot" ? dirafem::OutputFormat::TsvPlot
                                            : dirafem::OutputFormat::Csv;
  if (cfg.deterministic) {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    setenv("OMP_NUM_THREADS", "1", 0);
  }
}

void emit(const std::string& content, const std::string& output) {
  if (output.empty())
    std::cout << content;
  else
    dirafem::atomic_write(output, content);
}

std::vector<int> parse_node_counts(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic bound states of hydrogen-like ions: stabilized "
               "finite element eigenvalue computation"};
  app.require_subcommand(1);

  RunConfig cfg;
  CommonFlags flags;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override it)")
      ->expected(1);

  auto* spectrum = app.add_subcommand("spectrum", "per-method eigenvalue report");
  auto* convergence =
      app.add_subcommand("convergence", "node-count sweep with fitted rates");
  auto* pollution = app.add_subcommand(
      "pollution-report", "side-by-side Galerkin/stabilized/exact table");
  auto* extended =
      app.add_subcommand("extended", "extended-nucleus multi-kappa report");
  auto* calibrate =
      app.add_subcommand("calibrate-c", "calibrate the speed of light against "
                                        "the z=118 reference levels");

  for (CLI::App* cmd : {spectrum, convergence, pollution, extended})
    add_common(cmd, cfg, flags);

  std::string n_list = "200,400,600,800,1000";
  convergence->add_option("--n-list", n_list, "comma-separated node counts");

  std::string calib_output;
  calibrate->add_option("-o,--output", calib_output, "output file");

  // JSON config is applied between defaults and flag parsing: flags win.
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") {
      try {
        apply_json_config(argv[i + 1], cfg);
      } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << '\n';
        return kExitConfig;
      }
      break;
    }

  CLI11_PARSE(app, argc, argv);

  try {
    if (calibrate->parsed()) {
      dirafem::PhysicalParams p{1.0, dirafem::kDefaultSpeedOfLight, 118, -2};
      const auto result = dirafem::calibrate_speed_of_light(
          p, dirafem::reference::ununoctium_kappa_m2(), 1);
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "{\"c\": %.15g, \"max_rel_error\": %.6g}\n", result.c,
                    result.max_rel_error);
      emit(buf, calib_output);
      return 0;
    }

    finalize(cfg, flags);

    if (spectrum->parsed()) {
      const dirafem::SpectrumRun run = dirafem::run_spectrum(cfg);
      emit(cfg.format == dirafem::OutputFormat::Json
               ? dirafem::format_spectrum_json(run)
               : dirafem::format_spectrum_csv(run),
           flags.output);
      if (std::abs(cfg.kappa) == 1)
        std::cerr << "note: |kappa| = 1 states shed their boundary layer "
                     "slowly under pure Dirichlet conditions; expect reduced "
                     "accuracy near the domain ends\n";
    } else if (pollution->parsed()) {
      cfg.method = dirafem::MethodChoice::Both;
      const dirafem::SpectrumRun run = dirafem::run_spectrum(cfg);
      emit(cfg.format == dirafem::OutputFormat::Json
               ? dirafem::format_spectrum_json(run)
               : dirafem::format_pollution_csv(run),
           flags.output);
    } else if (convergence->parsed()) {
      const auto counts = parse_node_counts(n_list);
      const dirafem::ConvergenceStudy study = dirafem::run_convergence(cfg, counts);
      const auto exact =
          dirafem::exact_spectrum(cfg.physical_params(), cfg.levels);
      std::string content;
      switch (cfg.format) {
        case dirafem::OutputFormat::Json:
          content = dirafem::format_convergence_json(study);
          break;
        case dirafem::OutputFormat::TsvPlot:
          content = dirafem::format_convergence_tsv(study);
          break;
        default:
          content = dirafem::format_convergence_csv(study, exact);
      }
      emit(content, flags.output);
    } else if (extended->parsed()) {
      const dirafem::ExtendedReport report = dirafem::run_extended(cfg);
      emit(dirafem::format_extended_csv(report), flags.output);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << '\n';
    return kExitNumerical;
  }
  return 0;
}
