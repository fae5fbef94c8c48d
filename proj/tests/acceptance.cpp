// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
//
// The published reference values are inlined here, independent of the copies
// the library carries, so the checks do not trust the code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "dirafem/analysis.hpp"
#include "dirafem/driver.hpp"
#include "dirafem/solver.hpp"
#include "test_helpers.hpp"

using namespace dirafem;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Exact-solution columns for the z=118 ion (point nucleus).
const std::vector<double> kExactM2 = {
    -1829.630750908, -826.7683539069, -463.1183252634, -294.4509801141,
    -203.2419549027, -148.5534402360, -113.2479180697, -89.15794547564,
    -71.99846504808, -59.34862423729, -49.75800915710, -42.31511730902,
    -36.42398370073, -31.68173025393, -27.80813459180};
const std::vector<double> kExactP2 = {
    -826.7683539068, -463.1183252633, -294.4509801141, -203.2419549026,
    -148.5534402360, -113.2479180697, -89.15794547563, -71.99846504808,
    -59.34862423728, -49.75800915710, -42.31511730902, -36.42398370072,
    -31.68173025392, -27.80813459179};
// Interleaved (instilled) spurious values of the plain formulation.
const std::vector<double> kGrayM2 = {-294.6216782193, -113.4611501523,
                                     -59.57649074983, -36.65876644972};
// Published per-level relative errors of the stabilized scheme at n = 600.
const std::vector<double> kFemRelErr = {
    0.0000000398, 0.0000002674, 0.0000009343, 0.0000023894, 0.0000050927,
    0.0000096134, 0.0000166316, 0.0000269384, 0.0000414386, 0.0000611511,
    0.0000872118, 0.0001208752, 0.0001635167, 0.0002166349, 0.0002818538};

RunConfig reference_config(int kappa) {
  RunConfig cfg;
  cfg.kappa = kappa;
  cfg.calibrate = true;
  return cfg;  // z=118, point nucleus, a=R/2, b=10, n=600, eps=1e-4, 15 levels
}

const MethodRun* method_run(const SpectrumRun& run, Method m) {
  for (const MethodRun& r : run.runs)
    if (r.method == m) return &r;
  return nullptr;
}

}  // namespace

int main() {
  std::printf("reference configuration: z=118, point nucleus, n=600, "
              "epsilon=1e-4\n");

  // ---- 1: exact-formula oracle ------------------------------------------
  {
    PhysicalParams fixed{1.0, kDefaultSpeedOfLight, 118, -2};
    const double c_cal =
        calibrate_speed_of_light(fixed, kExactM2, 1).c;
    PhysicalParams cal{1.0, c_cal, 118, -2};
    double worst_cal = 0.0, worst_fixed = 0.0;
    for (int k = 0; k < 15; ++k) {
      worst_cal = std::max(worst_cal, rel(exact_eigenvalue(cal, k + 1), kExactM2[k]));
      worst_fixed =
          std::max(worst_fixed, rel(exact_eigenvalue(fixed, k + 1), kExactM2[k]));
    }
    PhysicalParams cal_p = cal;
    cal_p.kappa = 2;
    for (int k = 0; k < 14; ++k)
      worst_cal = std::max(worst_cal, rel(exact_eigenvalue(cal_p, k + 2), kExactP2[k]));
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "calibrated c=%.12g, worst rel err %.3g (fixed c: %.3g)", c_cal,
                  worst_cal, worst_fixed);
    report(1, "analytic levels reproduce the published tables",
           worst_cal <= 1e-10 && worst_fixed <= 5e-7, detail);
  }

  // Shared reference runs (both formulations, kappa = -2 and +2).
  const SpectrumRun run_m2 = run_spectrum(reference_config(-2));
  const SpectrumRun run_p2 = run_spectrum(reference_config(2));
  const MethodRun* gal_m2 = method_run(run_m2, Method::Galerkin);
  const MethodRun* sup_m2 = method_run(run_m2, Method::Supg);
  const MethodRun* gal_p2 = method_run(run_p2, Method::Galerkin);
  const MethodRun* sup_p2 = method_run(run_p2, Method::Supg);

  // ---- 2: stabilized accuracy at n = 600 --------------------------------
  {
    const auto errors = relative_errors(sup_m2->report);
    bool ok = errors.size() == 15;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; ok && k < errors.size(); ++k) {
      worst_ratio = std::max(worst_ratio, errors[k] / kFemRelErr[k]);
      if (errors[k] > 2.0 * kFemRelErr[k]) ok = false;
      // regression property: the error profile grows with the level
      if (k > 0 && errors[k] < errors[k - 1]) ok = false;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "worst error / published = %.3g (ceiling 2.0)", worst_ratio);
    report(2, "stabilized per-level errors within twice the published ones", ok,
           detail);
  }

  // ---- 3: stabilized spectra carry no spurious labels --------------------
  {
    const bool ok = sup_m2->report.instilled_count == 0 &&
                    sup_m2->report.coincidence_count == 0 &&
                    sup_m2->report.genuine_count == 15 &&
                    sup_p2->report.instilled_count == 0 &&
                    sup_p2->report.coincidence_count == 0 &&
                    sup_p2->report.genuine_count == 15;
    report(3, "stabilized spectra are pollution-free for kappa = -2 and +2", ok);
  }

  // ---- 4: plain formulation shows the published pollution ----------------
  {
    bool ok = gal_m2->report.instilled_count == 4;
    std::size_t next_gray = 0;
    for (const SpectrumEntry& e : gal_m2->report.entries)
      if (e.label == Label::InstilledSpurious) {
        if (next_gray >= kGrayM2.size() || rel(e.energy, kGrayM2[next_gray]) > 1e-2)
          ok = false;
        ++next_gray;
      }
    bool coincidence_ok = false;
    for (const SpectrumEntry& e : gal_p2->report.entries)
      if (e.label == Label::CoincidenceSpurious &&
          rel(e.energy, -1829.630750908) <= 1e-6)
        coincidence_ok = true;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "instilled: %d/4 matched; coincidence found: %s",
                  gal_m2->report.instilled_count, coincidence_ok ? "yes" : "no");
    report(4, "plain formulation reproduces the published spurious values",
           ok && coincidence_ok, detail);
  }

  // ---- 5: convergence under mesh refinement ------------------------------
  {
    RunConfig cfg = reference_config(-2);
    cfg.levels = 5;
    const std::vector<int> counts = {200, 400, 600, 800, 1000};
    const ConvergenceStudy study = run_convergence(cfg, counts);
    bool ok = true;
    const auto& level1 = study.errors[0];
    for (std::size_t k = 1; k < level1.size(); ++k)
      if (level1[k] >= level1[k - 1]) ok = false;
    if (level1.back() > 2e-8) ok = false;
    for (double rate : study.rates)
      if (!(rate < 0.0) || std::abs(rate) < 1.5) ok = false;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "level-1 error at n=1000: %.3g, level-1 rate %.2f",
                  level1.back(), study.rates[0]);
    report(5, "level errors decrease monotonically with fitted rates", ok, detail);
  }

  // ---- 6: degeneration on a uniform mesh ---------------------------------
  {
    // dyadic start and spacing keep every node exact, so the element sizes
    // (and with them the stability parameters) are identical to the last bit
    const int n = 383;
    const double a = 0.09375, h = 1.0 / 64.0;
    std::vector<double> nodes(n + 2);
    for (int i = 0; i <= n + 1; ++i) nodes[i] = a + i * h;
    Mesh mesh(std::move(nodes));
    PhysicalParams params{1.0, kDefaultSpeedOfLight, 118, -2};
    const Pencil plain = assemble_galerkin(mesh, params, PotentialModel::point());
    const Pencil stab = assemble_supg(mesh, params, PotentialModel::point());
    const double scale = std::max(plain.left.max_abs(), plain.right.max_abs());
    double worst = 0.0;
    for (int i = 1; i <= plain.size(); ++i)
      for (int j = 1; j <= plain.size(); ++j) {
        worst = std::max(worst,
                         std::abs(stab.left.entry(i, j) - plain.left.entry(i, j)));
        worst = std::max(
            worst, std::abs(stab.right.entry(i, j) - plain.right.entry(i, j)));
      }
    bool ok = worst <= 1e-14 * scale;
    const RawSpectrum rp = solve_pencil(plain);
    const RawSpectrum rs = solve_pencil(stab);
    std::vector<double> ep, es;
    for (const auto& v : rp.eigenvalues)
      if (std::isfinite(v.real())) ep.push_back(v.real());
    for (const auto& v : rs.eigenvalues)
      if (std::isfinite(v.real())) es.push_back(v.real());
    std::sort(ep.begin(), ep.end());
    std::sort(es.begin(), es.end());
    double worst_ev = 0.0;
    if (ep.size() != es.size()) ok = false;
    for (std::size_t k = 0; ok && k < ep.size(); ++k)
      worst_ev = std::max(worst_ev, rel(es[k], ep[k]));
    if (worst_ev > 1e-10) ok = false;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "entry gap %.3g x scale, spectrum gap %.3g", worst / scale,
                  worst_ev);
    report(6, "uniform mesh degenerates the stabilized pencil to the plain one",
           ok, detail);
  }

  // ---- 7: closed-form element integrals vs independent quadrature --------
  {
    std::mt19937 rng(1234);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      Mesh mesh(testutil::random_exponential_nodes(rng, 6 + trial % 12));
      const int n = mesh.interior_count();
      for (IntegralSpec spec : {IntegralSpec{0, 0, 0}, IntegralSpec{1, 0, 0},
                                IntegralSpec{0, 1, 0}, IntegralSpec{1, 1, 0}}) {
        TriDiag t = assemble_integral(mesh, spec);
        double scale = 0.0;
        for (int i = 1; i <= n; ++i)
          for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j)
            scale = std::max(scale, std::abs(t(i, j)));
        for (int i = 1; i <= n; ++i)
          for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j) {
            auto f = [&](double r) {
              const double ti = spec.rho == 0 ? hat_value(mesh, i, r)
                                              : hat_derivative(mesh, i, r);
              const double tj = spec.sigma == 0 ? hat_value(mesh, j, r)
                                                : hat_derivative(mesh, j, r);
              return ti * tj;
            };
            const double want = testutil::gauss32_mesh(f, mesh.nodes());
            worst = std::max(worst, std::abs(t(i, j) - want) / scale);
            if (std::abs(t(i, j) - want) > 1e-12 * scale) ok = false;
          }
      }
      // interior row sums of the second-derivative family vanish
      TriDiag a110 = assemble_integral(mesh, {1, 1, 0});
      for (int i = 2; i <= n - 1; ++i)
        if (std::abs(a110.row_sum(i)) > 1e-12 * std::abs(a110(i, i))) ok = false;
      // transposed-derivative family is the negation of the direct one
      TriDiag a100 = assemble_integral(mesh, {1, 0, 0});
      TriDiag a010 = assemble_integral(mesh, {0, 1, 0});
      for (int i = 1; i <= n; ++i)
        for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j)
          if (std::abs(a010(i, j) + a100(i, j)) > 1e-14) ok = false;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "worst quadrature gap %.3g", worst);
    report(7, "closed-form element integrals match 32-point quadrature", ok,
           detail);
  }

  // ---- 8: extended nucleus, all kappa channels ---------------------------
  {
    RunConfig cfg = reference_config(-2);
    cfg.nucleus = NucleusKind::ExtendedUniform;
    const ExtendedReport ext = run_extended(cfg);
    bool ok = ext.columns.size() == 8;
    double ground = 0.0;
    for (const ExtendedColumn& col : ext.columns) {
      if (col.spurious_count != 0) ok = false;
      if (col.kappa == -2) {
        ground = col.energies.front();
        if (rel(ground, -1829.6307) > 1e-3) ok = false;
      }
      if (col.kappa == -3 && rel(col.energies.front(), -790.18014) > 1e-3)
        ok = false;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "kappa=-2 ground state %.10g (target -1829.6307)", ground);
    report(8, "extended nucleus: pollution-free channels near the published "
              "ground state",
           ok, detail);
  }

  // ---- 9: eigensolver residual and reality contract ----------------------
  {
    bool ok = true;
    double worst_res = 0.0;
    for (const MethodRun* r : {gal_m2, sup_m2, gal_p2, sup_p2})
      for (double res : r->bound.residuals) {
        worst_res = std::max(worst_res, res);
        if (res > 1e-8) ok = false;
      }
    // the plain pencil must have an (almost) real spectrum
    RunConfig cfg = reference_config(-2);
    const PhysicalParams params = cfg.physical_params();
    const Pencil plain =
        assemble_galerkin(cfg.build_mesh(), params, cfg.potential_model());
    const RawSpectrum raw = solve_pencil(plain);
    double worst_imag = 0.0;
    for (const auto& v : raw.eigenvalues)
      if (std::isfinite(v.real())) worst_imag = std::max(worst_imag, std::abs(v.imag()));
    if (worst_imag > 1e-8 * params.rest_energy()) ok = false;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "worst residual %.3g, worst |Im|/mc^2 %.3g", worst_res,
                  worst_imag / params.rest_energy());
    report(9, "reported eigenpairs satisfy the residual and reality bounds", ok,
           detail);
  }

  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
