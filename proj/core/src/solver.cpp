#include "dirafem/solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dirafem {

RawSpectrum solve_pencil(const Pencil& pencil) {
  const int dim = pencil.size();
  std::vector<double> a = pencil.left.to_dense();   // overwritten by dggev
  std::vector<double> b = pencil.right.to_dense();
  std::vector<double> alphar(dim), alphai(dim), beta(dim);
  std::vector<double> vr(static_cast<std::size_t>(dim) * dim);

  const lapack_int info = LAPACKE_dggev(
      LAPACK_COL_MAJOR, 'N', 'V', dim, a.data(), dim, b.data(), dim,
      alphar.data(), alphai.data(), beta.data(), nullptr, 1, vr.data(), dim);
  if (info != 0)
    throw SolverError("generalized eigensolver failed, info=" + std::to_string(info));

  const double norm_a = pencil.left.max_abs();

  RawSpectrum raw;
  raw.method = pencil.method;
  raw.eigenvalues.resize(static_cast<std::size_t>(dim));
  raw.residuals.assign(static_cast<std::size_t>(dim), 0.0);

  std::vector<double> ax(dim), bx(dim), ay(dim), by(dim);
  for (int j = 0; j < dim; ++j) {
    if (beta[j] == 0.0) {
      raw.eigenvalues[j] = {std::numeric_limits<double>::infinity(), 0.0};
      raw.residuals[j] = std::numeric_limits<double>::infinity();
      continue;
    }
    const std::complex<double> lambda(alphar[j] / beta[j], alphai[j] / beta[j]);
    raw.eigenvalues[j] = lambda;

    // Eigenvector: real column, or (col j) +- i (col j+1) for a conjugate pair.
    const double* xr = vr.data() + static_cast<std::size_t>(j) * dim;
    const double* xi = nullptr;
    double isign = 0.0;
    if (alphai[j] > 0.0) {
      xi = vr.data() + static_cast<std::size_t>(j + 1) * dim;
      isign = 1.0;
    } else if (alphai[j] < 0.0) {
      // second member of a conjugate pair: x = re - i im, columns j-1, j
      xr = vr.data() + static_cast<std::size_t>(j - 1) * dim;
      xi = vr.data() + static_cast<std::size_t>(j) * dim;
      isign = -1.0;
    }

    std::fill(ax.begin(), ax.end(), 0.0);
    std::fill(bx.begin(), bx.end(), 0.0);
    pencil.left.apply(xr, ax.data());
    pencil.right.apply(xr, bx.data());
    double ynorm2 = std::inner_product(xr, xr + dim, xr, 0.0);
    std::vector<double> res_re(dim), res_im(dim, 0.0);
    if (xi == nullptr) {
      for (int i = 0; i < dim; ++i) res_re[i] = ax[i] - lambda.real() * bx[i];
    } else {
      std::fill(ay.begin(), ay.end(), 0.0);
      std::fill(by.begin(), by.end(), 0.0);
      pencil.left.apply(xi, ay.data());
      pencil.right.apply(xi, by.data());
      ynorm2 += std::inner_product(xi, xi + dim, xi, 0.0);
      const double lr = lambda.real(), li = lambda.imag();
      for (int i = 0; i < dim; ++i) {
        // (A - lambda B)(xr + isign i xi)
        res_re[i] = ax[i] - lr * bx[i] + isign * li * by[i];
        res_im[i] = isign * (ay[i] - lr * by[i]) - li * bx[i];
      }
    }
    const double rnorm = std::sqrt(std::inner_product(res_re.begin(), res_re.end(),
                                                      res_re.begin(), 0.0) +
                                   std::inner_product(res_im.begin(), res_im.end(),
                                                      res_im.begin(), 0.0));
    raw.residuals[j] = rnorm / (norm_a * std::sqrt(ynorm2));
  }
  raw.max_residual = 0.0;
  for (double r : raw.residuals)
    if (std::isfinite(r)) raw.max_residual = std::max(raw.max_residual, r);
  return raw;
}

BoundSpectrum select_bound_states(const RawSpectrum& raw, const PhysicalParams& params,
                                  int count, const SelectionWindow& window) {
  const double mc2 = params.rest_energy();
  const double lo = -2.0 * mc2 * (1.0 - window.delta_w);
  const double hi = -window.delta_abs * mc2;

  struct Entry {
    double energy;
    double residual;
  };
  std::vector<Entry> kept;
  BoundSpectrum out;
  for (std::size_t j = 0; j < raw.eigenvalues.size(); ++j) {
    const std::complex<double> v = raw.eigenvalues[j];
    if (!std::isfinite(v.real())) continue;
    if (std::abs(v.imag()) > window.imag_rel * std::abs(v.real())) {
      ++out.discarded_complex;
      continue;
    }
    const double shifted = v.real() - mc2;
    if (shifted <= lo) {
      ++out.discarded_negative_continuum;
      continue;
    }
    if (shifted >= hi) {
      ++out.discarded_positive_continuum;
      continue;
    }
    kept.push_back({shifted, raw.residuals[j]});
  }
  std::sort(kept.begin(), kept.end(),
            [](const Entry& a, const Entry& b) { return a.energy < b.energy; });

  for (const Entry& e : kept) {
    if (!out.energies.empty() &&
        std::abs(e.energy - out.energies.back()) < window.dedupe_rel * mc2) {
      ++out.merged_duplicates;
      continue;
    }
    out.energies.push_back(e.energy);
    out.residuals.push_back(e.residual);
  }
  if (static_cast<int>(out.energies.size()) < count)
    throw SolverError("only " + std::to_string(out.energies.size()) +
                      " bound states in the window, needed " + std::to_string(count));
  out.energies.resize(static_cast<std::size_t>(count));
  out.residuals.resize(static_cast<std::size_t>(count));
  return out;
}

}  // namespace dirafem
