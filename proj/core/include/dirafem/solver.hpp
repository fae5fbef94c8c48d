#ifndef DIRAFEM_SOLVER_HPP
#define DIRAFEM_SOLVER_HPP

#include <complex>
#include <vector>

#include "dirafem/assembly.hpp"

namespace dirafem {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All 2n generalized eigenvalues of a pencil, with per-pair relative
/// residuals ||(A - lambda B) y|| / (||A||_max ||y||).
struct RawSpectrum {
  std::vector<std::complex<double>> eigenvalues;  // unshifted
  std::vector<double> residuals;                  // aligned with eigenvalues
  Method method = Method::Galerkin;
  double max_residual = 0.0;
};

/// Shifted bound-state energies extracted from a raw spectrum.
struct BoundSpectrum {
  std::vector<double> energies;          // shifted by -mc^2, ascending
  std::vector<double> residuals;         // aligned with energies
  int discarded_positive_continuum = 0;
  int discarded_negative_continuum = 0;
  int discarded_complex = 0;
  int merged_duplicates = 0;
};

struct SelectionWindow {
  double delta_w = 1e-3;     // window shrink factor at the -2mc^2 end
  double delta_abs = 1e-6;   // lower cutoff in units of mc^2
  double imag_rel = 1e-6;    // |Im| <= imag_rel |Re| counts as real
  double dedupe_rel = 1e-12; // duplicates closer than this (x mc^2) merge
};

/// Dense QZ factorization (LAPACK dggev) of the full pencil. Residuals are
/// evaluated through the sparse block-tridiagonal form.
RawSpectrum solve_pencil(const Pencil& pencil);

/// Shifts real eigenvalues by -mc^2 and keeps those in the open window
/// (-2mc^2 (1 - delta_w), -delta_abs mc^2). Throws SolverError if fewer
/// than `count` survive.
BoundSpectrum select_bound_states(const RawSpectrum& raw, const PhysicalParams& params,
                                  int count, const SelectionWindow& window = {});

}  // namespace dirafem

#endif
