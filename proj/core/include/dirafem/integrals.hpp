#ifndef DIRAFEM_INTEGRALS_HPP
#define DIRAFEM_INTEGRALS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "dirafem/mesh.hpp"
#include "dirafem/tridiag.hpp"

namespace dirafem {

enum class Weight { Identity, Potential };

/// Element-integral family [a_ij]_{rho sigma nu}^q: entry (i, j) is
///   int phi_j^(sigma) phi_i^(rho) r^(-nu) q(r) dr
/// over the mesh domain, restricted to interior test/trial indices.
struct IntegralSpec {
  int rho = 0;    // test-derivative order, 0 or 1
  int sigma = 0;  // trial-derivative order, 0 or 1
  int nu = 0;     // inverse-radius power, 0 or 1
  Weight weight = Weight::Identity;

  void validate() const;
};

/// Piecewise-linear hat basis value; 0 outside the support.
double hat_value(const Mesh& mesh, int j, double r);

/// Hat slope, +-1/h on the two support elements (left-limit at nodes).
double hat_derivative(const Mesh& mesh, int j, double r);

/// Assembles one integral family as a tridiagonal matrix over the n interior
/// nodes. Polynomial integrands use closed forms; 1/r-weighted ones use the
/// per-element polynomial + logarithm formulas; potential-weighted integrands
/// need `potential_fn`, evaluated by 16-point Gauss-Legendre per element with
/// an element split at `breakpoint` if it falls strictly inside one.
TriDiag assemble_integral(const Mesh& mesh, const IntegralSpec& spec,
                          const std::function<double(double)>* potential_fn = nullptr,
                          std::optional<double> breakpoint = std::nullopt);

/// Convenience for the point-Coulomb weight -z/r, which reduces to the
/// analytic nu+1 family scaled by -z (no quadrature involved).
TriDiag assemble_point_coulomb(const Mesh& mesh, int rho, int sigma, int z);

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre polynomial roots.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

}  // namespace dirafem

#endif
