#ifndef DIRAFEM_ASSEMBLY_HPP
#define DIRAFEM_ASSEMBLY_HPP

#include <iosfwd>
#include <string>

#include "dirafem/integrals.hpp"
#include "dirafem/mesh.hpp"
#include "dirafem/physics.hpp"
#include "dirafem/tridiag.hpp"

namespace dirafem {

enum class Method { Galerkin, Supg };

/// 2n x 2n block matrix with tridiagonal n x n blocks. Rows/cols 1..n are
/// the large-component (f) coefficients, n+1..2n the small-component (g)
/// coefficients.
struct BlockTriDiag {
  TriDiag b11, b12, b21, b22;

  int block_size() const { return b11.size(); }
  int size() const { return 2 * b11.size(); }

  double entry(int i, int j) const;  // 1-based over the full 2n x 2n matrix

  /// y += M x over the full dimension 2n.
  void apply(const double* x, double* y) const;

  /// Column-major dense copy (LAPACK layout), size 2n * 2n.
  std::vector<double> to_dense() const;

  /// Max-norm estimate (largest absolute entry).
  double max_abs() const;
};

struct Pencil {
  BlockTriDiag left;   // A (Galerkin) or the stabilized operator
  BlockTriDiag right;  // B
  Method method = Method::Galerkin;
  PhysicalParams params;

  int size() const { return left.size(); }
};

/// Galerkin pencil: A blocks mc^2 [a]_000 + [a]^V_000 on the diagonal,
/// -+c [a]_010 + c kappa [a]_001 off-diagonal; B block-diagonal mass.
/// Boundary nodes are excluded (homogeneous Dirichlet).
Pencil assemble_galerkin(const Mesh& mesh, const PhysicalParams& params,
                         const PotentialModel& potential);

/// Streamline-upwind pencil: adds the tau-scaled diffusion and coupling
/// families. tau multiplies the test perturbation, so every tau-bearing
/// matrix is scaled row-wise by tau_i = (h_{i+1} - h_i)/3. `tau_scale`
/// multiplies every tau uniformly (1 is the derived value; 0 degenerates
/// to the Galerkin pencil).
Pencil assemble_supg(const Mesh& mesh, const PhysicalParams& params,
                     const PotentialModel& potential, double tau_scale = 1.0);

/// Debug dump as (row, col, value) CSV triplets for cross-implementation
/// diffing; emits both matrices, tagged in a leading column.
void dump_pencil_csv(const Pencil& pencil, std::ostream& os);

}  // namespace dirafem

#endif
