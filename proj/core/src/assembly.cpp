#include "dirafem/assembly.hpp"

#include <cmath>
#include <ostream>

namespace dirafem {

double BlockTriDiag::entry(int i, int j) const {
  const int n = block_size();
  const bool ilo = i <= n, jlo = j <= n;
  const int bi = ilo ? i : i - n;
  const int bj = jlo ? j : j - n;
  if (std::abs(bi - bj) > 1) return 0.0;
  if (ilo && jlo) return b11(bi, bj);
  if (ilo && !jlo) return b12(bi, bj);
  if (!ilo && jlo) return b21(bi, bj);
  return b22(bi, bj);
}

void BlockTriDiag::apply(const double* x, double* y) const {
  const int n = block_size();
  b11.apply(x, y);
  b12.apply(x + n, y);
  b21.apply(x, y + n);
  b22.apply(x + n, y + n);
}

std::vector<double> BlockTriDiag::to_dense() const {
  const int n = block_size();
  const int dim = 2 * n;
  std::vector<double> dense(static_cast<std::size_t>(dim) * dim, 0.0);
  auto put = [&](const TriDiag& blk, int roff, int coff) {
    for (int i = 1; i <= n; ++i)
      for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j)
        dense[static_cast<std::size_t>(coff + j - 1) * dim + (roff + i - 1)] =
            blk(i, j);
  };
  put(b11, 0, 0);
  put(b12, 0, n);
  put(b21, n, 0);
  put(b22, n, n);
  return dense;
}

double BlockTriDiag::max_abs() const {
  const int n = block_size();
  double worst = 0.0;
  for (const TriDiag* blk : {&b11, &b12, &b21, &b22})
    for (int i = 1; i <= n; ++i)
      for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j)
        worst = std::max(worst, std::abs((*blk)(i, j)));
  return worst;
}

namespace {

struct Families {
  TriDiag a000, a100, a110, a001, a101;  // identity-weighted
  TriDiag v000, v100;                    // potential-weighted
};

Families build_families(const Mesh& mesh, const PhysicalParams& params,
                        const PotentialModel& model) {
  Families f;
  f.a000 = assemble_integral(mesh, {0, 0, 0});
  f.a100 = assemble_integral(mesh, {1, 0, 0});
  f.a110 = assemble_integral(mesh, {1, 1, 0});
  f.a001 = assemble_integral(mesh, {0, 0, 1});
  f.a101 = assemble_integral(mesh, {1, 0, 1});
  if (model.kind == NucleusKind::PointNucleus) {
    f.v000 = assemble_point_coulomb(mesh, 0, 0, params.z);
    f.v100 = assemble_point_coulomb(mesh, 1, 0, params.z);
  } else {
    const std::function<double(double)> pot = [&](double r) {
      return potential(model, params.z, r);
    };
    f.v000 = assemble_integral(mesh, {0, 0, 0, Weight::Potential}, &pot, model.R);
    f.v100 = assemble_integral(mesh, {1, 0, 0, Weight::Potential}, &pot, model.R);
  }
  return f;
}

}  // namespace

Pencil assemble_galerkin(const Mesh& mesh, const PhysicalParams& params,
                         const PotentialModel& model) {
  params.validate();
  const Families f = build_families(mesh, params, model);
  const double mc2 = params.rest_energy();
  const double c = params.c;
  const double ck = c * params.kappa;
  const TriDiag a010 = -1.0 * f.a100;  // [a]_010 = -[a]_100 on interior rows

  Pencil p;
  p.method = Method::Galerkin;
  p.params = params;
  p.left.b11 = mc2 * f.a000 + f.v000;
  p.left.b12 = -c * a010 + ck * f.a001;
  p.left.b21 = c * a010 + ck * f.a001;
  p.left.b22 = -mc2 * f.a000 + f.v000;
  p.right.b11 = f.a000;
  p.right.b12 = TriDiag(f.a000.size());
  p.right.b21 = TriDiag(f.a000.size());
  p.right.b22 = f.a000;
  return p;
}

Pencil assemble_supg(const Mesh& mesh, const PhysicalParams& params,
                     const PotentialModel& model, double tau_scale) {
  Pencil p = assemble_galerkin(mesh, params, model);
  p.method = Method::Supg;

  const Families f = build_families(mesh, params, model);
  const double mc2 = params.rest_energy();
  const double c = params.c;
  const double ck = c * params.kappa;
  std::vector<double> tau = mesh.taus();
  for (double& t : tau) t *= tau_scale;

  auto row_scaled = [&](TriDiag t) { return t.scale_rows(tau); };

  p.left.b11 += row_scaled(c * f.a110 + ck * f.a101);
  p.left.b12 += row_scaled(-mc2 * f.a100 + f.v100);
  p.left.b21 += row_scaled(mc2 * f.a100 + f.v100);
  p.left.b22 += row_scaled(-c * f.a110 + ck * f.a101);
  p.right.b12 = row_scaled(f.a100);
  p.right.b21 = p.right.b12;
  return p;
}

void dump_pencil_csv(const Pencil& pencil, std::ostream& os) {
  os << "matrix,row,col,value\n";
  const int dim = pencil.size();
  os.precision(17);
  for (int i = 1; i <= dim; ++i)
    for (int j = std::max(1, i - pencil.left.block_size() - 1);
         j <= std::min(dim, i + pencil.left.block_size() + 1); ++j) {
      const double a = pencil.left.entry(i, j);
      const double b = pencil.right.entry(i, j);
      if (a != 0.0) os << "left," << i << ',' << j << ',' << a << '\n';
      if (b != 0.0) os << "right," << i << ',' << j << ',' << b << '\n';
    }
}

}  // namespace dirafem
