#include "dirafem/integrals.hpp"

#include <cmath>
#include <stdexcept>

namespace dirafem {

void IntegralSpec::validate() const {
  if (rho < 0 || rho > 1 || sigma < 0 || sigma > 1)
    throw std::invalid_argument("derivative orders must be 0 or 1 for linear elements");
  if (nu < 0 || nu > 1) throw std::invalid_argument("inverse-radius power must be 0 or 1");
}

double hat_value(const Mesh& mesh, int j, double r) {
  const int last = mesh.interior_count() + 1;
  if (j < 0 || j > last) throw std::out_of_range("basis index out of range");
  const double rj = mesh.node(j);
  if (j > 0 && r >= mesh.node(j - 1) && r <= rj)
    return (r - mesh.node(j - 1)) / mesh.step(j);
  if (j < last && r >= rj && r <= mesh.node(j + 1))
    return (mesh.node(j + 1) - r) / mesh.step(j + 1);
  return 0.0;
}

double hat_derivative(const Mesh& mesh, int j, double r) {
  const int last = mesh.interior_count() + 1;
  if (j < 0 || j > last) throw std::out_of_range("basis index out of range");
  // left-limit convention at nodes
  if (j > 0 && r > mesh.node(j - 1) && r <= mesh.node(j))
    return 1.0 / mesh.step(j);
  if (j < last && r > mesh.node(j) && r <= mesh.node(j + 1))
    return -1.0 / mesh.step(j + 1);
  return 0.0;
}

namespace {

struct Linear {
  double slope;
  double icpt;
  double operator()(double r) const { return slope * r + icpt; }
};

// int_l^u (a1 r + b1)(a2 r + b2) r^(-nu) dr. For nu = 1 the constant-product
// term integrates to b1 b2 ln(u/l); it is skipped when the coefficient is
// exactly zero, which covers the element touching r = 0 (the surviving hat
// factor there has an exactly-zero intercept).
double product_integral(const Linear& p1, const Linear& p2, double l, double u, int nu) {
  const double aa = p1.slope * p2.slope;
  const double ab = p1.slope * p2.icpt + p2.slope * p1.icpt;
  const double bb = p1.icpt * p2.icpt;
  if (nu == 0)
    return aa * (u * u * u - l * l * l) / 3.0 + ab * (u * u - l * l) / 2.0 + bb * (u - l);
  double v = aa * (u * u - l * l) / 2.0 + ab * (u - l);
  if (bb != 0.0) v += bb * std::log(u / l);
  return v;
}

}  // namespace

GaussRule gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("quadrature order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const int m = (points + 1) / 2;
  for (int k = 0; k < m; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= points; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const std::size_t a = static_cast<std::size_t>(k);
    const std::size_t b = static_cast<std::size_t>(points - 1 - k);
    rule.nodes[a] = -x;
    rule.nodes[b] = x;
    rule.weights[a] = rule.weights[b] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

TriDiag assemble_integral(const Mesh& mesh, const IntegralSpec& spec,
                          const std::function<double(double)>* potential_fn,
                          std::optional<double> breakpoint) {
  spec.validate();
  const int n = mesh.interior_count();
  TriDiag out(n);

  if (spec.weight == Weight::Identity && spec.nu == 0) {
    // closed forms
    for (int j = 1; j <= n; ++j) {
      const double hj = mesh.step(j);
      const double hj1 = mesh.step(j + 1);
      double sub, diag, sup;
      if (spec.rho == 0 && spec.sigma == 0) {
        sub = hj / 6.0;
        diag = (hj + hj1) / 3.0;
        sup = hj1 / 6.0;
      } else if (spec.rho == 1 && spec.sigma == 0) {
        sub = 0.5;
        diag = 0.0;
        sup = -0.5;
      } else if (spec.rho == 0 && spec.sigma == 1) {
        sub = -0.5;
        diag = 0.0;
        sup = 0.5;
      } else {
        sub = -1.0 / hj;
        diag = 1.0 / hj + 1.0 / hj1;
        sup = -1.0 / hj1;
      }
      if (j > 1) out.add(j, j - 1, sub);
      out.add(j, j, diag);
      if (j < n) out.add(j, j + 1, sup);
    }
    return out;
  }

  if (spec.weight == Weight::Potential && potential_fn == nullptr)
    throw std::invalid_argument("potential-weighted family needs a potential function");

  static const GaussRule kRule = gauss_legendre(16);

  for (int q = 0; q <= n; ++q) {
    const double l = mesh.node(q);
    const double u = mesh.node(q + 1);
    const double h = u - l;
    const int gnode[2] = {q, q + 1};
    const Linear shape[2] = {{-1.0 / h, u / h}, {1.0 / h, -l / h}};
    for (int a = 0; a < 2; ++a) {
      const int gi = gnode[a];
      if (gi < 1 || gi > n) continue;
      for (int b = 0; b < 2; ++b) {
        const int gj = gnode[b];
        if (gj < 1 || gj > n) continue;
        const Linear test =
            spec.rho == 0 ? shape[a] : Linear{0.0, shape[a].slope};
        const Linear trial =
            spec.sigma == 0 ? shape[b] : Linear{0.0, shape[b].slope};
        double value;
        if (spec.weight == Weight::Identity) {
          value = product_integral(test, trial, l, u, spec.nu);
        } else {
          auto quad = [&](double lo, double hi) {
            double s = 0.0;
            for (std::size_t k = 0; k < kRule.nodes.size(); ++k) {
              const double r = 0.5 * (lo + hi) + 0.5 * (hi - lo) * kRule.nodes[k];
              double f = test(r) * trial(r) * (*potential_fn)(r);
              if (spec.nu == 1) f /= r;
              s += kRule.weights[k] * f;
            }
            return 0.5 * (hi - lo) * s;
          };
          if (breakpoint && *breakpoint > l && *breakpoint < u)
            value = quad(l, *breakpoint) + quad(*breakpoint, u);
          else
            value = quad(l, u);
        }
        out.add(gi, gj, value);
      }
    }
  }
  return out;
}

TriDiag assemble_point_coulomb(const Mesh& mesh, int rho, int sigma, int z) {
  IntegralSpec spec{rho, sigma, 1, Weight::Identity};
  TriDiag t = assemble_integral(mesh, spec);
  t *= -static_cast<double>(z);
  return t;
}

}  // namespace dirafem
