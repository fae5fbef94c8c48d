#ifndef DIRAFEM_MESH_HPP
#define DIRAFEM_MESH_HPP

#include <cstddef>
#include <vector>

namespace dirafem {

struct MeshConfig {
  double a = 0.0;        // domain start
  double b = 1.0;        // domain end
  int n = 2;             // interior node count (>= 1)
  double epsilon = 1e-4; // nodes intensity parameter

  void validate() const;  // throws std::invalid_argument
};

/// One-dimensional mesh r_0 < r_1 < ... < r_{n+1} with element sizes
/// h_j = r_j - r_{j-1} (j = 1..n+1) and per-node stability parameters
/// tau_j = (h_{j+1} - h_j)/3 (j = 1..n).
class Mesh {
 public:
  /// Builds from an ordered node list (size >= 3, strictly increasing).
  explicit Mesh(std::vector<double> nodes);

  int interior_count() const { return static_cast<int>(nodes_.size()) - 2; }
  double a() const { return nodes_.front(); }
  double b() const { return nodes_.back(); }

  const std::vector<double>& nodes() const { return nodes_; }
  double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  /// h_j = r_j - r_{j-1}, 1 <= j <= n+1.
  double step(int j) const;

  /// tau_j = (h_{j+1} - h_j)/3, 1 <= j <= n. Throws std::out_of_range.
  double tau(int j) const;
  const std::vector<double>& taus() const { return taus_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> steps_;  // steps_[j-1] = h_j
  std::vector<double> taus_;   // taus_[j-1] = tau_j
};

/// Exponentially distributed nodes on [a, b]:
///   r_i = exp(ln(a+eps) + i (ln(b+eps) - ln(a+eps))/(n+1)) - eps.
/// Endpoints are pinned to a and b exactly.
Mesh generate_exponential(const MeshConfig& config);

/// Two-segment mesh for extended-nucleus runs: n_inner subintervals
/// exponentially distributed on [0, R] and n_outer on [R, b], concatenated
/// with R as a shared node. Interior node count is n_inner + n_outer - 1.
Mesh generate_two_segment(double R, double b, int n_inner, int n_outer,
                          double epsilon);

}  // namespace dirafem

#endif
