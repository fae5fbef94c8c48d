#include "dirafem/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace dirafem {

void MeshConfig::validate() const {
  if (!(a >= 0.0) || !(a < b)) throw std::invalid_argument("mesh requires 0 <= a < b");
  if (n < 1) throw std::invalid_argument("mesh requires n >= 1 interior nodes");
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("nodes intensity parameter must be in (0, 1]");
}

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) throw std::invalid_argument("mesh needs at least 1 interior node");
  steps_.reserve(nodes_.size() - 1);
  for (std::size_t j = 1; j < nodes_.size(); ++j) {
    const double h = nodes_[j] - nodes_[j - 1];
    if (!(h > 0.0)) throw std::invalid_argument("mesh nodes must be strictly increasing");
    steps_.push_back(h);
  }
  taus_.reserve(nodes_.size() - 2);
  for (std::size_t j = 1; j + 1 < nodes_.size(); ++j)
    taus_.push_back((steps_[j] - steps_[j - 1]) / 3.0);
}

double Mesh::step(int j) const {
  if (j < 1 || j > interior_count() + 1) throw std::out_of_range("step index out of range");
  return steps_[static_cast<std::size_t>(j - 1)];
}

double Mesh::tau(int j) const {
  if (j < 1 || j > interior_count()) throw std::out_of_range("tau index out of range");
  return taus_[static_cast<std::size_t>(j - 1)];
}

namespace {

std::vector<double> exponential_nodes(double a, double b, int subintervals,
                                      double epsilon) {
  const double la = std::log(a + epsilon);
  const double lb = std::log(b + epsilon);
  std::vector<double> nodes(static_cast<std::size_t>(subintervals) + 1);
  for (int i = 0; i <= subintervals; ++i)
    nodes[static_cast<std::size_t>(i)] =
        std::exp(la + (lb - la) * i / subintervals) - epsilon;
  nodes.front() = a;
  nodes.back() = b;
  return nodes;
}

}  // namespace

Mesh generate_exponential(const MeshConfig& config) {
  config.validate();
  return Mesh(exponential_nodes(config.a, config.b, config.n + 1, config.epsilon));
}

Mesh generate_two_segment(double R, double b, int n_inner, int n_outer,
                          double epsilon) {
  if (!(R > 0.0) || !(b > R)) throw std::invalid_argument("requires 0 < R < b");
  if (n_inner < 2 || n_outer < 2) throw std::invalid_argument("segment subinterval counts must be >= 2");
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("nodes intensity parameter must be in (0, 1]");
  std::vector<double> nodes = exponential_nodes(0.0, R, n_inner, epsilon);
  const std::vector<double> outer = exponential_nodes(R, b, n_outer, epsilon);
  nodes.insert(nodes.end(), outer.begin() + 1, outer.end());
  return Mesh(std::move(nodes));
}

}  // namespace dirafem
