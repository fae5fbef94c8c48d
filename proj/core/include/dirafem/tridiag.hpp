#ifndef DIRAFEM_TRIDIAG_HPP
#define DIRAFEM_TRIDIAG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dirafem {

/// Symmetric-bandwidth-1 n x n matrix. Row j holds columns j-1, j, j+1
/// (1-based logical indices over the interior nodes).
class TriDiag {
 public:
  TriDiag() = default;
  explicit TriDiag(int n)
      : n_(n), sub_(static_cast<std::size_t>(n), 0.0),
        diag_(static_cast<std::size_t>(n), 0.0),
        sup_(static_cast<std::size_t>(n), 0.0) {
    if (n < 1) throw std::invalid_argument("TriDiag dimension must be >= 1");
  }

  int size() const { return n_; }

  double operator()(int i, int j) const {
    check(i);
    check(j);
    if (j == i - 1) return sub_[idx(i)];
    if (j == i) return diag_[idx(i)];
    if (j == i + 1) return sup_[idx(i)];
    return 0.0;
  }

  /// Accumulates into entry (i, j); |i - j| must be <= 1.
  void add(int i, int j, double value) {
    check(i);
    check(j);
    if (j == i - 1)
      sub_[idx(i)] += value;
    else if (j == i)
      diag_[idx(i)] += value;
    else if (j == i + 1)
      sup_[idx(i)] += value;
    else
      throw std::out_of_range("TriDiag entry outside the band");
  }

  double row_sum(int i) const {
    check(i);
    return sub_[idx(i)] + diag_[idx(i)] + sup_[idx(i)];
  }

  TriDiag transpose() const {
    TriDiag t(n_);
    for (int i = 1; i <= n_; ++i) {
      t.diag_[idx(i)] = diag_[idx(i)];
      if (i > 1) t.sup_[idx(i - 1)] = sub_[idx(i)];
      if (i < n_) t.sub_[idx(i + 1)] = sup_[idx(i)];
    }
    return t;
  }

  TriDiag& operator+=(const TriDiag& o) {
    require_same(o);
    for (std::size_t k = 0; k < diag_.size(); ++k) {
      sub_[k] += o.sub_[k];
      diag_[k] += o.diag_[k];
      sup_[k] += o.sup_[k];
    }
    return *this;
  }

  TriDiag& operator*=(double s) {
    for (std::size_t k = 0; k < diag_.size(); ++k) {
      sub_[k] *= s;
      diag_[k] *= s;
      sup_[k] *= s;
    }
    return *this;
  }

  friend TriDiag operator+(TriDiag a, const TriDiag& b) { return a += b; }
  friend TriDiag operator*(double s, TriDiag a) { return a *= s; }

  /// Scales row i by w[i-1].
  TriDiag& scale_rows(const std::vector<double>& w) {
    if (static_cast<int>(w.size()) != n_)
      throw std::invalid_argument("row weight length mismatch");
    for (int i = 1; i <= n_; ++i) {
      sub_[idx(i)] *= w[idx(i)];
      diag_[idx(i)] *= w[idx(i)];
      sup_[idx(i)] *= w[idx(i)];
    }
    return *this;
  }

  /// y += this * x (x, y of length n).
  void apply(const double* x, double* y) const {
    for (int i = 1; i <= n_; ++i) {
      double v = diag_[idx(i)] * x[i - 1];
      if (i > 1) v += sub_[idx(i)] * x[i - 2];
      if (i < n_) v += sup_[idx(i)] * x[i];
      y[i - 1] += v;
    }
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }
  void check(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("TriDiag index out of range");
  }
  void require_same(const TriDiag& o) const {
    if (o.n_ != n_) throw std::invalid_argument("TriDiag dimension mismatch");
  }

  int n_ = 0;
  std::vector<double> sub_, diag_, sup_;
};

}  // namespace dirafem

#endif
