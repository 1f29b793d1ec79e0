#pragma once

#include <g2abc/types.hpp>

#include <array>

namespace g2abc {

/// Left-invariant connection, nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k (1-based).
class Connection7 {
 public:
  double& gamma(int k, int i, int j) { return g_[offset(k, i, j)]; }
  double gamma(int k, int i, int j) const { return g_[offset(k, i, j)]; }

  /// nabla_{e_i} e_j
  Vec7 nabla(int i, int j) const {
    Vec7 v;
    for (int k = 1; k <= kDim; ++k) v(k - 1) = gamma(k, i, j);
    return v;
  }
  void set_nabla(int i, int j, const Vec7& v) {
    for (int k = 1; k <= kDim; ++k) gamma(k, i, j) = v(k - 1);
  }

  /// nabla_x y for constant-coefficient x, y.
  Vec7 apply(const Vec7& x, const Vec7& y) const {
    Vec7 out = Vec7::Zero();
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        const double w = x(i - 1) * y(j - 1);
        if (w != 0.0) out += w * nabla(i, j);
      }
    return out;
  }

  double max_abs_diff(const Connection7& other) const {
    double m = 0.0;
    for (std::size_t n = 0; n < g_.size(); ++n) m = std::max(m, std::abs(g_[n] - other.g_[n]));
    return m;
  }

 private:
  static std::size_t offset(int k, int i, int j) {
    return static_cast<std::size_t>(((k - 1) * kDim + (i - 1)) * kDim + (j - 1));
  }
  std::array<double, kDim * kDim * kDim> g_{};
};

}  // namespace g2abc
