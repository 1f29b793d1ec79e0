#pragma once

#include <g2abc/exterior.hpp>
#include <g2abc/types.hpp>

#include <array>

namespace g2abc {

/// Dense structure constants c^k_{ij}, [e_i, e_j] = sum_k c^k_{ij} e_k.
/// Indices are 1-based.
class StructureConstants {
 public:
  double& operator()(int k, int i, int j) { return c_[offset(k, i, j)]; }
  double operator()(int k, int i, int j) const { return c_[offset(k, i, j)]; }

  /// Sets c^k_{ij} = value and c^k_{ji} = -value.
  void set_bracket(int i, int j, int k, double value) {
    (*this)(k, i, j) = value;
    (*this)(k, j, i) = -value;
  }

 private:
  static std::size_t offset(int k, int i, int j) {
    return static_cast<std::size_t>(((k - 1) * kDim + (i - 1)) * kDim + (j - 1));
  }
  std::array<double, kDim * kDim * kDim> c_{};
};

/// A 7-dimensional real Lie algebra in a fixed basis.
class LieAlgebra7 {
 public:
  static constexpr double kJacobiTolerance = 1e-10;

  /// The abelian algebra.
  LieAlgebra7() = default;

  /// Validates antisymmetry (exact) and the Jacobi identity (kJacobiTolerance).
  explicit LieAlgebra7(const StructureConstants& c);

  /// Skips validation; for probing brackets that are not Lie algebras.
  static LieAlgebra7 unchecked(const StructureConstants& c);

  const StructureConstants& structure_constants() const noexcept { return c_; }
  double c(int k, int i, int j) const { return c_(k, i, j); }

  /// Matrix of ad_{e_i}: column j holds [e_i, e_j].
  Mat7 ad(int i) const;

 private:
  StructureConstants c_;
};

Vec7 bracket(const LieAlgebra7& g, const Vec7& x, const Vec7& y);

/// max over basis triples of |[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]|_inf.
double jacobi_residual(const LieAlgebra7& g);

bool is_unimodular(const LieAlgebra7& g, double tol = 1e-12);

/// Chevalley-Eilenberg differential of a left-invariant form:
/// (d a)(X_0..X_k) = sum_{p<q} (-1)^{p+q} a([X_p, X_q], X_0..^p..^q..X_k).
Form ce_diff(const LieAlgebra7& g, const Form& a);

}  // namespace g2abc
