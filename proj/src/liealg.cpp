#include <g2abc/liealg.hpp>

#include <cmath>
#include <vector>

namespace g2abc {

LieAlgebra7::LieAlgebra7(const StructureConstants& c) : c_(c) {
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = i; j <= kDim; ++j)
        if (c(k, i, j) != -c(k, j, i)) throw ValidationError("structure constants are not antisymmetric");
  if (const double r = jacobi_residual(*this); r > kJacobiTolerance)
    throw ValidationError("Jacobi identity violated (residual " + std::to_string(r) + ")");
}

LieAlgebra7 LieAlgebra7::unchecked(const StructureConstants& c) {
  LieAlgebra7 g;
  g.c_ = c;
  return g;
}

Mat7 LieAlgebra7::ad(int i) const {
  Mat7 m;
  for (int j = 1; j <= kDim; ++j)
    for (int k = 1; k <= kDim; ++k) m(k - 1, j - 1) = c_(k, i, j);
  return m;
}

Vec7 bracket(const LieAlgebra7& g, const Vec7& x, const Vec7& y) {
  Vec7 out = Vec7::Zero();
  for (int i = 1; i <= kDim; ++i) {
    if (x(i - 1) == 0.0) continue;
    for (int j = 1; j <= kDim; ++j) {
      const double w = x(i - 1) * y(j - 1);
      if (w == 0.0) continue;
      for (int k = 1; k <= kDim; ++k) out(k - 1) += w * g.c(k, i, j);
    }
  }
  return out;
}

double jacobi_residual(const LieAlgebra7& g) {
  double worst = 0.0;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        const Vec7 ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        const Vec7 r = bracket(g, bracket(g, ei, ej), ek) + bracket(g, bracket(g, ej, ek), ei) +
                       bracket(g, bracket(g, ek, ei), ej);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
      }
  return worst;
}

bool is_unimodular(const LieAlgebra7& g, double tol) {
  for (int i = 1; i <= kDim; ++i)
    if (std::abs(g.ad(i).trace()) > tol) return false;
  return true;
}

Form ce_diff(const LieAlgebra7& g, const Form& a) {
  const int k = a.degree();
  if (k >= kDim) throw ValidationError("ce_diff: degree overflow");
  Form out(k + 1);
  if (k == 0) return out;
  std::vector<int> args(static_cast<std::size_t>(k));
  for (IndexSet target : IndexSet::all_of_size(k + 1)) {
    const auto x = target.indices();
    double value = 0.0;
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        // remaining arguments, in order, after the bracket slot
        std::size_t n = 1;
        for (int r = 0; r <= k; ++r)
          if (r != p && r != q) args[n++] = x[static_cast<std::size_t>(r)];
        double term = 0.0;
        for (int l = 1; l <= kDim; ++l) {
          const double c = g.c(l, x[static_cast<std::size_t>(p)], x[static_cast<std::size_t>(q)]);
          if (c == 0.0) continue;
          args[0] = l;
          term += c * a.evaluate(std::span<const int>(args));
        }
        value += ((p + q) % 2 == 0 ? 1.0 : -1.0) * term;
      }
    out.add(target, value);
  }
  return out;
}

}  // namespace g2abc
