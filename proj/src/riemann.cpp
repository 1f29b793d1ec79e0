#include <g2abc/riemann.hpp>

#include <cmath>

namespace g2abc {

Connection7 levi_civita(const LieAlgebra7& g, const Metric7& m) {
  const Mat7& G = m.matrix();
  Connection7 conn;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      const Vec7 x = basis_vector(i), y = basis_vector(j);
      const Vec7 xy = bracket(g, x, y);
      Vec7 lowered;  // <nabla_X Y, e_k>
      for (int k = 1; k <= kDim; ++k) {
        const Vec7 z = basis_vector(k);
        lowered(k - 1) = 0.5 * (xy.dot(G * z) - bracket(g, y, z).dot(G * x) + bracket(g, z, x).dot(G * y));
      }
      conn.set_nabla(i, j, m.inverse() * lowered);
    }
  return conn;
}

Vec7 u_map(const LieAlgebra7& g, const Metric7& m, const Vec7& x, const Vec7& y) {
  const Mat7& G = m.matrix();
  Vec7 lowered;
  for (int k = 1; k <= kDim; ++k) {
    const Vec7 z = basis_vector(k);
    lowered(k - 1) = 0.5 * (bracket(g, z, x).dot(G * y) - bracket(g, y, z).dot(G * x));
  }
  return m.inverse() * lowered;
}

Vec7 curvature(const LieAlgebra7& g, const Connection7& conn, const Vec7& x, const Vec7& y, const Vec7& z) {
  return conn.apply(x, conn.apply(y, z)) - conn.apply(y, conn.apply(x, z)) - conn.apply(bracket(g, x, y), z);
}

double curvature_max_abs(const LieAlgebra7& g, const Connection7& conn) {
  double worst = 0.0;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        const Vec7 r = curvature(g, conn, basis_vector(i), basis_vector(j), basis_vector(k));
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
      }
  return worst;
}

Mat7 ricci(const LieAlgebra7& g, const Metric7& /*m*/, const Connection7& conn) {
  Mat7 ric = Mat7::Zero();
  for (int a = 1; a <= kDim; ++a)
    for (int b = 1; b <= kDim; ++b)
      for (int i = 1; i <= kDim; ++i)
        ric(a - 1, b - 1) += curvature(g, conn, basis_vector(i), basis_vector(a), basis_vector(b))(i - 1);
  return ric;
}

double metric_compatibility_residual(const Connection7& conn, const Metric7& m) {
  const Mat7& G = m.matrix();
  double worst = 0.0;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        const double r = conn.nabla(i, j).dot(G.col(k - 1)) + G.col(j - 1).dot(conn.nabla(i, k));
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

double torsion_free_residual(const LieAlgebra7& g, const Connection7& conn) {
  double worst = 0.0;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      const Vec7 r = conn.nabla(i, j) - conn.nabla(j, i) - bracket(g, basis_vector(i), basis_vector(j));
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  return worst;
}

Vec7 div_torsion(const LieAlgebra7& /*g*/, const Metric7& m, const Connection7& conn, const Mat7& T) {
  if (!m.is_identity(1e-12)) throw Error("div_torsion requires orthonormal frame");
  Vec7 trace_term = Vec7::Zero();  // sum_i nabla_{e_i} e_i
  for (int i = 1; i <= kDim; ++i) trace_term += conn.nabla(i, i);
  Vec7 div;
  for (int j = 1; j <= kDim; ++j) {
    double s = -trace_term.dot(T.col(j - 1));
    for (int i = 1; i <= kDim; ++i) s -= T.row(i - 1).dot(conn.nabla(i, j));
    div(j - 1) = s;
  }
  return div;
}

Form flow_velocity(const G2Structure& s, const Vec7& div_t) { return contract(div_t, s.psi()); }

}  // namespace g2abc
