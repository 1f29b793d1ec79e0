#pragma once

// Left-invariant Riemannian geometry on a metric Lie algebra.

#include <g2abc/connection.hpp>
#include <g2abc/g2core.hpp>
#include <g2abc/liealg.hpp>

namespace g2abc {

/// Koszul formula: 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
Connection7 levi_civita(const LieAlgebra7& g, const Metric7& m);

/// 2<U(X,Y),Z> = <[Z,X],Y> - <[Y,Z],X>; nabla_X Y = [X,Y]/2 + U(X,Y).
Vec7 u_map(const LieAlgebra7& g, const Metric7& m, const Vec7& x, const Vec7& y);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
Vec7 curvature(const LieAlgebra7& g, const Connection7& conn, const Vec7& x, const Vec7& y, const Vec7& z);

/// Max-abs over basis triples of R(e_i,e_j)e_k.
double curvature_max_abs(const LieAlgebra7& g, const Connection7& conn);

/// Ric(X,Y) = trace(Z -> R(Z,X)Y), as a matrix of the bilinear form.
Mat7 ricci(const LieAlgebra7& g, const Metric7& m, const Connection7& conn);

/// Max over basis triples of |<nabla_X Y, Z> + <Y, nabla_X Z>|.
double metric_compatibility_residual(const Connection7& conn, const Metric7& m);
/// Max over basis pairs of |nabla_X Y - nabla_Y X - [X,Y]|_inf.
double torsion_free_residual(const LieAlgebra7& g, const Connection7& conn);

/// <div T, e_j> = -sum_i T(nabla_{e_i} e_i, e_j) - sum_i T(e_i, nabla_{e_i} e_j).
/// Only defined in an orthonormal frame; throws Error otherwise.
Vec7 div_torsion(const LieAlgebra7& g, const Metric7& m, const Connection7& conn, const Mat7& T);

/// Right-hand side of the isometric flow, i_{div T} psi.
Form flow_velocity(const G2Structure& s, const Vec7& div_t);

}  // namespace g2abc
