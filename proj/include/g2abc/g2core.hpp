#pragma once

// G2-structures on a 7-dimensional Lie algebra: induced metric, dual 4-form,
// torsion forms, tau_27 and the full torsion tensor.

#include <g2abc/connection.hpp>
#include <g2abc/exterior.hpp>
#include <g2abc/liealg.hpp>

namespace g2abc {

/// Default absolute tolerance for classification and cross-checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// e^127 + e^347 + e^567 + e^135 - e^146 - e^236 - e^245
Form standard_phi();
/// e^3456 + e^1256 + e^1234 - e^2467 + e^2357 + e^1457 + e^1367
Form standard_psi();

struct InducedMetric {
  Metric7 metric;
  double vol_scale;
};

/// g_ij = b_ij det(b)^{-1/9}, where b_ij e^{1..7} = (1/6) i_{e_i}phi ^ i_{e_j}phi ^ phi.
/// Throws ValidationError("not a positive 3-form") when g is not positive-definite.
InducedMetric induced_metric(const Form& phi);

class G2Structure {
 public:
  G2Structure(LieAlgebra7 algebra, Form phi);

  const LieAlgebra7& algebra() const noexcept { return algebra_; }
  const Form& phi() const noexcept { return phi_; }
  const Form& psi() const noexcept { return psi_; }
  const Metric7& metric() const noexcept { return metric_; }
  double vol_scale() const noexcept { return vol_scale_; }

 private:
  LieAlgebra7 algebra_;
  Form phi_;
  Metric7 metric_;
  double vol_scale_;
  Form psi_;
};

struct TorsionForms {
  double tau0 = 0.0;
  Form tau1{1};
  Form tau2{2};
  Form tau3{3};
};

struct TorsionData {
  TorsionForms forms;
  Mat7 tau27 = Mat7::Zero();
  /// T(i, j) = T(e_i, e_j).
  Mat7 T = Mat7::Zero();
};

struct TorsionClass {
  bool closed = false;
  bool coclosed = false;
  bool torsion_free = false;
};

/// tau0 = (1/7) *(dphi ^ phi), tau1 = -(1/12) *(*dphi ^ phi),
/// tau2 = -*dpsi + 4 *(tau1 ^ psi), tau3 = *dphi - tau0 phi - 3 *(tau1 ^ phi).
TorsionForms torsion_forms(const G2Structure& s);

/// tau27(e_i, e_j) = *(i_{e_i}phi ^ i_{e_j}phi ^ tau3).
Mat7 tau27_tensor(const G2Structure& s, const Form& tau3);

/// The vector metrically dual to tau1.
Vec7 tau1_vector(const G2Structure& s, const Form& tau1);

/// Weight of tau27 in T for which nabla_X phi = i_{T(X)} psi actually holds. With
/// tau27 normalized as below, the printed decomposition (weight 1) is off by 4.
inline constexpr double kTau27TorsionWeight = 0.25;

/// T = tau0/4 g - i_{tau1}phi - tau2/2 - w tau27, as a matrix of the bilinear form.
/// w = 1 is the printed decomposition; pass kTau27TorsionWeight for the true T.
Mat7 full_torsion_from_forms(const G2Structure& s, const TorsionForms& forms, const Mat7& tau27,
                             double tau27_weight = 1.0);

/// Solves i_{T(e_i)} psi = nabla_{e_i} phi row by row. Throws Error("torsion solve
/// failed") when the least-squares residual exceeds `tol`.
Mat7 full_torsion_from_nabla(const G2Structure& s, const Connection7& conn, double tol = kDefaultTolerance);

/// nabla_x phi for the left-invariant phi and a left-invariant connection.
Form covariant_derivative(const Connection7& conn, const Vec7& x, const Form& phi);

/// Torsion forms, tau27 and T (form route, weight kTau27TorsionWeight).
TorsionData analyze_torsion(const G2Structure& s);

TorsionClass classify(const TorsionForms& forms, double tol = kDefaultTolerance);

/// Max-abs of dphi - (tau0 psi + 3 tau1^phi + *tau3) and dpsi - (4 tau1^psi + *tau2).
/// dpsi_minus uses 4 tau1^psi - *tau2, the sign implied by tau2 = -*dpsi + 4*(tau1^psi).
struct Reconstruction {
  double dphi;
  double dpsi;
  double dpsi_minus;
};
Reconstruction reconstruction_residual(const G2Structure& s, const TorsionForms& forms);

}  // namespace g2abc
