#include <g2abc/g2core.hpp>

#include <cmath>
#include <vector>

namespace g2abc {

Form standard_phi() {
  return Form::monomial({1, 2, 7}) + Form::monomial({3, 4, 7}) + Form::monomial({5, 6, 7}) +
         Form::monomial({1, 3, 5}) - Form::monomial({1, 4, 6}) - Form::monomial({2, 3, 6}) -
         Form::monomial({2, 4, 5});
}

Form standard_psi() {
  return Form::monomial({3, 4, 5, 6}) + Form::monomial({1, 2, 5, 6}) + Form::monomial({1, 2, 3, 4}) -
         Form::monomial({2, 4, 6, 7}) + Form::monomial({2, 3, 5, 7}) + Form::monomial({1, 4, 5, 7}) +
         Form::monomial({1, 3, 6, 7});
}

InducedMetric induced_metric(const Form& phi) {
  if (phi.degree() != 3) throw ValidationError("not a positive 3-form: degree is not 3");
  const IndexSet top = IndexSet::from_mask(0x7f);
  std::vector<Form> iota;
  iota.reserve(kDim);
  for (int i = 1; i <= kDim; ++i) iota.push_back(contract(basis_vector(i), phi));
  Mat7 b;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) b(i, j) = b(j, i) = wedge(wedge(iota[i], iota[j]), phi).coeff(top) / 6.0;
  const double det = b.determinant();
  if (!(det > 0.0)) throw ValidationError("not a positive 3-form");
  const double scale = std::cbrt(std::cbrt(det));  // det^{1/9}
  try {
    return {Metric7(b / scale), scale};
  } catch (const ValidationError&) {
    throw ValidationError("not a positive 3-form");
  }
}

G2Structure::G2Structure(LieAlgebra7 algebra, Form phi)
    : algebra_(std::move(algebra)),
      phi_(std::move(phi)),
      metric_(induced_metric(phi_).metric),
      vol_scale_(metric_.volume_factor()),
      psi_(hodge(phi_, metric_)) {}

TorsionForms torsion_forms(const G2Structure& s) {
  const Metric7& m = s.metric();
  const Form dphi = ce_diff(s.algebra(), s.phi());
  const Form dpsi = ce_diff(s.algebra(), s.psi());
  const Form star_dphi = hodge(dphi, m);

  TorsionForms t;
  t.tau0 = hodge(wedge(dphi, s.phi()), m).coeff(IndexSet{}) / 7.0;
  t.tau1 = hodge(wedge(star_dphi, s.phi()), m) * (-1.0 / 12.0);
  t.tau2 = -hodge(dpsi, m) + 4.0 * hodge(wedge(t.tau1, s.psi()), m);
  t.tau3 = star_dphi - t.tau0 * s.phi() - 3.0 * hodge(wedge(t.tau1, s.phi()), m);
  return t;
}

Mat7 tau27_tensor(const G2Structure& s, const Form& tau3) {
  if (tau3.degree() != 3) throw ValidationError("tau27_tensor: tau3 must be a 3-form");
  std::vector<Form> iota;
  for (int i = 1; i <= kDim; ++i) iota.push_back(contract(basis_vector(i), s.phi()));
  Mat7 t;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j)
      t(i, j) = t(j, i) = hodge(wedge(wedge(iota[i], iota[j]), tau3), s.metric()).coeff(IndexSet{});
  return t;
}

Vec7 tau1_vector(const G2Structure& s, const Form& tau1) {
  Vec7 c;
  for (int i = 1; i <= kDim; ++i) c(i - 1) = tau1.coeff(IndexSet{i});
  return s.metric().inverse() * c;
}

Mat7 full_torsion_from_forms(const G2Structure& s, const TorsionForms& forms, const Mat7& tau27,
                             double tau27_weight) {
  const Form iota_tau1 = contract(tau1_vector(s, forms.tau1), s.phi());
  Mat7 T;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      const double skew = i == j ? 0.0 : iota_tau1.evaluate({i, j}) + 0.5 * forms.tau2.evaluate({i, j});
      T(i - 1, j - 1) = 0.25 * forms.tau0 * s.metric().matrix()(i - 1, j - 1) - skew - tau27_weight * tau27(i - 1, j - 1);
    }
  return T;
}

Form covariant_derivative(const Connection7& conn, const Vec7& x, const Form& phi) {
  const int k = phi.degree();
  Form out(k);
  std::vector<Vec7> args(static_cast<std::size_t>(k));
  for (IndexSet target : IndexSet::all_of_size(k)) {
    const auto idx = target.indices();
    double value = 0.0;
    for (int slot = 0; slot < k; ++slot) {
      for (int r = 0; r < k; ++r) args[r] = basis_vector(idx[r]);
      args[slot] = conn.apply(x, args[slot]);
      value -= phi.evaluate(std::span<const Vec7>(args));
    }
    out.add(target, value);
  }
  return out;
}

Mat7 full_torsion_from_nabla(const G2Structure& s, const Connection7& conn, double tol) {
  const auto rows = IndexSet::all_of_size(3);
  Eigen::MatrixXd M(rows.size(), kDim);
  for (int j = 1; j <= kDim; ++j) {
    const Form col = contract(basis_vector(j), s.psi());
    for (std::size_t r = 0; r < rows.size(); ++r) M(static_cast<Eigen::Index>(r), j - 1) = col.coeff(rows[r]);
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  Mat7 T;
  for (int i = 1; i <= kDim; ++i) {
    const Form rhs_form = covariant_derivative(conn, basis_vector(i), s.phi());
    Eigen::VectorXd rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rhs(static_cast<Eigen::Index>(r)) = rhs_form.coeff(rows[r]);
    const Eigen::VectorXd v = qr.solve(rhs);
    const double residual = (M * v - rhs).cwiseAbs().maxCoeff();
    if (!(residual <= tol))
      throw Error("torsion solve failed (residual " + std::to_string(residual) + " at e_" + std::to_string(i) + ")");
    // T(e_i, e_j) = g(T(e_i), e_j)
    T.row(i - 1) = (s.metric().matrix() * Vec7(v)).transpose();
  }
  return T;
}

TorsionData analyze_torsion(const G2Structure& s) {
  TorsionData d;
  d.forms = torsion_forms(s);
  d.tau27 = tau27_tensor(s, d.forms.tau3);
  d.T = full_torsion_from_forms(s, d.forms, d.tau27, kTau27TorsionWeight);
  return d;
}

TorsionClass classify(const TorsionForms& f, double tol) {
  const bool t0 = std::abs(f.tau0) <= tol;
  const bool t1 = f.tau1.max_abs() <= tol;
  const bool t2 = f.tau2.max_abs() <= tol;
  const bool t3 = f.tau3.max_abs() <= tol;
  return {t0 && t1 && t3, t1 && t2, t0 && t1 && t2 && t3};
}

Reconstruction reconstruction_residual(const G2Structure& s, const TorsionForms& f) {
  const Metric7& m = s.metric();
  const Form dphi = ce_diff(s.algebra(), s.phi());
  const Form dpsi = ce_diff(s.algebra(), s.psi());
  const Form rphi = f.tau0 * s.psi() + 3.0 * wedge(f.tau1, s.phi()) + hodge(f.tau3, m);
  const Form t1psi = 4.0 * wedge(f.tau1, s.psi());
  const Form star_tau2 = hodge(f.tau2, m);
  return {max_abs_diff(dphi, rphi), max_abs_diff(dpsi, t1psi + star_tau2), max_abs_diff(dpsi, t1psi - star_tau2)};
}

}  // namespace g2abc
