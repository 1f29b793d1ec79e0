#include <g2abc/cli.hpp>

#include <g2abc/riemann.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace g2abc::cli {

namespace {

constexpr double kPrintZero = 1e-14;

double clean(double x) { return std::abs(x) < kPrintZero ? 0.0 : x; }

nlohmann::json form_json(const Form& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [idx, c] : f.terms())
    if (std::abs(c) >= kPrintZero) j[idx.label()] = c;
  return j;
}

template <class M>
nlohmann::json matrix_json(const M& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(clean(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const Vec7& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < kDim; ++i) a.push_back(clean(v(i)));
  return a;
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << clean(x);
  return os.str();
}

}  // namespace

nlohmann::json analyze_report(const TripleABC& t, double tol) {
  const GabcModel model = build(t);
  const G2Structure& s = model.structure;
  const TorsionData td = analyze_torsion(s);
  const Connection7 lc = levi_civita(model.algebra, s.metric());
  const Mat7 T = full_torsion_from_nabla(s, lc, tol);
  const Vec7 div = div_torsion(model.algebra, s.metric(), lc, T);
  const TorsionClass cls = classify(td.forms, tol);
  const CrossValidation cv = cross_validate(t, tol);

  nlohmann::json r;
  r["input"] = triple_to_json(t);
  r["family"] = std::string(to_string(cv.family));
  r["tolerance"] = tol;
  r["tau0"] = clean(td.forms.tau0);
  r["tau1"] = form_json(td.forms.tau1);
  r["tau2"] = form_json(td.forms.tau2);
  r["tau3"] = form_json(td.forms.tau3);
  r["tau27"] = matrix_json(td.tau27);
  r["T"] = matrix_json(T);
  r["divT"] = vector_json(div);
  r["flow_velocity"] = form_json(flow_velocity(s, div));
  r["ricci"] = matrix_json(ricci(model.algebra, s.metric(), lc));
  r["classification"] = {{"closed", cls.closed}, {"coclosed", cls.coclosed}, {"torsion_free", cls.torsion_free}};

  nlohmann::json devs = nlohmann::json::object();
  for (const auto& d : cv.deviations)
    devs[d.name] = {{"value", clean(d.value)}, {"pass", d.pass}, {"flagged", d.flagged}};
  nlohmann::json dual = nlohmann::json::array();
  for (const auto& d : cv.dual)
    dual.push_back({{"quantity", d.quantity}, {"coefficient", d.coefficient}, {"printed", clean(d.printed)},
                    {"oracle", clean(d.oracle)}});
  r["cross_validation"] = {{"deviations", devs},
                           {"dual_reports", dual},
                           {"ricci_block_order", std::string(to_string(cv.ricci_order))},
                           {"pass", cv.pass}};
  r["pass"] = cv.pass;
  return r;
}

std::string render_text(const nlohmann::json& r) {
  std::ostringstream os;
  const auto& cls = r["classification"];
  os << "family: " << r["family"].get<std::string>() << '\n';
  os << "class:";
  if (cls["torsion_free"].get<bool>()) os << " torsion_free";
  else if (cls["closed"].get<bool>()) os << " closed";
  else if (cls["coclosed"].get<bool>()) os << " coclosed";
  else os << " general";
  os << '\n';
  os << "tau0: " << num(r["tau0"].get<double>()) << '\n';
  for (const char* key : {"tau1", "tau2", "tau3"}) {
    os << key << ':';
    if (r[key].empty()) os << " 0";
    for (const auto& [label, v] : r[key].items()) os << ' ' << num(v.get<double>()) << " e^" << label;
    os << '\n';
  }
  os << "divT:";
  for (const auto& v : r["divT"]) os << ' ' << num(v.get<double>());
  os << '\n';
  os << "T:\n";
  for (const auto& row : r["T"]) {
    os << ' ';
    for (const auto& v : row) os << ' ' << std::setw(12) << num(v.get<double>());
    os << '\n';
  }
  os << "ricci:\n";
  for (const auto& row : r["ricci"]) {
    os << ' ';
    for (const auto& v : row) os << ' ' << std::setw(12) << num(v.get<double>());
    os << '\n';
  }
  const auto& cv = r["cross_validation"];
  os << "cross-validation (ricci a-block " << cv["ricci_block_order"].get<std::string>() << "):\n";
  for (const auto& [name, d] : cv["deviations"].items()) {
    const char* tag = d["flagged"].get<bool>() ? "printed" : (d["pass"].get<bool>() ? "ok" : "FAIL");
    os << "  " << std::left << std::setw(36) << name << std::right << std::setw(12) << num(d["value"].get<double>())
       << "  " << tag << '\n';
  }
  if (!cv["dual_reports"].empty()) {
    os << "printed vs oracle:\n";
    for (const auto& d : cv["dual_reports"])
      os << "  " << d["quantity"].get<std::string>() << ' ' << d["coefficient"].get<std::string>()
         << ": printed " << num(d["printed"].get<double>()) << ", oracle " << num(d["oracle"].get<double>()) << '\n';
  }
  os << (r["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace g2abc::cli
