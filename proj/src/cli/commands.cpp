#include <g2abc/cli.hpp>

#include <g2abc/riemann.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>

namespace g2abc::cli {

namespace {

struct DualWorst {
  double diff = -1.0;
  double printed = 0.0;
  double oracle = 0.0;
};

struct CaseSummary {
  int trials = 0;
  int failures = 0;
  std::map<std::string, double> worst;      // unflagged
  std::map<std::string, double> printed;    // flagged whole-quantity deviations
  std::map<std::string, DualWorst> dual;    // "quantity coefficient"
  double div_max = 0.0;
};

CaseSummary run_case(FamilyKind kind, const VerifyOptions& o) {
  CaseSummary s;
  for (int i = 0; i < o.trials; ++i) {
    const TripleABC t = generate(kind, o.seed + static_cast<std::uint64_t>(i));
    const CrossValidation cv = cross_validate(t, o.tol);
    ++s.trials;
    if (!cv.pass) ++s.failures;
    for (const auto& d : cv.deviations) {
      auto& slot = d.flagged ? s.printed[d.name] : s.worst[d.name];
      slot = std::max(slot, d.value);
    }
    for (const auto& d : cv.dual) {
      if (s.printed.count(d.quantity)) continue;  // whole-quantity discrepancy, tracked above
      auto& w = s.dual[d.quantity + " " + d.coefficient];
      const double diff = std::abs(d.printed - d.oracle);
      if (diff > w.diff) w = {diff, d.printed, d.oracle};
    }
    if (const Deviation* d = cv.find("family.div_free")) s.div_max = std::max(s.div_max, d->value);
  }
  return s;
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

void print_case(std::ostream& out, FamilyKind kind, const CaseSummary& s, const VerifyOptions& o) {
  out << "case " << to_string(kind) << ": " << s.trials << " trials, seed " << o.seed << ", tol " << sci(o.tol)
      << ", " << (s.failures == 0 ? "pass" : std::to_string(s.failures) + " failing") << '\n';
  if (kind != FamilyKind::General)
    out << "  div T max |.| = " << sci(s.div_max) << (s.div_max <= o.tol ? " <= " : " > ") << sci(o.tol) << '\n';
  out << "  worst deviation per quantity:\n";
  for (const auto& [name, v] : s.worst)
    out << "    " << std::left << std::setw(34) << name << std::right << std::setw(10) << sci(v)
        << (v <= o.tol ? "" : "  FAIL") << '\n';
  if (!s.printed.empty() || !s.dual.empty()) {
    out << "  printed discrepancies (reported, not counted):\n";
    for (const auto& [name, v] : s.printed)
      out << "    " << std::left << std::setw(34) << name << std::right << std::setw(10) << sci(v) << '\n';
    for (const auto& [name, w] : s.dual)
      out << "    " << std::left << std::setw(34) << name << " printed " << sci(w.printed) << ", oracle "
          << sci(w.oracle) << '\n';
  }
}

nlohmann::json case_json(const CaseSummary& s) {
  nlohmann::json dual = nlohmann::json::object();
  for (const auto& [name, w] : s.dual)
    dual[name] = {{"max_abs_diff", w.diff}, {"printed", w.printed}, {"oracle", w.oracle}};
  return {{"trials", s.trials}, {"failures", s.failures}, {"worst", s.worst},
          {"printed", s.printed}, {"dual", dual},         {"div_max", s.div_max}};
}

}  // namespace

int cmd_analyze(const std::string& input, bool json, std::ostream& out, std::ostream& err) {
  try {
    const double tol = default_tolerance();
    const TripleABC t = read_triple(input);
    const nlohmann::json report = analyze_report(t, tol);
    if (json)
      out << report.dump(2) << '\n';
    else
      out << render_text(report);
    return report["pass"].get<bool>() ? kExitOk : kExitMismatch;
  } catch (const Error& e) {
    err << "analyze: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<FamilyKind> kinds;
  try {
    kinds = parse_case(o.case_name, true);
    if (o.trials < 1) throw InputError("--trials must be at least 1");
    if (!(o.tol > 0.0) || !std::isfinite(o.tol)) throw InputError("--tol must be a positive number");
  } catch (const Error& e) {
    err << "verify: " << e.what() << '\n';
    return kExitInput;
  }

  bool pass = true;
  nlohmann::json cases = nlohmann::json::object();
  for (FamilyKind k : kinds) {
    CaseSummary s;
    try {
      s = run_case(k, o);
    } catch (const Error& e) {
      err << "verify: case " << to_string(k) << ": " << e.what() << '\n';
      return kExitMismatch;
    }
    pass = pass && s.failures == 0;
    if (o.json)
      cases[std::string(to_string(k))] = case_json(s);
    else
      print_case(out, k, s, o);
  }
  if (o.json) {
    const nlohmann::json j = {{"cases", cases}, {"pass", pass}, {"seed", o.seed}, {"tolerance", o.tol},
                              {"trials", o.trials}};
    out << j.dump(2) << '\n';
  } else {
    out << "verify: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitMismatch;
}

int cmd_gen(const std::string& case_name, std::uint64_t seed, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  try {
    const FamilyKind k = parse_case(case_name, false).front();
    const TripleABC t = generate(k, seed);
    write_triple(out_path, t);
    out << "wrote " << to_string(k) << " triple (seed " << seed << ") to " << out_path << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "gen: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace g2abc::cli
