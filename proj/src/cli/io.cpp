#include <g2abc/cli.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace g2abc::cli {

namespace {

nlohmann::json matrix_to_json(const Mat4& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j) == 0.0 ? 0.0 : m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat4 matrix_from_json(const nlohmann::json& j, const char* name) {
  const auto bad = [&](const std::string& why) { return InputError(std::string("matrix ") + name + ": " + why); };
  if (!j.is_array() || j.size() != 4) throw bad("expected 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw bad("row " + std::to_string(i + 3) + " must have 4 entries");
    for (int k = 0; k < 4; ++k) {
      const auto& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) throw bad("entry (" + std::to_string(i + 3) + "," + std::to_string(k + 3) + ") is not a number");
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

}  // namespace

nlohmann::json triple_to_json(const TripleABC& t) {
  return {{"A", matrix_to_json(t.A())}, {"B", matrix_to_json(t.B())}, {"C", matrix_to_json(t.C())}};
}

TripleABC triple_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("triple file must be a JSON object with keys A, B, C");
  for (const char* key : {"A", "B", "C"})
    if (!j.contains(key)) throw InputError(std::string("missing matrix ") + key);
  return TripleABC(matrix_from_json(j["A"], "A"), matrix_from_json(j["B"], "B"), matrix_from_json(j["C"], "C"));
}

TripleABC read_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("bad JSON in " + path + ": " + e.what());
  }
  return triple_from_json(j);
}

void write_triple(const std::string& path, const TripleABC& t) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << triple_to_json(t).dump(2) << '\n';
  if (!out) throw InputError("write failed: " + path);
}

double default_tolerance() {
  const char* env = std::getenv("G2ABC_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(env, &end);
  if (errno != 0 || end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0)
    throw InputError(std::string("G2ABC_TOL must be a positive number, got '") + env + "'");
  return v;
}

std::vector<FamilyKind> parse_case(const std::string& name, bool allow_all) {
  if (name == "all") {
    if (!allow_all) throw InputError("case 'all' is not valid here");
    return {FamilyKind::Skew, FamilyKind::Diagonal, FamilyKind::Antidiagonal, FamilyKind::Symmetric,
            FamilyKind::General};
  }
  if (const auto k = parse_family(name)) return {*k};
  throw InputError("unknown case '" + name + "' (expected skew, diag, adiag, sym, general" +
                   (allow_all ? ", all)" : ")"));
}

}  // namespace g2abc::cli
