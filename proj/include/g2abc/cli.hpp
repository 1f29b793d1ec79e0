#pragma once

// Command implementations behind the g2abc executable. Each command writes to
// the given streams and returns the process exit code.

#include <g2abc/crossval.hpp>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace g2abc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitMismatch = 2;

/// Unreadable file, malformed JSON, bad flag value.
class InputError : public Error {
 public:
  using Error::Error;
};

/// {"A": 4x4, "B": 4x4, "C": 4x4}, row-major, rows and columns indexed 3..6.
nlohmann::json triple_to_json(const TripleABC& t);
/// Throws InputError on shape problems, ValidationError on broken invariants.
TripleABC triple_from_json(const nlohmann::json& j);

TripleABC read_triple(const std::string& path);
void write_triple(const std::string& path, const TripleABC& t);

/// kDefaultTolerance, or G2ABC_TOL when set. Throws InputError on a bad value.
double default_tolerance();

/// Full analysis report with sorted keys; values below 1e-14 print as 0.
nlohmann::json analyze_report(const TripleABC& t, double tol);
std::string render_text(const nlohmann::json& report);

/// Resolves a --case value; "all" is accepted only when allow_all is set.
std::vector<FamilyKind> parse_case(const std::string& name, bool allow_all);

struct VerifyOptions {
  std::string case_name = "all";
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  bool json = false;
};

int cmd_analyze(const std::string& input, bool json, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const std::string& case_name, std::uint64_t seed, const std::string& out_path, std::ostream& out,
            std::ostream& err);

}  // namespace g2abc::cli
