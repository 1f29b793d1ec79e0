#include <g2abc/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace g2abc::cli;

  CLI::App app{"Torsion, curvature and divergence of G2-structures on g_{A,B,C}"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a triple file");
  analyze->add_option("--input", input, "Triple JSON file")->required();
  analyze->add_flag("--json", json, "Emit the report as JSON");

  VerifyOptions vopts;
  std::optional<double> tol;
  auto* verify = app.add_subcommand("verify", "Cross-validate closed forms on generated triples");
  verify->add_option("--case", vopts.case_name, "skew, diag, adiag, sym, general or all")->required();
  verify->add_option("--trials", vopts.trials, "Triples per case")->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Base seed")->capture_default_str();
  verify->add_option("--tol", tol, "Absolute tolerance (default 1e-9 or G2ABC_TOL)");
  verify->add_flag("--json", vopts.json, "Emit the summary as JSON");

  std::string gen_case, out_path;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a random triple of a family");
  gen->add_option("--case", gen_case, "skew, diag, adiag, sym or general")->required();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*analyze) return cmd_analyze(input, json, std::cout, std::cerr);
  if (*verify) {
    try {
      vopts.tol = tol ? *tol : default_tolerance();
    } catch (const g2abc::Error& e) {
      std::cerr << "verify: " << e.what() << '\n';
      return kExitInput;
    }
    return cmd_verify(vopts, std::cout, std::cerr);
  }
  return cmd_gen(gen_case, gen_seed, out_path, std::cout, std::cerr);
}
