#include <CLI11.hpp>
#include <iostream>

#include "grasp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "grasp: exact fermionic phase-space distributions via Grassmann "
      "calculus, with a numerical single-mode bosonic counterpart"};
  app.require_subcommand(1);

  grasp::cli::ComputeOptions compute_options;
  auto* compute = app.add_subcommand(
      "compute", "compute a quasiprobability representation from a state file");
  compute->add_option("--state", compute_options.state_path, "state spec JSON file")
      ->required();
  compute->add_option("--flavor", compute_options.flavor, "p or phi")->required();
  compute->add_option("--out", compute_options.out_path, "output JSON file")
      ->required();
  compute->add_flag("--allow-parity-violation",
                    compute_options.allow_parity_violation,
                    "accept states that mix parity sectors");

  grasp::cli::MomentsOptions moments_options;
  auto* moments = app.add_subcommand(
      "moments", "evaluate a normally ordered correlation three ways");
  moments->add_option("--state", moments_options.state_path, "state spec JSON file")
      ->required();
  moments->add_option("--query", moments_options.query,
                      "whitespace-separated tokens, creation first: e.g. "
                      "\"c1+ c2+ c2 c1\"");
  moments->add_flag("--allow-parity-violation",
                    moments_options.allow_parity_violation,
                    "accept states that mix parity sectors");

  grasp::cli::VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify", "run the identity verification suite and report results");
  verify->add_option("--scope", verify_options.scope, "fermion, boson, or all")
      ->default_val("all");
  verify->add_option("--seed", verify_options.seed, "seed for randomized checks")
      ->default_val(1);
  std::string report_path;
  verify->add_option("--out", report_path, "write the JSON report here");
  verify->add_option("--dim", verify_options.boson.dim,
                     "boson truncation dimension for non-pinned checks")
      ->default_val(20);
  verify->add_option("--grid-halfwidth", verify_options.boson.halfwidth,
                     "grid half-width for non-pinned checks")
      ->default_val(6.0);
  verify->add_option("--grid-points", verify_options.boson.points,
                     "odd grid point count for non-pinned checks")
      ->default_val(121);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? grasp::cli::kExitOk : grasp::cli::kExitValidation;
  }

  if (compute->parsed())
    return grasp::cli::cmd_compute(compute_options, std::cout, std::cerr);
  if (moments->parsed())
    return grasp::cli::cmd_moments(moments_options, std::cout, std::cerr);
  if (!report_path.empty()) verify_options.out_path = report_path;
  return grasp::cli::cmd_verify(verify_options, std::cout, std::cerr);
}
