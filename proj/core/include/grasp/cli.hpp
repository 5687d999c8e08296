#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "grasp/fermion_rep.hpp"
#include "grasp/verify.hpp"

namespace grasp::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParity = 3;

/// Parses a whitespace-separated query: creation tokens `cN+` first, then
/// annihilation tokens `cN`, mirroring normal ordering.  Tokens out of
/// order or malformed raise ValidationError; indices are checked against
/// `modes`.
CorrelationQuery parse_query(const std::string& text, int modes);

struct ComputeOptions {
  std::string state_path;
  std::string flavor;  // "p" or "phi"
  std::string out_path;
  bool allow_parity_violation = false;
};

/// Loads, validates, computes one representation, and writes it as JSON.
int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);

struct MomentsOptions {
  std::string state_path;
  std::string query;
  bool allow_parity_violation = false;
};

/// Prints a table with the query evaluated via both distributions and the
/// dense trace, plus the largest pairwise discrepancy.
int cmd_moments(const MomentsOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string scope = "all";
  std::uint64_t seed = 1;
  std::optional<std::string> out_path;
  BosonVerifyParams boson;
};

/// Runs the verification suite, prints one line per check, and optionally
/// writes the JSON report.  Returns kExitOk only when every check passes.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Deterministic formatting helpers used for byte-stable output.
std::string format_real(double value);
std::string format_complex(Cplx value);

}  // namespace grasp::cli
