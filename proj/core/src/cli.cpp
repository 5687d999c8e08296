#include "grasp/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "grasp/serialization.hpp"
#include "grasp/state_spec.hpp"

namespace grasp::cli {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

FockMatrix load_density(const std::string& path, bool allow_parity_violation) {
  StateSpec spec = state_spec_from_json(read_text_file(path));
  if (allow_parity_violation) spec.allow_parity_violation = true;
  return density_from_spec(spec);
}

int exit_code_for(const ValidationError& error) {
  return error.kind() == ValidationError::Kind::Parity ? kExitParity
                                                       : kExitValidation;
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_complex(Cplx value) {
  if (std::abs(value.imag()) < 1e-12) return format_real(value.real());
  std::string out = format_real(value.real());
  out += value.imag() < 0 ? "-" : "+";
  out += format_real(std::abs(value.imag()));
  out += "i";
  return out;
}

CorrelationQuery parse_query(const std::string& text, int modes) {
  CorrelationQuery query;
  bool seen_annihilation = false;
  for (const std::string& token : split_tokens(text)) {
    if (token.size() < 2 || token[0] != 'c')
      throw ValidationError(ValidationError::Kind::Format,
                            "malformed query token '" + token +
                                "' (expected cN or cN+)");
    const bool is_creation = token.back() == '+';
    const std::string digits =
        token.substr(1, token.size() - (is_creation ? 2 : 1));
    if (digits.empty())
      throw ValidationError(ValidationError::Kind::Format,
                            "malformed query token '" + token + "'");
    int mode = 0;
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw ValidationError(ValidationError::Kind::Format,
                              "malformed query token '" + token + "'");
      mode = mode * 10 + (c - '0');
    }
    if (mode < 1 || mode > modes)
      throw ValidationError(ValidationError::Kind::Format,
                            "query mode " + std::to_string(mode) +
                                " out of range for " + std::to_string(modes) +
                                " modes");
    if (is_creation) {
      if (seen_annihilation)
        throw ValidationError(ValidationError::Kind::Format,
                              "creation token '" + token +
                                  "' appears after an annihilation token; "
                                  "queries are normally ordered");
      query.creation.push_back(mode);
    } else {
      seen_annihilation = true;
      query.annihilation.push_back(mode);
    }
  }
  return query;
}

int cmd_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    if (options.flavor != "p" && options.flavor != "phi") {
      err << "error: flavor must be 'p' or 'phi'\n";
      return kExitValidation;
    }
    const FockMatrix rho =
        load_density(options.state_path, options.allow_parity_violation);
    const PRepresentation rep =
        options.flavor == "p" ? compute_p(rho) : compute_phi(rho);
    write_text_file(options.out_path, representation_to_json(rep));
    out << "wrote " << options.flavor << " representation for "
        << rep.modes << " mode" << (rep.modes == 1 ? "" : "s") << " to "
        << options.out_path << "\n";
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_moments(const MomentsOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    const FockMatrix rho =
        load_density(options.state_path, options.allow_parity_violation);
    const CorrelationQuery query = parse_query(options.query, rho.basis.modes);

    const Cplx via_p = correlation_via_p(compute_p(rho), query);
    const Cplx via_phi = correlation_via_phi(compute_phi(rho), query);
    const Cplx direct = correlation_direct(rho, query);
    const double discrepancy =
        std::max({std::abs(via_p - via_phi), std::abs(via_p - direct),
                  std::abs(via_phi - direct)});

    const std::string label = options.query.empty() ? "<identity>" : options.query;
    out << std::left << std::setw(24) << "query" << std::setw(22) << "via_p"
        << std::setw(22) << "via_phi" << std::setw(22) << "direct"
        << "max_discrepancy\n";
    out << std::left << std::setw(24) << label << std::setw(22)
        << format_complex(via_p) << std::setw(22) << format_complex(via_phi)
        << std::setw(22) << format_complex(direct) << format_real(discrepancy)
        << "\n";
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    const auto scope = parse_scope(options.scope);
    if (!scope) {
      err << "error: scope must be fermion, boson, or all\n";
      return kExitValidation;
    }
    const VerificationReport report =
        run_verification(*scope, options.seed, options.boson);

    for (const auto& check : report.checks) {
      out << (check.passed ? "PASS" : "FAIL") << "  " << std::left
          << std::setw(48) << check.name << " residual=" << std::setw(14)
          << format_real(check.residual)
          << (check.guard ? " must-exceed=" : " tolerance=")
          << format_real(check.tolerance);
      if (!check.error.empty()) out << "  error: " << check.error;
      out << "\n";
    }
    out << report.passed_count() << "/" << report.checks.size()
        << " checks passed (scope " << report.scope << ", seed " << report.seed
        << ")\n";

    if (options.out_path)
      write_text_file(*options.out_path, report_to_json(report));
    return report.all_passed() ? kExitOk : kExitInternal;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace grasp::cli
