#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grasp/cli.hpp"
#include "grasp/serialization.hpp"

using namespace grasp;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string write_fixture(const std::string& name, const std::string& content) {
  const auto path = temp_file(name);
  std::ofstream out(path);
  out << content;
  return path.string();
}

const char* kSingleModeP25 = R"({
  "modes": 1,
  "elements": [
    {"bra": "0", "ket": "0", "re": 0.75},
    {"bra": "1", "ket": "1", "re": 0.25}
  ]
})";

const char* kPairState = R"({
  "modes": 2,
  "elements": [
    {"bra": "00", "ket": "00", "re": 0.36},
    {"bra": "00", "ket": "11", "re": 0.48},
    {"bra": "11", "ket": "11", "re": 0.64}
  ]
})";

const char* kParityViolating = R"({
  "modes": 1,
  "elements": [
    {"bra": "0", "ket": "0", "re": 0.5},
    {"bra": "1", "ket": "1", "re": 0.5},
    {"bra": "0", "ket": "1", "re": 0.5}
  ]
})";

}  // namespace

TEST_CASE("parse_query_accepts_normal_order") {
  const CorrelationQuery q = cli::parse_query("c1+ c2+ c2 c1", 2);
  CHECK(q.creation == std::vector<int>{1, 2});
  CHECK(q.annihilation == std::vector<int>{2, 1});

  const CorrelationQuery empty = cli::parse_query("", 2);
  CHECK(empty.creation.empty());
  CHECK(empty.annihilation.empty());
}

TEST_CASE("parse_query_rejects_malformed_input") {
  CHECK_THROWS_AS(cli::parse_query("x1", 2), ValidationError);
  CHECK_THROWS_AS(cli::parse_query("c", 2), ValidationError);
  CHECK_THROWS_AS(cli::parse_query("c1 c2+", 2), ValidationError);  // wrong order
  CHECK_THROWS_AS(cli::parse_query("c3+", 2), ValidationError);     // out of range
  CHECK_THROWS_AS(cli::parse_query("c1x+", 2), ValidationError);
}

TEST_CASE("cmd_compute_writes_p_representation") {
  const std::string state = write_fixture("grasp_p25.json", kSingleModeP25);
  const std::string out_path = temp_file("grasp_p25_rep.json").string();

  std::ostringstream out, err;
  const int code = cli::cmd_compute({state, "p", out_path, false}, out, err);
  CHECK(code == cli::kExitOk);

  const PRepresentation rep = representation_from_json(read_text_file(out_path));
  CHECK(rep.flavor == Flavor::P);
  CHECK(rep.poly.coefficient(Monomial{0}) == Cplx(-0.25, 0.0));
  CHECK(rep.poly.coefficient(Monomial{0b11}) == Cplx(1.0, 0.0));
}

TEST_CASE("cmd_compute_writes_phi_representation") {
  const std::string state = write_fixture("grasp_p25b.json", kSingleModeP25);
  const std::string out_path = temp_file("grasp_p25_phi.json").string();

  std::ostringstream out, err;
  const int code = cli::cmd_compute({state, "phi", out_path, false}, out, err);
  CHECK(code == cli::kExitOk);

  const PRepresentation rep = representation_from_json(read_text_file(out_path));
  CHECK(rep.flavor == Flavor::Phi);
  CHECK(rep.poly.coefficient(Monomial{0}) == Cplx(0.25, 0.0));
  CHECK(rep.poly.coefficient(Monomial{0b11}) == Cplx(0.5, 0.0));
}

TEST_CASE("cmd_compute_exit_codes") {
  const std::string parity = write_fixture("grasp_parity.json", kParityViolating);
  const std::string out_path = temp_file("grasp_parity_rep.json").string();

  std::ostringstream out, err;
  CHECK(cli::cmd_compute({parity, "p", out_path, false}, out, err) ==
        cli::kExitParity);
  CHECK(err.str().find("(0, 1)") != std::string::npos);

  std::ostringstream out2, err2;
  const std::string state = write_fixture("grasp_p25c.json", kSingleModeP25);
  CHECK(cli::cmd_compute({state, "bogus", out_path, false}, out2, err2) ==
        cli::kExitValidation);

  std::ostringstream out3, err3;
  CHECK(cli::cmd_compute({"/nonexistent/state.json", "p", out_path, false}, out3,
                         err3) == cli::kExitValidation);
}

TEST_CASE("cmd_moments_prints_triple_agreement") {
  const std::string state = write_fixture("grasp_pair.json", kPairState);
  std::ostringstream out, err;
  const int code = cli::cmd_moments({state, "c1+ c2+ c2 c1", false}, out, err);
  CHECK(code == cli::kExitOk);
  const std::string table = out.str();
  CHECK(table.find("via_p") != std::string::npos);
  CHECK(table.find("0.64") != std::string::npos);
  CHECK(table.find("max_discrepancy") != std::string::npos);
}

TEST_CASE("cmd_moments_single_creation_is_zero") {
  const std::string state = write_fixture("grasp_p25d.json", kSingleModeP25);
  std::ostringstream out, err;
  const int code = cli::cmd_moments({state, "c1+", false}, out, err);
  CHECK(code == cli::kExitOk);
  // All three routes print exactly zero.
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(row.find("c1+") != std::string::npos);
  std::istringstream cells(row.substr(row.find("c1+") + 3));
  std::string a, b, c;
  cells >> a >> b >> c;
  CHECK(a == "0");
  CHECK(b == "0");
  CHECK(c == "0");
}

TEST_CASE("cmd_moments_rejects_malformed_query") {
  const std::string state = write_fixture("grasp_p25e.json", kSingleModeP25);
  std::ostringstream out, err;
  CHECK(cli::cmd_moments({state, "c1 c1+", false}, out, err) ==
        cli::kExitValidation);
}

TEST_CASE("cmd_verify_fermion_scope_is_byte_stable") {
  cli::VerifyOptions options;
  options.scope = "fermion";
  options.seed = 7;
  const std::string report_path = temp_file("grasp_report.json").string();
  options.out_path = report_path;

  std::ostringstream out1, err1;
  CHECK(cli::cmd_verify(options, out1, err1) == cli::kExitOk);
  CHECK(out1.str().find("PASS") != std::string::npos);
  CHECK(out1.str().find("FAIL") == std::string::npos);

  const std::string report = read_text_file(report_path);
  CHECK(report.find("\"suite_version\"") != std::string::npos);
  CHECK(report.find("\"anchor\"") != std::string::npos);
  CHECK(report.find("\"seed\": 7") != std::string::npos);

  std::ostringstream out2, err2;
  options.out_path.reset();
  CHECK(cli::cmd_verify(options, out2, err2) == cli::kExitOk);
  CHECK(out1.str() == out2.str());
}

TEST_CASE("cmd_verify_rejects_bad_scope") {
  cli::VerifyOptions options;
  options.scope = "everything";
  std::ostringstream out, err;
  CHECK(cli::cmd_verify(options, out, err) == cli::kExitValidation);
}
