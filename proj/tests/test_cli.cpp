#include <doctest.h>

#include <sys/wait.h>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

#include "hb/io.hpp"
#include "hb/witness.hpp"

// Drives the installed binary through a shell, so these tests pin the
// process-level contract: exit code 0 for accepted, 1 for rejected,
// 2 for any usage or input error.

using hb::Complex;
using hb::Index;
using hb::Matrix;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "hb_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

CliResult run_command(const std::string& command) {
  static int counter = 0;
  const auto capture = scratch_dir() / ("capture_" + std::to_string(counter++) + ".txt");
  const std::string full = command + " > " + capture.string() + " 2>&1";
  const int status = std::system(full.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), hb::read_text_file(capture.string())};
}

CliResult run_cli(const std::string& args) {
  return run_command(std::string("\"") + HB_CLI_PATH + "\" " + args);
}

std::string write_matrix(const std::string& name, const Matrix& M) {
  const auto path = (scratch_dir() / name).string();
  hb::write_text_file(path, hb::matrix_to_json(M).dump());
  return path;
}

std::string write_points(const std::string& name, const hb::RealMatrix& coords) {
  const auto path = (scratch_dir() / name).string();
  hb::write_text_file(path, hb::point_set_to_json(hb::PointSet(coords)).dump());
  return path;
}

bool same_bits(const Matrix& X, const Matrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) return false;
  for (Index i = 0; i < X.rows(); ++i)
    for (Index j = 0; j < X.cols(); ++j)
      if (std::bit_cast<std::uint64_t>(X(i, j).real()) !=
              std::bit_cast<std::uint64_t>(Y(i, j).real()) ||
          std::bit_cast<std::uint64_t>(X(i, j).imag()) !=
              std::bit_cast<std::uint64_t>(Y(i, j).imag()))
        return false;
  return true;
}

const std::string& identity2() {
  static const std::string path = write_matrix("identity2.json", Matrix::Identity(2, 2));
  return path;
}

const std::string& zero2() {
  static const std::string path = write_matrix("zero2.json", Matrix::Zero(2, 2));
  return path;
}

const std::string& ones2() {
  static const std::string path = write_matrix("ones2.json", Matrix::Ones(2, 2));
  return path;
}

const std::string& ones_col2() {
  static const std::string path = write_matrix("ones_col2.json", Matrix::Ones(2, 1));
  return path;
}

}  // namespace

TEST_CASE("cli: main bound on identity factors") {
  const CliResult res =
      run_cli("bound --main --format json " + identity2() + " " + identity2());
  CHECK(res.exit_code == 0);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK(j["kind"] == "main");
  CHECK(j["gamma"].get<double>() == 0.5);
  CHECK(j["accepted"].get<bool>());
  CHECK_FALSE(j["ambiguous_rank"].get<bool>());
}

TEST_CASE("cli: default output is a readable table") {
  const CliResult res = run_cli("bound --main " + identity2() + " " + identity2());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("gamma") != std::string::npos);
  CHECK(res.output.find("0.5") != std::string::npos);
}

TEST_CASE("cli: --out writes the report to a file") {
  const auto out = (scratch_dir() / "main_report.json").string();
  const CliResult res = run_cli("bound --main --format json --out " + out + " " +
                                identity2() + " " + identity2());
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());
  const nlohmann::json j = hb::parse_json(hb::read_text_file(out));
  CHECK(j["gamma"].get<double>() == 0.5);
}

TEST_CASE("cli: every bound mode runs end to end") {
  const std::string c = write_matrix("compress_row.json", (Matrix(1, 2) << 1, 0).finished());
  Matrix b(2, 1);
  b << std::numbers::sqrt2, 0.0;
  const std::string bfile = write_matrix("sqrt2_col.json", b);

  const CliResult compressed = run_cli("bound --compressed --format json " + c + " " +
                                       identity2() + " " + bfile);
  CHECK(compressed.exit_code == 0);
  CHECK(hb::parse_json(compressed.output)["gamma"].get<double>() == 1.0);

  const CliResult multiplier = run_cli("bound --multiplier --format json " + ones2() + " " +
                                       ones_col2() + " " + ones_col2());
  CHECK(multiplier.exit_code == 0);
  CHECK(hb::parse_json(multiplier.output)["gamma"].get<double>() == 1.0);

  const CliResult multifactor =
      run_cli("bound --multifactor --format json " + identity2() + " " + identity2());
  CHECK(multifactor.exit_code == 0);
  CHECK(hb::parse_json(multifactor.output)["gamma"].get<double>() == 0.5);

  Matrix M(2, 2);
  M << 2, 1, 1, 2;
  const std::string mfile = write_matrix("spd2.json", M);
  const CliResult classical =
      run_cli("bound --classical --format json " + mfile + " " + identity2());
  CHECK(classical.exit_code == 0);
  const nlohmann::json cj = hb::parse_json(classical.output);
  CHECK(cj["reports"].size() == 3);
  CHECK(cj["omitted"].empty());

  const CliResult hkv = run_cli("bound --hkv --format json " + identity2() + " " + identity2());
  CHECK(hkv.exit_code == 0);
  CHECK(hb::parse_json(hkv.output)["gamma"].get<double>() == 0.5);

  const CliResult sqrt_run =
      run_cli("bound --sqrt --format json " + identity2() + " " + identity2());
  CHECK(sqrt_run.exit_code == 0);
  CHECK(hb::parse_json(sqrt_run.output)["gamma"].get<double>() == 0.5);
}

TEST_CASE("cli: upper bound on diagonal matrices") {
  Matrix D(2, 2);
  D << 2, 0, 0, 3;
  const std::string dfile = write_matrix("diag23.json", D);
  const CliResult res = run_cli("bound --upper --format json " + dfile + " " + dfile);
  CHECK(res.exit_code == 0);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK(j["kind"] == "upper");
  CHECK(j["gamma"].get<double>() == 1.0);
}

TEST_CASE("cli: rejected Loewner comparison exits with 1") {
  const CliResult res =
      run_cli("verify --loewner --format json " + zero2() + " " + identity2());
  CHECK(res.exit_code == 1);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK_FALSE(j["accepted"].get<bool>());
  CHECK(j["lambda_min"].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("cli: verify accepts PSD input and reports the tolerance used") {
  const CliResult res = run_cli("verify --psd --format json " + identity2());
  CHECK(res.exit_code == 0);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK(j.size() == 4);
  CHECK(j["tol_used"].get<double>() == 1e-8);

  const std::string vec = write_matrix("ones_vec.json", Matrix::Ones(2, 1));
  const CliResult identity_run = run_cli("verify --identity --format json " + identity2() +
                                         " " + identity2() + " " + vec + " " + vec);
  CHECK(identity_run.exit_code == 0);
  CHECK(hb::parse_json(identity_run.output)["within"].get<bool>());
}

TEST_CASE("cli: HB_DEFAULT_TOL seeds the tolerances") {
  const CliResult res = run_command(std::string("HB_DEFAULT_TOL=0.5 \"") + HB_CLI_PATH +
                                    "\" verify --psd --format json " + identity2());
  CHECK(res.exit_code == 0);
  CHECK(hb::parse_json(res.output)["tol_used"].get<double>() == 0.5);

  const CliResult bad = run_command(std::string("HB_DEFAULT_TOL=abc \"") + HB_CLI_PATH +
                                    "\" verify --psd " + identity2());
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("HB_DEFAULT_TOL") != std::string::npos);
}

TEST_CASE("cli: kernel subcommands") {
  hb::RealMatrix angles(2, 1);
  angles << 0.0, std::numbers::pi / 2;
  const std::string pts1 = write_points("angles.json", angles);

  const CliResult cosine = run_cli("kernel --cosine --format json " + pts1);
  CHECK(cosine.exit_code == 0);
  const nlohmann::json cj = hb::parse_json(cosine.output);
  CHECK(cj["kernel"] == "cosine");
  CHECK(cj["certificate"]["accepted"].get<bool>());
  CHECK(hb::matrix_from_json(cj["gram"])(0, 0) == Complex(1.0, 0.0));

  const CliResult novak = run_cli("kernel --novak --format json " + pts1);
  CHECK(novak.exit_code == 0);
  CHECK(hb::parse_json(novak.output)["kernel"] == "cosine_floor");

  hb::RealMatrix plane(2, 2);
  plane << 0.0, 0.0, 1.0, 0.0;
  const std::string pts2 = write_points("plane.json", plane);
  const CliResult gaussian = run_cli("kernel --gaussian --lambda 0.7 --format json " + pts2);
  CHECK(gaussian.exit_code == 0);
  const nlohmann::json gj = hb::parse_json(gaussian.output);
  CHECK(gj["kernel"] == "gaussian");
  CHECK(gj["lambda"].get<double>() == 0.7);

  hb::RealMatrix shifted(2, 2);
  shifted << 0.5, -1.0, 2.0, 0.25;
  const std::string pts3 = write_points("shifted.json", shifted);
  const CliResult floor_run = run_cli("kernel --gaussian --format json " + pts2 + " " + pts3);
  CHECK(floor_run.exit_code == 0);
  CHECK(hb::parse_json(floor_run.output)["kernel"] == "gaussian_floor");

  const CliResult lambda_clash =
      run_cli("kernel --gaussian --lambda 0.5 " + pts2 + " " + pts3);
  CHECK(lambda_clash.exit_code == 2);

  const CliResult product =
      run_cli("kernel --product --format json " + ones2() + " " + ones2());
  CHECK(product.exit_code == 0);
  const nlohmann::json pj = hb::parse_json(product.output);
  CHECK(pj["accepted"].get<bool>());
  CHECK(pj["note"] == "product kernel floor");

  const CliResult power =
      run_cli("kernel --power-preserver --power 2 --format json " + identity2());
  CHECK(power.exit_code == 0);
  CHECK(hb::parse_json(power.output)["gamma"].get<double>() == 0.5);
}

TEST_CASE("cli: tight witness round trips bit for bit") {
  const auto out = (scratch_dir() / "tight.json").string();
  const CliResult res = run_cli(
      "witness --tight --n 3 --a 3 --r 2 --s 1 --seed 7 --format json --out " + out);
  CHECK(res.exit_code == 0);

  const nlohmann::json j = hb::parse_json(hb::read_text_file(out));
  CHECK(j["family"] == "tight");
  CHECK(j["confirmed"].get<bool>());
  CHECK(j["inflated_rejected"].get<bool>());
  CHECK(j["report"]["gamma"].get<double>() == 1.0);

  const hb::TightWitness expect = hb::tight_example(3, 3, 2, 1, 7);
  CHECK(same_bits(hb::matrix_from_json(j["A"]), expect.A));
  CHECK(same_bits(hb::matrix_from_json(j["B"]), expect.B));
}

TEST_CASE("cli: counterexample run succeeds when the floor fails") {
  const CliResult res = run_cli("witness --dnn --a 1 --b 1 --c 0.8 --format json");
  CHECK(res.exit_code == 0);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK(j["family"] == "dnn");
  CHECK(j["counterexample_confirmed"].get<bool>());
  CHECK(std::abs(j["defect_det"].get<double>() + 0.0192) <= 1e-12);
  CHECK_FALSE(j["defect_certificate"]["accepted"].get<bool>());
}

TEST_CASE("cli: embedding keeps the coefficient") {
  const CliResult res = run_cli("witness --embed --m 5 --format json " + identity2() + " " +
                                identity2());
  CHECK(res.exit_code == 0);
  const nlohmann::json j = hb::parse_json(res.output);
  CHECK(j["gamma_unchanged"].get<bool>());
  CHECK(j["gamma_before"].get<double>() == j["gamma_after"].get<double>());
  CHECK(j["parameters"]["m"] == 5);
}

TEST_CASE("cli: selfcheck battery passes at defaults and fails when strangled") {
  const CliResult ok = run_cli("selfcheck --trials 20 --n-max 4 --seed 1 --format json");
  CHECK(ok.exit_code == 0);
  CHECK(hb::parse_json(ok.output)["all_passed"].get<bool>());

  // psd_rtol below eigensolver noise must produce at least one rejection.
  const CliResult strangled =
      run_cli("selfcheck --trials 40 --n-max 5 --seed 3 --tol-psd 1e-16 --format json");
  CHECK(strangled.exit_code == 1);
  CHECK_FALSE(hb::parse_json(strangled.output)["all_passed"].get<bool>());
}

TEST_CASE("cli: usage and input errors exit with 2") {
  const CliResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("bound") != std::string::npos);

  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bound --main " + identity2()).exit_code == 2);
  CHECK(run_cli("bound --main --upper " + identity2() + " " + identity2()).exit_code == 2);
  CHECK(run_cli("bound --bogus").exit_code == 2);
  CHECK(run_cli("bound --main " + identity2() + " /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("witness --tight --n 3 --a 3 --r 9 --s 1").exit_code == 2);
  CHECK(run_cli("bound --main --tol-psd 2.0 " + identity2() + " " + identity2()).exit_code ==
        2);

  const auto bad = (scratch_dir() / "malformed.json").string();
  hb::write_text_file(bad, "{ this is not json");
  const CliResult malformed = run_cli("verify --psd " + bad);
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.output.find("error:") != std::string::npos);

  const std::string tall = write_matrix("identity3.json", Matrix::Identity(3, 3));
  CHECK(run_cli("bound --main " + identity2() + " " + tall).exit_code == 2);
}
