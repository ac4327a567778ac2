#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("quadspin_cli_" + name);
}

RunResult run_cli(const std::string& args) {
  const fs::path out_path = temp_file("stdout.txt");
  const fs::path err_path = temp_file("stderr.txt");
  const std::string command = std::string(QUADSPIN_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

// value of "key   value" lines printed by the CLI
double printed_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0 && (line.size() == key.size() || line[key.size()] == ' ')) {
      return std::stod(line.substr(key.size()));
    }
  }
  FAIL("missing line for key ", key, " in output:\n", out);
  return 0.0;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("point evaluates the reference orientation") {
  const RunResult r = run_cli("point --alpha 5 --beta 5 --eta 0.14 --theta 0.94 --phi 0");
  REQUIRE(r.exit_code == 0);
  CHECK(printed_value(r.out, "concurrence") == doctest::Approx(0.2314726).epsilon(1e-5));
  CHECK(printed_value(r.out, "magnetization") == doctest::Approx(-0.954268).epsilon(1e-5));
  CHECK(r.out.find("nu") != std::string::npos);
  CHECK(r.out.find("levels") != std::string::npos);
}

TEST_CASE("point without a field is separable") {
  const RunResult r = run_cli("point --alpha 0 --beta 5 --eta 0.14 --theta 0.94 --phi 0");
  REQUIRE(r.exit_code == 0);
  CHECK(printed_value(r.out, "concurrence") == 0.0);
}

TEST_CASE("point rejects an out-of-range angle with exit code 2") {
  const RunResult r = run_cli("point --alpha 1 --beta 1 --theta 4.0");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("theta") != std::string::npos);
  CHECK(r.err.find("[0, pi]") != std::string::npos);
}

TEST_CASE("degrees flag converts angles on input") {
  const RunResult radians = run_cli("point --alpha 5 --beta 5 --eta 0.14 --theta 0.94");
  const RunResult degrees =
      run_cli("point --alpha 5 --beta 5 --eta 0.14 --theta 53.8580327423 --degrees");
  REQUIRE(radians.exit_code == 0);
  REQUIRE(degrees.exit_code == 0);
  // the two theta values differ by ~2e-12 rad; the comparison tolerance
  // sits above the nu noise floor of this cold point
  CHECK(printed_value(degrees.out, "concurrence") ==
        doctest::Approx(printed_value(radians.out, "concurrence")).epsilon(1e-6));
}

TEST_CASE("temperature-style sweep finds the onset region") {
  const fs::path out = temp_file("fig4.csv");
  const RunResult r =
      run_cli("sweep --axis beta:0.01:20:400 --ratio-alpha-beta 1 --eta 0.14 --theta 0.94 "
              "--phi 0 --output " + out.string());
  REQUIRE(r.exit_code == 0);

  const auto rows = lines_of(slurp(out));
  fs::remove(out);
  REQUIRE(rows.size() == 401);  // header + 400 records
  CHECK(rows[0] == "alpha,beta,eta,theta,phi,concurrence,magnetization,e1,e2,e3,e4");

  double first_entangled_beta = -1.0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    std::istringstream fields(rows[k]);
    std::string token;
    std::vector<double> values;
    while (std::getline(fields, token, ',')) {
      values.push_back(std::stod(token));
    }
    REQUIRE(values.size() == 11);
    if (values[5] > 0.0 && first_entangled_beta < 0.0) {
      first_entangled_beta = values[1];
    }
  }
  // the onset sits between beta = 0.45 and 0.65 on this grid
  CHECK(first_entangled_beta > 0.45);
  CHECK(first_entangled_beta < 0.65);
}

TEST_CASE("one-point sweep emits a header and a single row") {
  const RunResult r = run_cli("sweep --axis alpha:5:5:1 --beta 5 --eta 0.14 --theta 0.94");
  REQUIRE(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 2);
}

TEST_CASE("json and csv outputs agree to every printed digit") {
  const std::string grid = "--axis alpha:0:5:7 --beta 5 --eta 0.14 --theta 0.94 --phi 0";
  const fs::path csv_path = temp_file("cross.csv");
  const fs::path json_path = temp_file("cross.json");
  REQUIRE(run_cli("sweep " + grid + " --output " + csv_path.string()).exit_code == 0);
  REQUIRE(run_cli("sweep " + grid + " --format json --output " + json_path.string())
              .exit_code == 0);

  const auto csv_rows = lines_of(slurp(csv_path));
  const nlohmann::json parsed = nlohmann::json::parse(slurp(json_path));
  fs::remove(csv_path);
  fs::remove(json_path);

  const auto& records = parsed.at("records");
  REQUIRE(csv_rows.size() == records.size() + 1);
  for (std::size_t row = 0; row < records.size(); ++row) {
    std::istringstream fields(csv_rows[row + 1]);
    std::string token;
    std::vector<double> values;
    while (std::getline(fields, token, ',')) {
      values.push_back(std::stod(token));
    }
    CHECK(records[row].at("alpha").get<double>() == values[0]);
    CHECK(records[row].at("concurrence").get<double>() == values[5]);
    CHECK(records[row].at("magnetization").get<double>() == values[6]);
  }
}

TEST_CASE("repeated sweeps are byte-identical") {
  const std::string grid =
      "sweep --axis beta:0.1:10:40 --ratio-alpha-beta 1 --eta 0.14 --theta 0.94";
  const fs::path first = temp_file("det1.csv");
  const fs::path second = temp_file("det2.csv");
  REQUIRE(run_cli(grid + " --output " + first.string()).exit_code == 0);
  REQUIRE(run_cli(grid + " --output " + second.string()).exit_code == 0);
  CHECK(slurp(first) == slurp(second));

  // thread cap must not change the bytes either
  const fs::path third = temp_file("det3.csv");
  const std::string env_prefix = "QUADSPIN_THREADS=2 ";
  const fs::path out_path = temp_file("stdout_env.txt");
  const std::string command = env_prefix + std::string(QUADSPIN_CLI_PATH) + " " + grid +
                              " --output " + third.string() + " > " + out_path.string() +
                              " 2>&1";
  REQUIRE(std::system(command.c_str()) == 0);
  CHECK(slurp(first) == slurp(third));

  fs::remove(first);
  fs::remove(second);
  fs::remove(third);
  fs::remove(out_path);
}

TEST_CASE("sweep reports unwritable output paths with exit code 3") {
  const RunResult r = run_cli(
      "sweep --axis alpha:0:1:2 --beta 1 --output /nonexistent-dir-quadspin/out.csv");
  CHECK(r.exit_code == 3);
}

TEST_CASE("sweep rejects a parameter that is both swept and fixed") {
  const RunResult r = run_cli("sweep --axis alpha:0:1:5 --alpha 2 --beta 1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("max-angles locates the strong-asymmetry maximum") {
  const RunResult r = run_cli("max-angles --alpha 5 --beta 5 --eta 0.92");
  REQUIRE(r.exit_code == 0);
  CHECK(printed_value(r.out, "cmax") == doctest::Approx(0.35259).epsilon(1e-3));
  CHECK(printed_value(r.out, "theta") == doctest::Approx(0.4006).epsilon(1e-2));
}

TEST_CASE("critical-temp reports both convention temperatures") {
  const RunResult r = run_cli("critical-temp --preset cu63-5coord --ratio 1 --theta 0.94 --phi 0");
  REQUIRE(r.exit_code == 0);
  const double beta_c = printed_value(r.out, "beta_c");
  CHECK(beta_c == doctest::Approx(0.48572).epsilon(1e-2));
  CHECK(printed_value(r.out, "T_eq7_mK") ==
        doctest::Approx(0.41860064583632 * 0.6 / beta_c).epsilon(1e-3));
  CHECK(printed_value(r.out, "T_paper-mk_mK") ==
        doctest::Approx(5.02320775 * 0.6 / beta_c).epsilon(1e-3));
  CHECK(r.out.find("eq7") != std::string::npos);
  CHECK(r.out.find("paper-mk") != std::string::npos);
}

TEST_CASE("critical-temp rejects unknown presets with exit code 2") {
  const RunResult r = run_cli("critical-temp --preset nonexistent --theta 0.94");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("preset") != std::string::npos);
}

TEST_CASE("critical-temp accepts a custom material from flags") {
  const RunResult r = run_cli(
      "critical-temp --coupling-mhz 62.8 --eta 0.14 --ratio 1 --theta 0.94 --phi 0");
  REQUIRE(r.exit_code == 0);
  CHECK(printed_value(r.out, "beta_c") == doctest::Approx(0.48572).epsilon(1e-2));
}

TEST_CASE("fit-witness reproduces the linear witness and emits its table") {
  const fs::path out = temp_file("witness.csv");
  const RunResult r = run_cli(
      "fit-witness --beta 10 --theta 0.94 --phi 0 --eta 0.14 --alpha-max 1 --points 50 "
      "--output " + out.string());
  REQUIRE(r.exit_code == 0);
  const double slope = printed_value(r.out, "slope");
  CHECK(std::abs(slope - (-1.0 / 1.9)) < 0.1 / 1.9);
  CHECK(std::abs(printed_value(r.out, "intercept")) < 0.02);
  CHECK(printed_value(r.out, "max_residual") < 0.02);

  const auto rows = lines_of(slurp(out));
  fs::remove(out);
  REQUIRE(rows.size() == 51);
  CHECK(rows[0] == "alpha,concurrence,magnetization,witness");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    std::istringstream fields(rows[k]);
    std::string token;
    std::vector<double> values;
    while (std::getline(fields, token, ',')) {
      values.push_back(std::stod(token));
    }
    REQUIRE(values.size() == 4);
    // witness column is -m/1.9 of the (reduced) magnetization column
    CHECK(values[3] == doctest::Approx(-values[2] / 1.9).epsilon(1e-9));
  }
}

TEST_CASE("fit-witness needs at least ten points") {
  const RunResult r = run_cli("fit-witness --beta 10 --theta 0.94 --points 5 --output -");
  CHECK(r.exit_code == 4);
}

TEST_CASE("config-file values are overridden by command-line flags") {
  const fs::path config = temp_file("point.conf");
  {
    std::ofstream out(config);
    out << "# reference orientation\n";
    out << "alpha=5\n";
    out << "beta=7\n";
    out << "eta=0.14\n";
    out << "theta=0.94\n";
  }
  const RunResult from_config = run_cli("point --config " + config.string());
  REQUIRE(from_config.exit_code == 0);
  CHECK(printed_value(from_config.out, "beta") == 7.0);

  const RunResult overridden = run_cli("point --config " + config.string() + " --beta 5");
  REQUIRE(overridden.exit_code == 0);
  CHECK(printed_value(overridden.out, "beta") == 5.0);
  CHECK(printed_value(overridden.out, "concurrence") ==
        doctest::Approx(0.2314726).epsilon(1e-5));
  fs::remove(config);
}

TEST_CASE("unknown config keys are rejected") {
  const fs::path config = temp_file("bad.conf");
  {
    std::ofstream out(config);
    out << "alpha=5\nbeta=5\nbanana=1\n";
  }
  const RunResult r = run_cli("point --config " + config.string());
  CHECK(r.exit_code == 2);
  fs::remove(config);
}

TEST_CASE("help is available on every subcommand") {
  for (const std::string sub : {"point", "sweep", "max-angles", "critical-temp", "fit-witness"}) {
    const RunResult r = run_cli(sub + " --help");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("--help") != std::string::npos);
  }
  CHECK(run_cli("--version").exit_code == 0);
}
