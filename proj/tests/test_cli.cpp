#include <botecon/io.hpp>

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include <unistd.h>

#include "test_support.hpp"

using namespace botecon;
namespace fs = std::filesystem;

namespace {

const fs::path kCli = BOTECON_CLI_PATH;
const fs::path kScenarios = BOTECON_SCENARIO_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("botecon-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& stderr_file = {}) {
  std::string cmd = kCli.string() + " " + args;
  cmd += stderr_file.empty() ? " 2>/dev/null" : " 2>" + stderr_file.string();
  cmd += " >/dev/null";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

int line_count(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("analyze reproduces the observed-market bound") {
  TempDir tmp;
  const fs::path out = tmp.path / "analyze.json";
  const int rc = run_cli("analyze --scenario " + (kScenarios / "casino_case.json").string() +
                         " --out " + out.string());
  CHECK(rc == 0);
  const json report = json::parse(read_text_file(out));
  CHECK(report["min_attackers"]["ratio"].get<double>() == doctest::Approx(17.857).epsilon(1e-4));
  CHECK(report["min_attackers"]["ratio_floor"] == 17.0);
  CHECK(report["min_attackers"]["min_n"] == 5);
  CHECK(report["tool_version"] == "0.1.0");
  CHECK(report["scenario_hash"].get<std::string>().size() == 16);
}

TEST_CASE("usage errors exit with code 1") {
  TempDir tmp;
  CHECK(run_cli("analyze") == 1);                       // missing --scenario
  CHECK(run_cli("analyze --scenario /no/such/file.json") == 1);
  CHECK(run_cli("frobnicate --scenario x") == 1);       // unknown subcommand
  CHECK(run_cli("analyze --scenario x --bogus-flag") == 1);
  const fs::path casino = kScenarios / "casino_case.json";
  CHECK(run_cli("sweep --scenario " + casino.string() + " --sweep scenario.bogus=0:1:3") == 1);
  CHECK(run_cli("sweep --scenario " + casino.string() +
                " --sweep defense.virtual_bot_fraction=0:1:3") == 1);  // defense sweep needs trials
  CHECK(run_cli("simulate --scenario " + casino.string() + " --format yaml") == 1);
  CHECK(run_cli("defense-compare --scenario " + casino.string()) == 1);  // missing --defense
}

TEST_CASE("schema violations exit with code 1 and name the key") {
  TempDir tmp;
  const Scenario s = load_scenario(kScenarios / "casino_case.json");
  json j = to_json(s);
  j.erase("usagefee");
  j["usagefe"] = 10.0;
  write_text_file(tmp.path / "typo.json", j.dump(2));
  const fs::path err = tmp.path / "err.txt";
  CHECK(run_cli("analyze --scenario " + (tmp.path / "typo.json").string(), err) == 1);
  CHECK(read_text_file(err).find("usagefe") != std::string::npos);
}

TEST_CASE("a payout floor below the fee ceiling blocks analysis with code 2") {
  TempDir tmp;
  Scenario s = load_scenario(kScenarios / "casino_case.json");
  s.min_payout = 10;
  s.usagefee_max = 50;
  save_scenario(s, tmp.path / "violating.json");
  const fs::path err = tmp.path / "err.txt";
  CHECK(run_cli("analyze --scenario " + (tmp.path / "violating.json").string(), err) == 2);
  CHECK(read_text_file(err).find("C_min >= usagefee_max") != std::string::npos);
}

TEST_CASE("an infeasible break-even exits with code 2 but still reports") {
  TempDir tmp;
  Scenario s = load_scenario(kScenarios / "casino_case.json");
  s.rents(0, 1) = 1e7;  // attacker 1 can never recover this rent
  s.rents(1, 0) = 0;
  save_scenario(s, tmp.path / "infeasible.json");
  const fs::path out = tmp.path / "report.json";
  CHECK(run_cli("analyze --scenario " + (tmp.path / "infeasible.json").string() + " --out " +
                out.string()) == 2);
  const json report = json::parse(read_text_file(out));
  CHECK_FALSE(report["attackers"][0]["breakeven"]["feasible"].get<bool>());
}

TEST_CASE("sweep emits one row per value and player") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep.csv";
  const int rc = run_cli("sweep --scenario " + (kScenarios / "single_attacker.json").string() +
                         " --sweep scenario.usagefee=0:100:11 --out " + out.string());
  CHECK(rc == 0);
  const std::string csv = read_text_file(out);
  // Header plus 11 values x 3 players (target, one attacker, customer).
  CHECK(line_count(csv) == 1 + 11 * 3);
  CHECK(csv.rfind("sweep_param,sweep_value,player,mean,", 0) == 0);
}

TEST_CASE("explicit sweep value lists work") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep.csv";
  const int rc = run_cli("sweep --scenario " + (kScenarios / "nonzero_sum_low_fee.json").string() +
                         " --sweep scenario.usagefee=5,15,25 --out " + out.string());
  CHECK(rc == 0);
  CHECK(line_count(read_text_file(out)) == 1 + 3 * 4);  // target, two attackers, customer
}

TEST_CASE("repeated commands emit byte-identical files") {
  TempDir tmp;
  const std::string scenario = (kScenarios / "nonzero_sum_low_fee.json").string();
  const std::string defense = (fs::path(BOTECON_SCENARIO_DIR).parent_path() / "defenses" /
                               "honeypot_split.json").string();
  const fs::path a = tmp.path / "a", b = tmp.path / "b";

  CHECK(run_cli("simulate --scenario " + scenario + " --defense " + defense +
                " --trials 3000 --seed 42 --threads 1 --out " + a.string()) == 0);
  CHECK(run_cli("simulate --scenario " + scenario + " --defense " + defense +
                " --trials 3000 --seed 42 --threads 4 --out " + b.string()) == 0);
  CHECK(read_text_file(a) == read_text_file(b));

  CHECK(run_cli("sweep --scenario " + scenario +
                " --sweep scenario.usagefee=0:50:5 --trials 500 --seed 9 --out " +
                a.string()) == 0);
  CHECK(run_cli("sweep --scenario " + scenario +
                " --sweep scenario.usagefee=0:50:5 --trials 500 --seed 9 --out " +
                b.string()) == 0);
  CHECK(read_text_file(a) == read_text_file(b));

  // Different seeds genuinely change the output.
  CHECK(run_cli("simulate --scenario " + scenario + " --trials 500 --seed 1 --out " +
                a.string()) == 0);
  CHECK(run_cli("simulate --scenario " + scenario + " --trials 500 --seed 2 --out " +
                b.string()) == 0);
  CHECK(read_text_file(a) != read_text_file(b));
}

TEST_CASE("help exits cleanly") { CHECK(run_cli("--help") == 0); }
