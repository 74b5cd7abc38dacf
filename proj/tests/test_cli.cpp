// End to end checks of the command line binary: output round trips through
// the JSON formats, exit codes distinguish pass / check failure / bad input.
// The binary path comes in through SYMPENCIL_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sympencil/json_io.hpp"
#include "sympencil/sweep.hpp"

using namespace sympencil;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout and stderr.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SYMPENCIL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

const std::string two_block =
    R"({"blocks":[{"kind":"H","n":2,"lambda":"1/2"},{"kind":"L","n":1}]})";

}  // namespace

TEST_CASE("canonical output matches the assembled pair") {
  auto in = write_temp("cli_structure.json", two_block);
  RunResult r = run_cli("canonical --input " + in.string() + " --format json");
  CHECK(r.exit_code == 0);

  json j = json::parse(r.output);
  CHECK(j.at("structure") == "H2(1/2) + L1");
  SymPair from_cli = sympair_from_json(j);
  SymPair direct = assemble(structure_from_json(json::parse(two_block)));
  CHECK(from_cli == direct);
}

TEST_CASE("pattern output round trips and matches the catalog") {
  auto in = write_temp("cli_structure.json", two_block);
  RunResult r = run_cli("pattern --input " + in.string() + " --format json");
  CHECK(r.exit_code == 0);

  PatternPair from_cli = pattern_from_json(json::parse(r.output));
  PatternPair direct = assemble_pattern(structure_from_json(json::parse(two_block)));
  CHECK(from_cli.mask_a().stars() == direct.mask_a().stars());
  CHECK(from_cli.mask_b().stars() == direct.mask_b().stars());
  CHECK(from_cli.param_count() == direct.param_count());
}

TEST_CASE("codim agrees with the tangent computation") {
  auto in = write_temp("cli_structure.json", two_block);
  RunResult r = run_cli("codim --input " + in.string() + " --format json");
  CHECK(r.exit_code == 0);

  json j = json::parse(r.output);
  SymPair k = assemble(structure_from_json(json::parse(two_block)));
  CHECK(j.at("codim").get<std::size_t>() == codimension(k));
  CHECK(j.at("pair_dim").get<std::size_t>() == pair_dim(k.size()));
}

TEST_CASE("verify reports a passing certificate") {
  auto in = write_temp("cli_structure.json", two_block);

  RunResult text = run_cli("verify --input " + in.string());
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("verdict: pattern is miniversal") != std::string::npos);

  RunResult js = run_cli("verify --input " + in.string() + " --format json");
  CHECK(js.exit_code == 0);
  json j = json::parse(js.output);
  CHECK(j.at("ok") == true);
  CHECK(j.at("direct_sum") == true);
  CHECK(j.at("codim") == j.at("pattern_params"));
  CHECK(j.at("ledger").empty());
}

TEST_CASE("construct reports matching parameter counts") {
  auto in = write_temp("cli_structure.json", two_block);
  RunResult r = run_cli("construct --input " + in.string() + " --format json");
  CHECK(r.exit_code == 0);

  json j = json::parse(r.output);
  CHECK(j.at("counts_match") == true);
  CHECK(j.at("catalog").at("params").size() == j.at("greedy").at("params").size());
}

TEST_CASE("project reproduces the worked one by one example") {
  auto in = write_temp("cli_structure.json", R"({"blocks":[{"kind":"H","n":1,"lambda":"0"}]})");
  auto pert = write_temp("cli_perturbation.json", R"({"a":[["4"]],"b":[["6"]]})");
  RunResult r = run_cli("project --input " + in.string() + " --perturbation " + pert.string() +
                        " --format json");
  CHECK(r.exit_code == 0);

  json j = json::parse(r.output);
  CHECK(j.at("residual_check") == true);
  CHECK(j.at("d_values").at("B(1,1)") == "6");
  CHECK(j.at("reducer")[0][0] == "-2");
}

TEST_CASE("project handles seeded random perturbations") {
  auto in = write_temp("cli_structure.json", two_block);
  RunResult r = run_cli("project --input " + in.string() + " --random 4 --seed 99 --format json");
  CHECK(r.exit_code == 0);

  json j = json::parse(r.output);
  CHECK(j.at("perturbations") == 4);
  CHECK(j.at("passed") == 4);

  RunResult both = run_cli("project --input " + in.string() + " --random 2 --perturbation x.json");
  CHECK(both.exit_code == 2);
}

TEST_CASE("sweep enumerates the same structures as the library") {
  RunResult r = run_cli("sweep --max-block-n 1 --max-total 2 --format json");
  CHECK(r.exit_code == 0);

  SweepOptions opt;
  opt.max_block_n = 1;
  opt.max_total = 2;
  opt.lambdas = SweepOptions::default_lambdas();
  json j = json::parse(r.output);
  CHECK(j.at("ok") == true);
  CHECK(j.at("discrepancies") == 0);
  CHECK(j.at("structures").get<std::size_t>() == enumerate_structures(opt).size());
}

TEST_CASE("sweep accepts a custom eigenvalue list") {
  RunResult r = run_cli("sweep --max-block-n 1 --max-total 1 --lambdas 3,1+2i --format json");
  CHECK(r.exit_code == 0);
  // family is H1(3), H1(1+2i), K1, L0; each alone fits in total 1
  CHECK(json::parse(r.output).at("structures") == 4);
}

TEST_CASE("bad input exits with status 2") {
  auto bad_lambda =
      write_temp("cli_bad.json", R"({"blocks":[{"kind":"H","n":2,"lambda":"1+"}]})");
  RunResult r = run_cli("codim --input " + bad_lambda.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
  CHECK(r.output.find("position") != std::string::npos);

  RunResult missing = run_cli("codim --input /nonexistent/path.json");
  CHECK(missing.exit_code == 2);

  auto not_json = write_temp("cli_notjson.json", "plainly not json");
  RunResult nj = run_cli("verify --input " + not_json.string());
  CHECK(nj.exit_code == 2);
  CHECK(nj.output.find("invalid JSON") != std::string::npos);

  RunResult badl = run_cli("sweep --lambdas ,");
  CHECK(badl.exit_code == 2);
}

TEST_CASE("stdin input works for every reading subcommand") {
  auto in = write_temp("cli_structure.json", two_block);
  for (const std::string verb : {"canonical", "pattern", "codim", "verify", "construct"}) {
    RunResult r = run_cli(verb + " --input - < " + in.string());
    CHECK(r.exit_code == 0);
  }
}
