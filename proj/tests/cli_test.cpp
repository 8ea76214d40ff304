#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cli_runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream file(path);
  REQUIRE_MESSAGE(bool(file), "missing golden file: " << path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
  CAPTURE(args);
  const CliResult r = run_cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden_path(golden_name)));
}

}  // namespace

TEST_CASE("golden outputs, byte for byte") {
  const std::string c23 = golden_path("tree_c23.json");
  const std::string w1 = golden_path("tree_w1.json");

  check_golden("ord norm \"1+w+w^2\"", "ord_norm.golden");
  check_golden("ord add w 1", "ord_add.golden");
  check_golden("ord mul \"w+1\" 3", "ord_mul.golden");
  check_golden("ord pow \"w+1\"", "ord_pow.golden");
  check_golden("ord cmp \"w*2\" \"w^2\"", "ord_cmp.golden");
  check_golden("space canonical --alpha w --p 1", "canonical.golden");
  check_golden("space cb --in " + c23, "cb.golden");
  check_golden("space classify --in " + c23, "classify.golden");
  check_golden("space derive --in " + c23, "derive.golden");
  check_golden("space truncate --depth 2 --in " + w1, "truncate.golden");
  check_golden("space embed --depth 2 --format csv --in " + c23,
               "embed.golden");
  check_golden("space labels --depth 2 --in " + c23, "labels.golden");
  check_golden("space equiv " + c23 + " " + w1, "equiv.golden");
  check_golden("partition --model finite:2", "partition.golden");
}

TEST_CASE("determinism across repeated runs") {
  const std::string args =
      "space labels --depth 3 --in " + golden_path("tree_c23.json");
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("trees arrive on stdin when --in is absent") {
  const CliResult r =
      run_cli("space classify < " + golden_path("tree_c23.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "w^2*3+1\n");
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("ord add w 1").exit_code == 0);
  CHECK(run_cli("--help").exit_code == 0);

  // Domain errors: bad notation, invalid tree payloads.
  CHECK(run_cli("ord norm \"w+\"").exit_code == 1);
  CHECK(run_shell("echo '{}' | " CBSPACE_CLI_PATH " space cb").exit_code == 1);
  CHECK(run_cli("space embed --depth 2 --a 1 --b 1 --in " +
                golden_path("tree_c23.json"))
            .exit_code == 1);

  // Usage errors: unknown subcommands and flags, missing required flags.
  CHECK(run_cli("ord bogus").exit_code == 2);
  CHECK(run_cli("space embed --in " + golden_path("tree_c23.json"))
            .exit_code == 2);
  CHECK(run_cli("partition --model nowhere").exit_code == 2);
  CHECK(run_cli("partition --model finite:2 --unknown-flag 1").exit_code == 2);
}
