#include <doctest.h>

#include <json.hpp>
#include <wpl/export.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the tool through the shell, capturing stdout; stderr is discarded.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "'" WPL_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.out.append(buf, got);
  }
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kGolden = WPL_GOLDEN_DIR;

}  // namespace

TEST_CASE("cli: outputs match the frozen golden files byte for byte") {
  CHECK(run_cli("classify --weights 2,3,5").out == slurp(kGolden + "/classify_235.txt"));
  CHECK(run_cli("h0 --weights 2,3,4 --degree c --basis").out ==
        slurp(kGolden + "/h0_234_c.txt"));
  CHECK(run_cli("quiver --weights 2,3,4 --format dot").out ==
        slurp(kGolden + "/quiver_234.dot"));
  CHECK(run_cli("kquiver --weights 2,3,4 --format dot").out ==
        slurp(kGolden + "/kquiver_234.dot"));
  CHECK(run_cli("kquiver --weights 3,3,3 --format dot").out ==
        slurp(kGolden + "/kquiver_333.dot"));
  CHECK(run_cli("kquiver --weights 2,3,4 --format json --relations").out ==
        slurp(kGolden + "/kquiver_234.json"));
  CHECK(run_cli("tilting --weights 2,2,3").out == slurp(kGolden + "/tilting_223.json"));
  CHECK(run_cli("stability --weights 2,3,4 --point 0,0,0").out ==
        slurp(kGolden + "/stability_234_zero.json"));
  CHECK(run_cli("framed --weights 2,3,4 --v 0,1,1,5").out ==
        slurp(kGolden + "/framed_234.json"));
}

TEST_CASE("cli: exit statuses separate usage, semantic, and certificate errors") {
  // Success.
  CHECK(run_cli("classify --weights 2,3,5").exit_code == 0);
  CHECK(run_cli("orbit --weights 2,3,4 --point1 1,1,0 --point2 64,16,0").exit_code == 0);

  // Usage and syntax problems.
  CHECK(run_cli("classify --weights 2,3,5 --no-such-flag").exit_code == 1);
  CHECK(run_cli("classify").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("h0 --weights 2,3,4 --degree '2c+'").exit_code == 1);
  CHECK(run_cli("kquiver --weights 2,3,4 --format dot --relations").exit_code == 1);

  // Semantically invalid input.
  CHECK(run_cli("h0 --weights 2,3,4 --degree x9").exit_code == 2);
  CHECK(run_cli("classify --weights 2,2,2,2").exit_code == 2);
  CHECK(run_cli("classify --weights 2,3,4 --lambda 2").exit_code == 2);
  CHECK(run_cli("classify --weights 2,2,2,2 --lambda 1").exit_code == 2);
  CHECK(run_cli("stability --weights 2,3,4 --point 1,1,1").exit_code == 2);
  CHECK(run_cli("framed --weights 2,3,4 --v 1,1,1,2").exit_code == 2);
  CHECK(run_cli("stability --weights 6,6,6 --point 0,0,0").exit_code == 2);

  // Certificate failures still print their output first.
  const CliResult cut = run_cli("kquiver --weights 2,3,4 --kmax 0");
  CHECK(cut.exit_code == 3);
  CHECK(cut.out.find("\"closure_verified\": false") != std::string::npos);
  CHECK(run_cli("framed --weights 2,3,4 --v 0,1,1,5 --kmax 1").exit_code == 3);
}

TEST_CASE("cli: the window can come from the environment, flags win") {
  CHECK(run_cli("kquiver --weights 2,3,4", "WPL_KMAX=0").exit_code == 3);
  CHECK(run_cli("kquiver --weights 2,3,4 --kmax 24", "WPL_KMAX=0").exit_code == 0);
  CHECK(run_cli("kquiver --weights 2,3,4", "WPL_KMAX=junk").exit_code == 1);
  CHECK(run_cli("kquiver --weights 2,3,4", "WPL_KMAX=24").exit_code == 0);
}

TEST_CASE("cli: emitted JSON is machine-readable and round-trips") {
  const CliResult res = run_cli("kquiver --weights 2,3,4 --format json");
  REQUIRE(res.exit_code == 0);
  const wpl::ParsedQuiver parsed = wpl::quiver_from_json_string(res.out);
  CHECK(parsed.quiver.arrows.size() == 21);
  CHECK(parsed.quiver.vertices.size() == 8);

  const nlohmann::json doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("certificate").at("closure_verified").get<bool>());
  CHECK(doc.at("certificate").at("k_max").get<std::int64_t>() == 24);

  const CliResult cls = run_cli("classify --weights 2,3,5 --format json");
  REQUIRE(cls.exit_code == 0);
  const nlohmann::json cj = nlohmann::json::parse(cls.out);
  CHECK(cj.at("kind").get<std::string>() == "spherical");
  CHECK(cj.at("label").get<std::string>() == "E8");
  CHECK(cj.at("chi").get<std::string>() == "1/30");

  const CliResult orbit = run_cli("orbit --weights 2,3,4 --point1 46,13,3 --point2 16,8,4");
  REQUIRE(orbit.exit_code == 0);
  CHECK_FALSE(nlohmann::json::parse(orbit.out).at("isomorphic").get<bool>());

  const CliResult fr = run_cli("framed --weights 2,3,4 --v 0,1,1,5 --v2 0,16,8,5/2");
  REQUIRE(fr.exit_code == 0);
  CHECK(nlohmann::json::parse(fr.out).at("isomorphic").get<bool>());
}
