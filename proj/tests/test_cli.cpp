#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + FLATMOD_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("catalog") {
    Run list = run("catalog list");
    CHECK(list.code == 0);
    CHECK(list.out.find("N4_21") != std::string::npos);
    Run show = run("catalog show G2");
    CHECK(show.code == 0);
    CHECK(show.out.find("Z_2") != std::string::npos);
    CHECK(run("catalog show X9").code == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run("verify G2").code == 0);
    CHECK(run("verify O4_5").code == 1);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("normalizer B1 --test '[[1,0,0],[1,1'").code == 2);
  }

  TEST_CASE("normalizer test matrix") {
    Run r = run("--format json normalizer B1 --test '[[1,0,0],[1,1,0],[0,0,1]]'");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["member"] == false);
  }

  TEST_CASE("domain files") {
    auto dir = std::filesystem::temp_directory_path() / "flatmod_cli_test";
    std::filesystem::create_directories(dir);
    auto svg = dir / "d.svg", json = dir / "d.json";
    Run r = run("congruence domain Gamma2+ --svg " + svg.string() + " --json " + json.string());
    CHECK(r.code == 0);
    CHECK(slurp(svg).rfind("<svg", 0) == 0);
    auto d = nlohmann::json::parse(slurp(json));
    CHECK(d["index"] == 6);
    bool t2 = false;
    for (const auto& p : d["pairings"]) t2 = t2 || p["matrix"] == nlohmann::json{{1, 2}, {0, 1}};
    CHECK(t2);
    std::string first = slurp(json);
    run("congruence domain Gamma2+ --json " + json.string());
    CHECK(slurp(json) == first);
  }

  TEST_CASE("config file") {
    auto path = std::filesystem::temp_directory_path() / "flatmod_cli_config.json";
    std::ofstream(path) << R"({"output_format": "json"})";
    Run r = run("congruence index 'Gamma0(2)+'", "FLATMOD_CONFIG=" + path.string());
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["index"] == 3);
    std::ofstream(path) << R"({"coset_budget": 0})";
    CHECK(run("catalog list", "FLATMOD_CONFIG=" + path.string()).code == 2);
  }
}
