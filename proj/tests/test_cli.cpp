#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("fusionctl-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd = "cd '" + workdir().string() + "' && '" FUSIONCTL "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& name) {
  std::ifstream f(workdir() / name, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void ensure_files() {
  static bool done = false;
  if (done) return;
  REQUIRE(run("atlas w2 --json --out w2.json").code == 0);
  REQUIRE(run("atlas sf-plus --d 2 --json --out sf2.json").code == 0);
  REQUIRE(run("power w2.json --d 2 --out pw2d2.json").code == 0);
  done = true;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("atlas") {
  ensure_files();
  const auto w2 = nlohmann::json::parse(slurp("w2.json"));
  CHECK(w2["indecomposables"].size() == 6);
  CHECK(nlohmann::json::parse(slurp("sf2.json"))["indecomposables"].size() == 6);
  CHECK(run("atlas nosuch").code == 2);
  CHECK(run("atlas power --d 4").code == 4);
  CHECK(run("--max-labels 2000 atlas power --d 3").code == 0);
  CHECK(run("atlas sf-plus --d 9").code == 4);
  CHECK(run("atlas w2").out == slurp("w2.json"));
}

TEST_CASE("round trip through files") {
  ensure_files();
  for (const char* f : {"w2.json", "sf2.json", "pw2d2.json"}) {
    CAPTURE(f);
    CHECK(run(std::string("power ") + f + " --d 1").out == slurp(f));
  }
}

TEST_CASE("fuse") {
  ensure_files();
  auto r = run("fuse w2.json X_2^+ P_1^-");
  CHECK(r.code == 0);
  CHECK(r.out == "2*X_2^+ + 2*X_2^-\n");
  CHECK(run("fuse w2.json X_1^+ X_1^+").out == "X_1^+\n");
  CHECK(run("fuse sf2.json X_2^- X_2^-").out == "P_1^+\n");
  CHECK(nlohmann::json::parse(run("--json fuse sf2.json X_2^+ P_1^+").out) == nlohmann::json({{"X_2^+", 8}, {"X_2^-", 8}}));
  CHECK(run("fuse pw2d2.json '(X_2^+,X_1^+)' '(X_2^+,X_1^+)'").out == "(P_1^+,X_1^+)\n");
  CHECK(run("fuse w2.json X_1^+ Q").code == 3);
  CHECK(run("fuse missing.json X_1^+ X_1^+").code == 2);
  std::ofstream(workdir() / "junk.json") << "{ not json";
  CHECK(run("fuse junk.json X_1^+ X_1^+").code == 2);
}

TEST_CASE("deligne and power") {
  ensure_files();
  const auto p = run("power w2.json --d 2");
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["indecomposables"].size() == 36);
  CHECK(run("deligne w2.json w2.json").out == p.out);
  CHECK(run("power w2.json --d 1").out == slurp("w2.json"));
  CHECK(run("power w2.json --d 4").code == 4);
  CHECK(run("deligne pw2d2.json pw2d2.json").code == 4);
  CHECK(run("power w2.json --d 0").code == 2);
}

TEST_CASE("codes") {
  auto e = run("codes enumerate --d 2 --p 2,2");
  CHECK(e.code == 0);
  CHECK(e.out.find("2 admissible codes of 5 subspaces") != std::string::npos);
  CHECK(nlohmann::json::parse(run("codes enumerate --d 2 --p 2,2 --json").out)["admissible"] == 2);
  auto c = run("codes check --d 2 --p 2,2 --gen 1,2");
  CHECK(c.code == 0);
  CHECK(c.out.find("even: yes") != std::string::npos);
  auto odd = run("codes check --d 1 --p 2 --gen 1");
  CHECK(odd.code == 1);
  CHECK(odd.out.find("even: no") != std::string::npos);
  const auto j = nlohmann::json::parse(run("--json codes check --d 2 --p 2,4 --gen 1,2").out);
  CHECK(j["admissibility"]["first_violation"] == nlohmann::json::array({1, 2}));
  CHECK(run("codes check --d 2 --p 2,2 --gen 1,x").code == 2);
  CHECK(run("codes check --d 2 --p 2,2 --gen 3").code == 2);
  CHECK(run("codes enumerate --d 6").code == 4);
}

TEST_CASE("extend and verify") {
  ensure_files();
  const auto e = run("extend pw2d2.json --code 1,2 --json --out ext.json");
  CHECK(e.code == 0);
  const auto report = nlohmann::json::parse(slurp("ext.json"));
  CHECK(report["alg_dimension"] == 2);
  CHECK(report["simples"].size() == 4);
  CHECK(report["verification"]["passed"] == true);
  CHECK(run("verify ext.json").code == 0);
  CHECK(run("verify sf2.json").code == 0);
  CHECK(run("extend pw2d2.json --code 1").code == 2);
  CHECK(run("extend w2.json --code 1,2").code == 2);

  const auto v = run("verify sf-plus --d 2");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("ALL PASS") != std::string::npos);
  CHECK(run("verify w2").code == 0);
  CHECK(run("--json verify w2").code == 0);
  CHECK(run("verify sf-plus --d 7").code == 4);
}

TEST_CASE("verification failures exit 1") {
  ensure_files();
  auto j = nlohmann::json::parse(slurp("w2.json"));
  j["fusion"][0]["result"] = {{"P_1^+", 3}, {"P_1^-", 2}};
  std::ofstream(workdir() / "bad.json") << j.dump(2);
  const auto r = run("verify bad.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  ensure_files();
  for (const char* args : {"verify sf-plus --d 3 --json", "extend pw2d2.json --code 1,2 --json",
                           "codes enumerate --d 3 --json", "--seed 11 verify pw2d2.json"})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("fuse w2.json").code == 2);
  CHECK(run("--help").code == 0);
}

}  // TEST_SUITE
