#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to the test log
Run run(const std::string& args) {
  std::string cmd = std::string(HOPFLAB_CLI) + " " + args;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HOPFLAB_DATA_DIR) + "/" + name; }

json run_json(const std::string& args, int expect) {
  auto r = run(args + " --report json");
  CHECK_MESSAGE(r.code == expect, args);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  std::size_t fails = 0;
  for (const auto& c : j["checks"]) fails += c["verdict"] == "fail";
  CHECK(fails == j["summary"]["fail"]);
  CHECK((fails == 0) == (r.code == 0));
  return j;
}

const json* check_named(const json& j, const std::string& name) {
  for (const auto& c : j["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("verify") {
  run_json("verify --algebra builtin:h4", 0);
  run_json("verify --algebra " + data("h4.json"), 0);
  run_json("verify --algebra builtin:kz2 --field fp:5", 0);
  run_json("verify --pair builtin:sweedler-pair", 0);
  run_json("verify --cocycle " + data("h4-cocycle-f5.json"), 0);
}

TEST_CASE("negative controls from files") {
  auto a = run_json("verify --algebra " + data("h4-bad-antipode.json"), 1);
  bool found = false;
  for (const auto& c : a["checks"])
    if (c["verdict"] == "fail") {
      CHECK(c["condition"] == "antipode");
      CHECK(c["witness"]["indices"] == json::array({2}));
      found = true;
    }
  CHECK(found);

  auto p = run_json("verify --pair " + data("sweedler-pair-bad-coaction.json"), 1);
  found = false;
  for (const auto& c : p["checks"])
    if (c["verdict"] == "fail") {
      CHECK(c["condition"] == "(r5)");
      CHECK(c["witness"]["indices"] == json::array({1, 1}));
      found = true;
      break;
    }
  CHECK(found);

  auto t = run_json("twines --family " + data("h4-twine-scaled-f5.json"), 1);
  const auto* tw = check_named(t, "twine");
  REQUIRE(tw);
  CHECK((*tw)["condition"] == "(db1)");
  CHECK((*tw)["witness"]["indices"] == json::array({1, 1, 2, 0, 0}));
}

TEST_CASE("subcommands pass on catalog inputs") {
  run_json("classify --algebra builtin:h4", 0);
  run_json("classify --algebra builtin:h4 --field fp:5 --dump", 0);
  run_json("classify --pair builtin:sweedler-pair", 0);
  run_json("double --algebra builtin:kz2", 0);
  run_json("biproduct --pair builtin:sweedler-pair", 0);
  run_json("twines --algebra builtin:h4", 0);
  run_json("twines --algebra builtin:h4 --field fp:5 --cocycle " + data("h4-cocycle-f5.json"), 0);
  run_json("suite paper --field fp:3", 0);
}

TEST_CASE("search never fails") {
  auto j = run_json("search --algebra builtin:kz2 --algebra builtin:h4", 0);
  CHECK(j["data"].is_object());
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::string& args : std::vector<std::string>{"suite paper --field fp:3", "classify --algebra builtin:dual-ks3 --dump",
                                 "twines --family " + data("h4-twine-scaled-f5.json")})
    for (const std::string fmt : {"text", "json"}) {
      auto a = run(args + " --report " + fmt);
      auto b = run(args + " --report " + fmt);
      CHECK(a.code == b.code);
      CHECK_MESSAGE(a.out == b.out, args);
    }
}

TEST_CASE("written files read back") {
  auto dir = fs::temp_directory_path() / "hopflab-test-cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto d = (dir / "dkz2.json").string();
  run_json("double --algebra builtin:kz2 --field fp:3 --out " + d, 0);
  run_json("verify --algebra " + d, 0);

  auto b = (dir / "bh.json").string();
  run_json("biproduct --pair builtin:sweedler-pair --out " + b, 0);
  run_json("verify --algebra " + b, 0);

  auto f = (dir / "family.json").string();
  run_json("twines --algebra builtin:h4 --field fp:5 --budget 256 --cocycle " + data("h4-cocycle-f5.json") + " --out " + f, 0);
  auto t = run_json("twines --family " + f, 0);
  CHECK(check_named(t, "twine"));
  fs::remove_all(dir);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --algebra builtin:nope").code == 2);
  CHECK(run("verify --algebra builtin:h4 --field fp:4").code == 2);
  CHECK(run("verify --algebra /nonexistent/h4.json").code == 2);
  CHECK(run("suite other").code == 2);
  CHECK(run("verify --algebra builtin:h4 --report xml").code == 2);
}
