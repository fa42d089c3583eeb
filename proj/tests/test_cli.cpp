#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lsg/document.hpp"

#ifndef LSGDD_CLI_PATH
#error "LSGDD_CLI_PATH must name the CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LSGDD_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path tmp(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "lsgdd_test_cli";
  fs::create_directories(d);
  return d / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("build 2 3 8 exports nine members") {
  const fs::path out = tmp("lgdd_2_3_8.json");
  const Run r = run("build 2 3 8 --out " + out.string());
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("kind") == "large_set");
  CHECK(j.at("members").size() == 9);
  CHECK(run("verify " + out.string()).code == 0);
}

TEST_CASE("plan 1 1 7 names the exception") {
  const Run r = run("plan 1 1 7");
  CHECK(r.code == 1);
  CHECK(r.out.find("(λ,g,u) ≠ (1,1,7)") != std::string::npos);
}

TEST_CASE("plan exit codes") {
  CHECK(run("plan 3 2 8").code == 0);
  CHECK(run("plan 1 2 7").code == 2);
  CHECK(run("plan 2 2 5").code == 1);
  CHECK(run("plan 5 1 7 --simple").code == 0);
  CHECK(run("").code == 4);
  CHECK(run("plan 2 x 8").code == 4);
  CHECK(run("frobnicate").code == 4);
  CHECK(run("build 1 2 7").code == 2);
}

TEST_CASE("tampered export fails verification with a witness") {
  const fs::path out = tmp("tamper.json");
  REQUIRE(run("build 2 3 8 --out " + out.string()).code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  auto& blk = j["members"][0]["blocks"][0]["p"];
  blk[2] = blk[2].get<int>() + 1;
  std::ofstream(out) << j.dump();
  const Run r = run("verify " + out.string());
  CHECK(r.code == 3);
  CHECK(r.out.find("covered") != std::string::npos);

  std::ofstream(out) << "{ not json";
  CHECK(run("verify " + out.string()).code == 3);
  CHECK(run("verify " + tmp("missing.json").string()).code == 4);
}

TEST_CASE("export, import, export is byte-identical") {
  for (const char* args : {"build 3 2 8", "build 4 3 8 --simple"}) {
    const fs::path out = tmp("roundtrip.json");
    REQUIRE(run(std::string(args) + " --out " + out.string()).code == 0);
    const std::string first = slurp(out);
    const std::string second = lsg::export_document(lsg::import_document(first));
    CHECK(first == second);
  }
  for (const char* name : {"v5", "v11", "sqs8_fan", "lgdd_3_8"}) {
    const fs::path out = tmp(std::string(name) + ".json");
    REQUIRE(run(std::string("catalog ") + name + " --out " + out.string()).code == 0);
    const std::string first = slurp(out);
    CHECK(first == lsg::export_document(lsg::import_document(first)));
    CHECK(run("verify " + out.string()).code == 0);
  }
}

TEST_CASE("infinity aliases appear in holed exports") {
  const fs::path out = tmp("v10.json");
  REQUIRE(run("catalog v10 --out " + out.string()).code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("inf1") != std::string::npos);
  CHECK(text.find("inf2") != std::string::npos);
}

TEST_CASE("search subcommand and report") {
  const fs::path cache = tmp("cache");
  fs::remove_all(cache);
  const fs::path out = tmp("lgdd_1_2_4.json");
  const fs::path rep = tmp("report.json");
  const std::string base = "--cache " + cache.string() + " --report " + rep.string() + " search lgdd 1 2 4";
  Run r = run(base + " --out " + out.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j.at("status") == "found");
  CHECK(j.at("from_certificate") == false);
  CHECK(run("verify " + out.string()).code == 0);
  r = run(base);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(rep)).at("from_certificate") == true);
  CHECK(run("search lgdd 1 2").code == 4);
  CHECK(run("search sqs 8").code == 4);
  CHECK(run("search lgdd 1 2 7 --seconds 0.5").code == 2);
}

TEST_CASE("build report carries the transcript") {
  const fs::path rep = tmp("build_report.json");
  REQUIRE(run("--report " + rep.string() + " build 3 2 8").code == 0);
  const auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j.at("ok") == true);
  CHECK(j.at("transcript").size() >= 4);
  for (const auto& e : j.at("transcript")) CHECK(e.at("passed") == true);
}

TEST_CASE("threads flag does not change verification") {
  const fs::path out = tmp("threads.json");
  REQUIRE(run("build 6 3 8 --out " + out.string()).code == 0);
  const Run a = run("verify " + out.string());
  const Run b = run("--threads 4 verify " + out.string());
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--threads 0 verify " + out.string()).code == 4);
}
