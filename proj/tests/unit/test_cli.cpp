#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shr/cli.hpp"
#include "shr/harness.hpp"
#include "shr/parallel.hpp"
#include "support.hpp"

using testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shr::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_SUITE("interface-cli") {

TEST_CASE("validate") {
  auto ok = run({"validate", fixture("t2.shr")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("semihyperring") != std::string::npos);
  auto bad = run({"validate", fixture("example_1_3.shr")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("zero-add-identity") != std::string::npos);
  auto js = run({"--format", "jsonl", "validate", fixture("example_1_3.shr")});
  const auto recs = records(js.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["class"] == "invalid");
  CHECK(run({"validate", fixture("t2.shr"), "--class", "hyperring"}).code == 1);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"validate", "/nonexistent.shr"}).code == 2);
  CHECK(run({"census", "--order", "9"}).code == 2);
  CHECK(run({"--format", "xml", "validate", fixture("t2.shr")}).code == 2);
  CHECK(run({"verify", fixture("t2.shr"), "--chain", "0 1/2 1", "--theorem", "nope"}).code == 2);
}

TEST_CASE("ideals") {
  auto list = run({"--format", "jsonl", "ideals", fixture("t2.shr"), "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("{e,s}") != std::string::npos);
  CHECK(run({"ideals", fixture("t2.shr"), "--check", "{e,s}"}).code == 0);
  auto miss = run({"ideals", fixture("t2.shr"), "--check", "{s}"});
  CHECK(miss.code == 1);
  CHECK(miss.out.find("generated: {e,s}") != std::string::npos);
}

TEST_CASE("fuzzy operations") {
  const auto subsets = fixture("t2.fuzzy");
  auto sum = run({"fuzzy", fixture("t2.shr"), "sum", "mu1", "chi{e}", "--subsets", subsets});
  CHECK(sum.code == 0);
  CHECK(sum.out.find("e=1, s=1/2, x=0") != std::string::npos);
  CHECK(run({"fuzzy", fixture("t2.shr"), "check", "mu1", "--subsets", subsets}).code == 0);
  CHECK(run({"fuzzy", fixture("t2.shr"), "check", "bad", "--subsets", subsets}).code == 1);
  auto prod = run({"--format", "jsonl", "fuzzy", fixture("t2.shr"), "prod", "e=1, s=1/2, x=0", "A",
                   "--chain", "0 1/2 1", "--oracle", "5"});
  CHECK(prod.code == 0);
  CHECK(prod.out.find("e=1, s=1/2, x=0") != std::string::npos);
  CHECK(run({"fuzzy", fixture("t2.shr"), "meet", "mu1", "--subsets", subsets}).code == 2);
}

TEST_CASE("verify emits one record per structure and theorem") {
  auto r = run({"--format", "jsonl", "--no-timing", "verify", fixture("t2.shr"), "--chain", "0 1/2 1",
                "--theorem", "all"});
  CHECK(r.code == 0);
  const auto recs = records(r.out);
  CHECK(recs.size() == std::size(shr::kTheoremIds));
  for (const auto& rec : recs) {
    CHECK(rec["verdict"] == "holds");
    CHECK_FALSE(rec.contains("elapsed_ms"));
  }
}

TEST_CASE("verify output does not depend on the worker count") {
  const std::vector<std::string> args{"--format", "jsonl", "--no-timing", "verify",
                                      fixture("t2.shr"), fixture("example_1_3.shr"),
                                      "--chain", "0 1/2 1", "--theorem", "thr21",
                                      "--theorem", "regular"};
  setenv("SHR_WORKERS", "1", 1);
  const auto one = run(args);
  setenv("SHR_WORKERS", "4", 1);
  const auto four = run(args);
  unsetenv("SHR_WORKERS");
  CHECK(one.code == four.code);
  CHECK(one.out == four.out);
  CHECK(records(one.out).size() == 4);
}

TEST_CASE("spectrum") {
  auto r = run({"spectrum", fixture("t2.shr"), "--chain", "0 1/2 1", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 primes") != std::string::npos);
  auto any = run({"spectrum", fixture("t2.shr"), "--chain", "0 1/2 1", "--zero-regime", "any",
                  "--check"});
  CHECK(any.code == 1);
}

TEST_CASE("census writes files and a manifest") {
  const auto dir = std::filesystem::temp_directory_path() / "shr_cli_census";
  std::filesystem::remove_all(dir);
  auto r = run({"--format", "jsonl", "census", "--order", "2", "--out", dir.string()});
  CHECK(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE_FALSE(recs.empty());
  CHECK(recs.back()["summary"]["valid"] == 6);
  CHECK(recs.size() == 7);
  std::ifstream manifest(dir / "manifest.csv");
  REQUIRE(manifest);
  std::string header;
  std::getline(manifest, header);
  CHECK(header == "id,file,fully_idempotent,regular,commutative,ideal_count");
  std::size_t rows = 0;
  for (std::string line; std::getline(manifest, line);) {
    ++rows;
    const auto file = line.substr(line.find(',') + 1, line.find(',', line.find(',') + 1) - line.find(',') - 1);
    CHECK(shr::is_semihyperring(shr::load_structure((dir / file).string())));
  }
  CHECK(rows == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sampled census is reproducible from the command line") {
  const std::vector<std::string> args{"--format", "jsonl", "--no-timing", "census", "--order", "4",
                                      "--sampled", "--seed", "3", "--count", "5"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"census", "--order", "4", "--sampled", "--count", "5"}).code == 2);
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  shr::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 8);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(shr::parallel_for(
                      10, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }, 3),
                  std::runtime_error);
  std::size_t calls = 0;
  shr::parallel_for(0, [&](std::size_t) { ++calls; }, 4);
  CHECK(calls == 0);
}

}
