#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace permclass {

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == cli::kOk);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli classes") {
  auto j = json_of({"classes", "--n", "7", "--patterns", "1234,3421"});
  CHECK(j["nontrivial_classes"] == 35);
  CHECK(j["classes"].size() == 35);
  j = json_of({"classes", "--n", "6", "--patterns", "adj:1324,3241,2413,4132"});
  CHECK(j["nontrivial_classes"] == 2);
  CHECK(j["adjacency"] == true);
  j = json_of({"classes", "--n", "4", "--patterns", "123"});
  CHECK(j["nontrivial_classes"] == 0);
  CHECK(j["singleton_count"] == 24);

  const auto table = run({"classes", "--n", "5", "--patterns", "123,321"});
  CHECK(table.code == cli::kOk);
  CHECK(table.out.rfind("# permclass ", 0) == 0);
  CHECK(table.out.find("# command: permclass classes --n 5") != std::string::npos);

  const auto csv = run({"classes", "--n", "5", "--patterns", "123,321", "--format", "csv"});
  CHECK(csv.out.rfind("n,patterns,adjacency,", 0) == 0);
  CHECK(csv.out.find("\"123,321\"") != std::string::npos);
}

TEST_CASE("cli usage errors name the problem") {
  auto r = run({"classes", "--n", "7", "--patterns", "12x4,3421"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("12x4") != std::string::npos);
  CHECK(run({"classes", "--n", "13", "--patterns", "123"}).code == cli::kUsage);
  CHECK(run({"classes", "--n", "5"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"classes", "--n", "5", "--patterns", "123,321", "--memory-budget", "1M"}).code ==
        cli::kUsage);
  CHECK(run({"classes", "--n", "5", "--patterns", "123,321", "--threads", "0"}).code == cli::kUsage);
  CHECK(run({"erdos", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli resource errors") {
  const auto r = run({"pseudo", "--m", "12", "--n", "12", "--memory-budget", "64M"});
  CHECK(r.code == cli::kResource);
  CHECK(r.err.find("67108864") != std::string::npos);
}

TEST_CASE("cli rotational and pseudo") {
  auto j = json_of({"rotational", "--m", "1324", "--n-max", "7"});
  CHECK(j["t"] == 7);
  CHECK(j["f"]["6"] == 2);
  CHECK(j["f"]["7"] == 1);
  j = json_of({"rotational", "--m", "12", "--n-max", "5"});
  CHECK(j["f"]["5"] == 1);
  CHECK_FALSE(j["t"].is_null());
  j = json_of({"rotational", "--m", "132", "--n-max", "6"});
  CHECK(j["parity_split_expected"] == true);
  for (const auto& [n, f] : j["f"].items()) CHECK(f == 2);

  const auto a = json_of({"pseudo", "--m", "1324", "--n", "5"});
  CHECK(a["class_count"] == 2);
  CHECK(json_of({"pseudo", "--m", "3241", "--n", "5"}) == a);
  j = json_of({"pseudo", "--m", "1324", "--n", "8"});
  CHECK(j["class_count"] == 2);
  for (const auto& c : j["classes"]) CHECK(c["parity_pure"] == true);
}

TEST_CASE("cli erdos and oeis") {
  auto j = json_of({"erdos", "--k", "3", "--n", "5"});
  CHECK(j["classes_total"] == 3);
  CHECK(j["regime"] == "below thresholds");
  CHECK(j["pass"] == true);
  j = json_of({"erdos", "--k", "3", "--n-min", "6", "--n-max", "7"});
  CHECK(j.size() == 2);

  j = json_of({"oeis", "--suite", "all", "--n-max", "8", "--no-timing"});
  CHECK(j["pass"] == true);
  REQUIRE(j["experiments"].size() == 3);
  for (const auto& e : j["experiments"]) {
    for (const auto& row : e["rows"]) {
      CHECK(row["verdict"] == "match");
      CHECK_FALSE(row.contains("wall_ms"));
    }
  }
  CHECK(j["subconjecture"].size() == 1);
  CHECK(run({"oeis", "--suite", "bogus"}).code == cli::kUsage);
}

TEST_CASE("cli verify echoes the seed") {
  const auto j = json_of({"verify", "--suite", "prefix-chain", "--seed", "7"});
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["checks"] == 1000);
  const auto table = run({"verify", "--suite", "lexmin", "--seed", "11"});
  CHECK(table.out.find("seed=11") != std::string::npos);
}

TEST_CASE("cli output is independent of the thread count") {
  const auto one = run({"classes", "--n", "8", "--patterns", "1243,3421", "--format", "json",
                        "--threads", "1"});
  const auto four = run({"classes", "--n", "8", "--patterns", "1243,3421", "--format", "json",
                         "--threads", "4"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out == four.out);
}

TEST_CASE("cli settings: flags over config over environment") {
  const auto dir = std::filesystem::temp_directory_path() / "permclass-cli-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto conf = (dir / "run.conf").string();
  {
    std::ofstream f(conf);
    f << "# comment\nformat = csv\nthreads = 2\ncache_dir = " << (dir / "cache").string() << "\n";
  }
  auto r = run({"classes", "--n", "5", "--patterns", "123,321", "--config", conf});
  CHECK(r.out.rfind("n,patterns", 0) == 0);
  r = run({"classes", "--n", "5", "--patterns", "123,321", "--config", conf, "--format", "table"});
  CHECK(r.out.find("threads=2") != std::string::npos);
  CHECK(r.out.find("cache=" + (dir / "cache").string()) != std::string::npos);

  r = run({"oeis", "--suite", "thm1", "--n-max", "7", "--config", conf});
  CHECK(r.code == cli::kOk);
  CHECK(std::filesystem::exists(dir / "cache" / "results.jsonl"));
  r = run({"oeis", "--suite", "thm1", "--n-max", "7", "--config", conf, "--no-cache",
           "--format", "table"});
  CHECK(r.out.find("cache=off") != std::string::npos);

  {
    std::ofstream f(conf);
    f << "colour = blue\n";
  }
  CHECK(run({"classes", "--n", "5", "--patterns", "123,321", "--config", conf}).code == cli::kUsage);
  CHECK(run({"classes", "--n", "5", "--patterns", "123,321", "--config", (dir / "missing").string()})
            .code == cli::kUsage);

  const auto out_file = (dir / "out.json").string();
  r = run({"classes", "--n", "5", "--patterns", "123,321", "--format", "json", "--output", out_file});
  CHECK(r.out.empty());
  std::ifstream in(out_file);
  CHECK(nlohmann::json::parse(in)["total_classes"] == 3);
  std::filesystem::remove_all(dir);
}

}  // namespace permclass
