#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = symcover::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_nocache(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  return run(std::move(args));
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("symcover-cli-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("table") {
  const Result csv = run_nocache({"table", "--n", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "irreducible,\"3\",\"2,1\",\"1,1,1\"\n\"3\",1,1,1\n\"2,1\",-1,0,2\n\"1,1,1\",1,-1,1\n");

  const Result one = run_nocache({"table", "--n", "1", "--format", "json"});
  CHECK(one.code == 0);
  const json doc = json::parse(one.out);
  CHECK(doc["values"] == json::array({json::array({"1"})}));

  CHECK(run_nocache({"table", "--n", "0"}).code == 2);
  CHECK(run_nocache({"table", "--n", "21"}).code == 2);
  CHECK(run_nocache({"table"}).code == 2);
  CHECK(run_nocache({"--bogus", "table", "--n", "3"}).code == 2);
  CHECK(run_nocache({"frobnicate"}).code == 2);
  CHECK(run_nocache({"--help"}).code == 0);
}

TEST_CASE("power") {
  const Result r = run_nocache({"power", "--n", "10", "--lambda", "6,2,2", "--k", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["mult"]["8,2"] == "3");

  const Result trivial = run_nocache({"power", "--n", "5", "--lambda", "5", "--k", "7", "--support-only", "--format", "json"});
  CHECK(json::parse(trivial.out)["support"] == json::array({"5"}));

  const Result hook = run_nocache({"power", "--n", "5", "--lambda", "4,1", "--k", "3", "--support-only", "--format", "json"});
  const json support = json::parse(hook.out)["support"];
  CHECK(support.size() == 6);
  CHECK(std::find(support.begin(), support.end(), "1,1,1,1,1") == support.end());

  CHECK(run_nocache({"power", "--n", "5", "--lambda", "4,2", "--k", "2"}).code == 2);
  CHECK(run_nocache({"power", "--n", "5", "--lambda", "4,,1", "--k", "2"}).code == 2);
  CHECK(run_nocache({"power", "--n", "5", "--lambda", "1,4", "--k", "2"}).code == 2);
  CHECK(run_nocache({"power", "--n", "5", "--lambda", "4,1", "--k", "0"}).code == 2);
}

TEST_CASE("kron") {
  const Result r = run_nocache({"kron", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["mult"] == json({{"3", "1"}, {"2,1", "1"}, {"1,1,1", "1"}}));
}

TEST_CASE("cover") {
  const Result all = run_nocache({"cover", "--n", "5", "--format", "json"});
  REQUIRE(all.code == 0);
  const json doc = json::parse(all.out);
  CHECK(doc["e_max"] == 4);
  CHECK(doc["d_max"] == 4);

  const json hook = json::parse(run_nocache({"cover", "--n", "5", "--lambda", "4,1", "--format", "json"}).out);
  CHECK(hook["characters"][0]["e"] == 4);
  CHECK(hook["characters"][0]["d"] == 4);

  const json square = json::parse(run_nocache({"cover", "--n", "4", "--lambda", "2,2", "--format", "json"}).out);
  CHECK(square["characters"][0]["e"] == "none");
  CHECK(square["characters"][0]["d"] == "none");

  const Result text = run_nocache({"cover", "--n", "5"});
  CHECK(text.out.find("e_max = 4") != std::string::npos);
  CHECK(run_nocache({"cover", "--n", "1"}).code == 2);
}

TEST_CASE("verify") {
  CHECK(run_nocache({"verify", "theorem1", "--n", "5..10"}).code == 0);
  const Result t1 = run_nocache({"verify", "table1"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("FAIL") == std::string::npos);
  CHECK(run_nocache({"verify", "theta-move", "--n", "7", "--u", "2", "--v", "2"}).code == 0);
  CHECK(run_nocache({"verify", "non-rectangle", "--n", "3..7"}).code == 0);
  CHECK(run_nocache({"verify", "rectangle", "--n", "8"}).code == 0);
  CHECK(run_nocache({"verify", "brauer", "--n", "2..7"}).code == 0);
  CHECK(run_nocache({"verify", "semigroup", "--samples", "20", "--max-size", "7"}).code == 0);

  CHECK(run_nocache({"verify", "theorem1", "--n", "4"}).code == 2);
  CHECK(run_nocache({"verify", "theorem1", "--n", "11"}).code == 2);
  CHECK(run_nocache({"verify", "theorem1", "--n", "7..5"}).code == 2);
  CHECK(run_nocache({"verify", "theorem1", "--n", "5.."}).code == 2);
  CHECK(run_nocache({"verify", "nonsense"}).code == 2);
}

TEST_CASE("generic") {
  const Result d7 = run_nocache({"generic", "--dihedral", "7", "--format", "json"});
  REQUIRE(d7.code == 0);
  for (const auto& c : json::parse(d7.out)["characters"]) {
    if (c["linear"] == true) continue;
    CHECK(c["e"] == 6);
    CHECK(c["d"] == 3);
  }
  const json d3 = json::parse(run_nocache({"generic", "--dihedral", "3", "--format", "json"}).out);
  CHECK(d3["characters"][2]["e"] == 2);
  CHECK(d3["characters"][2]["d"] == 2);
  CHECK(run_nocache({"generic", "--dihedral", "4"}).code == 2);

  const fs::path dir = scratch_dir("generic");
  write_file(dir / "broken.json", "{\"name\": \"x\", \"classes\": [");
  CHECK(run_nocache({"generic", (dir / "broken.json").string()}).code == 2);
  CHECK(run_nocache({"generic", (dir / "missing.json").string()}).code == 2);
  write_file(dir / "fake.json", R"({"name": "fake", "classes": [{"name": "1", "size": 1}, {"name": "g", "size": 1}],
    "irreducibles": [{"name": "a", "values": [1, 1]}, {"name": "b", "values": [1, 0.5]}]})");
  CHECK(run_nocache({"generic", (dir / "fake.json").string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("thread count does not change output") {
  const std::vector<std::vector<std::string>> commands{
      {"cover", "--n", "9", "--format", "json"},
      {"table", "--n", "8", "--format", "csv"},
      {"verify", "theorem1", "--n", "5..9"},
      {"verify", "theta-move", "--n", "6"},
      {"generic", "--dihedral", "9"},
  };
  for (const auto& cmd : commands) {
    auto one = cmd, many = cmd;
    one.insert(one.begin(), {"--threads", "1"});
    many.insert(many.begin(), {"--threads", "auto"});
    const Result a = run_nocache(one), b = run_nocache(many), c = run_nocache(one);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  CHECK(run_nocache({"--threads", "zero", "table", "--n", "3"}).code == 2);
}

TEST_CASE("table cache") {
  const fs::path dir = scratch_dir("cache");
  const Result first = run({"--cache-dir", dir.string(), "table", "--n", "6"});
  REQUIRE(first.code == 0);
  const fs::path file = dir / "sn" / "6.tbl";
  CHECK(fs::exists(file));
  CHECK(run({"--cache-dir", dir.string(), "table", "--n", "6"}).out == first.out);

  {
    std::fstream f(file, std::ios::in | std::ios::out);
    f.seekp(40);
    f.put('#');
  }
  const Result repaired = run({"--cache-dir", dir.string(), "table", "--n", "6"});
  CHECK(repaired.code == 0);
  CHECK(repaired.out == first.out);
  CHECK_FALSE(repaired.err.empty());

  {
    std::fstream f(file, std::ios::in | std::ios::out);
    f.seekp(40);
    f.put('#');
  }
  fs::create_directories(dir / "sn" / "6.tbl.tmp");
  CHECK(run({"--cache-dir", dir.string(), "table", "--n", "6"}).code == 3);
  fs::remove_all(dir);
}
