#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "spinc");
  std::ostringstream out, err;
  int code = spinc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(split_csv_line(line));
  return rows;
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("spinc_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == spinc::cli::kUsage);
  CHECK(run({"bogus"}).code == spinc::cli::kUsage);
  CHECK(run({"rep"}).code == spinc::cli::kUsage);
  CHECK(run({"rep", "--signature", "0,0"}).code == spinc::cli::kUsage);
  CHECK(run({"rep", "--signature", "-1,2"}).code == spinc::cli::kUsage);
  CHECK(run({"rep", "--signature", "1,1", "--format", "xml"}).code == spinc::cli::kUsage);
  CHECK(run({"invariants", "--family", "Nope", "--params", "1,1"}).code == spinc::cli::kUsage);
  CHECK(run({"invariants", "--family", "U", "--params", "0,0"}).code == spinc::cli::kUsage);
  CHECK(run({"invariants", "--family", "G2", "--params", "1,1"}).code == spinc::cli::kUsage);
  CHECK(run({"table1", "--bound", "0"}).code == spinc::cli::kUsage);
}

TEST_CASE("resource caps exit 3") {
  CHECK(run({"rep", "--signature", "9,8"}).code == spinc::cli::kResourceCap);
  CHECK(run({"invariants", "--family", "Sp", "--params", "3,2"}).code == spinc::cli::kResourceCap);
  CHECK(run({"table1", "--bound", "5"}).code == spinc::cli::kResourceCap);
}

TEST_CASE("rep json") {
  auto r = run({"rep", "--signature", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["spinor_dim"] == 2);
  REQUIRE(j["generators"].size() == 2);
  CHECK(j["generators"][0]["index"] == 1);
  CHECK(j["generators"][0]["matrix"] == json::parse(R"([["0","-1"],["-1","0"]])"));
  CHECK(j["generators"][1]["matrix"] == json::parse(R"([["0","-1"],["1","0"]])"));
}

TEST_CASE("invariants json") {
  auto u = json::parse(run({"invariants", "--family", "U", "--params", "1,1", "--format", "json"}).out);
  CHECK(u["N"] == 1);
  CHECK(u["basis"] == json::parse(R"([["0","0","0","1"]])"));
  auto su = json::parse(run({"invariants", "--family", "SU", "--params", "1,1", "--format", "json"}).out);
  CHECK(su["N"] == 2);
  auto sp = json::parse(run({"invariants", "--family", "Sp", "--params", "0,1", "--format", "json"}).out);
  CHECK(sp["N"] == 2);
  CHECK(sp["ambient"] == json::parse("[0,4]"));
}

TEST_CASE("invariants csv round trip") {
  auto r = run({"invariants", "--family", "SU", "--params", "1,1", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"family", "p_prime", "q_prime", "ambient_p", "ambient_q", "N", "vector",
                                            "coords"});
  for (std::size_t k = 1; k < rows.size(); ++k) {
    REQUIRE(rows[k].size() == 8);
    CHECK(rows[k][0] == "SU");
    CHECK(rows[k][5] == "2");
    CHECK(std::count(rows[k][7].begin(), rows[k][7].end(), ';') == 3);
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  fs::path dir = scratch_dir("out");
  auto direct = run({"invariants", "--family", "U", "--params", "2,0", "--format", "json"});
  auto to_file = run({"invariants", "--family", "U", "--params", "2,0", "--format", "json", "--out",
                      (dir / "u.json").string()});
  REQUIRE(to_file.code == 0);
  std::ifstream in(dir / "u.json", std::ios::binary);
  std::string contents((std::istreambuf_iterator<char>(in)), {});
  CHECK(contents == direct.out);
  fs::remove_all(dir);
}

TEST_CASE("table1 json is deterministic and all rows match") {
  auto a = run({"table1", "--bound", "1", "--format", "json"});
  auto b = run({"table1", "--bound", "1", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["bound"] == 1);
  CHECK(j["all_match"] == true);
  CHECK(j["rows"].size() == 12);
}

TEST_CASE("selfcheck") {
  auto r = run({"selfcheck", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() >= 5);
  for (const auto& suite : j) {
    CHECK(suite["passed"] == true);
    CHECK(suite["failures"] == 0);
    CHECK(suite["checks"].get<int>() > 0);
  }
}

TEST_CASE("selfcheck reports a corrupted calibration form") {
  fs::path dir = scratch_dir("forms");
  for (const auto& entry : fs::directory_iterator(SPINC_TEST_FORMS_DIR))
    fs::copy_file(entry.path(), dir / entry.path().filename());
  {
    std::ofstream g2(dir / "g2.form", std::ios::app);
    g2 << "1 2 4 1\n";
  }
  auto r = run({"selfcheck", "--forms-dir", dir.string()});
  CHECK(r.code == spinc::cli::kCheckFailed);
  CHECK(r.out.find("G2 dimension") != std::string::npos);
  fs::remove_all(dir);
}
