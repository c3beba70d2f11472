#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fusion_sos/cli.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/serialize.hpp"
#include "fusion_sos/sos.hpp"

using namespace fusion_sos;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fuse emits the normalized operator as JSON") {
  auto r = cli({"fuse", "--n", "2", "--m", "1", "--u", "3/5", "--alpha", "5/3", "--w", "1/2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(matrix_from_json(j["matrix"]) ==
        fuse_nm(2, 1, rational(3, 5), ModelParams::from_w(rational(5, 3), rational(1, 2))));
}

TEST_CASE("rmatrix supports both families") {
  auto seven = cli({"rmatrix", "--family", "seven", "--u", "1/2"});
  CHECK(seven.code == 0);
  auto eleven = cli({"rmatrix", "--family", "eleven", "--d", "1/2", "--format", "csv"});
  CHECK(eleven.code == 0);
  CHECK(eleven.out.find("3/2") != std::string::npos);
  CHECK(cli({"rmatrix", "--family", "six", "--u", "1"}).code == 2);
}

TEST_CASE("weights: methods agree and formats render") {
  std::vector<std::string> base = {"weights", "--n", "2", "--m", "1", "--a", "0", "--b", "2",
                                   "--bprime", "1", "--c", "1", "--u", "7/3", "--w", "-3/5"};
  std::string values[3];
  const char* methods[] = {"sum", "hyper", "solve"};
  for (int i = 0; i < 3; ++i) {
    auto args = base;
    args.insert(args.end(), {"--method", methods[i]});
    auto r = cli(args);
    REQUIRE(r.code == 0);
    values[i] = nlohmann::json::parse(r.out)["value"];
  }
  CHECK(values[0] == values[1]);
  CHECK(values[0] == values[2]);
  auto csv = base;
  csv.insert(csv.end(), {"--format", "csv"});
  auto r = cli(csv);
  CHECK(r.out.rfind("n,m,a,b,bprime,c,u,method,value\n", 0) == 0);
  CHECK(r.out.find("," + values[0] + "\n") != std::string::npos);
}

TEST_CASE("weights: invalid adjacency exits 2 with a zero value") {
  auto r = cli({"weights", "--n", "1", "--m", "1", "--a", "0", "--b", "2", "--bprime", "1", "--c",
                "1", "--u", "1"});
  CHECK(r.code == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "0");
  CHECK(j["error"] == "invalid adjacency");
}

TEST_CASE("parse errors exit 2") {
  CHECK(cli({"fuse", "--n", "2", "--u", "1/0"}).code == 2);
  CHECK(cli({"fuse", "--n", "2", "--u", "abc"}).code == 2);
  CHECK(cli({"fuse", "--n", "x", "--u", "1"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"partition", "--model", "sos", "--u", "1", "--range", "3-4"}).code == 2);
  CHECK(cli({"fuse", "--u", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("verify suites report success") {
  auto r = cli({"verify", "star-triangle", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS star-triangle") != std::string::npos);
  auto j = cli({"verify", "correspondence", "--n", "2", "--m", "1", "--u", "1/3", "--v", "-2/5"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
  CHECK(cli({"verify", "nonsense"}).code == 2);
}

TEST_CASE("partition emits value and spec") {
  auto r = cli({"partition", "--model", "vertex", "--N", "2", "--M", "2", "--u", "1/3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["spec"]["model"] == "vertex");
  CHECK(j.contains("value"));
  auto s = cli({"partition", "--model", "sos", "--N", "2", "--M", "1", "--n", "2", "--m", "2",
                "--u", "1/3", "--range", "-1..1"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["spec"]["range"][1] == 1);
}
