// End-to-end checks of the command-line tool, driven through popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#ifndef KTWEB_CLI_PATH
#error "KTWEB_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "/tmp/ktweb_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + tag;
}

RunResult run(const std::string& args, const std::string& stdin_text) {
  const std::string in_path = temp_path(".in");
  {
    std::ofstream f(in_path, std::ios::binary);
    f << stdin_text;
  }
  const std::string cmd = std::string(KTWEB_CLI_PATH) + " " + args + " --in " + in_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::remove(in_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("classify reports stratum, web and leaf") {
  const RunResult r = run("classify", R"({"alpha":[1,-6,2,0,0,0]})");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["stratum"] == "E1");
  CHECK(j["web"] == "Cartesian");
  CHECK(j["leaf"][0] == -5);
  CHECK(j["leaf"][1] == 10);
}

TEST_CASE("byte-for-byte determinism") {
  const std::string doc = R"({"alpha":[0.1,-6,2,0.33,0,1.7]})";
  const RunResult a = run("classify", doc);
  const RunResult b = run("classify", doc);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("equivalent on the polar pair") {
  const RunResult r = run(
      "equivalent", R"({"alpha":[2,1,"2/3",1,2,-3],"alpha2":[1,-3,"8/3",2,4,-3]})");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["equivalent"] == true);
  CHECK(j["first"]["leaf"][0] == -7);
}

TEST_CASE("separate on the Yatsun system") {
  const std::string doc = R"({"alpha":["3/4",0,0,0,"-1/2",1],
    "potential":[[4,0,"-2"],[2,2,"-4"],[0,4,"-2"],[3,0,"4"],[1,2,"4"],[2,0,"-2"],[0,2,"-2"]]})";
  const RunResult r = run("separate", doc);
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["web"] == "EllipticHyperbolic");
  CHECK(j["frame"]["theta"] == 0);
  CHECK(j["frame"]["a"] == -0.5);
  CHECK(j["frame"]["b"] == 0);
  CHECK(j["transformed_approximate"] == false);
}

TEST_CASE("canonical reports the cross-section point") {
  const RunResult r = run("canonical", R"({"alpha":[2,1,0,1,1,4]})");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["stratum"] == "E3EH");
  CHECK(j["canonical"][0].get<double>() ==
        doctest::Approx((5.0 + std::sqrt(5.0)) / 4.0).epsilon(1e-12));
  CHECK(j["canonical"][5] == 4);
}

TEST_CASE("frame of a fixed point is the identity") {
  const RunResult r = run("frame", R"({"alpha":[5,5,0,0,0,0]})");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["chart"] == "fixed-point");
  CHECK(j["frame"]["theta"] == 0);
}

TEST_CASE("malformed input exits 1 with an error object") {
  const RunResult r = run("classify", "{nope");
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["error"]["type"] == "ParseError");
}

TEST_CASE("domain errors exit 2") {
  const RunResult incompat =
      run("separate", R"({"alpha":[1,2,0,0,0,0],"potential":[[1,1,"1"]]})");
  CHECK(incompat.code == 2);
  CHECK(json::parse(incompat.out)["error"]["type"] == "Incompatible");

  const RunResult degenerate = run("frame", R"({"alpha":[2,1,0.6667166666,1,2,-3]})");
  CHECK(degenerate.code == 2);
  CHECK(json::parse(degenerate.out)["error"]["type"] == "DegenerateInput");
}

TEST_CASE("batch mode emits one line per input line") {
  const std::string lines =
      R"({"alpha":[1,-6,2,0,0,0]})"
      "\n"
      R"({"alpha":[5,5,0,0,0,0]})"
      "\n"
      R"({"alpha":[2,1,0,1,1,4]})"
      "\n";
  const RunResult r = run("classify --jobs 2", lines);
  CHECK(r.code == 0);
  std::vector<std::string> outs;
  std::istringstream ss(r.out);
  for (std::string line; std::getline(ss, line);) outs.push_back(line);
  REQUIRE(outs.size() == 3);
  CHECK(json::parse(outs[0])["stratum"] == "E1");
  CHECK(json::parse(outs[1])["stratum"] == "E0");
  CHECK(json::parse(outs[2])["stratum"] == "E3EH");
}

TEST_CASE("render writes SVG and prints a summary") {
  const std::string out_path = temp_path(".svg");
  const RunResult r = run("render --region -2,-2,3,2 --curves 3 --samples 48 --out " + out_path,
                          R"({"alpha":["3/4",0,0,0,"-1/2",1]})");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["path"] == out_path);
  CHECK(j["singular_points"].size() == 2);
  std::ifstream svg(out_path);
  REQUIRE(svg.good());
  std::string content((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
  CHECK(content.find("<svg") != std::string::npos);
  std::remove(out_path.c_str());
}

TEST_CASE("render to csv on stdout") {
  const RunResult r = run("render --region -1,-1,1,1 --curves 2 --samples 8 --format csv",
                          R"({"alpha":[1,2,0,0,0,0]})");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("family,curve_index,x1,x2\n", 0) == 0);
}
