#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "btlat/cli.hpp"
#include "btlat/descent.hpp"
#include "btlat/embedding.hpp"
#include "btlat/filtration.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/json_io.hpp"
#include "doctest.h"

using namespace btlat;

namespace {

int run(const std::vector<std::string>& args, std::string* outText = nullptr,
        std::string* errText = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = runCli(args, out, err);
  if (outText) *outText = out.str();
  if (errText) *errText = err.str();
  return code;
}

std::string writeTemp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/btlat_cli_" + name + ".json";
  std::ofstream f(path);
  f << text;
  return path;
}

const char* paperForward =
    R"({"f":6,"r":2,"mu":["1/4","1/6","1/12","0","0","1/3","1/6"]})";
const char* paperBackward =
    R"({"f":6,"r":2,"lambda":[[1,0],[1,3],[0,0],[0,1],[0,1],[0,0]]})";

}  // namespace

TEST_CASE("embedding-type converts the published example both ways") {
  const CyclicMatrixClass expected(
      std::vector<std::vector<long long>>{{1, 0}, {1, 3}, {0, 0}, {0, 1}, {0, 1}, {0, 0}});
  std::string out;
  CHECK(run({"embedding-type", "--input", writeTemp("fwd", paperForward)}, &out) == 0);
  CHECK(out == canonicalText(toJson(expected)));

  std::vector<Rat> mu(7);
  const long long twelfths[] = {3, 2, 1, 0, 0, 4, 2};
  for (std::size_t i = 0; i < 7; ++i) mu[i] = Rat(twelfths[i], 12);
  std::string back;
  CHECK(run({"embedding-type", "--input", writeTemp("bwd", paperBackward)}, &back) == 0);
  CHECK(back == canonicalText(toJson(LocalType(mu))));

  // Two inversions land on the first output again.
  const Json lambdaJ = Json::parse(out);
  Json roundTrip{{"f", 6}, {"r", 2}, {"lambda", lambdaJ["entries"]}};
  std::string muAgain;
  CHECK(run({"embedding-type", "--input", writeTemp("rt1", roundTrip.dump())}, &muAgain) == 0);
  CHECK(muAgain == back);
}

TEST_CASE("embedding-type handles the one-by-one datum") {
  std::string out;
  CHECK(run({"embedding-type", "--input",
             writeTemp("v11", R"({"f":1,"r":1,"mu":["1","0","0","0"]})")},
            &out) == 0);
  CHECK(out == "{\"cols\":1,\"entries\":[[4]],\"rows\":1}\n");
}

TEST_CASE("output is byte-identical across repeated runs") {
  const std::string path = writeTemp("rep", paperForward);
  std::string first;
  std::string second;
  CHECK(run({"embedding-type", "--input", path}, &first) == 0);
  CHECK(run({"embedding-type", "--input", path}, &second) == 0);
  CHECK(first == second);
  CHECK(first.back() == '\n');
}

TEST_CASE("schema violations exit with code 2") {
  std::string err;
  // Both directions at once.
  CHECK(run({"embedding-type", "--input",
             writeTemp("both", R"({"f":1,"r":1,"mu":["1"],"lambda":[[1]]})")},
            nullptr, &err) == 2);
  CHECK(!err.empty());
  // Neither direction.
  CHECK(run({"embedding-type", "--input", writeTemp("none", R"({"f":1,"r":1})")}, nullptr,
            &err) == 2);
  // Malformed JSON.
  CHECK(run({"embedding-type", "--input", writeTemp("bad", "{")}, nullptr, &err) == 2);
  // Missing file.
  CHECK(run({"embedding-type", "--input", "/tmp/btlat_cli_no_such_file.json"}, nullptr,
            &err) == 2);
  // Wrong matrix shape.
  CHECK(run({"embedding-type", "--input",
             writeTemp("shape", R"({"f":2,"r":1,"lambda":[[1],[0],[1]]})")},
            nullptr, &err) == 2);
  // Non-integral scaled type.
  CHECK(run({"embedding-type", "--input",
             writeTemp("frac", R"({"f":2,"r":1,"mu":["1/3","2/3","0"]})")},
            nullptr, &err) == 2);
  // No subcommand.
  CHECK(run({}) == 2);
  // Unknown op / suite.
  CHECK(run({"compute", "--op", "frobnicate", "--input", writeTemp("op", "{}")}, nullptr,
            &err) == 2);
  CHECK(run({"verify", "--suite", "frobnicate"}, nullptr, &err) == 2);
  // Negative bounds must be rejected before any sweep starts.
  CHECK(run({"verify", "--suite", "recovery", "--m", "-1"}, nullptr, &err) == 2);
}

TEST_CASE("compute ops match the library") {
  const SplitLatticeFunction fn(AmbientFrame(2, 1), {Rat(0), Rat(1, 2)});
  const std::string fnJ = R"({"d":1,"offsets":["0","1/2"]})";

  std::string out;
  CHECK(run({"compute", "--op", "square-of", "--input",
             writeTemp("sq", std::string("{\"fn\":") + fnJ + "}")},
            &out) == 0);
  CHECK(out == canonicalText(toJson(squareOf(fn))));
  CHECK(out ==
        "{\"d\":1,\"diff\":[[\"0\",\"-1/2\"],[\"1/2\",\"0\"]],"
        "\"support\":[[true,true],[true,true]]}\n");

  CHECK(run({"compute", "--op", "local-type", "--input",
             writeTemp("lt", std::string("{\"fn\":") + fnJ + "}")},
            &out) == 0);
  CHECK(out == "{\"mu\":[\"1/2\",\"1/2\"]}\n");

  CHECK(run({"compute", "--op", "invariant", "--input",
             writeTemp("inv", std::string("{\"fn\":") + fnJ + "}")},
            &out) == 0);
  CHECK(out == "{\"invariant\":[1,1]}\n");

  const std::string deep = R"({"d":2,"offsets":["1/2","-1/3"]})";
  CHECK(run({"compute", "--op", "je", "--input",
             writeTemp("je1", std::string("{\"f\":1,\"fn\":") + deep + "}")},
            &out) == 0);
  CHECK(out == canonicalText(toJson(splitFunctionFromJson(Json::parse(deep)))));
  CHECK(run({"compute", "--op", "je", "--input",
             writeTemp("je2", std::string("{\"f\":2,\"fn\":") + deep + "}")},
            &out) == 0);
  CHECK(out == "{\"d\":1,\"offsets\":[\"1/2\",\"-1/3\"]}\n");
  CHECK(run({"compute", "--op", "je-inverse", "--input",
             writeTemp("jei", std::string("{\"f\":3,\"fn\":") + deep + "}")},
            &out) == 0);
  CHECK(out == "{\"d\":6,\"offsets\":[\"1/2\",\"-1/3\"]}\n");

  const std::string frameJ =
      R"({"d":1,"epsilon":1,"gram":["0","0"],"kind":"first","tau":[1,0]})";
  const HermitianFrame H(AmbientFrame(2, 1), 1, InvolutionKind::FirstKind, {1, 0},
                         {Rat(0), Rat(0)});
  CHECK(run({"compute", "--op", "dual-norm", "--input",
             writeTemp("dn", std::string("{\"fn\":{\"d\":1,\"offsets\":[\"1/3\",\"0\"]},") +
                                 "\"frame\":" + frameJ + "}")},
            &out) == 0);
  CHECK(out == "{\"d\":1,\"offsets\":[\"0\",\"-1/3\"]}\n");

  CHECK(run({"compute", "--op", "bary", "--input",
             writeTemp("by", std::string("{\"fn\":{\"d\":1,\"offsets\":[\"1/3\",\"0\"]},") +
                                 "\"frame\":" + frameJ + "}")},
            &out) == 0);
  const SplitLatticeFunction fnB(AmbientFrame(2, 1), {Rat(1, 3), Rat(0)});
  CHECK(out == canonicalText(toJson(bary(fnB, H))));
  CHECK(isSelfDual(splitFunctionFromJson(Json::parse(out)), H));
}

TEST_CASE("verify subcommand reports a sweep") {
  std::string out;
  std::string err;
  CHECK(run({"verify", "--suite", "recovery", "--m", "2"}, &out, &err) == 0);
  const Json report = Json::parse(out);
  CHECK(report["suite"] == "recovery");
  CHECK(report["pass"] == true);
  CHECK(report["checked"].get<long long>() > 0);
  CHECK(report["counterexample"] == "");
  CHECK(err.find("recovery: pass") != std::string::npos);

  // Deterministic across runs, including under an explicit seed.
  setenv("BTLAT_SEED", "7", 1);
  std::string first;
  std::string second;
  CHECK(run({"verify", "--suite", "clf", "--m", "2", "--d", "2"}, &first) == 0);
  CHECK(run({"verify", "--suite", "clf", "--m", "2", "--d", "2"}, &second) == 0);
  CHECK(first == second);
  unsetenv("BTLAT_SEED");

  CHECK(run({"verify", "--suite", "uniqueness"}, &out) == 0);
  CHECK(Json::parse(out)["pass"] == true);
}

TEST_CASE("help exits cleanly") {
  std::string out;
  CHECK(run({"--help"}, &out) == 0);
  CHECK(out.find("verify") != std::string::npos);
  CHECK(out.find("embedding-type") != std::string::npos);
}
